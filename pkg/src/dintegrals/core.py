"""Finite semirings given by Cayley tables.

Elements are plain ``int`` indices into the carriers ``range(order)``. The
zero and one are explicit fields, so any index may play either role.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapacityExceeded, MalformedTable, SemiringMismatch

DEFAULT_ORDER_CAP = 256


def order_cap() -> int:
    """Largest carrier accepted by the brute-force engines (env ``SEMIRING_CAP``)."""
    raw = os.environ.get("SEMIRING_CAP")
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"SEMIRING_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("SEMIRING_CAP must be positive")
    return cap


def _freeze_table(table, n: int, what: str) -> tuple[tuple[int, ...], ...]:
    try:
        rows = [list(row) for row in table]
    except TypeError:
        raise MalformedTable(f"{what} table is not a list of rows") from None
    if len(rows) != n:
        raise MalformedTable(f"{what} table has {len(rows)} rows, expected {n}")
    for r, row in enumerate(rows):
        if len(row) != n:
            raise MalformedTable(f"{what} table row {r} has {len(row)} entries, expected {n}")
        for c, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise MalformedTable(f"{what}[{r}][{c}] = {v!r} is not an index in [0, {n})")
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class FiniteSemiring:
    """A carrier ``range(order)`` with addition and multiplication tables.

    Construction only checks the tables structurally; use
    :func:`validate_semiring` for the axioms.
    """

    order: int
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        n = self.order
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise MalformedTable(f"order must be a positive integer, got {n!r}")
        cap = order_cap()
        if n > cap:
            raise CapacityExceeded(f"order {n} exceeds the cap of {cap}")
        object.__setattr__(self, "add_table", _freeze_table(self.add_table, n, "add"))
        object.__setattr__(self, "mul_table", _freeze_table(self.mul_table, n, "mul"))
        for label in ("zero", "one"):
            v = getattr(self, label)
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                raise MalformedTable(f"{label} = {v!r} is not an index in [0, {n})")

    @classmethod
    def from_ops(cls, order: int, add, mul, zero: int, one: int, name: Optional[str] = None):
        """Tabulate two binary functions on ``range(order)``."""
        rng = range(order)
        return cls(
            order,
            tuple(tuple(add(x, y) for y in rng) for x in rng),
            tuple(tuple(mul(x, y) for y in rng) for x in rng),
            zero,
            one,
            name,
        )

    @property
    def elements(self) -> range:
        return range(self.order)

    def add(self, x: int, y: int) -> int:
        return self.add_table[x][y]

    def mul(self, x: int, y: int) -> int:
        return self.mul_table[x][y]

    def sum(self, xs: Iterable[int]) -> int:
        total = self.zero
        for x in xs:
            total = self.add_table[total][x]
        return total

    def product(self, xs: Sequence[int]) -> int:
        """Left-associated product of a nonempty sequence."""
        it = iter(xs)
        try:
            acc = next(it)
        except StopIteration:
            raise ValueError("empty product") from None
        for x in it:
            acc = self.mul_table[acc][x]
        return acc

    def multiple(self, k: int, x: int) -> int:
        """``k·x`` as the k-fold sum ``x + ... + x`` (0 for k = 0)."""
        if k < 0:
            raise ValueError("multiple needs k >= 0")
        return self.sum([x] * k)

    def power(self, a: int, n: int) -> int:
        if n < 1:
            raise ValueError("power needs n >= 1")
        return self.product([a] * n)

    def is_commutative(self) -> bool:
        m = self.mul_table
        return all(m[x][y] == m[y][x] for x in self.elements for y in range(x))

    def additive_inverse(self, a: int) -> Optional[int]:
        found = [b for b in self.elements if self.add_table[a][b] == self.zero]
        if not found:
            return None
        assert len(found) == 1, f"additive inverse of {a} not unique: {found}"
        return found[0]

    def left_inverses(self, a: int) -> tuple[int, ...]:
        """All ``b`` with ``b·a = 1``."""
        return tuple(b for b in self.elements if self.mul_table[b][a] == self.one)

    def right_inverses(self, a: int) -> tuple[int, ...]:
        """All ``b`` with ``a·b = 1``."""
        return tuple(b for b in self.elements if self.mul_table[a][b] == self.one)

    def multiplicative_inverse(self, a: int) -> Optional[int]:
        both = set(self.left_inverses(a)) & set(self.right_inverses(a))
        if not both:
            return None
        assert len(both) == 1, f"inverse of {a} not unique: {sorted(both)}"
        return both.pop()

    def set_of(self, members: Iterable[int]) -> "ElemSet":
        return ElemSet(self, members)

    @property
    def carrier(self) -> "ElemSet":
        return ElemSet(self, self.elements)

    def to_dict(self) -> dict:
        d: dict = {}
        if self.name is not None:
            d["name"] = self.name
        d["order"] = self.order
        d["zero"] = self.zero
        d["one"] = self.one
        d["add"] = [list(r) for r in self.add_table]
        d["mul"] = [list(r) for r in self.mul_table]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "FiniteSemiring":
        if not isinstance(d, dict):
            raise MalformedTable("semiring document must be a JSON object")
        missing = [k for k in ("order", "zero", "one", "add", "mul") if k not in d]
        if missing:
            raise MalformedTable(f"missing keys: {', '.join(missing)}")
        name = d.get("name")
        if name is not None and not isinstance(name, str):
            raise MalformedTable("name must be a string")
        return cls(d["order"], d["add"], d["mul"], d["zero"], d["one"], name)

    def dumps(self, indent: Optional[int] = None) -> str:
        if indent is None:
            return json.dumps(self.to_dict())
        # one table row per line keeps files readable
        d = self.to_dict()
        lines = ["{"]
        items = list(d.items())
        for i, (k, v) in enumerate(items):
            comma = "," if i < len(items) - 1 else ""
            if k in ("add", "mul"):
                rows = ",\n".join(" " * (2 * indent) + json.dumps(r) for r in v)
                lines.append(f'{" " * indent}"{k}": [\n{rows}\n{" " * indent}]{comma}')
            else:
                lines.append(f'{" " * indent}{json.dumps(k)}: {json.dumps(v)}{comma}')
        lines.append("}")
        return "\n".join(lines)

    @classmethod
    def loads(cls, text: str) -> "FiniteSemiring":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedTable(f"invalid JSON: {exc}") from None
        return cls.from_dict(doc)

    @classmethod
    def load(cls, path) -> "FiniteSemiring":
        with open(path, encoding="utf-8") as fh:
            return cls.loads(fh.read())

    def save(self, path, indent: Optional[int] = 2) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps(indent))
            fh.write("\n")

    def __repr__(self):
        label = self.name or "?"
        return f"FiniteSemiring({label}, order={self.order})"


class ElemSet:
    """A subset of a finite carrier with the pointwise set operations.

    ``A + B = {a+b}``, ``A * B = {a·b}``; an ``int`` operand acts as a
    singleton, so ``c * A`` and ``A * c`` are the one-sided scalings.
    """

    __slots__ = ("semiring", "members")

    def __init__(self, semiring: FiniteSemiring, members: Iterable[int] = ()):
        self.semiring = semiring
        self.members = frozenset(members)
        for m in self.members:
            if not 0 <= m < semiring.order:
                raise ValueError(f"{m} is not an element of {semiring!r}")

    def _lift(self, other) -> frozenset:
        if isinstance(other, ElemSet):
            if other.semiring is not self.semiring and other.semiring != self.semiring:
                raise SemiringMismatch("element sets over different semirings")
            return other.members
        if isinstance(other, int):
            return frozenset((other,))
        return NotImplemented

    def _combine(self, left, right, table) -> "ElemSet":
        return ElemSet(self.semiring, {table[a][b] for a in left for b in right})

    def __add__(self, other):
        rhs = self._lift(other)
        if rhs is NotImplemented:
            return rhs
        return self._combine(self.members, rhs, self.semiring.add_table)

    __radd__ = __add__

    def __mul__(self, other):
        rhs = self._lift(other)
        if rhs is NotImplemented:
            return rhs
        return self._combine(self.members, rhs, self.semiring.mul_table)

    def __rmul__(self, other):
        lhs = self._lift(other)
        if lhs is NotImplemented:
            return lhs
        return self._combine(lhs, self.members, self.semiring.mul_table)

    def __and__(self, other: "ElemSet") -> "ElemSet":
        return ElemSet(self.semiring, self.members & self._lift(other))

    def __or__(self, other: "ElemSet") -> "ElemSet":
        return ElemSet(self.semiring, self.members | self._lift(other))

    def __sub__(self, other: "ElemSet") -> "ElemSet":
        return ElemSet(self.semiring, self.members - self._lift(other))

    def __le__(self, other: "ElemSet") -> bool:
        return self.members <= self._lift(other)

    def __ge__(self, other: "ElemSet") -> bool:
        return self.members >= self._lift(other)

    def __eq__(self, other):
        if not isinstance(other, ElemSet):
            return NotImplemented
        return self.members == other.members and self.semiring == other.semiring

    def __hash__(self):
        return hash(self.members)

    def __contains__(self, x) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __bool__(self) -> bool:
        return bool(self.members)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __repr__(self):
        if not self.members:
            return "{}"
        return "{" + ", ".join(map(str, self.sorted())) + "}"


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def by_axiom(self) -> dict[str, tuple[int, ...]]:
        return {v.axiom: v.witness for v in self.violations}

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [{"axiom": v.axiom, "witness": list(v.witness)} for v in self.violations],
        }


def _axioms(A, M, z: int, o: Optional[int]):
    """(name, arity, predicate) for the semiring identities plus x+0=x.

    With ``o`` None the multiplicative-unit axiom is left out.
    """
    axioms = [
        ("add_commutative", 2, lambda x, y: A[x][y] == A[y][x]),
        ("add_associative", 3, lambda x, y, w: A[A[x][y]][w] == A[x][A[y][w]]),
        ("add_identity", 1, lambda x: A[x][z] == x),
        ("mul_associative", 3, lambda x, y, w: M[M[x][y]][w] == M[x][M[y][w]]),
        ("left_distributive", 3, lambda x, y, w: M[x][A[y][w]] == A[M[x][y]][M[x][w]]),
        ("right_distributive", 3, lambda x, y, w: M[A[y][w]][x] == A[M[y][x]][M[w][x]]),
        ("annihilation", 1, lambda x: M[x][z] == z and M[z][x] == z),
    ]
    if o is not None:
        axioms.append(("mul_identity", 1, lambda x: M[x][o] == x and M[o][x] == x))
    return axioms


AXIOMS = tuple(name for name, _, _ in _axioms(None, None, 0, 0))


def check_axioms(add_table, mul_table, zero: int, one: Optional[int] = None) -> AxiomReport:
    """Check every semiring identity over all tuples of ``range(len(add_table))``.

    Each violated axiom is reported once, with the lexicographically first
    failing tuple as witness.
    """
    n = len(add_table)
    violations = []
    for name, arity, holds in _axioms(add_table, mul_table, zero, one):
        for args in product(range(n), repeat=arity):
            if not holds(*args):
                violations.append(Violation(name, args))
                break
    return AxiomReport(tuple(violations))


def validate_semiring(s: FiniteSemiring) -> AxiomReport:
    return check_axioms(s.add_table, s.mul_table, s.zero, s.one)


def is_commutative(s: FiniteSemiring) -> bool:
    return s.is_commutative()


def replay_axiom(s: FiniteSemiring, axiom: str, witness: Sequence[int]) -> bool:
    """Re-evaluate one named identity at ``witness``; True if it holds."""
    for name, arity, holds in _axioms(s.add_table, s.mul_table, s.zero, s.one):
        if name == axiom:
            if len(witness) != arity:
                raise ValueError(f"{axiom} takes {arity} arguments")
            return holds(*witness)
    raise KeyError(axiom)
