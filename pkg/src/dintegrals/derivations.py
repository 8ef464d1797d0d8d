"""Derivations on finite semirings: checking, enumeration, and the monoid (Der S, +, d0)."""

from __future__ import annotations

import hashlib
import json
from itertools import product
from typing import Iterable, Optional, Sequence

from .core import FiniteSemiring
from .errors import CapacityExceeded, InvalidDerivation, MalformedMap, SemiringMismatch

DEFAULT_ENUMERATION_CAP = 12
BRUTE_FORCE_MAX_ORDER = 4

ADDITIVITY = "additivity"
LEIBNIZ = "leibniz"


def _check_map_shape(s: FiniteSemiring, mapping) -> tuple[int, ...]:
    try:
        values = tuple(mapping)
    except TypeError:
        raise MalformedMap("derivation map must be a sequence of element indices") from None
    if len(values) != s.order:
        raise MalformedMap(f"map has length {len(values)}, expected {s.order}")
    for i, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < s.order:
            raise MalformedMap(f"map[{i}] = {v!r} is not an index in [0, {s.order})")
    return values


def check_derivation(
    s: FiniteSemiring, mapping: Sequence[int]
) -> tuple[bool, Optional[tuple[str, int, int]]]:
    """Test both derivation identities on every pair.

    Returns ``(True, None)`` or ``(False, (identity, x, y))`` where the
    witness is the first failing pair, additivity being scanned first.
    """
    d = _check_map_shape(s, mapping)
    A, M = s.add_table, s.mul_table
    n = s.order
    for x, y in product(range(n), repeat=2):
        if d[A[x][y]] != A[d[x]][d[y]]:
            return False, (ADDITIVITY, x, y)
    for x, y in product(range(n), repeat=2):
        if d[M[x][y]] != A[M[d[x]][y]][M[x][d[y]]]:
            return False, (LEIBNIZ, x, y)
    return True, None


class Derivation:
    """A map ``d: S -> S`` with ``d(x+y) = d(x)+d(y)`` and ``d(xy) = d(x)y + x d(y)``."""

    __slots__ = ("semiring", "map")

    def __init__(self, semiring: FiniteSemiring, mapping: Iterable[int], *, check: bool = True):
        self.semiring = semiring
        self.map = _check_map_shape(semiring, mapping)
        if check:
            ok, witness = check_derivation(semiring, self.map)
            if not ok:
                raise InvalidDerivation(*witness)
            assert self.map[semiring.zero] == semiring.zero

    def __call__(self, x: int) -> int:
        return self.map[x]

    def _same_base(self, other: "Derivation"):
        if other.semiring is not self.semiring and other.semiring != self.semiring:
            raise SemiringMismatch("derivations live on different semirings")

    def __add__(self, other: "Derivation") -> "Derivation":
        if not isinstance(other, Derivation):
            return NotImplemented
        self._same_base(other)
        A = self.semiring.add_table
        total = Derivation(
            self.semiring, [A[a][b] for a, b in zip(self.map, other.map)], check=False
        )
        ok, witness = check_derivation(self.semiring, total.map)
        assert ok, f"Der S not closed under +: {witness}"
        return total

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.map == other.map and self.semiring == other.semiring

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return f"Derivation({list(self.map)})"

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.semiring.order

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_zero(self) -> bool:
        z = self.semiring.zero
        return all(v == z for v in self.map)

    def to_dict(self) -> dict:
        return {"semiring": semiring_key(self.semiring), "map": list(self.map)}

    @classmethod
    def from_dict(cls, s: FiniteSemiring, doc: dict) -> "Derivation":
        key = doc.get("semiring")
        if key is not None and key not in (s.name, semiring_hash(s)):
            raise SemiringMismatch(f"derivation was recorded for {key!r}")
        return cls(s, doc["map"])


def semiring_hash(s: FiniteSemiring) -> str:
    blob = json.dumps([s.order, s.zero, s.one, s.add_table, s.mul_table])
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()[:16]


def semiring_key(s: FiniteSemiring) -> str:
    return s.name if s.name is not None else semiring_hash(s)


def add_derivations(d1: Derivation, d2: Derivation) -> Derivation:
    return d1 + d2


def zero_derivation(s: FiniteSemiring) -> Derivation:
    return Derivation(s, [s.zero] * s.order)


def derive_product(d: Derivation, factors: Sequence[int]) -> int:
    """Expand ``d(a1···an)`` as the sum of n terms with d applied to one factor each."""
    s = d.semiring
    if not factors:
        raise ValueError("derive_product needs at least one factor")
    for a in factors:
        if not 0 <= a < s.order:
            raise SemiringMismatch(f"{a} is not an element of {s!r}")
    terms = []
    for i, a in enumerate(factors):
        word = list(factors)
        word[i] = d(a)
        terms.append(s.product(word))
    total = s.sum(terms)
    assert total == d(s.product(factors)), "Leibniz expansion disagrees with d(product)"
    return total


def _enumerate_brute(s: FiniteSemiring) -> list[tuple[int, ...]]:
    return [m for m in product(range(s.order), repeat=s.order) if check_derivation(s, m)[0]]


def _constraint_schedule(s: FiniteSemiring):
    """Group every derivation constraint by the last carrier index it reads."""
    n = s.order
    A, M = s.add_table, s.mul_table
    due: list[list[tuple[int, int, int, int]]] = [[] for _ in range(n)]
    for x, y in product(range(n), repeat=2):
        due[max(x, y, A[x][y])].append((0, x, y, A[x][y]))
        due[max(x, y, M[x][y])].append((1, x, y, M[x][y]))
    return due


def _enumerate_dfs(s: FiniteSemiring) -> list[tuple[int, ...]]:
    n = s.order
    A, M = s.add_table, s.mul_table
    due = _constraint_schedule(s)
    found: list[tuple[int, ...]] = []
    d = [0] * n

    def consistent(k: int) -> bool:
        for kind, x, y, xy in due[k]:
            if kind == 0:
                if d[xy] != A[d[x]][d[y]]:
                    return False
            elif d[xy] != A[M[d[x]][y]][M[x][d[y]]]:
                return False
        return True

    def assign(k: int):
        if k == n:
            found.append(tuple(d))
            return
        for v in range(n):
            d[k] = v
            if consistent(k):
                assign(k + 1)

    assign(0)
    return found


def enumerate_derivations(
    s: FiniteSemiring, cap: int = DEFAULT_ENUMERATION_CAP, strategy: str = "auto"
) -> list[Derivation]:
    """All derivations on ``s`` in lexicographic order of their maps.

    ``strategy`` is ``"brute"`` (filter all n^n maps), ``"dfs"`` (pruned
    depth-first assignment) or ``"auto"`` (brute up to order 4).
    """
    if s.order > cap:
        raise CapacityExceeded(f"order {s.order} exceeds the enumeration cap of {cap}")
    if strategy == "auto":
        strategy = "brute" if s.order <= BRUTE_FORCE_MAX_ORDER else "dfs"
    if strategy == "brute":
        maps = _enumerate_brute(s)
    elif strategy == "dfs":
        maps = _enumerate_dfs(s)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return [Derivation(s, m, check=False) for m in sorted(maps)]
