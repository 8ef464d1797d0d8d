"""d-integrals, constants and integrable elements, and exhaustive checks of the integration laws.

Every ``check_*`` function replays one family of laws over all tuples of a
finite semiring and returns a :class:`LawReport`. The laws are theorems, so
a failing result means the implementation is wrong, not the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator, Optional

from .core import ElemSet, FiniteSemiring
from .derivations import Derivation
from .errors import HypothesisUnmet, SemiringMismatch


class IntegralTable:
    """All integral sets ``I_d(b) = {a : d(a) = b}`` of one derivation, plus Const_d and Int_d."""

    def __init__(self, d: Derivation):
        self.derivation = d
        s = self.semiring = d.semiring
        buckets: list[set[int]] = [set() for _ in s.elements]
        for a in s.elements:
            buckets[d(a)].add(a)
        self.sets = tuple(ElemSet(s, b) for b in buckets)
        self.constants = self.sets[s.zero]
        self.integrables = ElemSet(s, (b for b in s.elements if buckets[b]))

    def __getitem__(self, b: int) -> ElemSet:
        return self.sets[b]

    def is_integrable(self, b: int) -> bool:
        return bool(self.sets[b])

    def to_dict(self) -> dict:
        return {
            "integrals": {str(b): self.sets[b].sorted() for b in self.semiring.elements},
            "constants": self.constants.sorted(),
            "integrables": self.integrables.sorted(),
        }


def integral_set(d: Derivation, b: int) -> ElemSet:
    s = d.semiring
    if not 0 <= b < s.order:
        raise SemiringMismatch(f"{b} is not an element of {s!r}")
    found = ElemSet(s, (a for a in s.elements if d(a) == b))
    assert all(d(a) == b for a in found)
    return found


def constants(d: Derivation) -> ElemSet:
    return integral_set(d, d.semiring.zero)


def integrables(d: Derivation) -> ElemSet:
    return ElemSet(d.semiring, d.image())


@dataclass
class LawResult:
    """Outcome of one law over every tuple meeting its hypothesis."""

    law: str
    statement: str
    qualifying_count: int = 0
    witness: Optional[tuple] = None

    @property
    def passed(self) -> bool:
        return self.witness is None

    @property
    def vacuous(self) -> bool:
        return self.qualifying_count == 0

    def to_dict(self) -> dict:
        d = {
            "law": self.law,
            "passed": self.passed,
            "vacuous": self.vacuous,
            "qualifying_count": self.qualifying_count,
        }
        if self.witness is not None:
            d["witness"] = list(self.witness)
        return d


@dataclass
class LawReport:
    results: list[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __iter__(self) -> Iterator[LawResult]:
        return iter(self.results)

    def __getitem__(self, law: str) -> LawResult:
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    def __add__(self, other: "LawReport") -> "LawReport":
        return LawReport(self.results + other.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.passed]

    def to_dicts(self) -> list[dict]:
        return [r.to_dict() for r in self.results]


def _run(law: str, statement: str, cases: Iterable[tuple], holds: Callable[..., bool]) -> LawResult:
    """Evaluate ``holds`` on each qualifying case, stopping at the first failure."""
    result = LawResult(law, statement)
    for case in cases:
        result.qualifying_count += 1
        if not holds(*case):
            result.witness = case
            break
    return result


def _table(d: Derivation) -> IntegralTable:
    return IntegralTable(d)


def check_basic_laws(d: Derivation) -> LawReport:
    """Sums and products of integrals, 0 and 1, and d restricted to an integral set."""
    T = _table(d)
    s = d.semiring
    E = s.elements
    A, M, z, o = s.add_table, s.mul_table, s.zero, s.one
    I = T.sets

    def product_cases():
        for a, b in product(E, repeat=2):
            for e in I[a]:
                for f in I[b]:
                    yield a, b, e, f

    def inverse_cases():
        if o not in T.constants:
            return
        for c in T.constants:
            inv = s.multiplicative_inverse(c)
            if inv is not None:
                yield c, inv

    def image_holds(a):
        if d(a) not in T.integrables or a not in I[d(a)]:
            return False
        if a in T.integrables:
            return {d(x) for x in I[a]} == {a}
        return True

    return LawReport([
        _run("integral_sum_inclusion", "I_d(a)+I_d(b) <= I_d(a+b)",
             product(E, repeat=2), lambda a, b: I[a] + I[b] <= I[A[a][b]]),
        _run("integral_product_rule", "e in I_d(a), f in I_d(b) => e*f in I_d(a*f+e*b)",
             product_cases(), lambda a, b, e, f: M[e][f] in I[A[M[a][f]][M[e][b]]]),
        _run("zero_is_constant", "0 in Const_d",
             [(z,)], lambda x: x in T.constants),
        _run("unit_integral_idempotent", "1 in I_d(a) => a+a = a",
             ((a,) for a in E if o in I[a]), lambda a: A[a][a] == a),
        _run("derivative_of_integral_set", "d(a) in Int_d, a in I_d(d(a)), d(I_d(a)) = {a}",
             ((a,) for a in E), image_holds),
        _run("constant_inverse", "c, 1 in Const_d, c invertible => c^-1 in Const_d",
             inverse_cases(), lambda c, inv: inv in T.constants),
    ])


def check_constant_laws(d: Derivation) -> LawReport:
    """Adding or multiplying by a d-constant moves integral sets as expected."""
    T = _table(d)
    s = d.semiring
    M = s.mul_table
    I = T.sets

    def cases():
        for a in s.elements:
            for c in T.constants:
                yield a, c

    return LawReport([
        _run("constant_shift", "I_d(a)+c <= I_d(a)", cases(), lambda a, c: I[a] + c <= I[a]),
        _run("constant_left_scaling", "c*I_d(a) <= I_d(c*a)",
             cases(), lambda a, c: c * I[a] <= I[M[c][a]]),
        _run("constant_right_scaling", "I_d(a)*c <= I_d(a*c)",
             cases(), lambda a, c: I[a] * c <= I[M[a][c]]),
    ])


def check_inverse_swap(d: Derivation) -> LawReport:
    """Swapping integrand and integral through an invertible factor."""
    T = _table(d)
    s = d.semiring
    M = s.mul_table
    I = T.sets
    units = [(e, s.multiplicative_inverse(e)) for e in s.elements]
    units = [(e, inv) for e, inv in units if inv is not None]

    def cases():
        for e, inv in units:
            for a, b in product(s.elements, repeat=2):
                yield e, inv, a, b

    def constant_units():
        for c, inv in units:
            if c in T.constants:
                yield c, inv

    d1 = d(s.one)
    return LawReport([
        _run("inverse_swap_left", "a in I_d(e*d(b)) <=> b in I_d(e^-1*d(a))", cases(),
             lambda e, inv, a, b: (a in I[M[e][d(b)]]) == (b in I[M[inv][d(a)]])),
        _run("inverse_swap_right", "a in I_d(d(b)*e) <=> b in I_d(d(a)*e^-1)", cases(),
             lambda e, inv, a, b: (a in I[M[d(b)][e]]) == (b in I[M[d(a)][inv]])),
        _run("constant_inverse_integral", "c in Const_d invertible => c^-1 in I_d(c^-1*d(1)) & I_d(d(1)*c^-1)",
             constant_units(), lambda c, inv: inv in (I[M[inv][d1]] & I[M[d1][inv]])),
    ])


def check_converse_laws(d: Derivation) -> LawReport:
    """Reverse inclusions of the constant laws under (additive) invertibility, and the resulting equalities."""
    T = _table(d)
    s = d.semiring
    M = s.mul_table
    I = T.sets
    E = s.elements
    neg = {b: s.additive_inverse(b) for b in E}
    inv = {b: s.multiplicative_inverse(b) for b in E}

    def shift_cases(only_constants=False):
        for a in E:
            for b in E:
                if neg[b] is not None and neg[b] in T.constants:
                    if not only_constants or b in T.constants:
                        yield a, b

    def scale_cases(only_constants=False):
        for a in E:
            for b in E:
                if inv[b] is not None and inv[b] in T.constants:
                    if not only_constants or b in T.constants:
                        yield a, b

    return LawReport([
        _run("additive_shift_converse", "-b in Const_d => I_d(a) <= I_d(a)+b",
             shift_cases(), lambda a, b: I[a] <= I[a] + b),
        _run("invertible_left_converse", "b^-1 in Const_d => I_d(b*a) <= b*I_d(a)",
             scale_cases(), lambda a, b: I[M[b][a]] <= b * I[a]),
        _run("invertible_right_converse", "b^-1 in Const_d => I_d(a*b) <= I_d(a)*b",
             scale_cases(), lambda a, b: I[M[a][b]] <= I[a] * b),
        _run("constant_shift_equality", "c, -c in Const_d => I_d(a)+c = I_d(a)",
             shift_cases(True), lambda a, c: I[a] + c == I[a]),
        _run("constant_left_equality", "c, c^-1 in Const_d => I_d(c*a) = c*I_d(a)",
             scale_cases(True), lambda a, c: I[M[c][a]] == c * I[a]),
        _run("constant_right_equality", "c, c^-1 in Const_d => I_d(a*c) = I_d(a)*c",
             scale_cases(True), lambda a, c: I[M[a][c]] == I[a] * c),
    ])


def check_one_sided_laws(d: Derivation) -> LawReport:
    """Integration rules for a constant with a one-sided inverse."""
    T = _table(d)
    s = d.semiring
    M, o = s.mul_table, s.one
    I = T.sets
    E = s.elements

    def left(c_times_a: bool):
        # pairs (c, a) with c*a = 1 (or a*c = 1), c constant
        for c in T.constants:
            for a in E:
                if (M[c][a] if c_times_a else M[a][c]) == o:
                    yield c, a

    def scaling(c_times_a):
        for c, a in left(c_times_a):
            for b in E:
                yield c, a, b

    def element(c_times_a):
        for c, a in left(c_times_a):
            for b in E:
                for e in E:
                    if (M[a][e] if c_times_a else M[e][a]) in I[b]:
                        yield c, a, b, e

    return LawReport([
        _run("one_sided_left_scaling", "c*a = 1 => c*I_d(a*b) <= I_d(b)",
             scaling(True), lambda c, a, b: c * I[M[a][b]] <= I[b]),
        _run("one_sided_left_element", "c*a = 1, a*e in I_d(b) => e in I_d(c*b)",
             element(True), lambda c, a, b, e: e in I[M[c][b]]),
        _run("one_sided_right_scaling", "a*c = 1 => I_d(b*a)*c <= I_d(b)",
             scaling(False), lambda c, a, b: I[M[b][a]] * c <= I[b]),
        _run("one_sided_right_element", "a*c = 1, e*a in I_d(b) => e in I_d(b*c)",
             element(False), lambda c, a, b, e: e in I[M[b][c]]),
    ])


def decompose(d: Derivation, a: int) -> tuple[int, int]:
    """Split ``a = e + b`` with ``e`` constant and ``b = d(a)`` integrable.

    Requires ``d(d(a)) = d(a)`` and ``d(a)`` additively invertible.
    """
    s = d.semiring
    da = d(a)
    if d(da) != da:
        raise HypothesisUnmet(f"d(d({a})) != d({a})")
    neg = s.additive_inverse(da)
    if neg is None:
        raise HypothesisUnmet(f"d({a}) = {da} has no additive inverse")
    e = s.add(a, neg)
    assert d(e) == s.zero and s.add(e, da) == a
    return e, da


def check_decomposition(d: Derivation) -> LawReport:
    T = _table(d)
    s = d.semiring
    A = s.add_table
    splittable = T.constants + T.integrables

    def cases():
        for a in s.elements:
            da = d(a)
            if d(da) == da and s.additive_inverse(da) is not None:
                yield (a,)

    def holds(a):
        e = A[a][s.additive_inverse(d(a))]
        b = d(a)
        return e in T.constants and b in T.integrables and A[e][b] == a and a in splittable

    def stable(c):
        return d(d(c)) == d(c)

    return LawReport([
        _run("decomposition", "d(d(a)) = d(a), -d(a) exists => a in Const_d + Int_d", cases(), holds),
        _run("constants_are_stable", "c in Const_d => d(d(c)) = d(c)",
             ((c,) for c in T.constants), stable),
    ])


def integrate_by_parts(d: Derivation, a: int, b: int, e: int, f: int) -> int:
    """Return ``g = e·b + (−f)``, a d-integral of ``a·b``.

    Needs ``e ∈ I_d(a)``, ``f ∈ I_d(e·d(b))`` and ``f`` additively invertible.
    """
    s = d.semiring
    for x in (a, b, e, f):
        if not 0 <= x < s.order:
            raise SemiringMismatch(f"{x} is not an element of {s!r}")
    if d(e) != a:
        raise HypothesisUnmet(f"e = {e} is not in I_d({a}): d(e) = {d(e)}")
    target = s.mul(e, d(b))
    if d(f) != target:
        raise HypothesisUnmet(f"f = {f} is not in I_d(e*d(b)) = I_d({target}): d(f) = {d(f)}")
    neg = s.additive_inverse(f)
    if neg is None:
        raise HypothesisUnmet(f"f = {f} has no additive inverse")
    g = s.add(s.mul(e, b), neg)
    assert d(g) == s.mul(a, b), "integration by parts produced a wrong integral"
    return g


def check_integration_by_parts(d: Derivation) -> LawReport:
    T = _table(d)
    s = d.semiring
    A, M = s.add_table, s.mul_table
    I = T.sets

    def cases():
        for a, b in product(s.elements, repeat=2):
            for e in I[a]:
                for f in I[M[e][d(b)]]:
                    neg = s.additive_inverse(f)
                    if neg is not None:
                        yield a, b, e, f, neg

    return LawReport([
        _run("integration_by_parts", "e in I_d(a), f in I_d(e*d(b)), -f exists => e*b+(-f) in I_d(a*b)",
             cases(), lambda a, b, e, f, neg: A[M[e][b]][neg] in I[M[a][b]]),
    ])


def check_sum_theorem(d: Derivation) -> LawReport:
    T = _table(d)
    s = d.semiring
    A = s.add_table
    I = T.sets

    def cases():
        for a, b in product(s.elements, repeat=2):
            for e in I[a]:
                neg = s.additive_inverse(e)
                if neg is not None:
                    yield a, b, e, neg
                    break

    def holds(a, b, e, neg):
        if I[A[a][b]] != I[a] + I[b]:
            return False
        # the converse inclusion, rebuilt from -e
        for f in I[A[a][b]]:
            g = A[neg][f]
            if g not in I[b] or A[e][g] != f:
                return False
        return True

    return LawReport([
        _run("sum_theorem", "some e in I_d(a) with -e => I_d(a+b) = I_d(a)+I_d(b)", cases(), holds),
    ])


def check_negation(d: Derivation) -> LawReport:
    s = d.semiring

    def cases():
        for a in s.elements:
            neg = s.additive_inverse(a)
            if neg is not None:
                yield a, neg

    return LawReport([
        _run("negation_commutes", "-a exists => d(-a) = -d(a)", cases(),
             lambda a, neg: s.additive_inverse(d(a)) == d(neg)),
    ])


LAW_FAMILIES: dict[str, Callable[[Derivation], LawReport]] = {
    "basic": check_basic_laws,
    "constants": check_constant_laws,
    "inverse_swap": check_inverse_swap,
    "converse": check_converse_laws,
    "one_sided": check_one_sided_laws,
    "decomposition": check_decomposition,
    "integration_by_parts": check_integration_by_parts,
    "sum_theorem": check_sum_theorem,
    "negation": check_negation,
}


def check_all_laws(d: Derivation) -> LawReport:
    report = LawReport()
    for check in LAW_FAMILIES.values():
        report = report + check(d)
    return report


def law_names() -> list[str]:
    """Names of every law, in report order."""
    from .corpus import trivial

    s = trivial()
    return [r.law for r in check_all_laws(Derivation(s, [s.zero]))]


def surjective_by_integrals(d: Derivation) -> bool:
    return all(IntegralTable(d).sets)


def injective_by_integrals(d: Derivation) -> bool:
    return all(len(x) <= 1 for x in IntegralTable(d).sets)
