import pytest

from dintegrals.corpus import builtin
from dintegrals.derivations import Derivation, enumerate_derivations, zero_derivation
from dintegrals.errors import ClosureViolated
from dintegrals.integral_semiring import (
    EMPTY,
    IntegralFamily,
    build_integral_semiring,
    check_closure_condition,
    validate_nonunitary_semiring,
)
from dintegrals.integrals import IntegralTable
from dintegrals.matrix import canonical_derivation

from conftest import ALL_PAIRS, CORPUS_SEMIRINGS, SMALL, pair_id


def test_matrix_extensions_satisfy_closure():
    for name in ("B2", "Z2", "Z3", "C3", "Z4"):
        d = canonical_derivation(builtin(name))
        assert check_closure_condition(d) == (True, None)


@pytest.mark.parametrize("pair", ALL_PAIRS, ids=pair_id)
def test_square_zero_derivatives_give_closure(pair):
    s, d = pair
    if all(s.mul(d(x), d(y)) == s.zero for x in s.elements for y in s.elements):
        assert check_closure_condition(d)[0]


@pytest.mark.parametrize("pair", ALL_PAIRS, ids=pair_id)
def test_closure_condition_matches_definition(pair):
    s, d = pair
    T = IntegralTable(d)
    bad = [(a, b) for a in T.integrables for b in T.integrables if s.mul(a, b) not in T.integrables]
    ok, witness = check_closure_condition(d)
    assert ok == (not bad)
    if bad:
        assert witness == min(bad)


def test_closure_violation_exists_in_corpus():
    s = builtin("M(Z2)")
    ds = enumerate_derivations(s)
    failing = [d for d in ds if not check_closure_condition(d)[0]]
    assert [d.map for d in failing] == [(0, 3, 0, 3)]
    with pytest.raises(ClosureViolated) as info:
        build_integral_semiring(failing[0])
    a, b = info.value.witness
    assert s.mul(a, b) not in failing[0].image()


def test_b2_identity_family(B2):
    fam = build_integral_semiring(Derivation(B2, [0, 1]))
    assert len(fam) == 3
    assert fam.labels() == ["∅", "[0]", "[1]"]
    assert [m.sorted() for m in fam.members] == [[], [0], [1]]
    # the nonempty part mirrors B2; ∅ is neutral for ⊕ and absorbing for ⊙
    for x in B2.elements:
        for y in B2.elements:
            assert fam.oplus(x + 1, y + 1) == B2.add(x, y) + 1
            assert fam.odot(x + 1, y + 1) == B2.mul(x, y) + 1
    for k in range(3):
        assert fam.oplus(EMPTY, k) == k == fam.oplus(k, EMPTY)
        assert fam.odot(EMPTY, k) == EMPTY == fam.odot(k, EMPTY)
    assert validate_nonunitary_semiring(fam).passed
    assert fam.multiplicative_unit() == fam.member_of(1) == 2


@pytest.mark.parametrize("s", SMALL + CORPUS_SEMIRINGS, ids=lambda s: s.name)
def test_zero_derivation_family(s):
    fam = build_integral_semiring(zero_derivation(s))
    assert len(fam) == 2
    assert fam.members[1] == s.carrier
    assert fam.oplus(1, 1) == 1 and fam.odot(1, 1) == 1
    assert validate_nonunitary_semiring(fam).passed


def test_matrix_family_over_b2():
    base = builtin("B2")
    fam = build_integral_semiring(canonical_derivation(base))
    assert len(fam) == 3
    assert validate_nonunitary_semiring(fam).passed


def test_trivial_family():
    fam = build_integral_semiring(zero_derivation(builtin("T1")))
    assert len(fam) == 2
    assert validate_nonunitary_semiring(fam).passed


@pytest.mark.parametrize("pair", [p for p in ALL_PAIRS if check_closure_condition(p[1])[0]], ids=pair_id)
def test_family_against_set_arithmetic(pair):
    s, d = pair
    fam = IntegralFamily(d)
    T = IntegralTable(d)
    assert validate_nonunitary_semiring(fam).passed
    # members are pairwise distinct and ∅ is none of the I_d(x)
    assert len({m.members for m in fam.members}) == len(fam)
    for x in s.elements:
        k = fam.member_of(x)
        assert fam.members[k] == T[x]
    for i in range(1, len(fam)):
        for j in range(1, len(fam)):
            X, Y = fam.members[i], fam.members[j]
            # the ⊕ result is the unique member containing the elementwise sum
            containing = [k for k in range(1, len(fam)) if X + Y <= fam.members[k]]
            assert containing == [fam.oplus(i, j)]
            # ⊙ via any representatives: d of a representative recovers the label
            x, y = d(min(X)), d(min(Y))
            assert fam.members[fam.odot(i, j)] == T[s.mul(x, y)]


def test_family_serialization(B2):
    doc = build_integral_semiring(Derivation(B2, [0, 1])).to_dict()
    assert doc["members"] == ["∅", "[0]", "[1]"]
    assert doc["oplus"] == [[0, 1, 2], [1, 1, 2], [2, 2, 2]]
    assert doc["odot"] == [[0, 0, 0], [0, 1, 1], [0, 1, 2]]
