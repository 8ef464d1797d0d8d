from itertools import product

import pytest

from dintegrals.core import validate_semiring
from dintegrals.corpus import builtin, chain, integers_mod
from dintegrals.errors import CapacityExceeded
from dintegrals.integral_semiring import check_closure_condition
from dintegrals.matrix import (
    build_matrix_semiring,
    canonical_derivation,
    decode,
    encode,
    verify_example1,
)

BASES = [builtin("T1"), builtin("B2"), builtin("Z2"), integers_mod(3), chain(3), integers_mod(4)]


def matmul(R, p, q):
    """Product of [[x1,y1],[0,x1]] and [[x2,y2],[0,x2]] as full 2x2 matrices."""
    (x1, y1), (x2, y2) = p, q
    m1 = [[x1, y1], [R.zero, x1]]
    m2 = [[x2, y2], [R.zero, x2]]
    out = [[R.sum(R.mul(m1[i][k], m2[k][j]) for k in range(2)) for j in range(2)] for i in range(2)]
    assert out[1][0] == R.zero and out[0][0] == out[1][1]
    return out[0][0], out[0][1]


@pytest.mark.parametrize("base", BASES, ids=lambda s: s.name)
def test_extension_is_semiring(base):
    ext = build_matrix_semiring(base)
    assert ext.order == base.order ** 2
    assert validate_semiring(ext).passed
    assert decode(base, ext.zero) == (base.zero, base.zero)
    assert decode(base, ext.one) == (base.one, base.zero)


@pytest.mark.parametrize("base", BASES, ids=lambda s: s.name)
def test_extension_multiplication_is_matrix_product(base):
    ext = build_matrix_semiring(base)
    for i, j in product(ext.elements, repeat=2):
        p, q = decode(base, i), decode(base, j)
        assert decode(base, ext.mul(i, j)) == matmul(base, p, q)
        assert decode(base, ext.mul(i, j))[0] == base.mul(p[0], q[0])


def test_trivial_base():
    ext = build_matrix_semiring(builtin("T1"))
    assert ext.order == 1


def test_capacity(monkeypatch):
    monkeypatch.setenv("SEMIRING_CAP", "10")
    with pytest.raises(CapacityExceeded):
        build_matrix_semiring(integers_mod(4))


@pytest.mark.parametrize("base", BASES, ids=lambda s: s.name)
def test_canonical_derivation(base):
    d = canonical_derivation(base)
    z = base.zero
    for x, y in product(base.elements, repeat=2):
        assert decode(base, d(encode(base, x, y))) == (z, y)
        assert d(encode(base, x, z)) == encode(base, z, z)
        # idempotent on its image
        assert d(d(encode(base, x, y))) == d(encode(base, x, y))


def test_canonical_derivation_b2():
    base = builtin("B2")
    d = canonical_derivation(base)
    assert decode(base, d(encode(base, 1, 1))) == (0, 1)


@pytest.mark.parametrize("base", BASES, ids=lambda s: s.name)
def test_example_identities(base):
    report = verify_example1(base)
    assert report.passed
    assert [r.law for r in report] == [
        "integrables_are_nilpotent",
        "integral_fibres",
        "constants_are_scalars",
        "integrable_constants_trivial",
    ]
    assert check_closure_condition(canonical_derivation(base))[0]


def test_example_sizes_b2():
    from dintegrals.integrals import IntegralTable

    base = builtin("B2")
    T = IntegralTable(canonical_derivation(base))
    assert len(T.integrables) == 2
    assert len(T.constants) == 2
    assert len(T[encode(base, 0, 1)]) == 2


def test_example_trivial_base():
    from dintegrals.integrals import IntegralTable

    T = IntegralTable(canonical_derivation(builtin("T1")))
    assert T.integrables.sorted() == T.constants.sorted() == T[0].sorted() == [0]
