"""Upper-triangular 2x2 matrices ``[[x, y], [0, x]]`` over a finite base semiring.

The pair ``(x, y)`` is stored at index ``x·|R| + y``.
"""

from __future__ import annotations

from .core import FiniteSemiring, order_cap
from .derivations import Derivation
from .errors import CapacityExceeded
from .integrals import IntegralTable, LawReport, LawResult


def encode(base: FiniteSemiring, x: int, y: int) -> int:
    return x * base.order + y


def decode(base: FiniteSemiring, k: int) -> tuple[int, int]:
    return divmod(k, base.order)


def build_matrix_semiring(base: FiniteSemiring) -> FiniteSemiring:
    r = base.order
    cap = order_cap()
    if r * r > cap:
        raise CapacityExceeded(f"extension of order {r * r} exceeds the cap of {cap}")
    A, M = base.add_table, base.mul_table

    def add(i, j):
        (x1, y1), (x2, y2) = divmod(i, r), divmod(j, r)
        return encode(base, A[x1][x2], A[y1][y2])

    def mul(i, j):
        (x1, y1), (x2, y2) = divmod(i, r), divmod(j, r)
        return encode(base, M[x1][x2], A[M[x1][y2]][M[y1][x2]])

    name = f"M({base.name})" if base.name else None
    return FiniteSemiring.from_ops(
        r * r, add, mul, encode(base, base.zero, base.zero), encode(base, base.one, base.zero), name
    )


def canonical_derivation(base: FiniteSemiring, ext: FiniteSemiring | None = None) -> Derivation:
    """``(x, y) ↦ (0, y)`` on the extension of ``base``."""
    if ext is None:
        ext = build_matrix_semiring(base)
    z = base.zero
    return Derivation(ext, [encode(base, z, decode(base, k)[1]) for k in ext.elements])


def verify_example1(base: FiniteSemiring) -> LawReport:
    """Compare the integral data of the canonical derivation with the closed forms.

    Int_d = {(0,y)}, I_d((0,y)) = {(x,y) : x ∈ R}, Const_d = {(x,0)},
    Int_d ∩ Const_d = {(0,0)}.
    """
    ext = build_matrix_semiring(base)
    d = canonical_derivation(base, ext)
    T = IntegralTable(d)
    R, z = base.elements, base.zero

    def result(law, statement, cases):
        out = LawResult(law, statement)
        for case, ok in cases:
            out.qualifying_count += 1
            if not ok:
                out.witness = case
                break
        return out

    fibres = (
        ((y,), set(T[encode(base, z, y)]) == {encode(base, x, y) for x in R})
        for y in R
    )
    return LawReport([
        result("integrables_are_nilpotent", "Int_d = {(0,y)}",
               [((), set(T.integrables) == {encode(base, z, y) for y in R})]),
        result("integral_fibres", "I_d((0,y)) = {(x,y) : x in R}", fibres),
        result("constants_are_scalars", "Const_d = {(x,0)}",
               [((), set(T.constants) == {encode(base, x, z) for x in R})]),
        result("integrable_constants_trivial", "Int_d & Const_d = {(0,0)}",
               [((), set(T.integrables & T.constants) == {ext.zero})]),
    ])
