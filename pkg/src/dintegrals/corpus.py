"""Built-in semirings and the regression corpus."""

from __future__ import annotations

import os
from itertools import product
from dataclasses import dataclass, field
from typing import Callable, Optional

from .core import FiniteSemiring
from .matrix import build_matrix_semiring


def trivial() -> FiniteSemiring:
    return FiniteSemiring(1, [[0]], [[0]], 0, 0, "T1")


def boolean() -> FiniteSemiring:
    """B2 = ({0,1}, OR, AND)."""
    return FiniteSemiring.from_ops(2, lambda x, y: x | y, lambda x, y: x & y, 0, 1, "B2")


def integers_mod(n: int) -> FiniteSemiring:
    return FiniteSemiring.from_ops(
        n, lambda x, y: (x + y) % n, lambda x, y: (x * y) % n, 0, 1 % n, f"Z{n}"
    )


def chain(n: int) -> FiniteSemiring:
    """The n-element chain as a lattice: + is max, · is min, 0 bottom, 1 top."""
    return FiniteSemiring.from_ops(n, max, min, 0, n - 1, f"C{n}")


def boolean_matrices(upper: bool = False) -> FiniteSemiring:
    """2x2 matrices over B2 (all 16, or the 8 upper-triangular ones); not commutative."""
    mats = [m for m in product((0, 1), repeat=4) if not upper or m[2] == 0]
    index = {m: i for i, m in enumerate(mats)}

    def add(i, j):
        return index[tuple(a | b for a, b in zip(mats[i], mats[j]))]

    def mul(i, j):
        a, b, c, d = mats[i]
        e, f, g, h = mats[j]
        return index[((a & e) | (b & g), (a & f) | (b & h), (c & e) | (d & g), (c & f) | (d & h))]

    name = "UT2(B2)" if upper else "Mat2(B2)"
    return FiniteSemiring.from_ops(len(mats), add, mul, index[(0, 0, 0, 0)], index[(1, 0, 0, 1)], name)


BUILTINS: dict[str, Callable[[], FiniteSemiring]] = {
    "T1": trivial,
    "B2": boolean,
    "Z2": lambda: integers_mod(2),
    "Z3": lambda: integers_mod(3),
    "Z4": lambda: integers_mod(4),
    "C3": lambda: chain(3),
    "C4": lambda: chain(4),
    "M(B2)": lambda: build_matrix_semiring(boolean()),
    "M(Z2)": lambda: build_matrix_semiring(integers_mod(2)),
    "M(Z3)": lambda: build_matrix_semiring(integers_mod(3)),
    "M(C3)": lambda: build_matrix_semiring(chain(3)),
    "M(Z4)": lambda: build_matrix_semiring(integers_mod(4)),
    "M(C4)": lambda: build_matrix_semiring(chain(4)),
    "UT2(B2)": lambda: boolean_matrices(upper=True),
    "Mat2(B2)": boolean_matrices,
}


def builtin(name: str) -> FiniteSemiring:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"no built-in semiring named {name!r}") from None


def resolve(source: str) -> FiniteSemiring:
    """A built-in name or a path to a semiring JSON file."""
    if source in BUILTINS and not os.path.exists(source):
        return builtin(source)
    return FiniteSemiring.load(source)


@dataclass(frozen=True)
class CorpusEntry:
    """A corpus semiring with frozen regression values.

    ``derivations`` is the size of Der S; ``constants`` and ``integrables``
    list |Const_d| and |Int_d| for each derivation in enumeration order.
    """

    name: str
    derivations: int
    constants: tuple[int, ...] = field(default=())
    integrables: tuple[int, ...] = field(default=())
    is_ring: bool = False

    def build(self) -> FiniteSemiring:
        return builtin(self.name)


# frozen from the first exhaustive run; a change here is a behaviour change
CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry("T1", 1, (1,), (1,), is_ring=True),
    CorpusEntry("B2", 2, (2, 1), (1, 2)),
    CorpusEntry("Z2", 1, (2,), (1,), is_ring=True),
    CorpusEntry("Z3", 1, (3,), (1,), is_ring=True),
    CorpusEntry("Z4", 1, (4,), (1,), is_ring=True),
    CorpusEntry("C3", 3, (3, 1, 1), (1, 2, 3)),
    CorpusEntry("C4", 4, (4, 1, 1, 1), (1, 2, 3, 4)),
    CorpusEntry("M(B2)", 6, (4, 2, 2, 1, 1, 1), (1, 2, 2, 2, 4, 3)),
    CorpusEntry("M(Z2)", 4, (4, 2, 2, 2), (1, 2, 2, 2), is_ring=True),
    CorpusEntry("M(Z3)", 3, (9, 3, 3), (1, 3, 3), is_ring=True),
    CorpusEntry(
        "M(C3)", 18,
        (9, 3, 3, 3, 1, 1, 1, 1, 1, 3, 1, 1, 1, 1, 1, 1, 1, 1),
        (1, 2, 3, 2, 2, 3, 4, 3, 4, 3, 3, 3, 6, 9, 5, 5, 7, 6),
    ),
    CorpusEntry("M(Z4)", 8, (16, 4, 8, 4, 8, 4, 8, 4), (1, 4, 2, 4, 2, 4, 2, 4), is_ring=True),
    CorpusEntry(
        "M(C4)", 40,
        (16, 4, 4, 4, 4, 1, 1, 1, 1, 1, 1, 1, 4, 1, 1, 1, 1, 1, 1, 1,
         1, 1, 1, 1, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
        (1, 2, 3, 4, 2, 2, 3, 4, 4, 3, 4, 5, 3, 3, 3, 4, 6, 9, 5, 5,
         6, 7, 6, 7, 4, 4, 4, 4, 8, 12, 16, 7, 7, 7, 10, 13, 9, 9, 11, 10),
    ),
    CorpusEntry("UT2(B2)", 5, (8, 4, 2, 2, 1), (1, 2, 4, 4, 8)),
    CorpusEntry("Mat2(B2)", 2, (16, 1), (1, 16)),
)

# largest corpus member; enumeration over the corpus runs with this cap
CORPUS_CAP = 16


def corpus_entries(names: Optional[list[str]] = None) -> list[CorpusEntry]:
    if names is None:
        return list(CORPUS)
    by_name = {e.name: e for e in CORPUS}
    return [by_name[n] for n in names]
