"""The semiring of integral sets ``{∅} ∪ {I_d(x)}`` under ⊕ and ⊙.

It exists when the d-integrable elements are closed under multiplication.
Member 0 is ∅; member ``k >= 1`` is ``I_d(x)`` for the k-th integrable
element ``x`` in ascending order.
"""

from __future__ import annotations

from itertools import product
from typing import Optional

from .core import AxiomReport, ElemSet, check_axioms
from .derivations import Derivation
from .errors import ClosureViolated
from .integrals import IntegralTable

EMPTY = 0


def check_closure_condition(d: Derivation) -> tuple[bool, Optional[tuple[int, int]]]:
    """Is ``Int_d · Int_d ⊆ Int_d``? Returns the first failing pair otherwise."""
    s = d.semiring
    image = d.image()
    for a, b in product(sorted(image), repeat=2):
        if s.mul(a, b) not in image:
            return False, (a, b)
    return True, None


class IntegralFamily:
    def __init__(self, d: Derivation):
        ok, witness = check_closure_condition(d)
        if not ok:
            raise ClosureViolated(witness)
        s = d.semiring
        table = IntegralTable(d)
        self.derivation = d
        self.integrables: tuple[int, ...] = tuple(table.integrables)
        self.members: tuple[ElemSet, ...] = (ElemSet(s),) + tuple(table[x] for x in self.integrables)
        self.index = {x: k + 1 for k, x in enumerate(self.integrables)}

        # well-definedness: x -> I_d(x) must be injective and miss ∅
        distinct = {m.members for m in self.members}
        assert len(distinct) == len(self.members), "integral sets of distinct elements coincide"

        n = len(self.members)
        add = [[0] * n for _ in range(n)]
        mul = [[0] * n for _ in range(n)]
        for i, j in product(range(n), repeat=2):
            if i == EMPTY or j == EMPTY:
                add[i][j] = j if i == EMPTY else i
                mul[i][j] = EMPTY
                continue
            x, y = self.integrables[i - 1], self.integrables[j - 1]
            add[i][j] = self.index[s.add(x, y)]
            mul[i][j] = self.index[s.mul(x, y)]
        self.add_table = tuple(map(tuple, add))
        self.mul_table = tuple(map(tuple, mul))

    def __len__(self) -> int:
        return len(self.members)

    def member_of(self, x: int) -> int:
        """Member index of ``I_d(x)``; non-integrable ``x`` gives ∅."""
        return self.index.get(x, EMPTY)

    def labels(self) -> list[str]:
        return ["∅"] + [f"[{x}]" for x in self.integrables]

    def oplus(self, i: int, j: int) -> int:
        return self.add_table[i][j]

    def odot(self, i: int, j: int) -> int:
        return self.mul_table[i][j]

    def multiplicative_unit(self) -> Optional[int]:
        n = len(self)
        for u in range(n):
            if all(self.mul_table[u][k] == k and self.mul_table[k][u] == k for k in range(n)):
                return u
        return None

    def to_dict(self) -> dict:
        return {
            "members": self.labels(),
            "sets": [m.sorted() for m in self.members],
            "oplus": [list(r) for r in self.add_table],
            "odot": [list(r) for r in self.mul_table],
        }


def build_integral_semiring(d: Derivation) -> IntegralFamily:
    return IntegralFamily(d)


def validate_nonunitary_semiring(fam: IntegralFamily) -> AxiomReport:
    """All semiring axioms except the multiplicative unit, with ∅ as zero."""
    return check_axioms(fam.add_table, fam.mul_table, EMPTY, None)
