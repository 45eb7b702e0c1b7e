"""
Diagonal similarity transformation removing the hopping anisotropies.

For an occupation state of an open chain let

    a = #{i < j : up at i, empty at j}
    b = #{i < j : empty at i, down at j}
    c = #{i < j : up at i, down at j}

and O = diag(q12^-a q23^-b q13^-c). A nearest-neighbour exchange changes
exactly one of the counts by one, so O^-1 H O rescales each hopping entry by
the matching q_ij and leaves the diagonal alone.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Tuple

from src.chain.hamiltonians import HamiltonianKind, chain_hamiltonian
from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import ONE, Q12, Q13, Q23, S, LaurentPoly
from src.utils.logging import logger
from src.utils.reports import Report

UP, EMPTY, DOWN = 0, 1, 2


def occupation_counts(state: Tuple[int, ...]) -> Tuple[int, int, int]:
    """(a, b, c) for one basis state."""
    a = b = c = 0
    for i, left in enumerate(state):
        for right in state[i + 1 :]:
            if left == UP and right == EMPTY:
                a += 1
            elif left == EMPTY and right == DOWN:
                b += 1
            elif left == UP and right == DOWN:
                c += 1
    return a, b, c


@dataclass
class SimilarityOperator:
    sites: int
    q12: LaurentPoly = field(default=Q12)
    q13: LaurentPoly = field(default=Q13)
    q23: LaurentPoly = field(default=Q23)

    @classmethod
    def perk_schultz(cls, sites: int) -> "SimilarityOperator":
        """Parameters q12 = s, q13 = -s, q23 = s of the deformed t-J chains."""
        return cls(sites, S, -S, S)

    def exponents(self) -> Dict[Tuple[int, ...], Tuple[int, int, int]]:
        return {state: occupation_counts(state) for state in product(range(3), repeat=self.sites)}

    def matrix(self, inverse: bool = False) -> PolyMatrix:
        sign = 1 if inverse else -1
        values = []
        for a, b, c in self.exponents().values():
            values.append(self.q12 ** (sign * a) * self.q23 ** (sign * b) * self.q13 ** (sign * c))
        return PolyMatrix.diag(values)

    def conjugate(self, h: PolyMatrix) -> PolyMatrix:
        """O^-1 h O."""
        return self.matrix(inverse=True) @ h @ self.matrix()


def _off_diagonal_all_one(m: PolyMatrix) -> int:
    return sum(1 for (i, j), value in m.nonzero() if i != j and value != ONE)


def similarity_reduce(kind: HamiltonianKind, sites: int) -> Report:
    """
    Conjugate the L-site Hamiltonian by O and compare with its reduced form.

    - ``fourparam``: O^-1 H(q, q12, q13, q23) O = H(q, 1, 1, 1);
    - ``fermionic`` and ``distinguished``: with q12 = s, q13 = -s, q23 = s every
      off-diagonal entry becomes 1 and the diagonal is unchanged.
    """
    kind = HamiltonianKind(kind)
    if kind is HamiltonianKind.CLASSICAL:
        raise ValueError("The classical Hamiltonian carries no anisotropy")
    report = Report(f"similarity:{kind.value}:L{sites}")
    h = chain_hamiltonian(kind, sites)
    if kind is HamiltonianKind.FOUR_PARAM:
        op = SimilarityOperator(sites)
        conjugated = op.conjugate(h)
        target = h.substitute({"q12": 1, "q13": 1, "q23": 1})
        diff = conjugated - target
        report.add("reduced", diff.is_zero(), residual_nonzero_entries=diff.nnz)
    else:
        op = SimilarityOperator.perk_schultz(sites)
        conjugated = op.conjugate(h)
        bad = _off_diagonal_all_one(conjugated)
        report.add("off-diagonal-one", bad == 0, offending_entries=bad)
        report.add("diagonal-kept", conjugated.diagonal() == h.diagonal())
    ident = PolyMatrix.identity(3**sites)
    report.add("involutive", op.matrix() @ op.matrix(inverse=True) == ident)
    logger.info("%s", report.summary())
    return report


__all__ = [
    "SimilarityOperator",
    "occupation_counts",
    "similarity_reduce",
]
