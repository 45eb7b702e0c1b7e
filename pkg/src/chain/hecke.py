"""
Hecke algebra relations of the shifted bond operators U_j = H_(j,j+1) - x I.

For a two-site Hamiltonian with H^2 = [2] H the shift x = q gives
U^2 + lambda U - 1 = 0 and x = q^-1 gives U^2 - lambda U - 1 = 0. On a chain
the bond operators must also satisfy the braid relation on neighbouring bonds
and commute when they are two or more bonds apart.
"""

from typing import List

from src.chain.hamiltonians import HamiltonianKind, closed_form
from src.linalg.graded import site_embed
from src.linalg.poly_matrix import PolyMatrix, commutator
from src.ring.laurent import LAMBDA, ONE, ZERO, Q, LaurentPoly
from src.utils.logging import logger
from src.utils.reports import Report

SHIFTS = ("q", "q^-1")


def shift_value(shift: str) -> LaurentPoly:
    if shift == "q":
        return Q
    if shift == "q^-1":
        return Q**-1
    raise ValueError(f"Shift must be one of {SHIFTS}, got {shift!r}")


def bond_operators(h2: PolyMatrix, shift: LaurentPoly, sites: int) -> List[PolyMatrix]:
    u = h2 - PolyMatrix.identity(h2.rows).scale(shift)
    return [site_embed(u, j, sites) for j in range(1, sites)]


def hecke_check(kind: HamiltonianKind, shift: str = "q", sites: int = 3) -> Report:
    """
    Quadratic, braid and far-commutation relations for U = H - shift.

    The classical kind is tested at q = 1, where both shifts give U^2 = 1.

    Args:
        kind (HamiltonianKind): Closed form for the two-site Hamiltonian.
        shift (str): ``"q"`` or ``"q^-1"``.
        sites (int): Chain length; the braid relation needs at least three.
    """
    kind = HamiltonianKind(kind)
    h2 = closed_form(kind)
    x = shift_value(shift)
    sign = 1 if shift == "q" else -1
    lam = LAMBDA
    if kind is HamiltonianKind.CLASSICAL:
        x, lam = ONE, ZERO
    report = Report(f"hecke:{kind.value}:{shift}:L{sites}")

    u2 = h2 - PolyMatrix.identity(9).scale(x)
    quad = u2 @ u2 + u2.scale(sign * lam) - PolyMatrix.identity(9)
    report.add("quadratic", quad.is_zero(), residual_nonzero_entries=quad.nnz, shift=shift)

    bonds = bond_operators(h2, x, sites)
    for j in range(len(bonds) - 1):
        a, b = bonds[j], bonds[j + 1]
        diff = a @ b @ a - b @ a @ b
        report.add(f"braid-{j + 1}", diff.is_zero(), residual_nonzero_entries=diff.nnz)
    for i in range(len(bonds)):
        for j in range(i + 2, len(bonds)):
            diff = commutator(bonds[i], bonds[j])
            report.add(f"far-{i + 1}-{j + 1}", diff.is_zero(), residual_nonzero_entries=diff.nnz)
    if not report.passed:
        logger.warning("Hecke relations fail for %s with shift %s", kind.value, shift)
    logger.info("%s", report.summary())
    return report


__all__ = ["SHIFTS", "bond_operators", "hecke_check", "shift_value"]
