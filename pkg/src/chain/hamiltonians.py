"""
Two-site and L-site Hamiltonians of the (deformed) supersymmetric t-J chain.

Four closed forms are stored entry by entry (1-based, basis order
(up, empty, down) per site): the classical t-J Hamiltonian, its deformation
for the standard fermionic Hopf structure, the four-parameter version and the
deformation for the natural distinguished structure. The L-site Hamiltonian
is the open-boundary sum of two-site terms.
"""

from enum import Enum
from typing import Dict, Optional, Tuple

from src.algebra.hopf import HopfVariant
from src.casimir.checks import commutes_with_generators
from src.casimir.families import CasimirSpec, casimir_rep
from src.frt.rmatrix import RMatrixFamily
from src.linalg.graded import FUNDAMENTAL_DIM, site_embed
from src.linalg.poly_matrix import PolyMatrix, flip
from src.ring.laurent import Q, Q12, Q13, Q23, S, LaurentPoly
from src.utils.errors import SiteOutOfRange
from src.utils.logging import logger
from src.utils.reports import Report

TWO_SITE_DIM = FUNDAMENTAL_DIM**2


class HamiltonianKind(str, Enum):
    CLASSICAL = "classical"
    FERMIONIC = "fermionic"
    DISTINGUISHED = "distinguished"
    FOUR_PARAM = "fourparam"


MATCHED_VARIANT = {
    HamiltonianKind.CLASSICAL: HopfVariant.CLASSICAL_PRIMITIVE,
    HamiltonianKind.FERMIONIC: HopfVariant.FERMIONIC_STANDARD,
    HamiltonianKind.DISTINGUISHED: HopfVariant.DISTINGUISHED_NATURAL,
}

# hopping (2,4) (4,2) (3,7) (7,3) (6,8) (8,6)
_HOPPING = ((2, 4), (4, 2), (3, 7), (7, 3), (6, 8), (8, 6))


def _closed_form_table(kind: HamiltonianKind) -> Dict[Tuple[int, int], LaurentPoly]:
    qi, si = Q**-1, S**-1
    if kind is HamiltonianKind.CLASSICAL:
        diagonal = (0, 1, 1, 1, 2, 1, 1, 1, 0)
        hopping = (1, 1, -1, -1, 1, 1)
    elif kind is HamiltonianKind.FERMIONIC:
        diagonal = (0, qi, qi, Q, Q + qi, qi, Q, Q, 0)
        hopping = (si, S, -si, -S, si, S)
    elif kind is HamiltonianKind.FOUR_PARAM:
        diagonal = (0, qi, qi, Q, Q + qi, qi, Q, Q, 0)
        hopping = (Q12**-1, Q12, Q13**-1, Q13, Q23**-1, Q23)
    else:
        diagonal = (0, Q, Q, qi, Q + qi, qi, qi, Q, 0)
        hopping = (si, S, -si, -S, si, S)
    table = {(i + 1, i + 1): value for i, value in enumerate(diagonal)}
    table.update(zip(_HOPPING, hopping))
    return table


def closed_form(kind: HamiltonianKind) -> PolyMatrix:
    """The 9x9 two-site Hamiltonian of ``kind``."""
    table = _closed_form_table(HamiltonianKind(kind))
    return PolyMatrix(
        TWO_SITE_DIM, TWO_SITE_DIM, {(i - 1, j - 1): v for (i, j), v in table.items()}
    )


def two_site_hamiltonian(
    spec: CasimirSpec, variant: HopfVariant = HopfVariant.FERMIONIC_STANDARD
) -> PolyMatrix:
    """Image of the Casimir's coproduct on two sites."""
    return casimir_rep(spec, 2, variant)


def l_site_hamiltonian(h2: PolyMatrix, sites: int) -> PolyMatrix:
    """
    sum_{j=1}^{L-1} h2 on sites (j, j+1), open boundaries.

    Raises:
        SiteOutOfRange: ``sites`` < 2.
    """
    if sites < 2:
        raise SiteOutOfRange(f"A chain needs at least two sites, got {sites}")
    total = PolyMatrix.zeros(FUNDAMENTAL_DIM**sites)
    for j in range(1, sites):
        total = total + site_embed(h2, j, sites)
    return total


def chain_hamiltonian(kind: HamiltonianKind, sites: int) -> PolyMatrix:
    return l_site_hamiltonian(closed_form(kind), sites)


def invariance_check(
    kind: HamiltonianKind, sites: int, variant: Optional[HopfVariant] = None
) -> Report:
    """
    [H^(1..L), Delta^(L)(X)] = 0 for every generator X.

    Args:
        kind (HamiltonianKind): Closed form to chain up.
        sites (int): Chain length.
        variant (HopfVariant): Coproduct to test against; the structure
            matching ``kind`` when omitted.
    """
    kind = HamiltonianKind(kind)
    if variant is None:
        if kind not in MATCHED_VARIANT:
            raise ValueError(f"{kind.value} has no Hopf structure to test against")
        variant = MATCHED_VARIANT[kind]
    variant = HopfVariant(variant)
    report = Report(f"invariance:{kind.value}:{variant.value}:L{sites}")
    commutes_with_generators(chain_hamiltonian(kind, sites), variant, sites, report)
    logger.info("%s", report.summary())
    return report


def distinguished_r_hat() -> PolyMatrix:
    """q^-1 H_dist - I, which solves the same quadratic equation as R_hat."""
    h = closed_form(HamiltonianKind.DISTINGUISHED)
    return h.scale(Q**-1) - PolyMatrix.identity(TWO_SITE_DIM)


def proportional_to_rhat_plus_id(
    h2: PolyMatrix, r_hat: PolyMatrix
) -> Optional[Tuple[LaurentPoly, LaurentPoly]]:
    """
    Scalars (c, d) with h2 = c (R_hat + I) + d I, or None.

    c is read off an off-diagonal entry of R_hat with a single term, d from the
    first diagonal entry; the full identity is then checked.
    """
    plus = r_hat + PolyMatrix.identity(r_hat.rows)
    pivot = next(
        (
            (key, value)
            for key, value in plus.nonzero()
            if key[0] != key[1] and value.is_monomial()
        ),
        None,
    )
    if pivot is None:
        return None
    key, value = pivot
    c = h2[key] * value.inverse()
    d = h2[(0, 0)] - c * plus[(0, 0)]
    if h2 != plus.scale(c) + PolyMatrix.identity(r_hat.rows).scale(d):
        return None
    return c, d


def reflect_hamiltonian(h2: PolyMatrix) -> PolyMatrix:
    """P h2(q^-1, s^-1, q_ij^-1) P with P the flip of the two sites."""
    variables = {"q": Q, "s": S, "q12": Q12, "q13": Q13, "q23": Q23}
    inverted = h2.substitute({name: value**-1 for name, value in variables.items()})
    p = flip(FUNDAMENTAL_DIM)
    return p @ inverted @ p


def normalization_check(p_range=range(-2, 5)) -> Report:
    """
    The two-site images of the Casimir families against the closed forms.

    - C_p = -q^{3-6p} H_ferm for the standard structure;
    - C^cl_p = -3^{p-2} H_cl;
    - C_p under the distinguished structure is a combination of H_dist and I;
    - c^(k) is a multiple of R_hat + I.
    """
    report = Report("normalization")
    h_ferm = closed_form(HamiltonianKind.FERMIONIC)
    h_cl = closed_form(HamiltonianKind.CLASSICAL)
    for p in p_range:
        h = two_site_hamiltonian(CasimirSpec.quantum(p))
        diff = h - h_ferm.scale(-(Q ** (3 - 6 * p)))
        report.add(f"quantum-{p}", diff.is_zero(), residual_nonzero_entries=diff.nnz)
    for p in range(2, 6):
        h = two_site_hamiltonian(CasimirSpec.classical(p), HopfVariant.CLASSICAL_PRIMITIVE)
        diff = h - h_cl.scale(-(3 ** (p - 2)))
        report.add(f"classical-{p}", diff.is_zero(), residual_nonzero_entries=diff.nnz)
    r_dist = distinguished_r_hat()
    for p in (0, 1, 2):
        h = two_site_hamiltonian(CasimirSpec.quantum(p), HopfVariant.DISTINGUISHED_NATURAL)
        found = proportional_to_rhat_plus_id(h, r_dist)
        report.add(f"distinguished-{p}", found is not None, coefficients=str(found))
    r_hat = RMatrixFamily.two_param().r_hat
    for k in (1, 2, 3):
        found = proportional_to_rhat_plus_id(two_site_hamiltonian(CasimirSpec.frt(k)), r_hat)
        report.add(f"frt-{k}", found is not None and found[1] == 0, coefficients=str(found))
    logger.info("%s", report.summary())
    return report


__all__ = [
    "HamiltonianKind",
    "MATCHED_VARIANT",
    "chain_hamiltonian",
    "closed_form",
    "distinguished_r_hat",
    "invariance_check",
    "l_site_hamiltonian",
    "normalization_check",
    "proportional_to_rhat_plus_id",
    "reflect_hamiltonian",
    "two_site_hamiltonian",
]
