"""
Checks on Casimir representation matrices: centrality, the quadratic product
relations, the classical limit and the Weyl symmetry of the two-site diagonal.
"""

from collections import Counter
from math import comb
from typing import Dict, Iterable, List, Tuple

from src.algebra.generators import (
    DISTINGUISHED_TOKENS,
    FERMIONIC_TOKENS,
    chain_context,
)
from src.algebra.hopf import HopfVariant, coproduct_rep
from src.casimir.families import CasimirFamily, CasimirSpec, casimir_rep
from src.linalg.poly_matrix import PolyMatrix, commutator
from src.ring.laurent import divide_lambda_power
from src.utils.errors import IndexSumMismatch, NotDivisible
from src.utils.logging import logger
from src.utils.reports import Report


def generator_tokens(variant: HopfVariant) -> Tuple[str, ...]:
    """Generators a Casimir must commute with under ``variant``."""
    if HopfVariant(variant) is HopfVariant.DISTINGUISHED_NATURAL:
        return FERMIONIC_TOKENS + DISTINGUISHED_TOKENS
    return FERMIONIC_TOKENS


def commutes_with_generators(
    m: PolyMatrix, variant: HopfVariant, sites: int, report: Report, prefix: str = ""
) -> None:
    """Add one case per generator: [m, Delta^(L)(X)] = 0."""
    for token in generator_tokens(variant):
        diff = commutator(m, coproduct_rep(token, variant, sites).matrix)
        report.add(f"{prefix}{token}", diff.is_zero(), residual_nonzero_entries=diff.nnz)


def centrality_check(
    spec: CasimirSpec,
    sites: int,
    variant: HopfVariant = HopfVariant.FERMIONIC_STANDARD,
    matrix: PolyMatrix = None,
) -> Report:
    """
    [C, X] = 0 for every generator X on ``sites`` sites.

    ``matrix`` replaces the Casimir's own matrix, e.g. to test a perturbed copy.
    """
    variant = HopfVariant(variant)
    report = Report(f"centrality:{spec}:L{sites}:{variant.value}")
    m = casimir_rep(spec, sites, variant) if matrix is None else matrix
    commutes_with_generators(m, variant, sites, report)
    if not report.passed:
        logger.warning("Casimir %s is not central on %d sites: %s", spec, sites, report.failures())
    logger.info("%s", report.summary())
    return report


def fundamental_scalar_check(specs: Iterable[CasimirSpec]) -> Report:
    """Every Casimir acts on the fundamental as zero."""
    report = Report("fundamental-scalar")
    for spec in specs:
        variant = (
            HopfVariant.CLASSICAL_PRIMITIVE
            if spec.family is CasimirFamily.CLASSICAL
            else HopfVariant.FERMIONIC_STANDARD
        )
        m = casimir_rep(spec, 1, variant)
        report.add(str(spec), m.is_zero(), residual_nonzero_entries=m.nnz)
    return report


def quadratic_relation_check(
    indices: Tuple[int, int, int, int],
    family: CasimirFamily,
    sites: int = 2,
    variant: HopfVariant = None,
) -> Report:
    """
    C_{p1} C_{p2} = C_{p3} C_{p4} whenever p1 + p2 = p3 + p4.

    Raises:
        IndexSumMismatch: The index sums differ.
    """
    p1, p2, p3, p4 = indices
    if p1 + p2 != p3 + p4:
        raise IndexSumMismatch(f"{p1} + {p2} != {p3} + {p4}")
    family = CasimirFamily(family)
    if variant is None:
        variant = (
            HopfVariant.CLASSICAL_PRIMITIVE
            if family is CasimirFamily.CLASSICAL
            else HopfVariant.FERMIONIC_STANDARD
        )
    reps = [casimir_rep(CasimirSpec(family, p), sites, variant) for p in indices]
    diff = reps[0] @ reps[1] - reps[2] @ reps[3]
    report = Report(f"quadratic:{family.value}:L{sites}")
    report.add(f"{p1}+{p2}={p3}+{p4}", diff.is_zero(), residual_nonzero_entries=diff.nnz)
    return report


def limit_combination(p: int, sites: int) -> PolyMatrix:
    """sum_l (-1)^l binom(p-2, l) C_l, divided by lambda^(p-2) and set to q = s = 1."""
    n = p - 2
    total = PolyMatrix.zeros(3**sites)
    for l in range(n + 1):
        c_l = casimir_rep(CasimirSpec.quantum(l), sites, HopfVariant.FERMIONIC_STANDARD)
        total = total + c_l.scale((-1) ** l * comb(n, l))
    reduced = total.map_entries(lambda e: divide_lambda_power(e, n))
    return reduced.substitute({"q": 1, "s": 1})


def classical_limit_check(p: int, sites: int = 2) -> Report:
    """The limit combination of quantum Casimirs reproduces C^cl_p."""
    report = Report(f"classical-limit:p{p}:L{sites}")
    target = casimir_rep(CasimirSpec.classical(p), sites, HopfVariant.CLASSICAL_PRIMITIVE)
    try:
        limit = limit_combination(p, sites)
    except NotDivisible as exc:
        logger.warning("Limit combination for p=%d is not divisible: %s", p, exc)
        report.add("divisible", False, error=str(exc))
        return report
    report.add("divisible", True)
    diff = limit - target
    report.add("limit", diff.is_zero(), residual_nonzero_entries=diff.nnz)
    return report


def quantum_limit_check(p: int, sites: int = 2) -> Report:
    """C_p at q = s = 1 is C^cl_2 for every p."""
    report = Report(f"quantum-limit:p{p}:L{sites}")
    quantum = casimir_rep(CasimirSpec.quantum(p), sites, HopfVariant.FERMIONIC_STANDARD)
    target = casimir_rep(CasimirSpec.classical(2), sites, HopfVariant.CLASSICAL_PRIMITIVE)
    diff = quantum.substitute({"q": 1, "s": 1}) - target
    report.add("limit", diff.is_zero(), residual_nonzero_entries=diff.nnz)
    return report


def _diagonal_by_weight(m: PolyMatrix, sites: int) -> Dict[Tuple[int, int], Counter]:
    diagonal = m.diagonal()
    return {
        weight: Counter(diagonal[i] for i in states)
        for weight, states in chain_context(sites).relabel_weights().items()
    }


def weyl_witness(p: int, sites: int = 2) -> Report:
    """
    The diagonal of C_p, grouped by weight, is symmetric under (H1, H2) -> (-H2, -H1).

    Each weight class is compared as a multiset with its image.
    """
    report = Report(f"weyl:p{p}:L{sites}")
    m = casimir_rep(CasimirSpec.quantum(p), sites, HopfVariant.FERMIONIC_STANDARD)
    groups = _diagonal_by_weight(m, sites)
    mismatched: List[str] = []
    for (h1, h2), values in sorted(groups.items()):
        image = groups.get((-h2, -h1), Counter())
        if values != image:
            mismatched.append(f"({h1},{h2})")
    report.add("diagonal-multisets", not mismatched, mismatched=mismatched)
    return report


__all__ = [
    "centrality_check",
    "classical_limit_check",
    "commutes_with_generators",
    "fundamental_scalar_check",
    "generator_tokens",
    "limit_combination",
    "quadratic_relation_check",
    "quantum_limit_check",
    "weyl_witness",
]
