"""
Two-site operators commuting with every generator of a Hopf structure.

The linear system [M, Delta(X)] = 0 for the 81 entries of M is solved over
the rationals at an exact parameter point; the expected basis {I, R_hat} is
then verified over the full Laurent ring.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from sympy import Matrix, Rational, SparseMatrix

from src.algebra.hopf import HopfVariant, coproduct_rep
from src.casimir.checks import commutes_with_generators, generator_tokens
from src.chain.hamiltonians import HamiltonianKind, closed_form, distinguished_r_hat
from src.frt.rmatrix import RMatrixFamily
from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import ParamPoint
from src.utils.config import DEFAULT_SEED, default_point
from src.utils.errors import DegeneratePoint
from src.utils.logging import logger
from src.utils.reports import Report

DIM = 9
EXPECTED_DIMENSION = 2

Row = Dict[int, Fraction]


@dataclass
class CommutantResult:
    variant: HopfVariant
    point: ParamPoint
    basis: List[List[Fraction]] = field(default_factory=list)
    report: Optional[Report] = None

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _equations(generators: List[List[List[Fraction]]]) -> List[Row]:
    """Rows of (M X - X M)_ij = 0 in the unknowns m_ab at index 9a + b."""
    rows: List[Row] = []
    for x in generators:
        for i in range(DIM):
            for j in range(DIM):
                row: Row = {}
                for k in range(DIM):
                    if x[k][j]:
                        key = i * DIM + k
                        row[key] = row.get(key, Fraction(0)) + x[k][j]
                    if x[i][k]:
                        key = k * DIM + j
                        row[key] = row.get(key, Fraction(0)) - x[i][k]
                row = {key: value for key, value in row.items() if value}
                if row:
                    rows.append(row)
    return rows


def _system(rows: List[Row], ncols: int) -> SparseMatrix:
    return SparseMatrix(
        len(rows),
        ncols,
        {
            (r, c): Rational(value.numerator, value.denominator)
            for r, row in enumerate(rows)
            for c, value in row.items()
        },
    )


def nullspace(rows: List[Row], ncols: int) -> List[List[Fraction]]:
    """Basis of the solution space of a sparse homogeneous system over Q."""
    return [
        [Fraction(int(v.p), int(v.q)) for v in vector]
        for vector in _system(rows, ncols).nullspace()
    ]


def expected_generator(variant: HopfVariant) -> PolyMatrix:
    """The non-trivial invariant besides I."""
    variant = HopfVariant(variant)
    if variant is HopfVariant.FERMIONIC_STANDARD:
        return RMatrixFamily.two_param().r_hat
    if variant is HopfVariant.DISTINGUISHED_NATURAL:
        return distinguished_r_hat()
    return closed_form(HamiltonianKind.CLASSICAL)


def random_exact_point(rng: random.Random) -> ParamPoint:
    """Random rational q, s away from 0 and +-1."""
    values = {}
    for name in ("q", "s"):
        value = Fraction(1)
        while value in (0, 1, -1):
            value = Fraction(rng.randint(2, 97), rng.randint(1, 61))
        values[name] = value
    return ParamPoint.exact(**values)


def _in_span(vector: List[Fraction], rows: List[Row]) -> bool:
    column = Matrix([Rational(v.numerator, v.denominator) for v in vector])
    return (_system(rows, len(vector)) * column).is_zero_matrix


def invariant_commutant(variant: HopfVariant, at: ParamPoint = None) -> CommutantResult:
    """
    Solve for the commutant at an exact point, then verify {I, expected} exactly.

    Args:
        variant (HopfVariant): Hopf structure whose two-site generators are used.
        at (ParamPoint): Exact point; the default point when omitted (q = s = 1
            for the classical structure).

    Raises:
        DegeneratePoint: The solution dimension is not two at the given point.
    """
    variant = HopfVariant(variant)
    if at is None:
        at = ParamPoint.ones() if variant is HopfVariant.CLASSICAL_PRIMITIVE else default_point()
    if not at.is_exact:
        raise ValueError("The commutant is solved at an exact point")
    generators = [
        coproduct_rep(token, variant, 2).matrix.specialize(at)
        for token in generator_tokens(variant)
    ]
    rows = _equations(generators)
    basis = nullspace(rows, DIM * DIM)
    logger.debug("Commutant for %s at %s: dimension %d", variant.value, at.as_dict(), len(basis))
    if len(basis) != EXPECTED_DIMENSION:
        raise DegeneratePoint(
            f"Commutant dimension {len(basis)} at {at.as_dict()} for {variant.value}"
        )

    report = Report(f"commutant:{variant.value}")
    report.add("dimension", True, dimension=len(basis), point=at.as_dict())
    candidate = expected_generator(variant)
    commutes_with_generators(candidate, variant, 2, report, prefix="expected-commutes-")
    flat = [Fraction(0)] * (DIM * DIM)
    for i, row in enumerate(candidate.specialize(at)):
        for j, value in enumerate(row):
            flat[i * DIM + j] = Fraction(value)
    identity_flat = [Fraction(int(i == j)) for i in range(DIM) for j in range(DIM)]
    independent = any(
        flat[k] * identity_flat[0] != flat[0] * identity_flat[k] for k in range(DIM * DIM)
    )
    report.add("expected-in-solution-space", _in_span(flat, rows) and independent)
    report.add("identity-in-solution-space", _in_span(identity_flat, rows))
    logger.info("%s", report.summary())
    return CommutantResult(variant, at, basis, report)


def invariant_commutant_with_retry(
    variant: HopfVariant, seed: int = DEFAULT_SEED, attempts: int = 3
) -> CommutantResult:
    """Retry at random exact points while the chosen point is degenerate."""
    rng = random.Random(seed)
    at = None
    for attempt in range(attempts):
        try:
            return invariant_commutant(variant, at)
        except DegeneratePoint as exc:
            logger.warning("Degenerate point on attempt %d: %s", attempt + 1, exc)
            at = random_exact_point(rng)
    raise DegeneratePoint(f"No generic point found for {HopfVariant(variant).value}")


__all__ = [
    "CommutantResult",
    "expected_generator",
    "invariant_commutant",
    "invariant_commutant_with_retry",
    "nullspace",
    "random_exact_point",
]
