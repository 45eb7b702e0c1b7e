"""
FRT Casimirs c^(k) = Tr(D^-1 (I - Y)^k) / lambda^k and the X_123 power recursion.

On two sites I - Y = lambda X123 and every power of X123 stays in the span of

    R23 R12 R23,  R23 R12 + R12 R23,  R12,  R23,  I

with coefficients (a, b, c, d, f). The quantum trace over the auxiliary space
then collapses to a multiple of R_hat + I.
"""

from dataclasses import dataclass, fields
from functools import lru_cache
from typing import Tuple

from src.frt.lmatrices import x123, y_rep
from src.frt.rmatrix import D_MATRIX, RMatrixFamily
from src.linalg.graded import FUNDAMENTAL_DIM, partial_quantum_trace, three_space_embed
from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import (
    LAMBDA,
    ONE,
    ZERO,
    LaurentPoly,
    divide_lambda_power,
    exact_divide,
    qnum,
    qpow,
)
from src.utils.errors import BadIndex, UnsupportedL
from src.utils.logging import logger
from src.utils.reports import Report


@dataclass(frozen=True)
class XkCoefficients:
    a: LaurentPoly
    b: LaurentPoly
    c: LaurentPoly
    d: LaurentPoly
    f: LaurentPoly

    @classmethod
    def seed(cls) -> "XkCoefficients":
        """X123 itself."""
        return cls(qpow(-1), ZERO, qpow(-3), ZERO, qpow(-1) + qpow(-3))

    def as_tuple(self) -> Tuple[LaurentPoly, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    def next(self, printed: bool = False) -> "XkCoefficients":
        """Coefficients of X^{k+1} from those of X^k."""
        a, b, c, d, f = self.as_tuple()
        p = qpow
        b_next = (p(-7) - p(-5) + p(-3)) * a + (2 * p(-5) - p(-3) + p(-1)) * b + p(-3) * d
        if printed:
            b_next = b_next + p(-3) * c
        return XkCoefficients(
            a=(p(-7) - p(-5) + 2 * p(-3)) * a
            + (2 * p(-5) - 3 * p(-3) + 2 * p(-1)) * b
            + (p(-3) - p(-1)) * (c + d)
            + p(-1) * f,
            b=b_next,
            c=(p(-7) - p(-5)) * a + p(-5) * b + (p(-5) + p(-1)) * c + p(-3) * f,
            d=(p(-7) - p(-5)) * a + 2 * p(-5) * b + (p(-3) + p(-1)) * d,
            f=p(-7) * a + p(-5) * c + (p(-3) + p(-1)) * f,
        )

    def c_constraint(self) -> LaurentPoly:
        """c - q^-2 a - (1 - q^-2) b, zero when the constraint holds."""
        return self.c - qpow(-2) * self.a - (ONE - qpow(-2)) * self.b

    def f_constraint(self) -> LaurentPoly:
        """f - (1 + q^-2)(a - b) - d."""
        return self.f - (ONE + qpow(-2)) * (self.a - self.b) - self.d

    def reconstruct(self, family: RMatrixFamily = None) -> PolyMatrix:
        """The 27x27 matrix a R23 R12 R23 + b (R23 R12 + R12 R23) + c R12 + d R23 + f."""
        family = family or RMatrixFamily.two_param()
        h12 = three_space_embed(family.r_hat, "12")
        h23 = three_space_embed(family.r_hat, "23")
        ident = PolyMatrix.identity(FUNDAMENTAL_DIM**3)
        return (
            (h23 @ h12 @ h23).scale(self.a)
            + (h23 @ h12 + h12 @ h23).scale(self.b)
            + h12.scale(self.c)
            + h23.scale(self.d)
            + ident.scale(self.f)
        )

    def traced(self, family: RMatrixFamily = None) -> PolyMatrix:
        """Quantum trace over the auxiliary space, read off the coefficients."""
        family = family or RMatrixFamily.two_param()
        ident = PolyMatrix.identity(FUNDAMENTAL_DIM**2)
        rhat_coeff = -qpow(-1) * LAMBDA * self.a + 2 * self.b - self.d
        id_coeff = qpow(-2) * self.a + self.c - self.f
        return family.r_hat.scale(rhat_coeff) + ident.scale(id_coeff)


def xk_coefficients(k: int, printed: bool = False) -> XkCoefficients:
    """
    Coefficients of X123^k.

    Args:
        k (int): Power, k >= 1.
        printed (bool): Use the b-recursion with the extra q^-3 c term.

    Raises:
        BadIndex: k < 1.
    """
    if k < 1:
        raise BadIndex(f"X123 powers start at k = 1, got {k}")
    coeffs = XkCoefficients.seed()
    for _ in range(k - 1):
        coeffs = coeffs.next(printed)
    return coeffs


def alpha(k: int) -> LaurentPoly:
    """
    alpha_k = q^{1-4k} ([4]^k - q^{3k} [2]^2) / ([2][3]).

    Raises:
        BadIndex: k < 1.
        NotDivisible: The quotient is not a Laurent polynomial.
    """
    if k < 1:
        raise BadIndex(f"alpha_k is defined for k >= 1, got {k}")
    numerator = qnum(4) ** k - qpow(3 * k) * qnum(2) ** 2
    return qpow(1 - 4 * k) * exact_divide(numerator, qnum(2) * qnum(3))


@lru_cache(maxsize=None)
def frt_casimir_rep(k: int, sites: int) -> PolyMatrix:
    """
    c^(k) on one or two sites of the fundamental.

    Raises:
        BadIndex: k < 1.
        UnsupportedL: ``sites`` is not 1 or 2.
        NotDivisible: (I - Y)^k is not a multiple of lambda^k.
    """
    if k < 1:
        raise BadIndex(f"FRT Casimirs need k >= 1, got {k}")
    if sites not in (1, 2):
        raise UnsupportedL(f"FRT Casimirs are represented on one or two sites, got {sites}")
    y = y_rep(sites)
    base = PolyMatrix.identity(y.rows) - y
    scaled = base.power(k).map_entries(lambda e: divide_lambda_power(e, k))
    logger.debug("Built c^(%d) on %d site(s)", k, sites)
    return partial_quantum_trace(scaled, D_MATRIX)


def ck23_check(kmax: int = 6) -> Report:
    """
    For k = 1..kmax on two sites:

    - c^(k) = alpha_k (R_hat + I);
    - the coefficient formula gives the same matrix;
    - both constraints hold and the coefficients rebuild X123^k.
    """
    report = Report("frt-casimir")
    family = RMatrixFamily.two_param()
    rhat_plus = family.r_hat + PolyMatrix.identity(FUNDAMENTAL_DIM**2)
    x = x123(family)
    power = x
    coeffs = XkCoefficients.seed()
    for k in range(1, kmax + 1):
        if k > 1:
            power = power @ x
            coeffs = coeffs.next()
        rep = frt_casimir_rep(k, 2)
        diff = rep - rhat_plus.scale(alpha(k))
        report.add(f"alpha-{k}", diff.is_zero(), residual_nonzero_entries=diff.nnz)
        diff = rep - coeffs.traced(family)
        report.add(f"traced-coefficients-{k}", diff.is_zero(), residual_nonzero_entries=diff.nnz)
        report.add(
            f"constraints-{k}",
            coeffs.c_constraint().is_zero() and coeffs.f_constraint().is_zero(),
        )
        diff = coeffs.reconstruct(family) - power
        report.add(f"reconstruct-{k}", diff.is_zero(), residual_nonzero_entries=diff.nnz)
        report.add(f"one-site-{k}", frt_casimir_rep(k, 1).is_zero())
    logger.info("%s", report.summary())
    return report


__all__ = [
    "XkCoefficients",
    "alpha",
    "ck23_check",
    "frt_casimir_rep",
    "xk_coefficients",
]
