"""
R-matrices of U_qs(sl(1|2)) on the tensor square of the fundamental.

Two families are built: the two-parameter matrix in q, s and the
four-parameter matrix in q, q12, q13, q23. Each comes with its braided form
R_hat = P R. The checks return reports with one case per identity:

- Yang-Baxter equation, in both the R and the braid form;
- the quadratic characteristic equation of R_hat and its eigenprojectors;
- the D-identities that make the quantum trace work;
- the diagonal twist relating the two families.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Tuple

from src.linalg.graded import (
    FUNDAMENTAL_DIM,
    ParityVector,
    embed13_direct,
    partial_trace,
    partial_transpose_second,
    three_space_embed,
)
from src.linalg.poly_matrix import PolyMatrix, flip, kron
from src.ring.laurent import LAMBDA, ONE, Q, Q12, Q13, Q23, S, LaurentPoly
from src.utils.logging import logger
from src.utils.reports import Report


class RKind(str, Enum):
    TWO_PARAM = "two-param"
    FOUR_PARAM = "four-param"
    CUSTOM = "custom"


# pi(g) on the fundamental; also the D matrix of the quantum trace
D_MATRIX = ParityVector.fundamental().sign_matrix()


def eta() -> PolyMatrix:
    """eta_{ik,jl} = (-1)^{p(i)p(k)} delta_ij delta_kl."""
    parities = ParityVector.fundamental().parities
    return PolyMatrix.diag([-1 if a and b else 1 for a in parities for b in parities])


def _pair(i: int, k: int) -> int:
    """0-based row of the 1-based pair (i, k)."""
    return FUNDAMENTAL_DIM * (i - 1) + k - 1


def _r_matrix(p12: LaurentPoly, p13: LaurentPoly, p23: LaurentPoly) -> PolyMatrix:
    qi = Q**-1
    diagonal = {
        (1, 1): -ONE,
        (1, 2): qi * p12,
        (1, 3): -qi * p13,
        (2, 1): qi * p12**-1,
        (2, 2): Q**-2,
        (2, 3): qi * p23,
        (3, 1): -qi * p13**-1,
        (3, 2): qi * p23**-1,
        (3, 3): -ONE,
    }
    entries: Dict[Tuple[int, int], LaurentPoly] = {
        (_pair(*ik), _pair(*ik)): value for ik, value in diagonal.items()
    }
    for low, high in (((2, 1), (1, 2)), ((3, 1), (1, 3)), ((3, 2), (2, 3))):
        entries[(_pair(*low), _pair(*high))] = -qi * LAMBDA
    return PolyMatrix(9, 9, entries)


@dataclass(frozen=True)
class RMatrixFamily:
    """An R-matrix together with its braided form R_hat = P R."""

    kind: RKind
    r: PolyMatrix
    r_hat: PolyMatrix

    @classmethod
    def from_matrix(cls, r: PolyMatrix, kind: RKind = RKind.CUSTOM) -> "RMatrixFamily":
        return cls(RKind(kind), r, flip(FUNDAMENTAL_DIM) @ r)

    @classmethod
    def two_param(cls) -> "RMatrixFamily":
        return cls.from_matrix(_r_matrix(S, S, S), RKind.TWO_PARAM)

    @classmethod
    def four_param(cls) -> "RMatrixFamily":
        return cls.from_matrix(_r_matrix(Q12, Q13, Q23), RKind.FOUR_PARAM)

    def with_entry(self, row: int, col: int, value: object) -> "RMatrixFamily":
        """Copy with one 1-based entry of R replaced (R_hat follows)."""
        entries = dict(self.r.nonzero())
        entries[(row - 1, col - 1)] = value
        return self.from_matrix(PolyMatrix(9, 9, entries))

    def r21(self) -> PolyMatrix:
        p = flip(FUNDAMENTAL_DIM)
        return p @ self.r @ p


def family_for(kind: RKind) -> RMatrixFamily:
    kind = RKind(kind)
    if kind is RKind.TWO_PARAM:
        return RMatrixFamily.two_param()
    if kind is RKind.FOUR_PARAM:
        return RMatrixFamily.four_param()
    raise ValueError("Custom R-matrices are built with RMatrixFamily.from_matrix")


def _add_identity(report: Report, name: str, lhs: PolyMatrix, rhs: PolyMatrix) -> None:
    diff = lhs - rhs
    report.add(name, diff.is_zero(), residual_nonzero_entries=diff.nnz)
    logger.debug("%s/%s: residual %d", report.suite, name, diff.nnz)


def eta_check(family: RMatrixFamily = None) -> Report:
    """eta^2 = I, eta R = R eta, R12 eta13 eta23 = eta23 eta13 R12, and eta = R at q = s = 1."""
    family = family or RMatrixFamily.two_param()
    report = Report(f"eta:{family.kind.value}")
    e = eta()
    _add_identity(report, "eta-squared", e @ e, PolyMatrix.identity(9))
    _add_identity(report, "eta-commutes-r", e @ family.r, family.r @ e)
    e13 = three_space_embed(e, "13")
    e23 = three_space_embed(e, "23")
    r12 = three_space_embed(family.r, "12")
    _add_identity(report, "r12-eta13-eta23", r12 @ e13 @ e23, e23 @ e13 @ r12)
    if family.kind is RKind.TWO_PARAM:
        limit = family.r.substitute({"q": 1, "s": 1})
        _add_identity(report, "classical-limit", limit, e)
    return report


def qybe_check(family: RMatrixFamily) -> Report:
    """
    R12 R13 R23 = R23 R13 R12 and the braid relation of R_hat, on 27x27 matrices.

    The 13-embedding is also compared with its index-formula version.
    """
    report = Report(f"qybe:{family.kind.value}")
    r12 = three_space_embed(family.r, "12")
    r13 = three_space_embed(family.r, "13")
    r23 = three_space_embed(family.r, "23")
    _add_identity(report, "qybe", r12 @ r13 @ r23, r23 @ r13 @ r12)
    h12 = three_space_embed(family.r_hat, "12")
    h23 = three_space_embed(family.r_hat, "23")
    _add_identity(report, "braid", h12 @ h23 @ h12, h23 @ h12 @ h23)
    _add_identity(report, "embed13", r13, embed13_direct(family.r))
    logger.info("%s", report.summary())
    return report


def char_eq_check(family: RMatrixFamily) -> Report:
    """R_hat^2 + q^-1 lambda R_hat - q^-2 = 0, eigenvalues -1 and q^-2."""
    report = Report(f"chareq:{family.kind.value}")
    h = family.r_hat
    residual = h @ h + h.scale(Q**-1 * LAMBDA) - PolyMatrix.identity(9).scale(Q**-2)
    report.add(
        "char-eq",
        residual.is_zero(),
        residual_nonzero_entries=residual.nnz,
        eigenvalues=["-1", "q^-2"],
    )
    logger.info("%s", report.summary())
    return report


def eigenprojector_check(family: RMatrixFamily) -> Report:
    """
    Scaled eigenprojectors A = q^-2 - R_hat and B = R_hat + 1.

    With n = 1 + q^-2: AB = BA = 0, A + B = n, A^2 = nA, B^2 = nB.
    """
    report = Report(f"eigenprojectors:{family.kind.value}")
    ident = PolyMatrix.identity(9)
    norm = ONE + Q**-2
    a = ident.scale(Q**-2) - family.r_hat
    b = family.r_hat + ident
    zero = PolyMatrix.zeros(9)
    _add_identity(report, "ab", a @ b, zero)
    _add_identity(report, "ba", b @ a, zero)
    _add_identity(report, "sum", a + b, ident.scale(norm))
    _add_identity(report, "a-squared", a @ a, a.scale(norm))
    _add_identity(report, "b-squared", b @ b, b.scale(norm))
    return report


def d_identities_check(family: RMatrixFamily = None, d: PolyMatrix = None) -> Report:
    """
    The five trace identities of R_hat with D = diag(-1, 1, -1):

        Tr2(D2 R_hat) = I,  Tr1(D1^-1 R_hat^-1) = I,  D1 (R^T2)^-1 = (R^-1)^T2 D1,
        Tr2(D2 R_hat^-1) = I,  Tr1(D1^-1 R_hat) = I.

    Passing another diagonal ``d`` shows which identities depend on D.
    """
    family = family or RMatrixFamily.two_param()
    d = D_MATRIX if d is None else d
    report = Report(f"dident:{family.kind.value}")
    dims = (FUNDAMENTAL_DIM, FUNDAMENTAL_DIM)
    weights = d.diagonal()
    inv_weights = [w.inverse() for w in weights]
    ident = PolyMatrix.identity(FUNDAMENTAL_DIM)
    h = family.r_hat
    h_inv = h.inverse()

    _add_identity(report, "tr2-d-rhat", partial_trace(h, dims, 2, weights), ident)
    _add_identity(report, "tr1-dinv-rhatinv", partial_trace(h_inv, dims, 1, inv_weights), ident)
    d1 = kron(d, ident)
    lhs = d1 @ partial_transpose_second(family.r).inverse()
    rhs = partial_transpose_second(family.r.inverse()) @ d1
    _add_identity(report, "d-transpose-inverse", lhs, rhs)
    _add_identity(report, "tr2-d-rhatinv", partial_trace(h_inv, dims, 2, weights), ident)
    _add_identity(report, "tr1-dinv-rhat", partial_trace(h, dims, 1, inv_weights), ident)
    # D^2 = I gives S^4 = id
    _add_identity(report, "d-squared", d @ d, ident)
    logger.info("%s", report.summary())
    return report


_TWIST_PARAMS = {(1, 2): Q12, (1, 3): Q13, (2, 3): Q23}


def twist_factor(i: int, k: int) -> LaurentPoly:
    """f(i,k) = s/q_ik for 1-based i < k and 1 otherwise."""
    return S * _TWIST_PARAMS[(i, k)] ** -1 if i < k else ONE


def twist_matrix(reverse: bool = False) -> PolyMatrix:
    """
    Diagonal twist F12 with entry f(i,k) on the pair (i, k).

    ``reverse`` gives F21, i.e. f(k,i) on the pair (i, k).
    """
    values = []
    for i in range(1, 4):
        for k in range(1, 4):
            values.append(twist_factor(k, i) if reverse else twist_factor(i, k))
    return PolyMatrix.diag(values)


def twist_check() -> Report:
    """F21 R(q, s) F12^-1 equals the four-parameter R-matrix."""
    report = Report("twist")
    two = RMatrixFamily.two_param()
    four = RMatrixFamily.four_param()
    twisted = twist_matrix(reverse=True) @ two.r @ twist_matrix().inverse()
    _add_identity(report, "twist", twisted, four.r)
    return report


def four_param_match_check() -> Report:
    """The four-parameter R-matrix at q12 = q13 = q23 = s is the two-parameter one."""
    report = Report("four-param-match")
    four = RMatrixFamily.four_param().r.substitute({"q12": S, "q13": S, "q23": S})
    _add_identity(report, "q_ij=s", four, RMatrixFamily.two_param().r)
    return report


__all__ = [
    "D_MATRIX",
    "RKind",
    "RMatrixFamily",
    "char_eq_check",
    "d_identities_check",
    "eigenprojector_check",
    "eta",
    "eta_check",
    "family_for",
    "four_param_match_check",
    "qybe_check",
    "twist_check",
    "twist_factor",
    "twist_matrix",
]
