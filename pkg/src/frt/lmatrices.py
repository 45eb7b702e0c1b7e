"""
L-matrices of the FRT presentation and their fundamental images.

``LPM_TABLE`` holds the entries of the upper triangular L+ and the lower
triangular L- as algebra elements. ``lpm_rep`` evaluates them in the
fundamental representation; ``pairing_blocks`` reads the same 3x3 blocks off
an R-matrix, pi(L+_ij)_kl = eta_ik R_(ki),(lj) and pi(L-_ij)_kl =
eta_ik (R^-1)_(ik),(jl). Block names are ``P<ij>`` for L+ and ``M<ij>`` for L-.

The bosonized matrices (zeta = -1) multiply the columns j = 1, 3 by the
parity element g, whose image is D = diag(-1, 1, -1).
"""

from typing import Dict, Mapping, Optional

from src.algebra.generators import (
    FERMIONIC_TOKENS,
    FUNDAMENTAL,
    chain_context,
    degree,
    grading_sign,
)
from src.algebra.words import CartanExp, TensorWord, evaluate_element, single
from src.frt.rmatrix import D_MATRIX, RKind, RMatrixFamily, eta, twist_factor
from src.linalg.graded import FUNDAMENTAL_DIM, ParityVector, three_space_embed
from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import LAMBDA, ONE, Q, S, LaurentPoly, divide_lambda_power, qpow
from src.utils.errors import NotDivisible, UnsupportedL
from src.utils.logging import logger
from src.utils.reports import Report

Blocks = Dict[str, PolyMatrix]

CARTAN_BLOCKS = ("P11", "P22", "P33", "M11", "M22", "M33")
OFF_DIAGONAL_BLOCKS = ("P12", "P23", "P13", "M21", "M32", "M31")

LPM_TABLE: Dict[str, TensorWord] = {
    "P11": single(1, CartanExp((0, 1, 0), (0, 1, 0))),
    "P22": single(1, CartanExp((-1, 1, 0), (1, 1, 0))),
    "P33": single(1, CartanExp((-1, 0, 0), (1, 0, 0))),
    "P12": single(LAMBDA, "E1p", CartanExp((-1, 1, 0), (1, 1, 0))),
    "P23": single(LAMBDA, "E2p", CartanExp((-1, 0, 0), (1, 0, 0))),
    "P13": single(Q * LAMBDA, "E3p", CartanExp((-1, 0, 0), (1, 0, 0))),
    "M11": single(1, CartanExp((0, -1, 0), (0, 1, 0))),
    "M22": single(1, CartanExp((1, -1, 0), (1, 1, 0))),
    "M33": single(1, CartanExp((1, 0, 0), (1, 0, 0))),
    "M21": single(-(Q**-1) * LAMBDA, "E1m", CartanExp((1, -1, 0), (1, 1, 0))),
    "M32": single(Q * LAMBDA, "E2m", CartanExp((1, 0, 0), (1, 0, 0))),
    "M31": single(Q * LAMBDA, "E3m", CartanExp((1, 0, 0), (1, 0, 0))),
}

# pairing block / evaluated entry for the two-parameter R-matrix
LPM_NORMALIZATION: Dict[str, LaurentPoly] = {
    "P12": -(S**-1),
    "P23": -(S**-1),
    "P13": Q**-1 * S**-1,
    "M21": -ONE,
    "M32": -ONE,
    "M31": ONE,
}


def _bosonize(blocks: Blocks, zeta: int) -> Blocks:
    if zeta not in (1, -1):
        raise ValueError(f"zeta must be +1 or -1, got {zeta}")
    if zeta == 1:
        return dict(blocks)
    return {
        name: block @ D_MATRIX if int(name[2]) % 2 else block
        for name, block in blocks.items()
    }


def lpm_rep(zeta: int = 1, table: Mapping[str, TensorWord] = None) -> Blocks:
    """Fundamental images of the L+- entries, bosonized for ``zeta = -1``."""
    ctx = chain_context(1)
    blocks = {
        name: evaluate_element(entry, lambda t: FUNDAMENTAL[t], ctx)
        for name, entry in (table or LPM_TABLE).items()
    }
    return _bosonize(blocks, zeta)


def pairing_blocks(family: RMatrixFamily = None, zeta: int = 1) -> Blocks:
    """The nonzero 3x3 blocks of <L+-, A> read off an R-matrix."""
    family = family or RMatrixFamily.two_param()
    d = FUNDAMENTAL_DIM
    signs = eta()
    r_inv = family.r.inverse()
    blocks: Blocks = {}
    for name in CARTAN_BLOCKS + OFF_DIAGONAL_BLOCKS:
        i, j = int(name[1]) - 1, int(name[2]) - 1
        entries = {}
        for k in range(d):
            sign = signs[(i * d + k, i * d + k)]
            for l in range(d):
                if name[0] == "P":
                    value = family.r[(k * d + i, l * d + j)]
                else:
                    value = r_inv[(i * d + k, j * d + l)]
                if value:
                    entries[(k, l)] = sign * value
        blocks[name] = PolyMatrix(d, d, entries)
    return _bosonize(blocks, zeta)


def z_rescale(blocks: Blocks, inverse: bool = False) -> Blocks:
    """
    Rescale four-parameter blocks to the two-parameter form.

    R(q, q_ij) = F21 R(q, s) F12^-1 multiplies block (i, j) of L+ and of L- by
    diag_k f(i,k) on the left and diag_l f(l,j)^-1 on the right. Off-diagonal
    blocks are left unchanged; each Cartan block picks up the group-like factor
    diag_k f(i,k)/f(k,i), the image of the Z rescaling. ``inverse`` applies the
    twist instead of removing it.
    """
    d = FUNDAMENTAL_DIM
    sign = 1 if inverse else -1
    out: Blocks = {}
    for name, block in blocks.items():
        i, j = int(name[1]), int(name[2])
        left = PolyMatrix.diag([twist_factor(i, k) ** sign for k in range(1, d + 1)])
        right = PolyMatrix.diag([twist_factor(l, j) ** -sign for l in range(1, d + 1)])
        out[name] = left @ block @ right
    return out


def assemble(blocks: Blocks, prefix: str) -> PolyMatrix:
    """9x9 matrix with ((i,k),(j,l)) entry block_ij[k, l]; absent blocks are zero."""
    d = FUNDAMENTAL_DIM
    entries = {}
    for name, block in blocks.items():
        if name[0] != prefix:
            continue
        i, j = int(name[1]) - 1, int(name[2]) - 1
        for (k, l), value in block.nonzero():
            entries[(i * d + k, j * d + l)] = value
    return PolyMatrix(d * d, d * d, entries)


def block_ratio(target: PolyMatrix, source: PolyMatrix) -> Optional[LaurentPoly]:
    """Unit c with target = c * source, or None."""
    if source.is_zero():
        return None
    (index, den), *_ = list(source.nonzero())
    num = target[index]
    if not den.is_monomial():
        try:
            num, den = divide_lambda_power(num, 1), divide_lambda_power(den, 1)
        except NotDivisible:
            return None
        if not den.is_monomial():
            return None
    ratio = num * den.inverse()
    if not ratio.is_monomial() or target != source.scale(ratio):
        return None
    return ratio


def normalized_lpm_rep(table: Mapping[str, TensorWord] = None) -> Blocks:
    """Evaluated L-table, off-diagonal blocks scaled by ``LPM_NORMALIZATION``."""
    blocks = lpm_rep(1, table)
    return {
        name: block.scale(LPM_NORMALIZATION.get(name, ONE))
        for name, block in blocks.items()
    }


def duality_check(
    family: RMatrixFamily = None, table: Mapping[str, TensorWord] = None
) -> Report:
    """
    Compare the evaluated L-table with <L+_1, A_2> = eta12 R21 and
    <L-_1, A_2> = eta12 R12^-1.

    Cartan blocks must coincide with the pairing blocks. Each off-diagonal
    pairing block must equal the evaluated block times the unit recorded in
    ``LPM_NORMALIZATION``. ``lpm-plus`` and ``lpm-minus`` assemble the
    normalized evaluated blocks and compare them with eta R21 and eta R^-1 of
    ``family``; four-parameter families are reached through the twist.
    """
    family = family or RMatrixFamily.two_param()
    report = Report(f"dual:{family.kind.value}")
    four = family.kind is RKind.FOUR_PARAM
    pairing = pairing_blocks(family)
    if four:
        pairing = z_rescale(pairing)
    evaluated = lpm_rep(1, table)
    for name in CARTAN_BLOCKS:
        diff = evaluated[name] - pairing[name]
        report.add(name, diff.is_zero(), residual_nonzero_entries=diff.nnz)
    for name in OFF_DIAGONAL_BLOCKS:
        ratio = block_ratio(pairing[name], evaluated[name])
        expected = LPM_NORMALIZATION[name]
        ok = ratio is not None and ratio == expected
        report.add(name, ok, ratio=str(ratio), expected=str(expected))
        if not ok:
            logger.warning("Block %s: ratio %s, expected %s", name, ratio, expected)

    normalized = normalized_lpm_rep(table)
    if four:
        normalized = z_rescale(normalized, inverse=True)
    for label, prefix, target in (
        ("lpm-plus", "P", eta() @ family.r21()),
        ("lpm-minus", "M", eta() @ family.r.inverse()),
    ):
        diff = assemble(normalized, prefix) - target
        report.add(label, diff.is_zero(), residual_nonzero_entries=diff.nnz)
    logger.info("%s", report.summary())
    return report


def superdet_check(scale: object = 1) -> Report:
    """
    L11 L22^-1 L33 = 1 for both triangular matrices.

    ``scale`` multiplies every block first; any scale other than 1 fails.
    """
    report = Report("sdet")
    blocks = lpm_rep()
    ident = PolyMatrix.identity(FUNDAMENTAL_DIM)
    for prefix, label in (("P", "sdet-plus"), ("M", "sdet-minus")):
        b11, b22, b33 = (blocks[f"{prefix}{i}{i}"].scale(scale) for i in (1, 2, 3))
        diff = b11 @ b22.inverse() @ b33 - ident
        report.add(label, diff.is_zero(), residual_nonzero_entries=diff.nnz)
    return report


def bosonization_check() -> Report:
    """pi(g) X = (-1)^{deg X} X pi(g) on the fundamental, pi(g)^2 = 1, pi(g) = D."""
    report = Report("boson")
    g = grading_sign(chain_context(1))
    report.add("g-is-d", g == D_MATRIX)
    report.add("g-squared", g @ g == PolyMatrix.identity(FUNDAMENTAL_DIM))
    for token in FERMIONIC_TOKENS:
        x = FUNDAMENTAL[token]
        sign = -1 if degree(token) else 1
        diff = g @ x - (x @ g).scale(sign)
        report.add(f"g-{token}", diff.is_zero(), residual_nonzero_entries=diff.nnz)
    logger.info("%s", report.summary())
    return report


def x123(family: RMatrixFamily = None) -> PolyMatrix:
    """q^-1 R23 R12 R23 + q^-3 R12 + (q^-1 + q^-3), braided forms on aux (x) site (x) site."""
    family = family or RMatrixFamily.two_param()
    h12 = three_space_embed(family.r_hat, "12")
    h23 = three_space_embed(family.r_hat, "23")
    ident = PolyMatrix.identity(FUNDAMENTAL_DIM**3)
    return (
        (h23 @ h12 @ h23).scale(qpow(-1))
        + h12.scale(qpow(-3))
        + ident.scale(qpow(-1) + qpow(-3))
    )


def y_rep(sites: int, family: RMatrixFamily = None) -> PolyMatrix:
    """
    Image of Y = L+ S(L-) on aux (x) chain.

    One site gives R_hat^2; two sites give 1 - lambda X123.

    Raises:
        UnsupportedL: ``sites`` is not 1 or 2.
    """
    family = family or RMatrixFamily.two_param()
    if sites == 1:
        return family.r_hat @ family.r_hat
    if sites == 2:
        ident = PolyMatrix.identity(FUNDAMENTAL_DIM**3)
        return ident - x123(family).scale(LAMBDA)
    raise UnsupportedL(f"Y is represented on one or two sites only, got {sites}")


def parity_of_blocks() -> Dict[str, int]:
    """deg L_ij = i + j mod 2."""
    return {name: (int(name[1]) + int(name[2])) % 2 for name in LPM_TABLE}


def block_degree_check() -> Report:
    """Each evaluated block is homogeneous of degree i + j on the fundamental."""
    report = Report("lpm-degrees")
    parities = ParityVector.fundamental().parities
    for name, block in lpm_rep().items():
        want = parity_of_blocks()[name]
        bad = sum(1 for (k, l), _ in block.nonzero() if (parities[k] + parities[l]) % 2 != want)
        report.add(name, bad == 0, violations=bad)
    return report


__all__ = [
    "CARTAN_BLOCKS",
    "LPM_NORMALIZATION",
    "LPM_TABLE",
    "OFF_DIAGONAL_BLOCKS",
    "assemble",
    "block_degree_check",
    "block_ratio",
    "bosonization_check",
    "duality_check",
    "lpm_rep",
    "normalized_lpm_rep",
    "pairing_blocks",
    "parity_of_blocks",
    "superdet_check",
    "x123",
    "y_rep",
    "z_rescale",
]
