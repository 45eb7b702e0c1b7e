"""
Relations among the entries of L+ and L-, checked on their fundamental images.

Every relation is stored as two sums of block products, with zeta = +1 for
the graded L-matrices and zeta = -1 for the bosonized ones. The compact
matrix form R12 L2 eta12 L1 = L1 eta12 L2 R12 is checked separately on
aux (x) aux (x) site.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.frt.lmatrices import Blocks, pairing_blocks, z_rescale
from src.frt.rmatrix import RKind, RMatrixFamily, eta
from src.linalg.graded import FUNDAMENTAL_DIM, three_space_embed
from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import LAMBDA, Q, S, LaurentPoly, poly
from src.utils.logging import logger
from src.utils.reports import Report

BlockTerm = Tuple[LaurentPoly, Tuple[str, ...]]


@dataclass(frozen=True)
class BlockRelation:
    name: str
    lhs: Tuple[BlockTerm, ...]
    rhs: Tuple[BlockTerm, ...]
    asserted: bool = True

    def evaluate(self, blocks: Blocks, left: PolyMatrix = None) -> PolyMatrix:
        """lhs - rhs, optionally multiplied on the left by ``left``."""
        diff = _sum_terms(self.lhs, blocks) - _sum_terms(self.rhs, blocks)
        return diff if left is None else left @ diff


def _sum_terms(terms: Sequence[BlockTerm], blocks: Blocks) -> PolyMatrix:
    total = PolyMatrix.zeros(FUNDAMENTAL_DIM)
    for coeff, names in terms:
        product = blocks[names[0]]
        for name in names[1:]:
            product = product @ blocks[name]
        total = total + product.scale(coeff)
    return total


def _t(coeff: object, *names: str) -> BlockTerm:
    return poly(coeff), names


def _exchange(a: str, b: str, coeff: LaurentPoly) -> BlockRelation:
    """a b = coeff b a"""
    return BlockRelation(f"{a}*{b}", (_t(1, a, b),), (_t(coeff, b, a),))


def appendix_relations(zeta: int) -> List[BlockRelation]:
    """
    The full list for one value of zeta.

    Within a group the u = +1 rows use L+ (``P``) and the u = -1 rows use L-
    (``M``) for the Cartan block X.
    """
    if zeta not in (1, -1):
        raise ValueError(f"zeta must be +1 or -1, got {zeta}")
    z = zeta
    s_inv = S**-1
    rels: List[BlockRelation] = []
    for x, u in (("P", 1), ("M", -1)):
        qu, qmu = Q**u, Q**-u
        rels += [
            _exchange(f"{x}11", "P12", qmu * s_inv * z),
            _exchange(f"{x}22", "P12", qmu * s_inv),
            _exchange(f"{x}33", "P12", poly(z)),
            _exchange(f"{x}11", "M21", qu * S * z),
            _exchange(f"{x}22", "M21", qu * S),
            _exchange(f"{x}33", "M21", poly(z)),
            _exchange(f"{x}11", "P23", poly(z)),
            _exchange(f"{x}22", "P23", qu * s_inv),
            _exchange(f"{x}33", "P23", qu * s_inv * z),
            _exchange(f"{x}11", "M32", poly(z)),
            _exchange(f"{x}22", "M32", qmu * S),
            _exchange(f"{x}33", "M32", qmu * S * z),
            _exchange(f"{x}11", "P13", qmu * s_inv),
            _exchange(f"{x}22", "P13", S**-2),
            _exchange(f"{x}33", "P13", qu * s_inv),
            _exchange(f"{x}11", "M31", qu * S),
            _exchange(f"{x}22", "M31", S**2),
            _exchange(f"{x}33", "M31", qmu * S),
        ]

    for name in ("P12", "M21", "P23", "M32"):
        rels.append(BlockRelation(f"{name}^2=0", (_t(1, name, name),), ()))

    rels += [
        BlockRelation(
            "P12*P23+P23*P12",
            (_t(1, "P12", "P23"), _t(z, "P23", "P12")),
            (_t(LAMBDA * s_inv, "P13", "P22"),),
        ),
        BlockRelation(
            "M32*M21+M21*M32",
            (_t(1, "M32", "M21"), _t(z, "M21", "M32")),
            (_t(-LAMBDA * S, "M31", "M22"),),
        ),
        _exchange("P13", "P12", Q * S * z),
        _exchange("M31", "M32", Q**-1 * s_inv * z),
        _exchange("P23", "P13", Q * s_inv * z),
        _exchange("M31", "M21", Q * s_inv * z),
        _exchange("P12", "M32", -(Q**-1) * S),
        _exchange("P23", "M21", -Q * S),
    ]

    def weighted(a: str, b: str, sign: int, with_zeta: bool, rhs) -> BlockRelation:
        """s^-1 a b + sign (z) s b a = rhs"""
        inner = sign * (z if with_zeta else 1)
        return BlockRelation(
            f"s^-1*{a}*{b}{'+' if inner > 0 else '-'}s*{b}*{a}",
            (_t(s_inv, a, b), _t(S * inner, b, a)),
            tuple(rhs),
            asserted=with_zeta,
        )

    rels += [
        weighted("P12", "M31", -1, True, [_t(LAMBDA, "M32", "P11")]),
        weighted("P13", "M21", -1, True, [_t(-LAMBDA * z, "P23", "M11")]),
        weighted("P23", "M31", -1, True, [_t(-LAMBDA, "M21", "P33")]),
        weighted("P13", "M32", -1, True, [_t(LAMBDA * z, "P12", "M33")]),
        weighted(
            "P12", "M21", 1, True, [_t(-LAMBDA, "P11", "M22"), _t(LAMBDA, "P22", "M11")]
        ),
        weighted(
            "P23",
            "M32",
            1,
            True,
            [_t(LAMBDA * z, "P22", "M33"), _t(-LAMBDA * z, "P33", "M22")],
        ),
        # carries no zeta as written
        weighted(
            "P13", "M31", -1, False, [_t(LAMBDA, "P11", "M33"), _t(-LAMBDA, "P33", "M11")]
        ),
    ]
    return rels


def blocks_for(
    family: RMatrixFamily, zeta: int, rescale: Optional[bool] = None
) -> Blocks:
    """
    Pairing blocks of ``family`` in the form the relations are written in.

    Four-parameter blocks are rescaled through ``z_rescale`` unless ``rescale``
    says otherwise; custom families are rescaled only on request.
    """
    blocks = pairing_blocks(family, zeta)
    if rescale is None:
        rescale = family.kind is RKind.FOUR_PARAM
    return z_rescale(blocks) if rescale else blocks


def rll_appendix_check(
    zeta: int,
    family: RMatrixFamily = None,
    cartan: PolyMatrix = None,
    rescale: Optional[bool] = None,
) -> Report:
    """
    Evaluate every relation on the L-blocks of ``family``.

    Args:
        zeta (int): +1 for graded, -1 for bosonized L-matrices.
        family (RMatrixFamily): Source of the blocks, two-parameter by default.
        cartan (PolyMatrix): Optional diagonal matrix multiplying both sides on
            the left; the outcome must not change.
        rescale (bool): Remove the twist from the blocks first; the default
            does so for the four-parameter family only.

    Returns:
        Report: One case per relation, plus ``q_ij-free`` when rescaling.
    """
    family = family or RMatrixFamily.two_param()
    if rescale is None:
        rescale = family.kind is RKind.FOUR_PARAM
    blocks = blocks_for(family, zeta, rescale)
    tag = "rll+" if zeta == 1 else "rll-"
    report = Report(f"{tag}:{family.kind.value}")
    if rescale:
        leftover = sorted(
            name
            for name, block in blocks.items()
            if not all(v.depends_only_on("q", "s") for _, v in block.nonzero())
        )
        report.add("q_ij-free", not leftover, blocks=leftover)
    for relation in appendix_relations(zeta):
        residual = relation.evaluate(blocks, cartan)
        record = report.add if relation.asserted else report.note
        record(relation.name, residual.is_zero(), residual_nonzero_entries=residual.nnz)
        if relation.asserted and not residual.is_zero():
            logger.warning("Relation %s fails for zeta=%d", relation.name, zeta)
    logger.info("%s", report.summary())
    return report


def rll_matrix_check(family: RMatrixFamily = None) -> Report:
    """
    R12 L2 eta12 L1 = L1 eta12 L2 R12 on aux (x) aux (x) site.

    L+ images are L1 = eta13 R31, L2 = eta23 R32; L- images use R13^-1, R23^-1.
    The mixed case pairs L2 = L+ with L1 = L-.
    """
    family = family or RMatrixFamily.two_param()
    report = Report(f"rll-matrix:{family.kind.value}")
    e = eta()
    e12, e13, e23 = (three_space_embed(e, pair) for pair in ("12", "13", "23"))
    r12 = three_space_embed(family.r, "12")
    r21 = family.r21()
    r_inv = family.r.inverse()
    plus1 = e13 @ three_space_embed(r21, "13")
    plus2 = e23 @ three_space_embed(r21, "23")
    minus1 = e13 @ three_space_embed(r_inv, "13")
    minus2 = e23 @ three_space_embed(r_inv, "23")
    for name, l1, l2 in (
        ("rll-plus", plus1, plus2),
        ("rll-minus", minus1, minus2),
        ("rll-mixed", minus1, plus2),
    ):
        diff = r12 @ l2 @ e12 @ l1 - l1 @ e12 @ l2 @ r12
        report.add(name, diff.is_zero(), residual_nonzero_entries=diff.nnz)
    logger.info("%s", report.summary())
    return report


def cartan_guard(power: int = 1) -> PolyMatrix:
    """q^{H1} s^{2 H2} raised to ``power`` on the fundamental."""
    return PolyMatrix.diag(
        [Q ** (power * h1) * S ** (2 * power * h2) for h1, h2 in ((1, 0), (1, -1), (0, -1))]
    )


__all__ = [
    "BlockRelation",
    "appendix_relations",
    "blocks_for",
    "cartan_guard",
    "rll_appendix_check",
    "rll_matrix_check",
]
