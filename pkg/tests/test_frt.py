"""
Tests for the R-matrices, the L-matrices and the RLL relations.
"""

import pytest

from src.algebra.generators import FUNDAMENTAL
from src.algebra.words import CartanExp, single
from src.frt.appendix import (
    appendix_relations,
    blocks_for,
    cartan_guard,
    rll_appendix_check,
    rll_matrix_check,
)
from src.frt.lmatrices import (
    LPM_TABLE,
    OFF_DIAGONAL_BLOCKS,
    block_degree_check,
    bosonization_check,
    duality_check,
    lpm_rep,
    pairing_blocks,
    superdet_check,
    y_rep,
    z_rescale,
)
from src.frt.rmatrix import (
    RKind,
    RMatrixFamily,
    char_eq_check,
    d_identities_check,
    eigenprojector_check,
    eta,
    eta_check,
    family_for,
    four_param_match_check,
    qybe_check,
    twist_check,
)
from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import LAMBDA, ONE, Q, Q13, S
from src.utils.errors import UnsupportedL

FAMILIES = [RMatrixFamily.two_param, RMatrixFamily.four_param]


def test_r_matrix_entries():
    """Diagonal entries on (1,1), (1,2), (2,2) and the lambda entry below the diagonal."""
    r = RMatrixFamily.two_param().r
    assert r.one_based(1, 1) == -ONE
    assert r.one_based(2, 2) == Q**-1 * S
    assert r.one_based(5, 5) == Q**-2
    assert r.one_based(4, 2) == -(Q**-1) * LAMBDA
    assert r.one_based(2, 4) == 0


def test_r_hat_is_flipped_r():
    """R_hat = P R moves row (2,1) of R to row (1,2)."""
    family = RMatrixFamily.two_param()
    assert family.r_hat.one_based(2, 2) == -(Q**-1) * LAMBDA
    assert family.r_hat.one_based(4, 2) == Q**-1 * S


def test_classical_limit_is_eta():
    """At q = s = 1 the R-matrix is the graded sign matrix."""
    r = RMatrixFamily.two_param().r.substitute({"q": 1, "s": 1})
    assert r == eta()
    assert eta().one_based(1, 1) == -1 and eta().one_based(2, 2) == 1


@pytest.mark.parametrize("make", FAMILIES)
def test_qybe_and_braid(make):
    """Both families satisfy the Yang-Baxter and braid relations."""
    report = qybe_check(make())
    assert report.passed, report.failures()


@pytest.mark.parametrize("make", FAMILIES)
def test_characteristic_equation(make):
    """R_hat^2 + q^-1 lambda R_hat - q^-2 = 0 and its eigenprojectors."""
    family = make()
    assert char_eq_check(family).passed
    assert eigenprojector_check(family).passed


def test_broken_entry_fails_char_eq():
    """Replacing R(1,1) = -1 by -2 breaks the characteristic equation."""
    broken = RMatrixFamily.two_param().with_entry(1, 1, -2)
    assert broken.kind is RKind.CUSTOM
    assert not char_eq_check(broken).passed


def test_eta_identities():
    """eta^2 = 1, eta commutes with R, and the three-space exchange."""
    assert eta_check().passed


def test_d_identities_need_the_grading_sign():
    """The trace identities hold for D = diag(-1, 1, -1) but not for D = 1."""
    assert d_identities_check().passed
    plain = d_identities_check(d=PolyMatrix.identity(3))
    assert not plain.case("tr2-d-rhat").passed
    assert plain.case("d-squared").passed


def test_twist_relates_the_families():
    """The diagonal twist maps the two-parameter R-matrix onto the four-parameter one."""
    assert twist_check().passed
    assert four_param_match_check().passed


def test_family_for_custom():
    """Custom families are only built from explicit matrices."""
    assert family_for("four-param").kind is RKind.FOUR_PARAM
    with pytest.raises(ValueError):
        family_for(RKind.CUSTOM)


@pytest.mark.parametrize("make", FAMILIES)
def test_rll_matrix_form(make):
    """RLL on aux (x) aux (x) site for L+, L- and the mixed pair."""
    report = rll_matrix_check(make())
    assert report.passed, report.failures()


@pytest.mark.parametrize("zeta", [1, -1])
def test_rll_block_relations(zeta):
    """Every asserted block relation vanishes, with or without a Cartan factor."""
    assert rll_appendix_check(zeta).passed
    assert rll_appendix_check(zeta, cartan=cartan_guard()).passed
    assert rll_appendix_check(zeta, RMatrixFamily.four_param()).passed


def test_pairing_and_block_structure():
    """Duality, superdeterminant, bosonization and block degrees."""
    assert duality_check().passed
    assert superdet_check().passed
    assert not superdet_check(scale=2).passed
    assert bosonization_check().passed
    assert block_degree_check().passed


def test_y_on_one_site():
    """Y is R_hat^2 on one site and undefined beyond two."""
    family = RMatrixFamily.two_param()
    assert y_rep(1) == family.r_hat @ family.r_hat
    with pytest.raises(UnsupportedL):
        y_rep(3)


def test_duality_records_block_ratios():
    """Off-diagonal pairing blocks are the evaluated ones times fixed units."""
    report = duality_check()
    assert report.passed, report.failures()
    assert report.case("P12").detail["ratio"] == str(-(S**-1))
    assert report.case("P13").detail["ratio"] == str(Q**-1 * S**-1)
    assert report.case("M31").detail["ratio"] == str(ONE)
    assert report.case("lpm-plus").passed and report.case("lpm-minus").passed


def test_duality_four_param_through_the_twist():
    assert duality_check(RMatrixFamily.four_param()).passed


def test_perturbed_table_entry_fails_duality():
    """Dropping the q in front of L+_13 changes its ratio and breaks eta R21."""
    table = dict(LPM_TABLE)
    table["P13"] = single(LAMBDA, "E3p", CartanExp((-1, 0, 0), (1, 0, 0)))
    report = duality_check(table=table)
    assert not report.passed
    assert not report.case("P13").passed
    assert not report.case("lpm-plus").passed
    assert report.case("lpm-minus").passed

    table = dict(LPM_TABLE)
    table["M22"] = single(1, CartanExp((1, -1, 0), (0, 1, 0)))
    report = duality_check(table=table)
    assert not report.case("M22").passed
    assert not report.case("lpm-minus").passed


@pytest.mark.parametrize(
    "name, token",
    [
        ("P12", "E1p"),
        ("P23", "E2p"),
        ("P13", "E3p"),
        ("M21", "E1m"),
        ("M32", "E2m"),
        ("M31", "E3m"),
    ],
)
def test_off_diagonal_blocks_are_generator_images(name, token):
    """Each off-diagonal L-entry acts where its root vector acts."""
    assert name in OFF_DIAGONAL_BLOCKS
    block = lpm_rep()[name]
    assert {index for index, _ in block.nonzero()} == {
        index for index, _ in FUNDAMENTAL[token].nonzero()
    }


def test_evaluated_entries():
    blocks = lpm_rep()
    assert blocks["P12"][(1, 0)] == LAMBDA * Q**-1 * S
    assert blocks["M31"][(0, 2)] == -Q * LAMBDA


def test_z_rescale_leaves_two_param_blocks():
    """Rescaled four-parameter blocks are the two-parameter ones."""
    four = pairing_blocks(RMatrixFamily.four_param())
    two = pairing_blocks(RMatrixFamily.two_param())
    rescaled = z_rescale(four)
    assert rescaled == two
    assert z_rescale(rescaled, inverse=True) == four
    for name in OFF_DIAGONAL_BLOCKS:
        assert four[name] == two[name]
    assert four["P11"] != two["P11"]


def test_four_param_relations_at_generic_q_ij():
    """With q12, q13, q23 away from s only the rescaled blocks satisfy the exchange."""
    at = {"q": 3, "s": 7, "q12": 2, "q13": 5, "q23": 11}
    four = RMatrixFamily.four_param()

    def at_point(blocks):
        return {name: block.substitute(at) for name, block in blocks.items()}

    raw = at_point(blocks_for(four, 1, rescale=False))
    rescaled = at_point(blocks_for(four, 1))
    two = at_point(pairing_blocks(RMatrixFamily.two_param()))
    assert rescaled == two
    relations = {rel.name: rel for rel in appendix_relations(1)}
    exchange = relations["P11*P12"]
    assert exchange.evaluate(rescaled).substitute(at).is_zero()
    assert not exchange.evaluate(raw).substitute(at).is_zero()


@pytest.mark.parametrize("zeta", [1, -1])
def test_four_param_blocks_need_rescaling(zeta):
    four = RMatrixFamily.four_param()
    report = rll_appendix_check(zeta, four)
    assert report.passed and report.case("q_ij-free").passed
    assert not rll_appendix_check(zeta, four, rescale=False).passed


def test_perturbed_four_param_input_fails():
    """Replacing q12 by q13 in one diagonal entry survives the rescaling and fails."""
    broken = RMatrixFamily.four_param().with_entry(2, 2, Q**-1 * Q13)
    report = rll_appendix_check(1, broken, rescale=True)
    assert not report.passed
    assert not report.case("q_ij-free").passed
    assert not report.case("P22*P12").passed
