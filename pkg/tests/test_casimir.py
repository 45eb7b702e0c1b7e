"""
Tests for the Casimir families and the checks built on them.
"""

import pytest

from src.algebra.hopf import HopfVariant
from src.casimir.checks import (
    centrality_check,
    classical_limit_check,
    fundamental_scalar_check,
    quadratic_relation_check,
    quantum_limit_check,
    weyl_witness,
)
from src.casimir.families import CasimirFamily, CasimirSpec, casimir_rep
from src.casimir.frt_casimir import alpha, ck23_check, frt_casimir_rep, xk_coefficients
from src.linalg.poly_matrix import elementary
from src.ring.laurent import LAMBDA, Q
from src.utils.errors import BadIndex, IndexSumMismatch, UnsupportedL


def test_x_power_coefficients_k2():
    """Second power of X123 from one step of the recursion."""
    coeffs = xk_coefficients(2)
    assert coeffs.a == Q**-8 + 2 * Q**-4 + Q**-2
    assert coeffs.b == Q**-8 - Q**-6 + Q**-4
    assert coeffs.d == Q**-8 - Q**-6
    assert xk_coefficients(2, printed=True).b == Q**-8 + Q**-4


def test_seed_coefficients_satisfy_constraints():
    """X123 itself satisfies both linear constraints."""
    coeffs = xk_coefficients(1)
    assert coeffs.c_constraint().is_zero()
    assert coeffs.f_constraint().is_zero()


def test_alpha_one():
    """alpha_1 = -q^-2 lambda."""
    assert alpha(1) == -(Q**-2) * LAMBDA


@pytest.mark.parametrize(
    "build",
    [
        lambda: alpha(0),
        lambda: xk_coefficients(0),
        lambda: CasimirSpec.classical(1),
        lambda: CasimirSpec.frt(0),
        lambda: CasimirSpec(CasimirFamily.QUANTUM, 1.5),
    ],
)
def test_bad_indices(build):
    """Indices outside each family's range raise BadIndex."""
    with pytest.raises(BadIndex):
        build()


def test_frt_casimir_site_limit():
    """The trace formula is only evaluated on one or two sites."""
    with pytest.raises(UnsupportedL):
        frt_casimir_rep(1, 3)


def test_family_and_coproduct_must_match():
    """Classical Casimirs need the primitive coproduct."""
    with pytest.raises(ValueError):
        casimir_rep(CasimirSpec.classical(2), 2, HopfVariant.FERMIONIC_STANDARD)
    with pytest.raises(ValueError):
        casimir_rep(CasimirSpec.quantum(2), 2, HopfVariant.CLASSICAL_PRIMITIVE)


def test_quadratic_index_sums():
    """Index sums must agree."""
    with pytest.raises(IndexSumMismatch):
        quadratic_relation_check((1, 2, 3, 4), CasimirFamily.QUANTUM)


def test_casimirs_vanish_on_fundamental():
    """Every family acts as zero on a single site."""
    specs = [CasimirSpec.classical(p) for p in (2, 3)]
    specs += [CasimirSpec.quantum(p) for p in (-1, 0, 1, 2, 3)]
    specs += [CasimirSpec.frt(k) for k in (1, 2)]
    report = fundamental_scalar_check(specs)
    assert report.passed, report.failures()


@pytest.mark.parametrize(
    "spec, variant",
    [
        (CasimirSpec.classical(2), HopfVariant.CLASSICAL_PRIMITIVE),
        (CasimirSpec.classical(3), HopfVariant.CLASSICAL_PRIMITIVE),
        (CasimirSpec.quantum(2), HopfVariant.FERMIONIC_STANDARD),
        (CasimirSpec.quantum(-1), HopfVariant.DISTINGUISHED_NATURAL),
        (CasimirSpec.frt(2), HopfVariant.FERMIONIC_STANDARD),
    ],
)
def test_centrality_on_two_sites(spec, variant):
    """Casimirs commute with every generator's coproduct."""
    report = centrality_check(spec, 2, variant)
    assert report.passed, report.failures()


def test_perturbed_casimir_is_not_central():
    """Adding a single off-diagonal entry breaks centrality."""
    spec = CasimirSpec.quantum(1)
    broken = casimir_rep(spec, 2) + elementary(9, 1, 2, Q)
    assert not centrality_check(spec, 2, matrix=broken).passed


def test_quadratic_relations():
    """C1 C3 = C2 C2 for the quantum family; C2 C5 = C3 C4 classically."""
    assert quadratic_relation_check((1, 3, 2, 2), CasimirFamily.QUANTUM).passed
    assert quadratic_relation_check((2, 5, 3, 4), CasimirFamily.CLASSICAL).passed


def test_limits_and_symmetry():
    """Quantum Casimirs reduce to classical ones and have a Weyl-symmetric diagonal."""
    assert quantum_limit_check(3).passed
    assert classical_limit_check(3).passed
    assert weyl_witness(2).passed


def test_frt_casimir_is_multiple_of_rhat_plus_one():
    """c^(k) = alpha_k (R_hat + 1) for small k."""
    report = ck23_check(kmax=3)
    assert report.passed, report.failures()
