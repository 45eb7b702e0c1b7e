"""
Tests for the t-J Hamiltonians: closed forms, chains, Hecke relations, the
similarity reduction, the two-site commutant and spectral comparisons.
"""

import random
from fractions import Fraction

import pytest

from src.algebra.hopf import HopfVariant
from src.chain.commutant import invariant_commutant, nullspace, random_exact_point
from src.chain.fermionic import fermionic_check, word_matrix, word_parity
from src.chain.hamiltonians import (
    HamiltonianKind,
    chain_hamiltonian,
    closed_form,
    invariance_check,
    l_site_hamiltonian,
    normalization_check,
    proportional_to_rhat_plus_id,
    reflect_hamiltonian,
)
from src.chain.hecke import hecke_check, shift_value
from src.chain.similarity import DOWN, EMPTY, UP, occupation_counts, similarity_reduce
from src.chain import spectral
from src.chain.spectral import REFLECTED, hamiltonian_for, random_point, spectral_equivalence
from src.frt.rmatrix import RMatrixFamily
from src.linalg.poly_matrix import PolyMatrix, elementary
from src.ring.laurent import Q, Q13, S, ParamPoint
from src.utils.errors import BadPrime, ChainTooLong, SiteOutOfRange

DEFORMED = [HamiltonianKind.FERMIONIC, HamiltonianKind.DISTINGUISHED, HamiltonianKind.FOUR_PARAM]


def test_closed_form_entries():
    """Spot entries of the classical, fermionic and four-parameter forms."""
    h_cl = closed_form(HamiltonianKind.CLASSICAL)
    assert h_cl.one_based(5, 5) == 2
    assert h_cl.one_based(3, 7) == -1
    h_ferm = closed_form(HamiltonianKind.FERMIONIC)
    assert h_ferm.one_based(2, 4) == S**-1
    assert h_ferm.one_based(5, 5) == Q + Q**-1
    assert closed_form(HamiltonianKind.FOUR_PARAM).one_based(3, 7) == Q13**-1
    assert closed_form(HamiltonianKind.DISTINGUISHED).one_based(2, 2) == Q


def test_fermionic_hamiltonian_is_q_times_rhat_plus_one():
    """H_ferm = q (R_hat + 1)."""
    r_hat = RMatrixFamily.two_param().r_hat
    h = closed_form(HamiltonianKind.FERMIONIC)
    assert h == (r_hat + PolyMatrix.identity(9)).scale(Q)
    assert proportional_to_rhat_plus_id(h, r_hat) == (Q, 0)


def test_chain_trace():
    """Each of the L-1 bonds contributes 3^(L-2) Tr h2; Tr H_cl = 8."""
    assert chain_hamiltonian(HamiltonianKind.CLASSICAL, 2).trace() == 8
    assert chain_hamiltonian(HamiltonianKind.CLASSICAL, 3).trace() == 48
    assert chain_hamiltonian(HamiltonianKind.CLASSICAL, 4).trace() == 3 * 9 * 8


def test_chain_needs_two_sites():
    """A single site has no bond."""
    with pytest.raises(SiteOutOfRange):
        l_site_hamiltonian(closed_form(HamiltonianKind.CLASSICAL), 1)


def test_reflection_maps_fermionic_onto_itself():
    """Inverting q, s and flipping the sites gives back H_ferm."""
    h = closed_form(HamiltonianKind.FERMIONIC)
    assert reflect_hamiltonian(h) == h


@pytest.mark.parametrize(
    "kind", [HamiltonianKind.CLASSICAL, HamiltonianKind.FERMIONIC, HamiltonianKind.DISTINGUISHED]
)
def test_invariance_on_three_sites(kind):
    """Each Hamiltonian commutes with its own Hopf structure."""
    report = invariance_check(kind, 3)
    assert report.passed, report.failures()


def test_fermionic_chain_breaks_classical_symmetry():
    """The deformed chain does not commute with the primitive coproduct."""
    report = invariance_check(HamiltonianKind.FERMIONIC, 2, HopfVariant.CLASSICAL_PRIMITIVE)
    assert not report.passed


def test_four_param_has_no_matched_structure():
    """Invariance needs an explicit structure for the four-parameter chain."""
    with pytest.raises(ValueError):
        invariance_check(HamiltonianKind.FOUR_PARAM, 2)


def test_casimir_normalizations():
    """Two-site Casimir images against the closed forms."""
    report = normalization_check(range(0, 3))
    assert report.passed, report.failures()


def test_single_site_words():
    """c_up+ c_up- projects on the up state and is even."""
    assert word_matrix(("c_up+", "c_up-")) == elementary(3, 1, 1)
    assert word_parity(("c_up+", "c_up-")) == 0
    assert word_parity(("c_dn-", "1-n_up")) == 1
    with pytest.raises(ValueError):
        word_matrix(("c_x",))


@pytest.mark.parametrize("kind", list(HamiltonianKind))
def test_fermionic_expansions(kind):
    """The t-J expansion reproduces every closed form."""
    report = fermionic_check(kind)
    assert report.passed, report.failures()


@pytest.mark.parametrize("shift", ["q", "q^-1"])
@pytest.mark.parametrize(
    "kind", [HamiltonianKind.CLASSICAL, HamiltonianKind.FERMIONIC, HamiltonianKind.DISTINGUISHED]
)
def test_hecke_relations(kind, shift):
    """Quadratic, braid and far-commutation relations on four sites."""
    report = hecke_check(kind, shift, sites=4)
    assert report.passed, report.failures()
    assert report.case("far-1-3") is not None


def test_shift_names():
    """Only q and q^-1 are shifts."""
    assert shift_value("q^-1") == Q**-1
    with pytest.raises(ValueError):
        shift_value("s")


def test_occupation_counts():
    """(up, empty, down) has one pair of each type; (down, up) has none."""
    assert occupation_counts((UP, EMPTY, DOWN)) == (1, 1, 1)
    assert occupation_counts((DOWN, UP)) == (0, 0, 0)
    assert occupation_counts((UP, UP, EMPTY)) == (2, 0, 0)


@pytest.mark.parametrize("kind", DEFORMED)
def test_similarity_reduction(kind):
    """The diagonal similarity removes the hopping anisotropies."""
    report = similarity_reduce(kind, 3)
    assert report.passed, report.failures()


def test_similarity_rejects_classical():
    """There is nothing to remove from the classical chain."""
    with pytest.raises(ValueError):
        similarity_reduce(HamiltonianKind.CLASSICAL, 2)


def test_nullspace_small_system():
    """x0 - x1 = 0 in two unknowns is spanned by (1, 1)."""
    basis = nullspace([{0: Fraction(1), 1: Fraction(-1)}], 2)
    assert basis == [[Fraction(1), Fraction(1)]]


def test_random_exact_point_is_generic():
    """Random values avoid 0 and +-1."""
    at = random_exact_point(random.Random(5))
    assert at.is_exact
    assert at["q"] not in (0, 1, -1) and at["s"] not in (0, 1, -1)


@pytest.mark.parametrize(
    "variant", [HopfVariant.CLASSICAL_PRIMITIVE, HopfVariant.FERMIONIC_STANDARD]
)
def test_two_site_commutant(variant):
    """The invariant two-site operators are spanned by 1 and one more operator."""
    result = invariant_commutant(variant)
    assert result.dimension == 2
    assert result.report.passed, result.report.failures()


def test_random_spectral_points():
    """Spectral points assign every variable and are seeded."""
    first = random_point(random.Random(11))
    second = random_point(random.Random(11))
    assert first.as_dict() == second.as_dict()
    assert all(value not in (0, 1, -1) for value in first.as_dict().values())


def test_fermionic_and_distinguished_spectra_agree():
    """Both deformations are isospectral on two and three sites."""
    for sites in (2, 3):
        result = spectral_equivalence(
            "fermionic", "distinguished", sites, newton_kmax=10, exact_kmax=10
        )
        assert result.confident
        assert result.passed, result.to_report().failures()


def test_classical_spectrum_differs():
    """The classical chain has eigenvalue 2 where the deformed one has [2]."""
    result = spectral_equivalence("fermionic", "classical", 2, newton_kmax=0)
    assert not result.passed


def test_reflected_chain_is_isospectral():
    """The reflected fermionic chain has the same spectrum."""
    result = spectral_equivalence("fermionic", REFLECTED, 3, newton_kmax=10)
    assert result.passed


def test_spectral_site_limits():
    """Nine sites are never allowed, seven only with the long flag."""
    with pytest.raises(ChainTooLong):
        spectral_equivalence("fermionic", "distinguished", 9)
    with pytest.raises(ChainTooLong):
        spectral_equivalence("fermionic", "distinguished", 7)
    with pytest.raises(SiteOutOfRange):
        spectral_equivalence("fermionic", "distinguished", 1)
    with pytest.raises(ValueError):
        spectral_equivalence("fermionic", "bogus", 2)


def test_spectral_report_is_deterministic():
    """Identical seeds give identical reports."""
    first = spectral_equivalence("fermionic", "distinguished", 2, seed=3, newton_kmax=0)
    second = spectral_equivalence("fermionic", "distinguished", 2, seed=3, newton_kmax=0)
    assert first.to_report().to_dict() == second.to_report().to_dict()


def test_two_site_symbolic_traces_to_81():
    """Tr(H^k) of both deformed chains coincide as Laurent polynomials for k <= 81."""
    result = spectral_equivalence("fermionic", "distinguished", 2, newton_kmax=0, exact_kmax=81)
    case = result.to_report().case("newton-exact")
    assert case.passed, case.detail
    assert case.detail["symbolic"] is True
    assert case.detail["kmax"] == 81
    assert case.detail["first_mismatch"] is None


def test_symbolic_traces_separate_different_spectra():
    """Nine traces of a 9x9 chain pin its spectrum, so the classical one differs."""
    result = spectral_equivalence("fermionic", "classical", 2, newton_kmax=0, exact_kmax=9)
    case = result.to_report().case("newton-exact")
    assert not case.passed
    assert case.detail["traces_equal"] is False
    assert 1 <= case.detail["first_mismatch"] <= 9


def test_replaced_prime_is_the_one_reported(monkeypatch):
    """A prime rejected for a vanishing denominator is replaced, and the rows say so."""
    real = spectral.modular_charpoly

    def rejecting_seven(m, at, prime):
        if prime == 7:
            raise BadPrime("Denominator vanishes mod 7")
        return real(m, at, prime)

    monkeypatch.setattr(spectral, "modular_charpoly", rejecting_seven)
    h = hamiltonian_for("fermionic", 2)
    row = spectral._compare_at(h, h, 0, ParamPoint.exact(q=2, s=3), 7, seed=1)
    assert row["agree"]
    assert row["replaced_prime"] == 7
    assert row["prime"] != 7

    report = spectral.SpectralReport(
        2, ["fermionic", "fermionic"], 1, primes=[7], agreements=[row]
    )
    assert report.to_report().params["replaced_primes"] == [
        {"point": 0, "drawn": 7, "used": row["prime"]}
    ]
    assert report.to_report().case(f"charpoly-0-{row['prime']}") is not None
