"""
Tests for the generators, Hopf structures and defining relations of sl(1|2).
"""

import pytest

from src.algebra.generators import (
    DISTINGUISHED_TOKENS,
    FERMIONIC_TOKENS,
    FUNDAMENTAL,
    Basis,
    GeneratorId,
    chain_context,
    context_from_matrices,
    degree,
)
from src.algebra.hopf import (
    HopfVariant,
    coassociativity_check,
    coproduct,
    coproduct_rep,
    deltafermtilde_check,
    e3_consistency,
    hopf_axiom_check,
)
from src.algebra.presentation import (
    chain_representation,
    fundamental_representation,
    perturb,
    relations,
    verify_presentation,
)
from src.linalg.poly_matrix import PolyMatrix, anticommutator, elementary, kron
from src.ring.laurent import Q
from src.utils.errors import NonIntegerCartan


def test_fundamental_anticommutators():
    """{E1+, E1-} = H1 and {E2+, E2-} = H2 in the fundamental representation."""
    f = FUNDAMENTAL
    assert anticommutator(f["E1p"], f["E1m"]) == f["H1"]
    assert anticommutator(f["E2p"], f["E2m"]) == f["H2"]
    assert f["E2p"] @ f["E1p"] == f["E3p"]


def test_degrees_and_tokens():
    """E3 is even in the fermionic basis, e1 in the distinguished one."""
    assert degree("E3p") == 0 and degree("E1p") == 1
    assert degree("e1p") == 0 and degree("e3m") == 1
    assert GeneratorId.parse("e2m").basis is Basis.DISTINGUISHED
    assert len(FERMIONIC_TOKENS) == len(DISTINGUISHED_TOKENS) == 8
    with pytest.raises(ValueError):
        degree("X")


def test_chain_context_two_sites():
    """H1 on (up, up) is 2 and H2 on (down, down) is -2."""
    ctx = chain_context(2)
    assert ctx.h1[0] == 2
    assert ctx.h2[8] == -2
    assert ctx.dim == 9


def test_context_needs_integer_diagonal():
    """A non-diagonal Cartan matrix is rejected."""
    with pytest.raises(NonIntegerCartan):
        context_from_matrices(elementary(3, 1, 2), FUNDAMENTAL["H2"])


def test_classical_coproduct_is_primitive():
    """On two sites E1+ acts as E1+ (x) 1 + Sigma (x) E1+."""
    sigma = PolyMatrix.diag([-1, 1, -1])
    expected = kron(FUNDAMENTAL["E1p"], PolyMatrix.identity(3)) + kron(
        sigma, FUNDAMENTAL["E1p"]
    )
    assert coproduct_rep("E1p", HopfVariant.CLASSICAL_PRIMITIVE, 2).matrix == expected


def test_cartan_coproduct_is_primitive():
    """H1 is primitive under the two-parameter structure."""
    h1 = FUNDAMENTAL["H1"]
    ident = PolyMatrix.identity(3)
    rep = coproduct_rep("H1", HopfVariant.FERMIONIC_STANDARD, 2).matrix
    assert rep == kron(h1, ident) + kron(ident, h1)


def test_coproduct_of_non_native_generator():
    """Only native generators have stored coproducts."""
    with pytest.raises(ValueError):
        coproduct("e1p", HopfVariant.FERMIONIC_STANDARD)


@pytest.mark.parametrize("variant", ["classical", "standard"])
@pytest.mark.parametrize("token", FERMIONIC_TOKENS)
def test_hopf_axioms(token, variant):
    """Counit, antipode and S^2 = id hold for every fermionic generator."""
    report = hopf_axiom_check(token, HopfVariant(variant))
    assert report.passed, report.failures()


@pytest.mark.parametrize("token", ["E1p", "E2m", "E3p", "E3m"])
def test_coassociativity_on_three_sites(token):
    """Left and right nested coproducts agree."""
    assert coassociativity_check(token, HopfVariant.FERMIONIC_STANDARD, 3)


def test_e3_coproduct_matches_products():
    """The stored E3 coproducts equal the q-commutators of the E1, E2 images."""
    assert e3_consistency(HopfVariant.FERMIONIC_STANDARD, 2) == (True, True)
    assert e3_consistency(HopfVariant.CLASSICAL_PRIMITIVE, 2) == (True, True)


def test_typeset_natural_coproduct_rows():
    """Rows without lambda-terms match; the E1 rows are only noted."""
    report = deltafermtilde_check()
    assert report.passed, report.failures()
    assert not report.case("E1p").asserted


def test_classical_presentation_on_fundamental():
    """The fundamental matrices satisfy the classical relations in both bases."""
    for basis in Basis:
        rep = fundamental_representation(basis, classical=True)
        report = verify_presentation("classical", basis, rep)
        assert report.passed, (basis, report.failures())


@pytest.mark.parametrize("basis", list(Basis))
def test_quantum_presentation_on_two_sites(basis):
    """Coproduct images satisfy the quantum relations."""
    rep = chain_representation(basis, HopfVariant.FERMIONIC_STANDARD, 2)
    report = verify_presentation("quantum", basis, rep)
    assert report.passed, report.failures()


def test_perturbed_representation_fails():
    """Doubling E1+ breaks {E1+, E1-} = H1; an even entry breaks the grading."""
    rep = fundamental_representation(Basis.FERMIONIC, classical=True)
    doubled = perturb(rep, "E1p", FUNDAMENTAL["E1p"])
    assert not verify_presentation("classical", Basis.FERMIONIC, doubled).passed
    skewed = perturb(rep, "E1p", elementary(3, 1, 1, Q))
    report = verify_presentation("classical", Basis.FERMIONIC, skewed)
    assert report.case("grading-E1p") is not None
    assert not report.passed


def test_printed_table_is_fermionic_only():
    """There is no printed distinguished table."""
    with pytest.raises(ValueError):
        relations("printed", Basis.DISTINGUISHED)
    with pytest.raises(ValueError):
        relations("braided", Basis.FERMIONIC)
