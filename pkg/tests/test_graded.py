"""
Unit tests for the Z2-graded tensor structure: parities, graded Kronecker
products, embeddings and partial traces.
"""

import pytest

from src.linalg.graded import (
    GradedOp,
    ParityVector,
    embed13_direct,
    graded_kron,
    partial_quantum_trace,
    partial_trace,
    partial_transpose_second,
    site_embed,
    supertrace,
    three_space_embed,
)
from src.linalg.poly_matrix import PolyMatrix, elementary, kron
from src.ring.laurent import ONE, Q, S
from src.utils.errors import InhomogeneousOperand, SiteOutOfRange

FUND = ParityVector.fundamental()


def _odd(i, j):
    return GradedOp(elementary(3, i, j), 1, FUND)


def test_chain_parities():
    """Two-site parities are the sums of the one-site parities (1, 0, 1)."""
    assert ParityVector.chain(2).parities == (0, 1, 0, 1, 0, 1, 0, 1, 0)
    assert len(ParityVector.chain(3)) == 27


def test_graded_kron_even_left_factor_sign():
    """e12 (x) e21: Sigma acts on the even state 2, so the entry (2, 4) stays +1."""
    result = graded_kron(_odd(1, 2), _odd(2, 1))
    assert result.matrix.one_based(2, 4) == ONE
    assert result.degree == 0


def test_graded_kron_odd_left_factor_sign():
    """e21 (x) e12: Sigma acts on the odd state 1, so the entry (4, 2) is -1."""
    result = graded_kron(_odd(2, 1), _odd(1, 2))
    assert result.matrix.one_based(4, 2) == -ONE
    assert result.matrix.nnz == 1


def test_graded_kron_even_right_factor_is_plain():
    """With an even right factor the graded product is the ordinary one."""
    right = GradedOp(PolyMatrix.diag([Q, 1, S]), 0, FUND)
    assert graded_kron(_odd(1, 2), right).matrix == kron(elementary(3, 1, 2), right.matrix)


def test_graded_kron_rejects_inhomogeneous():
    """e11 is even, so declaring it odd is an error."""
    with pytest.raises(InhomogeneousOperand):
        graded_kron(GradedOp(elementary(3, 1, 1), 1, FUND), _odd(1, 2))


def test_site_embed():
    """The identity embeds to the identity; bonds outside the chain are rejected."""
    assert site_embed(PolyMatrix.identity(9), 1, 3) == PolyMatrix.identity(27)
    h = elementary(9, 2, 4)
    assert site_embed(h, 2, 3) == kron(PolyMatrix.identity(3), h)
    with pytest.raises(SiteOutOfRange):
        site_embed(h, 3, 3)
    with pytest.raises(SiteOutOfRange):
        site_embed(h, 0, 3)


def test_three_space_13_matches_index_formula():
    """Conjugating by P23 and the index formula give the same 13-embedding."""
    m = elementary(9, 2, 4, Q) + elementary(9, 7, 3, S) + elementary(9, 5, 5, 2)
    assert three_space_embed(m, "13") == embed13_direct(m)


def test_partial_traces():
    """Tr_1 (A (x) B) = Tr(A) B, and the D^-1-weighted trace uses -1, 1, -1."""
    a = PolyMatrix.diag([1, 2, 3])
    b = elementary(3, 1, 2, Q)
    assert partial_trace(kron(a, b), (3, 3), over=1) == b.scale(6)
    assert partial_trace(kron(b, a), (3, 3), over=2) == b.scale(6)
    d = PolyMatrix.diag([-1, 1, -1])
    assert partial_quantum_trace(kron(a, b), d) == b.scale(-2)


def test_partial_transpose_second():
    """Transposing the second factor of A (x) B gives A (x) B^T."""
    a = elementary(3, 1, 3, Q)
    b = elementary(3, 2, 1, S)
    assert partial_transpose_second(kron(a, b)) == kron(a, b.transpose())


def test_supertrace_of_identity():
    """Two odd states and one even state give -1."""
    assert supertrace(GradedOp.identity(FUND)) == -ONE
