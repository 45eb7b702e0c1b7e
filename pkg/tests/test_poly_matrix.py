"""
Unit tests for PolyMatrix and the ungraded matrix helpers.
"""

from fractions import Fraction

import pytest

from src.linalg.poly_matrix import (
    PolyMatrix,
    anticommutator,
    commutator,
    elementary,
    flip,
    kron,
    residual_nonzeros,
    trace_variants,
)
from src.ring.laurent import ONE, Q, S, ParamPoint
from src.utils.errors import DimensionMismatch, NonSquare, NotDivisible


def test_one_based_access():
    """elementary(n, i, j) places its value at 1-based (i, j)."""
    m = elementary(3, 1, 2, Q)
    assert m.one_based(1, 2) == Q
    assert m[0, 1] == Q
    assert m.nnz == 1


def test_kron_index_convention():
    """The pair (i, k) maps to (i-1)*3 + k: e12 (x) e21 has its entry at (2, 4)."""
    m = kron(elementary(3, 1, 2), elementary(3, 2, 1))
    assert m.one_based(2, 4) == ONE
    assert m.nnz == 1


def test_matrix_units_multiply():
    """e12 e21 = e11 and e21 e12 = e22."""
    e12, e21 = elementary(3, 1, 2), elementary(3, 2, 1)
    assert e12 @ e21 == elementary(3, 1, 1)
    assert commutator(e12, e21) == elementary(3, 1, 1) - elementary(3, 2, 2)
    assert anticommutator(e12, e21) == elementary(3, 1, 1) + elementary(3, 2, 2)


def test_commutator_shape_check():
    """Commutators need equal square shapes."""
    with pytest.raises(DimensionMismatch):
        commutator(PolyMatrix.identity(2), PolyMatrix.identity(3))


def test_flip_swaps_factors():
    """P^2 = 1 and P (A (x) B) P = B (x) A."""
    p = flip(3)
    a = PolyMatrix.diag([1, Q, S])
    b = elementary(3, 1, 3, Q**-1)
    assert p @ p == PolyMatrix.identity(9)
    assert p @ kron(a, b) @ p == kron(b, a)


def test_inverse_with_unit_pivots():
    """Upper triangular with monomial diagonal inverts exactly."""
    m = PolyMatrix.from_rows([[Q, 1], [0, S]])
    inv = m.inverse()
    assert m @ inv == PolyMatrix.identity(2)
    assert inv.one_based(1, 2) == -(Q**-1) * S**-1


def test_inverse_without_unit_pivot():
    """q + 1 on the diagonal of a 1x1 matrix has no unit pivot."""
    with pytest.raises(NotDivisible):
        PolyMatrix.from_rows([[Q + 1]]).inverse()


def test_negative_power():
    """M^-2 M^2 = 1 for a unit diagonal matrix."""
    m = PolyMatrix.diag([Q, S**-1])
    assert m.power(-2) @ m.power(2) == PolyMatrix.identity(2)


def test_trace_variants():
    """
    On parities (1, 0, 1) the identity has supertrace -1; the quantum trace with
    D = diag(-1, 1, -1) weights by D^-1.
    """
    ident = PolyMatrix.identity(3)
    d = PolyMatrix.diag([-1, 1, -1])
    assert trace_variants(ident) == 3
    assert trace_variants(ident, "super", parities=(1, 0, 1)) == -1
    assert trace_variants(PolyMatrix.diag([1, 2, 3]), "quantum", d=d) == -2
    with pytest.raises(NonSquare):
        trace_variants(PolyMatrix.zeros(2, 3))


def test_specialize_and_residuals():
    """Exact residual counts ignore entries that vanish at the point."""
    m = PolyMatrix.diag([Q - 2, S])
    at = ParamPoint.exact(q=2, s=Fraction(1, 3))
    assert m.specialize(at) == [[0, 0], [0, Fraction(1, 3)]]
    assert residual_nonzeros(m) == 2
    assert residual_nonzeros(m, at) == 1


def test_json_payload():
    """Only nonzero entries are listed, with their 0-based positions."""
    m = elementary(2, 2, 1, 3)
    payload = m.to_json()
    assert payload["rows"] == 2 and payload["cols"] == 2
    assert payload["entries"] == [[1, 0, {"terms": [{"c": "3/1", "e": [0, 0, 0, 0, 0]}]}]]
    assert PolyMatrix.from_json(payload) == m


def test_matrix_market_text():
    """Header, size line and 1-based coordinates."""
    text = elementary(2, 1, 2, Q).to_matrix_market(ParamPoint.exact(q=Fraction(3, 2)))
    lines = text.splitlines()
    assert lines[0] == "%%MatrixMarket matrix coordinate real general"
    assert lines[1] == "2 2 1"
    assert lines[2] == "1 2 1.5"
