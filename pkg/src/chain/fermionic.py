"""
t-J form of the two-site Hamiltonians.

Each Hamiltonian is written as a list of ``FermionicTerm``s: a coefficient
times a left-site word and a right-site word in the single-site alphabet.
On the three states (up, empty, down) left by the no-double-occupancy
projection the alphabet is realized by 3x3 matrices; a word's parity is the
number of creation/annihilation operators in it.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from src.chain.hamiltonians import HamiltonianKind, closed_form
from src.linalg.graded import GradedOp, ParityVector, graded_kron
from src.linalg.poly_matrix import PolyMatrix, elementary
from src.ring.laurent import Q, Q12, Q13, Q23, S, LaurentPoly, poly
from src.utils.logging import logger
from src.utils.reports import Report


def _e(i: int, j: int) -> PolyMatrix:
    return elementary(3, i, j)


ALPHABET: Dict[str, PolyMatrix] = {
    "c_up+": _e(1, 2),
    "c_up-": _e(2, 1),
    "c_dn+": _e(3, 2),
    "c_dn-": _e(2, 3),
    "n_up": _e(1, 1),
    "n_0": _e(2, 2),
    "n_dn": _e(3, 3),
    "sigma+": _e(1, 3),
    "sigma-": _e(3, 1),
    "sigma0": _e(1, 1) - _e(3, 3),
    "1-n_dn": _e(1, 1) + _e(2, 2),
    "1-n_up": _e(2, 2) + _e(3, 3),
    "1": PolyMatrix.identity(3),
}

FERMION_LETTERS = frozenset(name for name in ALPHABET if name.startswith("c_"))


def word_matrix(word: Tuple[str, ...]) -> PolyMatrix:
    result = PolyMatrix.identity(3)
    for letter in word:
        if letter not in ALPHABET:
            raise ValueError(f"Unknown single-site operator {letter!r}")
        result = result @ ALPHABET[letter]
    return result


def word_parity(word: Tuple[str, ...]) -> int:
    return sum(1 for letter in word if letter in FERMION_LETTERS) % 2


@dataclass(frozen=True)
class FermionicTerm:
    """coeff * [left]_j [right]_{j+1}"""

    coeff: LaurentPoly
    left: Tuple[str, ...]
    right: Tuple[str, ...]

    def matrix(self) -> PolyMatrix:
        parities = ParityVector.fundamental()
        left = GradedOp(word_matrix(self.left), word_parity(self.left), parities)
        right = GradedOp(word_matrix(self.right), word_parity(self.right), parities)
        return graded_kron(left, right).matrix.scale(self.coeff)


def _t(coeff, left, right) -> FermionicTerm:
    return FermionicTerm(poly(coeff), tuple(left), tuple(right))


def _hopping(up_in, up_out, dn_in, dn_out) -> List[FermionicTerm]:
    """The four hopping terms with the given coefficients."""
    return [
        _t(up_in, ["c_up+", "1-n_dn"], ["c_up-", "1-n_dn"]),
        _t(up_out, ["c_up-", "1-n_dn"], ["c_up+", "1-n_dn"]),
        _t(dn_in, ["c_dn+", "1-n_up"], ["c_dn-", "1-n_up"]),
        _t(dn_out, ["c_dn-", "1-n_up"], ["c_dn+", "1-n_up"]),
    ]


def fermionic_expansion(kind: HamiltonianKind) -> List[FermionicTerm]:
    """Hopping, spin-flip and density terms of the two-site Hamiltonian."""
    kind = HamiltonianKind(kind)
    qi, si = Q**-1, S**-1
    if kind is HamiltonianKind.CLASSICAL:
        return _hopping(1, -1, 1, -1) + [
            _t(-1, ["sigma+"], ["sigma-"]),
            _t(-1, ["sigma-"], ["sigma+"]),
            _t(1, ["1-n_dn"], ["1-n_up"]),
            _t(1, ["1-n_up"], ["1-n_dn"]),
        ]
    if kind is HamiltonianKind.FOUR_PARAM:
        return _hopping(Q12**-1, -Q12, Q23, -(Q23**-1)) + [
            _t(Q13**-1, ["sigma+"], ["sigma-"]),
            _t(Q13, ["sigma-"], ["sigma+"]),
            _t(qi, ["1-n_dn"], ["1-n_up"]),
            _t(Q, ["1-n_up"], ["1-n_dn"]),
        ]
    terms = _hopping(si, -S, S, -si) + [
        _t(-si, ["sigma+"], ["sigma-"]),
        _t(-S, ["sigma-"], ["sigma+"]),
    ]
    if kind is HamiltonianKind.FERMIONIC:
        return terms + [
            _t(qi, ["1-n_dn"], ["1-n_up"]),
            _t(Q, ["1-n_up"], ["1-n_dn"]),
        ]
    return terms + [
        _t(Q, ["1"], ["n_0"]),
        _t(qi, ["n_0"], ["1"]),
        _t(Q, ["n_up"], ["n_dn"]),
        _t(qi, ["n_dn"], ["n_up"]),
    ]


def assemble(terms: List[FermionicTerm]) -> PolyMatrix:
    total = PolyMatrix.zeros(9)
    for term in terms:
        total = total + term.matrix()
    return total


def fermionic_check(kind: HamiltonianKind) -> Report:
    """The expansion reproduces the closed-form matrix."""
    kind = HamiltonianKind(kind)
    report = Report(f"fermionic:{kind.value}")
    terms = fermionic_expansion(kind)
    diff = assemble(terms) - closed_form(kind)
    report.add("expansion", diff.is_zero(), residual_nonzero_entries=diff.nnz, terms=len(terms))
    for term in terms:
        # sigma and n words are even, single c words odd
        want = 1 if any(letter in FERMION_LETTERS for letter in term.left) else 0
        report.add(
            f"parity:{'*'.join(term.left)}",
            word_parity(term.left) == want == word_parity(term.right),
        )
    logger.info("%s", report.summary())
    return report


__all__ = [
    "ALPHABET",
    "FermionicTerm",
    "assemble",
    "fermionic_check",
    "fermionic_expansion",
    "word_matrix",
    "word_parity",
]
