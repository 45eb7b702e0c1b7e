"""
Hopf structures of sl(1|2) and their action on chains.

Three structures are stored as coproduct tables (``TensorWord`` data):

- ``CLASSICAL_PRIMITIVE``: Delta(X) = X (x) 1 + 1 (x) X, S(X) = -X;
- ``FERMIONIC_STANDARD``: the two-parameter coproduct on the fermionic
  generators, with lambda-terms for E3;
- ``DISTINGUISHED_NATURAL``: the natural coproduct of the distinguished
  generators h, e1, e2.

Generators that are not native to a structure are rewritten through the basis
change before the coproduct is applied, so every structure acts on every
generator. ``coproduct_rep`` evaluates the iterated coproduct on the L-fold
tensor power of the fundamental representation.
"""

from enum import Enum
from functools import lru_cache
from typing import Dict, Tuple

from src.algebra.generators import (
    FERMIONIC_TOKENS,
    FUNDAMENTAL,
    Basis,
    chain_context,
    chain_parities,
    degree,
)
from src.algebra.words import (
    CartanExp,
    TensorWord,
    Term,
    Word,
    dist_form,
    element,
    evaluate_element,
    evaluate_word,
    single,
    term,
    word_degree,
)
from src.linalg.graded import GradedOp, graded_kron
from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import LAMBDA, ONE, ZERO, LaurentPoly, Q, S, poly
from src.utils.logging import logger
from src.utils.reports import Report


class HopfVariant(str, Enum):
    CLASSICAL_PRIMITIVE = "classical"
    FERMIONIC_STANDARD = "standard"
    DISTINGUISHED_NATURAL = "natural-dist"


NATIVE_BASIS = {
    HopfVariant.CLASSICAL_PRIMITIVE: Basis.FERMIONIC,
    HopfVariant.FERMIONIC_STANDARD: Basis.FERMIONIC,
    HopfVariant.DISTINGUISHED_NATURAL: Basis.DISTINGUISHED,
}


def _ce(q_form=(0, 0, 0), s_form=(0, 0, 0)) -> CartanExp:
    return CartanExp(tuple(q_form), tuple(s_form))


def _two(*terms: Term) -> TensorWord:
    return element(*terms)


def _primitive(token: str) -> TensorWord:
    return _two(term(1, [token], []), term(1, [], [token]))


# Basis changes. Each table expresses the generators of one basis as words in
# the other; Cartan forms are always written in H1, H2.
FERM_TO_DIST: Dict[str, Dict[str, TensorWord]] = {
    "quantum": {
        "h1": single(-1, "H1") + single(-1, "H2"),
        "h2": single(1, "H2"),
        "e1p": single(S**-1, "E3p"),
        "e2p": single(1, "E2m", _ce((0, -1, 0), (0, -1, 0))),
        "e3p": single(S**-1, "E1p"),
        "e1m": single(-1, "E3m"),
        "e2m": single(S**-1, "E2p", _ce((0, 1, 0), (0, -1, 0))),
        "e3m": single(-1, "E1m"),
    },
    "classical": {
        "h1": single(-1, "H1") + single(-1, "H2"),
        "h2": single(1, "H2"),
        "e1p": single(1, "E3p"),
        "e2p": single(1, "E2m"),
        "e3p": single(1, "E1p"),
        "e1m": single(-1, "E3m"),
        "e2m": single(1, "E2p"),
        "e3m": single(-1, "E1m"),
    },
}

_K2 = _ce((0, 1, 0), (0, 1, 0))
_K2_INV = _ce((0, -1, 0), (0, -1, 0))

DIST_TO_FERM: Dict[str, Dict[str, TensorWord]] = {
    "quantum": {
        "H1": single(-1, "h1") + single(-1, "h2"),
        "H2": single(1, "h2"),
        "E3p": single(S, "e1p"),
        "E3m": single(-1, "e1m"),
        "E2m": single(1, "e2p", _K2),
        "E2p": single(S, "e2m", _ce((0, -1, 0), (0, 1, 0))),
        "E1p": single(S, "e1p", "e2p") + single(-S, "e2p", _K2, "e1p", _K2_INV),
        "E1m": single(Q, "e1m", "e2m")
        + single(
            -Q, "e2m", _ce((0, -1, 0), (0, 1, 0)), "e1m", _ce((0, 1, 0), (0, -1, 0))
        ),
    },
    "classical": {
        "H1": single(-1, "h1") + single(-1, "h2"),
        "H2": single(1, "h2"),
        "E3p": single(1, "e1p"),
        "E3m": single(-1, "e1m"),
        "E2m": single(1, "e2p"),
        "E2p": single(1, "e2m"),
        "E1p": single(1, "e3p"),
        "E1m": single(-1, "e3m"),
    },
}


def basis_change(direction: str, variant: str = "quantum") -> Dict[str, TensorWord]:
    """
    Substitution table between the fermionic and distinguished bases.

    Args:
        direction (str): ``"ferm->dist"`` (distinguished generators as fermionic
            words) or ``"dist->ferm"``.
        variant (str): ``"quantum"`` or ``"classical"``.

    Returns:
        Dict[str, TensorWord]: Token -> one-leg element.
    """
    tables = {"ferm->dist": FERM_TO_DIST, "dist->ferm": DIST_TO_FERM}
    if direction not in tables or variant not in ("quantum", "classical"):
        raise ValueError(f"Unknown basis change {direction!r}/{variant!r}")
    return dict(tables[direction][variant])


COPRODUCTS: Dict[HopfVariant, Dict[str, TensorWord]] = {
    HopfVariant.CLASSICAL_PRIMITIVE: {t: _primitive(t) for t in FERMIONIC_TOKENS},
    HopfVariant.FERMIONIC_STANDARD: {
        "H1": _primitive("H1"),
        "H2": _primitive("H2"),
        "E1p": _two(term(1, ["E1p"], []), term(1, [_ce((1, 0, 0), (-1, 0, 0))], ["E1p"])),
        "E2p": _two(term(1, ["E2p"], []), term(1, [_K2], ["E2p"])),
        "E1m": _two(term(1, ["E1m"], [_ce((-1, 0, 0), (-1, 0, 0))]), term(1, [], ["E1m"])),
        "E2m": _two(term(1, ["E2m"], [_ce((0, -1, 0), (0, 1, 0))]), term(1, [], ["E2m"])),
        "E3p": _two(
            term(1, ["E3p"], []),
            term(LAMBDA, [_ce(s_form=(0, 1, 0)), "E1p", _ce(q_form=(0, 1, 0))], ["E2p"]),
            term(1, [_ce((1, 1, 0), (-1, 1, 0))], ["E3p"]),
        ),
        "E3m": _two(
            term(1, ["E3m"], [_ce((-1, -1, 0), (-1, 1, 0))]),
            term(-LAMBDA, ["E2m"], [_ce(q_form=(0, -1, 0)), "E1m", _ce(s_form=(0, 1, 0))]),
            term(1, [], ["E3m"]),
        ),
    },
    HopfVariant.DISTINGUISHED_NATURAL: {
        "h1": _primitive("h1"),
        "h2": _primitive("h2"),
        "e1p": _two(
            term(1, ["e1p"], []),
            term(1, [_ce(dist_form(1, 0), dist_form(1, 2))], ["e1p"]),
        ),
        "e2p": _two(
            term(1, ["e2p"], []),
            term(1, [_ce(dist_form(0, 1), dist_form(0, -1))], ["e2p"]),
        ),
        "e1m": _two(
            term(1, ["e1m"], [_ce(dist_form(-1, 0), dist_form(1, 2))]),
            term(1, [], ["e1m"]),
        ),
        "e2m": _two(
            term(1, ["e2m"], [_ce(dist_form(0, -1), dist_form(0, -1))]),
            term(1, [], ["e2m"]),
        ),
    },
}

# e3 in terms of the native distinguished generators
E3_DISTINGUISHED: Dict[str, Dict[str, TensorWord]] = {
    "quantum": {
        "e3p": single(1, "e1p", "e2p") + single(-1, "e2p", _K2, "e1p", _K2_INV),
        "e3m": single(-Q, "e1m", "e2m")
        + single(
            Q, "e2m", _ce((0, -1, 0), (0, 1, 0)), "e1m", _ce((0, 1, 0), (0, -1, 0))
        ),
    },
    "classical": {
        "e3p": single(1, "e1p", "e2p") + single(-1, "e2p", "e1p"),
        "e3m": single(-1, "e1m", "e2m") + single(1, "e2m", "e1m"),
    },
}

# Rows whose lambda-terms are compared but not asserted.
LAMBDA_ROWS = frozenset({"E1p", "E1m"})

# Typeset rows of the natural distinguished coproduct on fermionic generators.
DELTA_FERM_TILDE: Dict[str, TensorWord] = {
    "H1": _primitive("H1"),
    "H2": _primitive("H2"),
    "E2p": _two(
        term(1, ["E2p"], [_ce((0, -2, 0))]),
        term(1, [_ce((0, -1, 0), (0, 1, 0))], ["E2p"]),
    ),
    "E2m": _two(
        term(1, ["E2m"], [_K2]),
        term(1, [_ce((0, 2, 0))], ["E2m"]),
    ),
    "E3p": _two(
        term(1, ["E3p"], []),
        term(1, [_ce((-1, -1, 0), (-1, 1, 0))], ["E3p"]),
    ),
    "E3m": _two(
        term(1, ["E3m"], [_ce((1, 1, 0), (-1, 1, 0))]),
        term(1, [], ["E3m"]),
    ),
    "E1p": _two(
        term(1, ["E1p"], []),
        term(1, [_ce((-1, 0, 0), (-1, 0, 0))], ["E1p"]),
        term(
            -LAMBDA,
            [_ce(q_form=(0, 1, 0)), "E3p", _ce(s_form=(0, -1, 0))],
            [_ce(q_form=(0, -1, 0)), "E2m", _ce(s_form=(0, -1, 0))],
        ),
    ),
    "E1m": _two(
        term(1, ["E1m"], [_ce((1, 0, 0), (-1, 0, 0))]),
        term(1, [], ["E1m"]),
        term(
            -LAMBDA,
            [_ce(s_form=(0, -1, 0)), "E2p", _ce(q_form=(0, 1, 0))],
            [_ce(s_form=(0, -1, 0)), "E3m", _ce(q_form=(0, -1, 0))],
        ),
    ),
}

ANTIPODES: Dict[HopfVariant, Dict[str, TensorWord]] = {
    HopfVariant.CLASSICAL_PRIMITIVE: {t: single(-1, t) for t in FERMIONIC_TOKENS},
    HopfVariant.FERMIONIC_STANDARD: {
        "H1": single(-1, "H1"),
        "H2": single(-1, "H2"),
        "E1p": single(-1, _ce((-1, 0, 0), (1, 0, 0)), "E1p"),
        "E2p": single(-1, _K2_INV, "E2p"),
        "E1m": single(-1, "E1m", _ce((1, 0, 0), (1, 0, 0))),
        "E2m": single(-1, "E2m", _ce((0, 1, 0), (0, -1, 0))),
        "E3p": single(-1, _ce((-1, -1, 0), (1, -1, 0)), "E3p")
        + single(LAMBDA, _ce((-1, -1, 0), (1, -1, -1)), "E1p", "E2p"),
        "E3m": single(-1, "E3m", _ce((1, 1, 0), (1, -1, 0)))
        + single(-LAMBDA, "E2m", "E1m", _ce((1, 1, 0), (1, -1, -1))),
    },
}


def coproduct(token: str, variant: HopfVariant) -> TensorWord:
    """
    Two-leg coproduct of a native generator.

    Raises:
        ValueError: The generator is not native to the structure (distinguished
            e3 and fermionic tokens under the natural distinguished structure
            are reached through ``coproduct_rep``'s basis rewriting instead).
    """
    try:
        return COPRODUCTS[HopfVariant(variant)][token]
    except KeyError as exc:
        raise ValueError(f"{token} has no stored coproduct under {variant}") from exc


def _native_expansion(token: str, variant: HopfVariant) -> TensorWord:
    """Rewrite a non-native generator as words in native generators."""
    flavour = "classical" if variant is HopfVariant.CLASSICAL_PRIMITIVE else "quantum"
    if NATIVE_BASIS[variant] is Basis.FERMIONIC:
        return FERM_TO_DIST[flavour][token]
    if token in E3_DISTINGUISHED[flavour]:
        return E3_DISTINGUISHED[flavour][token]
    return DIST_TO_FERM[flavour][token]


@lru_cache(maxsize=None)
def fundamental_rep(token: str, classical: bool = False) -> GradedOp:
    """
    The 3x3 fundamental representation of a generator.

    Distinguished generators are transported from the fermionic matrices through
    the basis change (the classical one when ``classical`` is set).
    """
    parities = chain_parities(1)
    if token in FUNDAMENTAL:
        return GradedOp(FUNDAMENTAL[token], degree(token), parities)
    table = FERM_TO_DIST["classical" if classical else "quantum"]
    if token not in table:
        raise ValueError(f"Unknown generator {token!r}")
    matrix = evaluate_element(table[token], lambda t: FUNDAMENTAL[t], chain_context(1))
    return GradedOp(matrix, degree(token), parities)


def _leg_op(word: Word, variant: HopfVariant, sites: int) -> GradedOp:
    matrix = evaluate_word(
        word, lambda t: coproduct_rep(t, variant, sites).matrix, chain_context(sites)
    )
    return GradedOp(matrix, word_degree(word, degree), chain_parities(sites))


@lru_cache(maxsize=None)
def coproduct_rep(token: str, variant: HopfVariant, sites: int, nesting: str = "left") -> GradedOp:
    """
    Iterated coproduct of a generator on ``sites`` copies of the fundamental.

    Args:
        token (str): Generator token, either basis.
        variant (HopfVariant): Hopf structure.
        sites (int): Number of tensor factors L >= 1.
        nesting (str): ``"left"`` for (Delta^(L-1) (x) id) Delta, ``"right"`` for
            (id (x) Delta^(L-1)) Delta.

    Returns:
        GradedOp: 3^L x 3^L operator with the generator's degree.
    """
    variant = HopfVariant(variant)
    if sites < 1:
        raise ValueError(f"Need at least one site, got {sites}")
    if sites == 1:
        return fundamental_rep(token, variant is HopfVariant.CLASSICAL_PRIMITIVE)
    table = COPRODUCTS[variant]
    if token not in table:
        matrix = evaluate_element(
            _native_expansion(token, variant),
            lambda t: coproduct_rep(t, variant, sites, nesting).matrix,
            chain_context(sites),
        )
        return GradedOp(matrix, degree(token), chain_parities(sites))
    left_sites, right_sites = (sites - 1, 1) if nesting == "left" else (1, sites - 1)
    total = PolyMatrix.zeros(3**sites)
    for t in table[token].terms:
        left = _leg_op(t.legs[0], variant, left_sites)
        right = _leg_op(t.legs[1], variant, right_sites)
        total = total + graded_kron(left, right).matrix.scale(t.coeff)
    return GradedOp(total, degree(token), chain_parities(sites))


def _two_site_matrix(tw: TensorWord, lookup, ctx) -> PolyMatrix:
    """Evaluate a two-leg element on the tensor square of the fundamental."""
    parities = chain_parities(1)
    total = PolyMatrix.zeros(9)
    for t in tw.terms:
        left = GradedOp(evaluate_word(t.legs[0], lookup, ctx), word_degree(t.legs[0], degree), parities)
        right = GradedOp(evaluate_word(t.legs[1], lookup, ctx), word_degree(t.legs[1], degree), parities)
        total = total + graded_kron(left, right).matrix.scale(t.coeff)
    return total


def _counit_word(word: Word) -> LaurentPoly:
    value = ONE
    for factor in word:
        if isinstance(factor, str):
            return ZERO
        if not isinstance(factor, CartanExp):
            raise ValueError(f"No counit rule for {factor!r}")
        value = value * factor.counit()
    return value


def antipode_word(word: Word, variant: HopfVariant) -> TensorWord:
    """
    Antipode of a word, extended super-antimultiplicatively.

    S(xy) = (-1)^{|x||y|} S(y) S(x); Cartan exponentials are group-like.
    """
    table = ANTIPODES[variant]
    degrees = [degree(f) if isinstance(f, str) else 0 for f in word]
    swaps = sum(
        degrees[i] * degrees[j] for i in range(len(word)) for j in range(i + 1, len(word))
    )
    pieces = []
    for factor in reversed(word):
        if isinstance(factor, str):
            pieces.append(table[factor])
        elif isinstance(factor, CartanExp):
            pieces.append(single(1, factor.antipode()))
        else:
            raise ValueError(f"No antipode rule for {factor!r}")
    result = element(Term(poly((-1) ** (swaps % 2)), ((),)))
    for piece in pieces:
        result = TensorWord(
            tuple(
                Term(a.coeff * b.coeff, (a.legs[0] + b.legs[0],))
                for a in result.terms
                for b in piece.terms
            )
        )
    return result


def antipode(elem: TensorWord, variant: HopfVariant) -> TensorWord:
    terms = []
    for t in elem.terms:
        image = antipode_word(t.legs[0], variant)
        terms.extend(Term(t.coeff * s.coeff, s.legs) for s in image.terms)
    return TensorWord(tuple(terms))


def hopf_axiom_check(token: str, variant: HopfVariant) -> Report:
    """
    Counit, antipode and S^2 = id for one fermionic generator, checked in the
    fundamental representation.
    """
    variant = HopfVariant(variant)
    if variant not in ANTIPODES:
        raise ValueError(f"No antipode is defined for the {variant.value} structure")
    lookup = lambda t: FUNDAMENTAL[t]  # noqa: E731
    ctx = chain_context(1)
    target = FUNDAMENTAL[token]
    delta = COPRODUCTS[variant][token]
    report = Report(f"hopf:{variant.value}:{token}")

    left_counit = PolyMatrix.zeros(3)
    right_counit = PolyMatrix.zeros(3)
    s_left = PolyMatrix.zeros(3)
    s_right = PolyMatrix.zeros(3)
    for t in delta.terms:
        first, second = t.legs
        left_counit = left_counit + evaluate_word(second, lookup, ctx).scale(
            t.coeff * _counit_word(first)
        )
        right_counit = right_counit + evaluate_word(first, lookup, ctx).scale(
            t.coeff * _counit_word(second)
        )
        s_first = evaluate_element(antipode_word(first, variant), lookup, ctx)
        s_second = evaluate_element(antipode_word(second, variant), lookup, ctx)
        s_left = s_left + (s_first @ evaluate_word(second, lookup, ctx)).scale(t.coeff)
        s_right = s_right + (evaluate_word(first, lookup, ctx) @ s_second).scale(t.coeff)

    report.add("counit-left", left_counit == target, residual=(left_counit - target).nnz)
    report.add("counit-right", right_counit == target, residual=(right_counit - target).nnz)
    # eps(generator) = 0
    report.add("antipode-left", s_left.is_zero(), residual=s_left.nnz)
    report.add("antipode-right", s_right.is_zero(), residual=s_right.nnz)
    s_squared = evaluate_element(
        antipode(ANTIPODES[variant][token], variant), lookup, ctx
    )
    report.add("antipode-squared", s_squared == target, residual=(s_squared - target).nnz)
    logger.debug("%s", report.summary())
    return report


def coassociativity_check(token: str, variant: HopfVariant, sites: int = 3) -> bool:
    return (
        coproduct_rep(token, variant, sites, "left").matrix
        == coproduct_rep(token, variant, sites, "right").matrix
    )


def deltafermtilde_check() -> Report:
    """
    Compare the typeset natural-distinguished coproduct of each fermionic
    generator with the one derived through the basis change, on two sites.
    """
    report = Report("deltafermtilde")
    lookup = lambda t: FUNDAMENTAL[t]  # noqa: E731
    ctx = chain_context(1)
    for token in FERMIONIC_TOKENS:
        derived = coproduct_rep(token, HopfVariant.DISTINGUISHED_NATURAL, 2).matrix
        typeset = _two_site_matrix(DELTA_FERM_TILDE[token], lookup, ctx)
        diff = derived - typeset
        if token in LAMBDA_ROWS:
            report.note(token, diff.is_zero(), residual=diff.nnz)
            continue
        report.add(token, diff.is_zero(), residual=diff.nnz)
        if not diff.is_zero():
            logger.warning("Typeset natural coproduct row for %s differs in %d entries", token, diff.nnz)
    return report


def e3_consistency(variant: HopfVariant, sites: int) -> Tuple[bool, bool]:
    """E3 coproducts against the products of the E1, E2 coproducts (rep level)."""
    variant = HopfVariant(variant)
    rep = {t: coproduct_rep(t, variant, sites).matrix for t in ("E1p", "E2p", "E1m", "E2m", "E3p", "E3m")}
    if variant is HopfVariant.CLASSICAL_PRIMITIVE:
        plus = rep["E1p"] @ rep["E2p"] + rep["E2p"] @ rep["E1p"]
        minus = rep["E1m"] @ rep["E2m"] + rep["E2m"] @ rep["E1m"]
    else:
        plus = (rep["E1p"] @ rep["E2p"]).scale(Q * S**-1) + rep["E2p"] @ rep["E1p"]
        minus = rep["E1m"] @ rep["E2m"] + (rep["E2m"] @ rep["E1m"]).scale(Q**-1 * S**-1)
    return plus == rep["E3p"], minus == rep["E3m"]

