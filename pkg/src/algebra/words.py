"""
Formal algebra elements as data.

Coproducts, antipodes, basis changes, relations and Casimir operators are all
stored as ``TensorWord`` tables: sums of coefficient x (leg_1 (x) ... (x) leg_n),
where a leg is a word of factors. A factor is a generator token (``"E1p"``,
``"e2m"``, ...) or a diagonal Cartan function:

- ``CartanExp``: q^{a H1 + b H2 + c} s^{a' H1 + b' H2 + c'}
- ``QNum``: [a H1 + b H2 + c]_q
- ``CartanPower``: (a H1 + b H2 + c)^n, with 0^0 = 1

Linear forms are always written in the fermionic Cartan generators H1, H2;
``dist_form`` converts a form written in the distinguished h1, h2.
"""

from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Iterable, Tuple, Union

from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import ONE, LaurentPoly, poly, qnum, qpow, spow

Form = Tuple[int, int, int]
NO_FORM: Form = (0, 0, 0)


def dist_form(b1: int, b2: int, c: int = 0) -> Form:
    """b1 h1 + b2 h2 + c rewritten with h1 = -H1 - H2, h2 = H2."""
    return (-b1, b2 - b1, c)


@dataclass(frozen=True)
class CartanExp:
    q_form: Form = NO_FORM
    s_form: Form = NO_FORM

    def antipode(self) -> "CartanExp":
        """Group-like: S(q^{aH+c}) = q^{-aH+c}."""
        return CartanExp(
            (-self.q_form[0], -self.q_form[1], self.q_form[2]),
            (-self.s_form[0], -self.s_form[1], self.s_form[2]),
        )

    def counit(self) -> LaurentPoly:
        return qpow(self.q_form[2]) * spow(self.s_form[2])

    def times(self, other: "CartanExp") -> "CartanExp":
        return CartanExp(
            tuple(a + b for a, b in zip(self.q_form, other.q_form)),
            tuple(a + b for a, b in zip(self.s_form, other.s_form)),
        )


@dataclass(frozen=True)
class QNum:
    form: Form


@dataclass(frozen=True)
class CartanPower:
    form: Form
    power: int = 1


Factor = Union[str, CartanExp, QNum, CartanPower]
Word = Tuple[Factor, ...]


@dataclass(frozen=True)
class Term:
    coeff: LaurentPoly
    legs: Tuple[Word, ...]


@dataclass(frozen=True)
class TensorWord:
    """Formal sum of tensor terms; all terms share the same number of legs."""

    terms: Tuple[Term, ...]

    @property
    def arity(self) -> int:
        return len(self.terms[0].legs) if self.terms else 0

    def __add__(self, other: "TensorWord") -> "TensorWord":
        return TensorWord(self.terms + other.terms)

    def scale(self, factor: object) -> "TensorWord":
        factor = poly(factor)
        return TensorWord(tuple(Term(t.coeff * factor, t.legs) for t in self.terms))

    def tokens(self) -> Tuple[str, ...]:
        seen = []
        for t in self.terms:
            for leg in t.legs:
                seen.extend(f for f in leg if isinstance(f, str) and f not in seen)
        return tuple(seen)


def term(coeff: object, *legs: Iterable[Factor]) -> Term:
    return Term(poly(coeff), tuple(tuple(leg) for leg in legs))


def element(*terms: Term) -> TensorWord:
    return TensorWord(tuple(terms))


def single(coeff: object, *factors: Factor) -> TensorWord:
    """One-leg, one-term element ``coeff * f1 f2 ...``."""
    return element(term(coeff, factors))


def product_of(*elements: TensorWord) -> TensorWord:
    """Product of one-leg elements, expanded term by term."""
    terms = []
    for combo in product(*(e.terms for e in elements)):
        coeff = ONE
        word: Word = ()
        for t in combo:
            coeff = coeff * t.coeff
            word = word + t.legs[0]
        terms.append(Term(coeff, (word,)))
    return TensorWord(tuple(terms))


def word_degree(word: Word, degree_of: Callable[[str], int]) -> int:
    return sum(degree_of(f) for f in word if isinstance(f, str)) % 2


@dataclass(frozen=True)
class CartanContext:
    """Integer H1, H2 eigenvalues of every basis state of a representation space."""

    h1: Tuple[int, ...]
    h2: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.h1)

    def values(self, form: Form) -> Tuple[int, ...]:
        a, b, c = form
        return tuple(a * x + b * y + c for x, y in zip(self.h1, self.h2))

    def relabel_weights(self) -> Dict[Tuple[int, int], Tuple[int, ...]]:
        """Basis states grouped by weight (H1, H2)."""
        groups: Dict[Tuple[int, int], list] = {}
        for idx, weight in enumerate(zip(self.h1, self.h2)):
            groups.setdefault(weight, []).append(idx)
        return {w: tuple(v) for w, v in groups.items()}


def evaluate_factor(
    factor: Factor, lookup: Callable[[str], PolyMatrix], ctx: CartanContext
) -> PolyMatrix:
    if isinstance(factor, str):
        return lookup(factor)
    if isinstance(factor, CartanExp):
        qs = ctx.values(factor.q_form)
        ss = ctx.values(factor.s_form)
        return PolyMatrix.diag([qpow(a) * spow(b) for a, b in zip(qs, ss)])
    if isinstance(factor, QNum):
        return PolyMatrix.diag([qnum(v) for v in ctx.values(factor.form)])
    if isinstance(factor, CartanPower):
        return PolyMatrix.diag([v**factor.power for v in ctx.values(factor.form)])
    raise TypeError(f"Unknown factor {factor!r}")


def evaluate_word(
    word: Word, lookup: Callable[[str], PolyMatrix], ctx: CartanContext
) -> PolyMatrix:
    result = None
    for factor in word:
        mat = evaluate_factor(factor, lookup, ctx)
        result = mat if result is None else result @ mat
    return PolyMatrix.identity(ctx.dim) if result is None else result


def evaluate_element(
    elem: TensorWord, lookup: Callable[[str], PolyMatrix], ctx: CartanContext
) -> PolyMatrix:
    """Matrix of a one-leg element in a representation."""
    total = PolyMatrix.zeros(ctx.dim)
    for t in elem.terms:
        if len(t.legs) != 1:
            raise ValueError("evaluate_element expects one-leg terms")
        total = total + evaluate_word(t.legs[0], lookup, ctx).scale(t.coeff)
    return total
