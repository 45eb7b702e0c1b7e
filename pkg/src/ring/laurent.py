"""
Exact multivariate Laurent polynomials over the rationals.

The coefficient ring of every matrix in the package: Laurent polynomials in the
five fixed variables ``q, s, q12, q13, q23`` with rational coefficients. A value
is stored as a monomial shift times a sympy ``PolyElement`` over ``QQ`` whose
terms share no common variable factor, so equal values have equal storage.
Main entry points:

- ``LaurentPoly``: immutable value type with ring arithmetic, specialization,
  partial substitution and JSON serialization.
- ``ParamPoint``: an assignment of all five variables (exact or float).
- ``qnum``: the symmetric quantum integer [n]_q.
- ``exact_divide`` / ``divide_lambda_power``: exact division by polynomials in q
  alone, in particular by powers of ``LAMBDA = q - q^-1``.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from sympy import QQ
from sympy.polys.monomials import monomial_min
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from src.utils.errors import NotDivisible, ZeroToNegativePower

VARIABLES: Tuple[str, ...] = ("q", "s", "q12", "q13", "q23")
NVARS = len(VARIABLES)
_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_ZERO_EXP = (0,) * NVARS

RING, *GENERATORS = ring(",".join(VARIABLES), QQ)

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def _qq(value: Union[Scalar, float]):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _shifted(a: Exponent, b: Exponent, sign: int = 1) -> Exponent:
    return tuple(x + sign * y for x, y in zip(a, b))


class PointMode(str, Enum):
    EXACT = "exact"
    FLOAT = "float"


@dataclass(frozen=True)
class ParamPoint:
    """
    Values for all five variables.

    Attributes:
        values (Tuple): One value per variable, in ``VARIABLES`` order.
        mode (PointMode): ``EXACT`` for Fraction values, ``FLOAT`` for doubles.
    """

    values: Tuple[Union[Fraction, float], ...]
    mode: PointMode = PointMode.EXACT

    @property
    def is_exact(self) -> bool:
        return self.mode is PointMode.EXACT

    @classmethod
    def exact(cls, **values: Scalar) -> "ParamPoint":
        """Exact point; unlisted variables are set to 1."""
        unknown = set(values) - set(VARIABLES)
        if unknown:
            raise ValueError(f"Unknown variables: {sorted(unknown)}")
        vals = []
        for name in VARIABLES:
            raw = values.get(name, 1)
            if isinstance(raw, float):
                raise ValueError(f"Exact mode requires rational values, got {name}={raw}")
            vals.append(Fraction(raw))
        return cls(tuple(vals), PointMode.EXACT)

    @classmethod
    def floating(cls, **values: float) -> "ParamPoint":
        """Float point; unlisted variables are set to 1.0."""
        unknown = set(values) - set(VARIABLES)
        if unknown:
            raise ValueError(f"Unknown variables: {sorted(unknown)}")
        return cls(
            tuple(float(values.get(name, 1.0)) for name in VARIABLES), PointMode.FLOAT
        )

    @classmethod
    def ones(cls) -> "ParamPoint":
        """The classical point q = s = q12 = q13 = q23 = 1."""
        return cls.exact()

    def __getitem__(self, name: str) -> Union[Fraction, float]:
        return self.values[_INDEX[name]]

    def as_dict(self) -> Dict[str, str]:
        return {name: str(val) for name, val in zip(VARIABLES, self.values)}


class LaurentPoly:
    """
    Immutable Laurent polynomial in ``q, s, q12, q13, q23``.

    Stored as ``x^shift * body`` with ``body`` a polynomial in ``RING`` whose
    terms have no common monomial factor. The zero polynomial has a zero shift.
    """

    __slots__ = ("_shift", "_body", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] = None):
        clean: Dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            if len(exp) != NVARS:
                raise ValueError(f"Exponent vector must have {NVARS} entries: {exp}")
            if coeff:
                clean[tuple(exp)] = Fraction(coeff)
        if not clean:
            self._shift, self._body = _ZERO_EXP, RING.zero
        else:
            low = tuple(monomial_min(*clean))
            self._shift = low
            self._body = RING.from_dict(
                {_shifted(exp, low, -1): _qq(coeff) for exp, coeff in clean.items()}
            )
        self._hash = None

    # Constructors
    @classmethod
    def _wrap(cls, shift: Exponent, body: PolyElement) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._shift = shift
        obj._body = body
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, shift: Exponent, body: PolyElement) -> "LaurentPoly":
        """Normalize ``x^shift * body`` by moving the monomial content into the shift."""
        if not body:
            return cls._wrap(_ZERO_EXP, RING.zero)
        low = tuple(monomial_min(*body.itermonoms()))
        if any(low):
            body = body.quo_term((low, QQ.one))
            shift = _shifted(shift, low)
        return cls._wrap(shift, body)

    @classmethod
    def const(cls, value: Scalar) -> "LaurentPoly":
        return cls._wrap(_ZERO_EXP, RING.ground_new(_qq(value)))

    @classmethod
    def var(cls, name: str, power: int = 1) -> "LaurentPoly":
        if name not in _INDEX:
            raise ValueError(f"Unknown variable {name!r}")
        exp = [0] * NVARS
        exp[_INDEX[name]] = power
        return cls._wrap(tuple(exp), RING.one)

    @classmethod
    def monomial(cls, coeff: Scalar = 1, **powers: int) -> "LaurentPoly":
        """``coeff * prod(var**power)``, e.g. ``monomial(-1, q=-1, s=2)``."""
        exp = [0] * NVARS
        for name, power in powers.items():
            if name not in _INDEX:
                raise ValueError(f"Unknown variable {name!r}")
            exp[_INDEX[name]] = power
        if not coeff:
            return ZERO
        return cls._wrap(tuple(exp), RING.ground_new(_qq(coeff)))

    # Introspection
    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in canonical (lexicographic) exponent order."""
        return iter(
            sorted(
                (_shifted(self._shift, monom), _fraction(coeff))
                for monom, coeff in self._body.iterterms()
            )
        )

    def __len__(self) -> int:
        return len(self._body)

    def is_zero(self) -> bool:
        return not self._body

    def __bool__(self) -> bool:
        return bool(self._body)

    def is_constant(self) -> bool:
        return not self._body or (self._shift == _ZERO_EXP and self._body.is_ground)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        if not self._body:
            return Fraction(0)
        return _fraction(self._body.LC)

    def is_monomial(self) -> bool:
        return len(self._body) == 1

    def variables(self) -> Tuple[str, ...]:
        if not self._body:
            return ()
        return tuple(
            name
            for i, name in enumerate(VARIABLES)
            if self._shift[i] or self._body.degree(i) > 0
        )

    def depends_only_on(self, *names: str) -> bool:
        return set(self.variables()) <= set(names)

    def degree_range(self, name: str) -> Tuple[int, int]:
        """(min, max) exponent of ``name``; (0, 0) for the zero polynomial."""
        if not self._body:
            return (0, 0)
        idx = _INDEX[name]
        low = self._shift[idx]
        return (low, low + self._body.degree(idx))

    # Arithmetic
    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._body:
            return self
        if not self._body:
            return other
        if self._shift == other._shift:
            return LaurentPoly._make(self._shift, self._body + other._body)
        low = tuple(map(min, self._shift, other._shift))
        return LaurentPoly._make(low, self._lifted(low) + other._lifted(low))

    def _lifted(self, low: Exponent) -> PolyElement:
        """Body multiplied out to the common shift ``low``."""
        offset = _shifted(self._shift, low, -1)
        return self._body.mul_monom(offset) if any(offset) else self._body

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._wrap(self._shift, -self._body)

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._body or not other._body:
            return ZERO
        # products of content-free polynomials stay content-free
        return LaurentPoly._wrap(_shifted(self._shift, other._shift), self._body * other._body)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        return LaurentPoly._wrap(tuple(n * e for e in self._shift), self._body**n)

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit (a single nonzero term)."""
        if not self.is_monomial():
            raise NotDivisible(f"{self} is not a unit of the Laurent ring")
        return LaurentPoly._wrap(
            tuple(-e for e in self._shift), RING.ground_new(QQ.one / self._body.LC)
        )

    def scale(self, factor: Scalar) -> "LaurentPoly":
        if not factor:
            return ZERO
        return LaurentPoly._wrap(self._shift, self._body.mul_ground(_qq(factor)))

    # Comparison
    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._shift == other._shift and self._body == other._body

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._shift, self._body))
        return self._hash

    # Evaluation
    def specialize(self, at: ParamPoint) -> Union[Fraction, float]:
        """
        Evaluate at a parameter point.

        The value is computed exactly; float points are converted to their exact
        binary rationals first and the result is rounded once.

        Raises:
            ZeroToNegativePower: A zero value meets a negative exponent.
        """
        if not self._body:
            return Fraction(0) if at.is_exact else 0.0
        values = [_qq(value) for value in at.values]
        factor = QQ.one
        for value, power in zip(values, self._shift):
            if not power:
                continue
            if power < 0 and not value:
                raise ZeroToNegativePower(
                    f"Variable with exponent {power} specialized to zero"
                )
            factor *= value**power
        result = _fraction(self._body(*values) * factor)
        return result if at.is_exact else float(result)

    def substitute(self, mapping: Mapping[str, "LaurentPoly"]) -> "LaurentPoly":
        """
        Replace some variables by Laurent polynomials.

        Units (single terms, nonzero constants included) may replace any
        variable. Other images must be genuine polynomials and may only replace
        variables that never appear with a negative exponent.
        """
        images = {_INDEX[name]: poly(value) for name, value in mapping.items()}
        units = {i: v for i, v in images.items() if v.is_monomial()}
        rest = {i: v for i, v in images.items() if i not in units}
        result = self._substitute_units(units) if units else self
        if not rest or not result._body:
            return result

        head = LaurentPoly._wrap(
            tuple(0 if i in rest else e for i, e in enumerate(result._shift)), RING.one
        )
        for i, image in rest.items():
            power = result._shift[i]
            if power < 0:
                if image.is_zero():
                    raise ZeroToNegativePower(
                        f"{VARIABLES[i]} has exponent {power} and is replaced by zero"
                    )
                raise NotDivisible(
                    f"{VARIABLES[i]} has exponent {power}; only a unit can replace it"
                )
            if min(image._shift) < 0:
                raise ValueError(
                    f"Image {image} of {VARIABLES[i]} is neither a unit nor a polynomial"
                )
            head = head * image**power
        body = result._body.compose(
            [(GENERATORS[i], image._body.mul_monom(image._shift)) for i, image in rest.items()]
        )
        return head * LaurentPoly._make(_ZERO_EXP, body)

    def _substitute_units(self, units: Mapping[int, "LaurentPoly"]) -> "LaurentPoly":
        # a unit c*x^a sends x_i^e to c^e x^(e*a)
        out: Dict[Exponent, Fraction] = {}
        for exp, coeff in self.items():
            target = [0 if i in units else e for i, e in enumerate(exp)]
            for i, unit in units.items():
                power = exp[i]
                if not power:
                    continue
                ((uexp, ucoeff),) = unit.items()
                coeff *= ucoeff**power
                target = [t + power * u for t, u in zip(target, uexp)]
            key = tuple(target)
            out[key] = out.get(key, 0) + coeff
        return LaurentPoly(out)

    # Serialization
    def to_json(self) -> Dict[str, list]:
        return {
            "terms": [
                {"c": f"{c.numerator}/{c.denominator}", "e": list(e)}
                for e, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, list]) -> "LaurentPoly":
        return cls({tuple(t["e"]): Fraction(t["c"]) for t in payload["terms"]})

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._body:
            return "0"
        parts = []
        for exp, coeff in sorted(self.items(), reverse=True):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(VARIABLES, exp)
                if e
            ]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return LaurentPoly.const(Fraction(value))
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
Q = LaurentPoly.var("q")
S = LaurentPoly.var("s")
Q12 = LaurentPoly.var("q12")
Q13 = LaurentPoly.var("q13")
Q23 = LaurentPoly.var("q23")
LAMBDA = Q - Q ** -1


def poly(value: Union[Scalar, LaurentPoly]) -> LaurentPoly:
    """Coerce an int, Fraction or LaurentPoly into a LaurentPoly."""
    result = _coerce(value)
    if result is NotImplemented:
        raise TypeError(f"Cannot interpret {value!r} as a Laurent polynomial")
    return result


def qpow(n: int) -> LaurentPoly:
    return LaurentPoly.var("q", n) if n else ONE


def spow(n: int) -> LaurentPoly:
    return LaurentPoly.var("s", n) if n else ONE


def ring_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    """Dispatch ``add``, ``sub``, ``mul`` or ``neg`` (``neg`` ignores ``b``)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"Unknown ring operation {op!r}")


def qnum(n: int) -> LaurentPoly:
    """Quantum integer [n]_q = (q^n - q^-n)/(q - q^-1), antisymmetric in n."""
    size = abs(n)
    sign = 1 if n >= 0 else -1
    return LaurentPoly({(size - 1 - 2 * k, 0, 0, 0, 0): sign for k in range(size)})


def specialize(p: LaurentPoly, at: ParamPoint) -> Union[Fraction, float]:
    return p.specialize(at)


def exact_divide(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """
    Exact quotient ``p / d`` for a divisor ``d`` that involves only q.

    Monomials are units, so ``d`` divides ``p`` exactly when the content-free
    body of ``d`` divides the body of ``p`` in the polynomial ring; the body
    quotient comes from sympy's ``exquo``.

    Raises:
        NotDivisible: The division leaves a remainder.
        ZeroDivisionError: ``d`` is zero.
    """
    if d.is_zero():
        raise ZeroDivisionError("Division by the zero polynomial")
    if not d.depends_only_on("q"):
        raise ValueError(f"Divisor must involve only q, got {d}")
    if p.is_zero():
        return ZERO
    try:
        body = p._body.exquo(d._body)
    except ExactQuotientFailed as exc:
        raise NotDivisible(f"{p} is not divisible by {d}") from exc
    return LaurentPoly._make(_shifted(p._shift, d._shift, -1), body)


def divide_lambda_power(p: LaurentPoly, k: int) -> LaurentPoly:
    """
    Divide exactly by ``(q - q^-1)**k``.

    Raises:
        NotDivisible: ``p`` is not a multiple of the requested power.
    """
    if k < 0:
        raise ValueError(f"Lambda power must be non-negative, got {k}")
    if k == 0:
        return p
    return exact_divide(p, LAMBDA**k)


def sum_polys(values: Iterable[LaurentPoly]) -> LaurentPoly:
    total = ZERO
    for value in values:
        total = total + value
    return total
