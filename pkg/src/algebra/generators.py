"""
Generators of sl(1|2) and their fundamental representation.

Generator tokens: fermionic ``H1 H2 E1p E2p E3p E1m E2m E3m`` and distinguished
``h1 h2 e1p e2p e3p e1m e2m e3m``. The fundamental representation acts on
C^3 with basis states (up, empty, down) of parities (1, 0, 1).
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Dict, Tuple

from src.algebra.words import CartanContext, Form, NO_FORM
from src.linalg.graded import ParityVector
from src.linalg.poly_matrix import PolyMatrix, elementary
from src.ring.laurent import qnum, qpow, spow
from src.utils.errors import NonIntegerCartan


class Basis(str, Enum):
    FERMIONIC = "fermionic"
    DISTINGUISHED = "distinguished"


FERMIONIC_TOKENS: Tuple[str, ...] = ("H1", "H2", "E1p", "E2p", "E3p", "E1m", "E2m", "E3m")
DISTINGUISHED_TOKENS: Tuple[str, ...] = tuple(
    t[0].lower() + t[1:] for t in FERMIONIC_TOKENS
)
CARTAN_TOKENS = ("H1", "H2", "h1", "h2")

# Z2 degrees; E3 is even in the fermionic basis, e1 in the distinguished one
DEGREES: Dict[str, int] = {
    "H1": 0, "H2": 0, "E1p": 1, "E1m": 1, "E2p": 1, "E2m": 1, "E3p": 0, "E3m": 0,
    "h1": 0, "h2": 0, "e1p": 0, "e1m": 0, "e2p": 1, "e2m": 1, "e3p": 1, "e3m": 1,
}

# Cartan matrices: fermionic a and distinguished a'
CARTAN_FERMIONIC = ((0, -1), (-1, 0))
CARTAN_DISTINGUISHED = ((2, -1), (-1, 0))


@dataclass(frozen=True)
class GeneratorId:
    name: str
    basis: Basis

    @property
    def token(self) -> str:
        return self.name if self.basis is Basis.FERMIONIC else self.name.lower()[:1] + self.name[1:]

    @classmethod
    def parse(cls, token: str) -> "GeneratorId":
        if token in FERMIONIC_TOKENS:
            return cls(token, Basis.FERMIONIC)
        if token in DISTINGUISHED_TOKENS:
            return cls(token[0].upper() + token[1:], Basis.DISTINGUISHED)
        raise ValueError(f"Unknown generator {token!r}")

    @property
    def degree(self) -> int:
        return DEGREES[self.token]


def degree(token: str) -> int:
    try:
        return DEGREES[token]
    except KeyError as exc:
        raise ValueError(f"Unknown generator {token!r}") from exc


def basis_of(token: str) -> Basis:
    return Basis.FERMIONIC if token in FERMIONIC_TOKENS else Basis.DISTINGUISHED


def tokens_for(basis: Basis) -> Tuple[str, ...]:
    return FERMIONIC_TOKENS if basis is Basis.FERMIONIC else DISTINGUISHED_TOKENS


FUNDAMENTAL_H1 = (1, 1, 0)
FUNDAMENTAL_H2 = (0, -1, -1)


def _fundamental_matrices() -> Dict[str, PolyMatrix]:
    e = lambda i, j, v=1: elementary(3, i, j, v)  # noqa: E731
    return {
        "H1": PolyMatrix.diag(FUNDAMENTAL_H1),
        "H2": PolyMatrix.diag(FUNDAMENTAL_H2),
        "E1p": e(2, 1),
        "E2p": e(3, 2),
        "E3p": e(3, 1),
        "E1m": e(1, 2),
        "E2m": e(2, 3, -1),
        "E3m": e(1, 3, -1),
    }


FUNDAMENTAL: Dict[str, PolyMatrix] = _fundamental_matrices()


@lru_cache(maxsize=None)
def chain_context(sites: int) -> CartanContext:
    """Cartan eigenvalues on the L-fold tensor power of the fundamental."""
    h1, h2 = [], []
    for states in product(range(3), repeat=sites):
        h1.append(sum(FUNDAMENTAL_H1[s] for s in states))
        h2.append(sum(FUNDAMENTAL_H2[s] for s in states))
    return CartanContext(tuple(h1), tuple(h2))


@lru_cache(maxsize=None)
def chain_parities(sites: int) -> ParityVector:
    return ParityVector.chain(sites)


def context_from_matrices(h1: PolyMatrix, h2: PolyMatrix) -> CartanContext:
    """
    Cartan context read off diagonal H1, H2 matrices.

    Raises:
        NonIntegerCartan: A matrix is not diagonal with integer entries.
    """
    values = []
    for name, mat in (("H1", h1), ("H2", h2)):
        if not mat.is_diagonal():
            raise NonIntegerCartan(f"{name} is not diagonal")
        diag = []
        for entry in mat.diagonal():
            if not entry.is_constant() or entry.constant_value().denominator != 1:
                raise NonIntegerCartan(f"{name} has a non-integer eigenvalue {entry}")
            diag.append(int(entry.constant_value()))
        values.append(tuple(diag))
    return CartanContext(values[0], values[1])


def cartan_exponential(form: Form, base: str, ctx: CartanContext) -> PolyMatrix:
    """Diagonal matrix base^{a h1_i + b h2_i + c} for base ``"q"`` or ``"s"``."""
    power = {"q": qpow, "s": spow}.get(base)
    if power is None:
        raise ValueError(f"Base must be 'q' or 's', got {base!r}")
    return PolyMatrix.diag([power(v) for v in ctx.values(form)])


def qnum_of_cartan(form: Form, ctx: CartanContext) -> PolyMatrix:
    return PolyMatrix.diag([qnum(v) for v in ctx.values(form)])


def grading_sign(ctx: CartanContext) -> PolyMatrix:
    """pi(g) = (-1)^{H1 + H2}, the parity operator of the space."""
    return PolyMatrix.diag([(-1) ** ((a + b) % 2) for a, b in zip(ctx.h1, ctx.h2)])


__all__ = [
    "Basis",
    "CARTAN_DISTINGUISHED",
    "CARTAN_FERMIONIC",
    "DEGREES",
    "DISTINGUISHED_TOKENS",
    "FERMIONIC_TOKENS",
    "FUNDAMENTAL",
    "GeneratorId",
    "NO_FORM",
    "cartan_exponential",
    "chain_context",
    "chain_parities",
    "context_from_matrices",
    "degree",
    "grading_sign",
    "qnum_of_cartan",
]
