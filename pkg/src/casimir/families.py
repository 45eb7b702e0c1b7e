"""
Casimir families of sl(1|2) and U_qs(sl(1|2)) as algebra elements.

``casimir_words`` returns the element for a ``CasimirSpec``; ``casimir_rep``
evaluates it on L copies of the fundamental with every generator replaced by
its iterated coproduct. All words are written in the fermionic generators with
the Cartan factors on the right of the root vectors.

- ``ClassicalP(p)``, p >= 2: the classical family, with (H1 - H2)^0 = 1.
- ``QuantumP(p)``, p in Z: the two-parameter family, prefixed by
  q^{(2p-1)(H2-H1)}.
- ``FrtK(k)``, k >= 1: quantum traces of (I - Y)^k, see ``frt_casimir``.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from src.algebra.generators import chain_context
from src.algebra.hopf import HopfVariant, coproduct_rep
from src.algebra.words import (
    CartanExp,
    CartanPower,
    QNum,
    Term,
    TensorWord,
    evaluate_element,
    single,
)
from src.casimir.frt_casimir import frt_casimir_rep
from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import LAMBDA, Q, qnum, qpow
from src.utils.errors import BadIndex, UnsupportedL
from src.utils.logging import logger


class CasimirFamily(str, Enum):
    CLASSICAL = "cl"
    QUANTUM = "q"
    FRT = "frt"


@dataclass(frozen=True)
class CasimirSpec:
    """A Casimir family together with its index."""

    family: CasimirFamily
    index: int

    def __post_init__(self):
        object.__setattr__(self, "family", CasimirFamily(self.family))
        if not isinstance(self.index, int):
            raise BadIndex(f"Casimir index must be an integer, got {self.index!r}")
        if self.family is CasimirFamily.CLASSICAL and self.index < 2:
            raise BadIndex(f"Classical Casimirs start at p = 2, got {self.index}")
        if self.family is CasimirFamily.FRT and self.index < 1:
            raise BadIndex(f"FRT Casimirs need k >= 1, got {self.index}")

    @classmethod
    def classical(cls, p: int) -> "CasimirSpec":
        return cls(CasimirFamily.CLASSICAL, p)

    @classmethod
    def quantum(cls, p: int) -> "CasimirSpec":
        return cls(CasimirFamily.QUANTUM, p)

    @classmethod
    def frt(cls, k: int) -> "CasimirSpec":
        return cls(CasimirFamily.FRT, k)

    def __str__(self) -> str:
        return f"{self.family.value}({self.index})"


def _power(form, p: int) -> CartanPower:
    return CartanPower(form, p)


def classical_casimir(p: int) -> TensorWord:
    """C^cl_p written with (H1 - H2 + c)^{p-2} factors on the right."""
    n = p - 2
    base = _power((1, -1, 0), n)
    return (
        single(1, "H1", "H2", base)
        + single(-1, "E1m", "E1p", "H2", base)
        + single(-1, "E1m", "E1p", _power((0, -1, 1), 1), _power((1, -1, 1), n))
        + single(-1, "E2m", "E2p", "H1", base)
        + single(-1, "E2m", "E2p", _power((-1, 0, 1), 1), _power((1, -1, -1), n))
        + single(-1, "E3m", "E3p", base)
        + single(1, "E3m", "E2p", "E1p", base)
        + single(-1, "E3m", "E2p", "E1p", _power((1, -1, 1), n))
        + single(1, "E2m", "E1m", "E3p", base)
        + single(-1, "E2m", "E1m", "E3p", _power((1, -1, -1), n))
        + single(1, "E2m", "E1m", "E2p", "E1p", _power((1, -1, 1), n))
        + single(1, "E2m", "E1m", "E2p", "E1p", _power((1, -1, -1), n))
        + single(-2, "E2m", "E1m", "E2p", "E1p", base)
    )


def quantum_casimir(p: int) -> TensorWord:
    """C_p for U_qs(sl(1|2)); q^{(2p-1)(H2-H1)} multiplies every term on the left."""
    prefix = CartanExp((1 - 2 * p, 2 * p - 1, 0))

    def s_exp(form):
        return CartanExp(s_form=form)

    body = (
        single(1, QNum((1, 0, 0)), QNum((0, 1, 0)))
        + single(qpow(1 - 2 * p), "E1m", "E1p", s_exp((1, 0, -1)), QNum((0, 1, -1)))
        + single(-1, "E1m", "E1p", s_exp((1, 0, -1)), QNum((0, 1, 0)))
        + single(qpow(2 * p - 1), "E2m", "E2p", s_exp((0, -1, -1)), QNum((1, 0, -1)))
        + single(-1, "E2m", "E2p", s_exp((0, -1, -1)), QNum((1, 0, 0)))
        + single(-(Q**-1), "E3m", "E3p", s_exp((1, -1, -1)))
        + single(
            -qpow(p - 2) * LAMBDA * qnum(p), "E2m", "E1m", "E3p", s_exp((1, -1, -2))
        )
        + single(
            qpow(-p) * LAMBDA * qnum(p - 1), "E3m", "E2p", "E1p", s_exp((1, -1, -1))
        )
        + single(
            Q**-1 * LAMBDA**2 * qnum(p) * qnum(p - 1),
            "E2m",
            "E1m",
            "E2p",
            "E1p",
            s_exp((1, -1, -2)),
        )
    )
    return TensorWord(tuple(Term(t.coeff, ((prefix,) + t.legs[0],)) for t in body.terms))


def casimir_words(spec: CasimirSpec) -> TensorWord:
    """
    Algebra element of a classical or quantum Casimir.

    Raises:
        ValueError: For ``FrtK``, which is defined through the quantum trace and
            has no word form here.
    """
    if spec.family is CasimirFamily.CLASSICAL:
        return classical_casimir(spec.index)
    if spec.family is CasimirFamily.QUANTUM:
        return quantum_casimir(spec.index)
    raise ValueError("FRT Casimirs are evaluated through frt_casimir_rep")


def _check_variant(spec: CasimirSpec, variant: HopfVariant) -> None:
    if spec.family is CasimirFamily.CLASSICAL and variant is not HopfVariant.CLASSICAL_PRIMITIVE:
        raise ValueError("Classical Casimirs use the primitive coproduct")
    if spec.family is CasimirFamily.QUANTUM and variant is HopfVariant.CLASSICAL_PRIMITIVE:
        raise ValueError("Quantum Casimirs need a deformed coproduct")
    if spec.family is CasimirFamily.FRT and variant is not HopfVariant.FERMIONIC_STANDARD:
        raise ValueError("FRT Casimirs are built from the standard fermionic R-matrix")


@lru_cache(maxsize=None)
def casimir_rep(
    spec: CasimirSpec, sites: int, variant: HopfVariant = HopfVariant.FERMIONIC_STANDARD
) -> PolyMatrix:
    """
    Matrix of a Casimir on ``sites`` copies of the fundamental.

    Args:
        spec (CasimirSpec): Family and index.
        sites (int): Chain length L >= 1.
        variant (HopfVariant): Coproduct used to lift the generators. Classical
            Casimirs need the primitive one, FRT Casimirs the standard one.

    Returns:
        PolyMatrix: 3^L x 3^L matrix.

    Raises:
        UnsupportedL: FRT Casimir on more than two sites.
        ValueError: Family and Hopf structure do not fit together.
    """
    variant = HopfVariant(variant)
    _check_variant(spec, variant)
    if sites < 1:
        raise UnsupportedL(f"Need at least one site, got {sites}")
    if spec.family is CasimirFamily.FRT:
        return frt_casimir_rep(spec.index, sites)
    logger.debug("Evaluating Casimir %s on %d sites (%s)", spec, sites, variant.value)
    return evaluate_element(
        casimir_words(spec),
        lambda t: coproduct_rep(t, variant, sites).matrix,
        chain_context(sites),
    )


__all__ = [
    "CasimirFamily",
    "CasimirSpec",
    "casimir_rep",
    "casimir_words",
    "classical_casimir",
    "quantum_casimir",
]
