"""
Z2-graded structure on tensor powers of the fundamental space.

The graded tensor product is realized on matrices as

    rho(x (x) y) = (pi(x) . Sigma^{deg y}) (x) pi(y),   Sigma = diag((-1)^{p(i)}),

with Sigma built from the parities of the first factor. Also here: site and
three-space embeddings, partial traces and the partial transpose.
"""

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from src.linalg.poly_matrix import PolyMatrix, flip, kron, kron_all
from src.ring.laurent import ONE, ZERO, LaurentPoly, poly
from src.utils.errors import DimensionMismatch, InhomogeneousOperand, SiteOutOfRange

FUNDAMENTAL_DIM = 3


@dataclass(frozen=True)
class ParityVector:
    """Parity (0 even, 1 odd) of every basis state of a representation space."""

    parities: Tuple[int, ...]

    @classmethod
    def fundamental(cls) -> "ParityVector":
        return cls((1, 0, 1))

    @classmethod
    def chain(cls, sites: int) -> "ParityVector":
        result = cls.fundamental()
        for _ in range(sites - 1):
            result = result.tensor(cls.fundamental())
        return result

    def tensor(self, other: "ParityVector") -> "ParityVector":
        return ParityVector(
            tuple((a + b) % 2 for a in self.parities for b in other.parities)
        )

    def __len__(self) -> int:
        return len(self.parities)

    def sign_matrix(self) -> PolyMatrix:
        return PolyMatrix.diag([-1 if p else 1 for p in self.parities])


@dataclass(frozen=True)
class GradedOp:
    """A matrix together with its Z2 degree and the parities of its space."""

    matrix: PolyMatrix
    degree: int
    parities: ParityVector

    def violations(self) -> int:
        """Number of nonzero entries inconsistent with the declared degree."""
        p = self.parities.parities
        return sum(
            1 for (i, j), _ in self.matrix.nonzero() if (p[i] + p[j]) % 2 != self.degree % 2
        )

    def is_homogeneous(self) -> bool:
        return self.violations() == 0

    def __matmul__(self, other: "GradedOp") -> "GradedOp":
        return GradedOp(
            self.matrix @ other.matrix, (self.degree + other.degree) % 2, self.parities
        )

    def __add__(self, other: "GradedOp") -> "GradedOp":
        if self.degree % 2 != other.degree % 2:
            raise InhomogeneousOperand("Cannot add operators of different degree")
        return GradedOp(self.matrix + other.matrix, self.degree, self.parities)

    def scale(self, factor: object) -> "GradedOp":
        return GradedOp(self.matrix.scale(factor), self.degree, self.parities)

    @classmethod
    def identity(cls, parities: ParityVector) -> "GradedOp":
        return cls(PolyMatrix.identity(len(parities)), 0, parities)


def graded_kron(a: GradedOp, b: GradedOp) -> GradedOp:
    """
    Graded tensor product of two homogeneous operators.

    Raises:
        InhomogeneousOperand: Either operand has entries off its degree.
    """
    for name, op in (("left", a), ("right", b)):
        if not op.is_homogeneous():
            raise InhomogeneousOperand(
                f"{name} operand is not homogeneous of degree {op.degree}"
            )
    left = a.matrix
    if b.degree % 2:
        left = left @ a.parities.sign_matrix()
    return GradedOp(
        kron(left, b.matrix), (a.degree + b.degree) % 2, a.parities.tensor(b.parities)
    )


def site_embed(op: PolyMatrix, j: int, sites: int, d: int = FUNDAMENTAL_DIM) -> PolyMatrix:
    """
    Place a two-site operator on sites (j, j+1) of an open chain (1-based j).

    Raises:
        SiteOutOfRange: Unless 1 <= j <= sites - 1.
    """
    if not 1 <= j <= sites - 1:
        raise SiteOutOfRange(f"Bond {j} outside a chain of {sites} sites")
    if op.shape != (d * d, d * d):
        raise DimensionMismatch(f"Two-site operator must be {d * d}x{d * d}")
    factors = []
    if j > 1:
        factors.append(PolyMatrix.identity(d ** (j - 1)))
    factors.append(op)
    if sites - j - 1 > 0:
        factors.append(PolyMatrix.identity(d ** (sites - j - 1)))
    return kron_all(factors)


def three_space_embed(m: PolyMatrix, pair: str, d: int = FUNDAMENTAL_DIM) -> PolyMatrix:
    """Act with a two-factor matrix on factors ``"12"``, ``"13"`` or ``"23"`` of three."""
    ident = PolyMatrix.identity(d)
    if pair == "12":
        return kron(m, ident)
    if pair == "23":
        return kron(ident, m)
    if pair == "13":
        p23 = kron(ident, flip(d))
        return p23 @ kron(m, ident) @ p23
    raise ValueError(f"Unknown factor pair {pair!r}")


def embed13_direct(m: PolyMatrix, d: int = FUNDAMENTAL_DIM) -> PolyMatrix:
    """Index-formula version of ``three_space_embed(m, "13")``."""
    out: Dict[Tuple[int, int], LaurentPoly] = {}
    for (row, col), value in m.nonzero():
        i, k = divmod(row, d)
        j, l = divmod(col, d)
        for mid in range(d):
            out[(i * d * d + mid * d + k, j * d * d + mid * d + l)] = value
    return PolyMatrix(d**3, d**3, out)


def partial_trace(
    m: PolyMatrix, dims: Tuple[int, int], over: int, weights: Sequence[object] = None
) -> PolyMatrix:
    """
    Weighted partial trace over factor ``over`` (1 or 2) of a d1 x d2 space.

    ``weights[i]`` multiplies the diagonal block of basis state i of the traced
    factor; plain trace when omitted.
    """
    d1, d2 = dims
    if m.shape != (d1 * d2, d1 * d2):
        raise DimensionMismatch(f"Matrix {m.shape} does not act on {d1}x{d2}")
    traced = d1 if over == 1 else d2
    weights = [poly(w) for w in weights] if weights is not None else [ONE] * traced
    if len(weights) != traced:
        raise DimensionMismatch("One weight per basis state of the traced factor")
    out: Dict[Tuple[int, int], LaurentPoly] = {}
    for (row, col), value in m.nonzero():
        i, k = divmod(row, d2)
        j, l = divmod(col, d2)
        if over == 1 and i == j:
            key, w = (k, l), weights[i]
        elif over == 2 and k == l:
            key, w = (i, j), weights[k]
        else:
            continue
        out[key] = out.get(key, ZERO) + w * value
    size = d2 if over == 1 else d1
    return PolyMatrix(size, size, out)


def partial_quantum_trace(m: PolyMatrix, d: PolyMatrix) -> PolyMatrix:
    """
    Trace out the first (auxiliary) factor with weight ``d^-1``.

    Args:
        m (PolyMatrix): Operator on aux (x) chain.
        d (PolyMatrix): Diagonal matrix on the auxiliary space.

    Returns:
        PolyMatrix: Operator on the chain.
    """
    aux = d.rows
    if m.rows % aux:
        raise DimensionMismatch(f"Matrix of size {m.rows} has no {aux}-dim aux factor")
    weights = [entry.inverse() for entry in d.diagonal()]
    return partial_trace(m, (aux, m.rows // aux), over=1, weights=weights)


def partial_transpose_second(m: PolyMatrix, d: int = FUNDAMENTAL_DIM) -> PolyMatrix:
    """Transpose in the second tensor factor only."""
    out = {}
    for (row, col), value in m.nonzero():
        i, k = divmod(row, d)
        j, l = divmod(col, d)
        out[(i * d + l, j * d + k)] = value
    return PolyMatrix(m.rows, m.cols, out)


def supertrace(op: GradedOp) -> LaurentPoly:
    total = ZERO
    for i, value in enumerate(op.matrix.diagonal()):
        if value:
            total = total + (-value if op.parities.parities[i] else value)
    return total
