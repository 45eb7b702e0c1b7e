"""
Matrices with Laurent-polynomial entries.

``PolyMatrix`` is immutable and stores only its nonzero entries, keyed by
0-based (row, col) pairs; dense views are produced on demand. It provides:

- ring arithmetic (``+``, ``-``, ``@``, scaling by scalars or polynomials),
- Kronecker products, transposes, powers and unit-pivot Gauss-Jordan inversion,
- specialization to exact/float values, partial substitution,
- the symbolic JSON format and Matrix Market export.

Index convention for tensor products: the pair (i, k) of a ``d_a x d_b`` product
maps to ``i * d_b + k`` (0-based), i.e. ``(i-1)*d_b + k`` 1-based.
"""

from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

import numpy as np

from src.ring.laurent import ONE, ZERO, LaurentPoly, ParamPoint, poly
from src.utils.errors import DimensionMismatch, NonSquare, NotDivisible

Index = Tuple[int, int]
FLOAT_TOLERANCE = 1e-9


class PolyMatrix:
    """Sparse, immutable matrix over the Laurent ring."""

    __slots__ = ("rows", "cols", "_entries", "_row_map")

    def __init__(self, rows: int, cols: int, entries: Mapping[Index, object] = None):
        if rows <= 0 or cols <= 0:
            raise ValueError(f"Matrix dimensions must be positive, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        clean: Dict[Index, LaurentPoly] = {}
        for (i, j), value in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"Entry ({i}, {j}) outside {rows}x{cols} matrix")
            value = poly(value)
            if value:
                clean[(i, j)] = value
        self._entries = clean
        self._row_map = None

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: Dict[Index, LaurentPoly]):
        obj = cls.__new__(cls)
        obj.rows = rows
        obj.cols = cols
        obj._entries = entries
        obj._row_map = None
        return obj

    # Constructors
    @classmethod
    def zeros(cls, rows: int, cols: int = None) -> "PolyMatrix":
        return cls._raw(rows, rows if cols is None else cols, {})

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls._raw(n, n, {(i, i): ONE for i in range(n)})

    @classmethod
    def diag(cls, values: Sequence[object]) -> "PolyMatrix":
        n = len(values)
        return cls(n, n, {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> "PolyMatrix":
        entries = {
            (i, j): value for i, row in enumerate(rows) for j, value in enumerate(row)
        }
        return cls(len(rows), len(rows[0]), entries)

    # Access
    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, index: Index) -> LaurentPoly:
        return self._entries.get(index, ZERO)

    def one_based(self, i: int, j: int) -> LaurentPoly:
        """Entry at 1-based (row, col), the convention used for printed matrices."""
        return self._entries.get((i - 1, j - 1), ZERO)

    def nonzero(self) -> Iterator[Tuple[Index, LaurentPoly]]:
        return iter(sorted(self._entries.items()))

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self._entries)

    def diagonal(self) -> List[LaurentPoly]:
        self._require_square("diagonal")
        return [self[i, i] for i in range(self.rows)]

    def _rows_index(self) -> Dict[int, List[Tuple[int, LaurentPoly]]]:
        if self._row_map is None:
            index: Dict[int, List[Tuple[int, LaurentPoly]]] = {}
            for (i, j), value in self._entries.items():
                index.setdefault(i, []).append((j, value))
            self._row_map = index
        return self._row_map

    def _require_square(self, what: str) -> None:
        if self.rows != self.cols:
            raise NonSquare(f"{what} needs a square matrix, got {self.rows}x{self.cols}")

    def _require_same_shape(self, other: "PolyMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"Shapes differ: {self.shape} vs {other.shape}")

    # Arithmetic
    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        self._require_same_shape(other)
        out = dict(self._entries)
        for key, value in other._entries.items():
            total = out[key] + value if key in out else value
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return PolyMatrix._raw(self.rows, self.cols, out)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix._raw(
            self.rows, self.cols, {k: -v for k, v in self._entries.items()}
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: object) -> "PolyMatrix":
        factor = poly(factor)
        if not factor:
            return PolyMatrix.zeros(self.rows, self.cols)
        out = {}
        for key, value in self._entries.items():
            prod = value * factor
            if prod:
                out[key] = prod
        return PolyMatrix._raw(self.rows, self.cols, out)

    def __mul__(self, factor: object) -> "PolyMatrix":
        if isinstance(factor, PolyMatrix):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"Cannot multiply {self.shape} by {other.shape}")
        right = other._rows_index()
        out: Dict[Index, LaurentPoly] = {}
        for (i, k), a in self._entries.items():
            for j, b in right.get(k, ()):
                key = (i, j)
                prod = a * b
                out[key] = out[key] + prod if key in out else prod
        return PolyMatrix._raw(
            self.rows, other.cols, {k: v for k, v in out.items() if v}
        )

    def power(self, k: int) -> "PolyMatrix":
        self._require_square("power")
        if k < 0:
            return self.inverse().power(-k)
        result = PolyMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    __hash__ = None

    # Structure
    def transpose(self) -> "PolyMatrix":
        return PolyMatrix._raw(
            self.cols, self.rows, {(j, i): v for (i, j), v in self._entries.items()}
        )

    def trace(self) -> LaurentPoly:
        self._require_square("trace")
        total = ZERO
        for (i, j), value in self._entries.items():
            if i == j:
                total = total + value
        return total

    def map_entries(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "PolyMatrix":
        return PolyMatrix(
            self.rows, self.cols, {k: fn(v) for k, v in self._entries.items()}
        )

    def substitute(self, mapping: Mapping[str, object]) -> "PolyMatrix":
        return self.map_entries(lambda p: p.substitute(mapping))

    def inverse(self) -> "PolyMatrix":
        """
        Gauss-Jordan inverse using unit (single-term) pivots only.

        Sufficient for the triangular-with-monomial-diagonal matrices that occur
        here (R-matrices, their partial transposes, Cartan blocks).

        Raises:
            NotDivisible: No unit pivot is available in some column.
        """
        self._require_square("inverse")
        n = self.rows
        left = [dict() for _ in range(n)]
        for (i, j), value in self._entries.items():
            left[i][j] = value
        right = [{i: ONE} for i in range(n)]
        for col in range(n):
            pivot_row = next(
                (r for r in range(col, n) if col in left[r] and left[r][col].is_monomial()),
                None,
            )
            if pivot_row is None:
                raise NotDivisible(f"No unit pivot in column {col}")
            left[col], left[pivot_row] = left[pivot_row], left[col]
            right[col], right[pivot_row] = right[pivot_row], right[col]
            inv = left[col][col].inverse()
            left[col] = {j: v * inv for j, v in left[col].items()}
            right[col] = {j: v * inv for j, v in right[col].items()}
            for r in range(n):
                if r == col or col not in left[r]:
                    continue
                factor = left[r][col]
                for target, source in ((left, left[col]), (right, right[col])):
                    row = target[r]
                    for j, v in source.items():
                        val = row.get(j, ZERO) - factor * v
                        if val:
                            row[j] = val
                        else:
                            row.pop(j, None)
        entries = {(i, j): v for i, row in enumerate(right) for j, v in row.items()}
        return PolyMatrix._raw(n, n, entries)

    # Specialization and export
    def specialize(self, at: ParamPoint) -> List[List[object]]:
        """Dense list-of-lists of Fractions (exact point) or floats."""
        zero = Fraction(0) if at.is_exact else 0.0
        dense = [[zero] * self.cols for _ in range(self.rows)]
        for (i, j), value in self._entries.items():
            dense[i][j] = value.specialize(at)
        return dense

    def to_numpy(self, at: ParamPoint) -> np.ndarray:
        """Float array of the specialized matrix."""
        out = np.zeros(self.shape, dtype=float)
        for (i, j), value in self._entries.items():
            out[i, j] = float(value.specialize(at))
        return out

    def to_json(self) -> Dict[str, object]:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[i, j, v.to_json()] for (i, j), v in self.nonzero()],
        }

    @classmethod
    def from_json(cls, payload: Mapping[str, object]) -> "PolyMatrix":
        return cls(
            payload["rows"],
            payload["cols"],
            {(i, j): LaurentPoly.from_json(p) for i, j, p in payload["entries"]},
        )

    def to_matrix_market(self, at: ParamPoint) -> str:
        """Coordinate-format Matrix Market text of the specialized matrix."""
        values = [((i, j), v.specialize(at)) for (i, j), v in self.nonzero()]
        values = [(k, v) for k, v in values if v != 0]
        lines = [
            "%%MatrixMarket matrix coordinate real general",
            f"{self.rows} {self.cols} {len(values)}",
        ]
        lines.extend(f"{i + 1} {j + 1} {float(v)!r}" for (i, j), v in values)
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        shown = ", ".join(f"({i},{j}): {v}" for (i, j), v in list(self.nonzero())[:6])
        more = "" if self.nnz <= 6 else ", ..."
        return f"PolyMatrix({self.rows}x{self.cols}, {{{shown}{more}}})"


def elementary(n: int, i: int, j: int, value: object = 1) -> PolyMatrix:
    """The n x n matrix unit e_ij (1-based indices), optionally scaled."""
    return PolyMatrix(n, n, {(i - 1, j - 1): value})


def kron(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Ungraded Kronecker product; pair (i, k) -> i * b.rows + k."""
    out: Dict[Index, LaurentPoly] = {}
    for (i, j), x in a._entries.items():
        for (k, l), y in b._entries.items():
            out[(i * b.rows + k, j * b.cols + l)] = x * y
    return PolyMatrix._raw(a.rows * b.rows, a.cols * b.cols, out)


def kron_all(factors: Iterable[PolyMatrix]) -> PolyMatrix:
    factors = list(factors)
    result = factors[0]
    for factor in factors[1:]:
        result = kron(result, factor)
    return result


def commutator(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.shape != b.shape or not a.is_square():
        raise DimensionMismatch(f"Commutator needs equal square shapes: {a.shape}, {b.shape}")
    return a @ b - b @ a


def anticommutator(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    if a.shape != b.shape or not a.is_square():
        raise DimensionMismatch(f"Anticommutator needs equal square shapes: {a.shape}, {b.shape}")
    return a @ b + b @ a


def flip(d: int) -> PolyMatrix:
    """Permutation P on C^d (x) C^d with P(x (x) y) = y (x) x."""
    return PolyMatrix._raw(
        d * d, d * d, {(i * d + k, k * d + i): ONE for i in range(d) for k in range(d)}
    )


def trace_variants(
    m: PolyMatrix, kind: str = "plain", parities: Sequence[int] = None, d: PolyMatrix = None
) -> LaurentPoly:
    """
    Plain, super or quantum trace.

    Args:
        m (PolyMatrix): Square matrix.
        kind (str): ``"plain"``, ``"super"`` (needs ``parities``) or
            ``"quantum"`` (needs the diagonal matrix ``d``; weights by ``d^-1``).

    Returns:
        LaurentPoly: The requested trace.
    """
    if not m.is_square():
        raise NonSquare(f"Trace needs a square matrix, got {m.shape}")
    diag = m.diagonal()
    if kind == "plain":
        weights = [ONE] * m.rows
    elif kind == "super":
        if parities is None or len(parities) != m.rows:
            raise DimensionMismatch("Super trace needs one parity per basis state")
        weights = [poly(-1 if p % 2 else 1) for p in parities]
    elif kind == "quantum":
        if d is None or d.shape != m.shape:
            raise DimensionMismatch("Quantum trace needs a diagonal D of matching size")
        weights = [entry.inverse() for entry in d.diagonal()]
    else:
        raise ValueError(f"Unknown trace kind {kind!r}")
    total = ZERO
    for weight, value in zip(weights, diag):
        if value:
            total = total + weight * value
    return total


def residual_nonzeros(m: PolyMatrix, at: ParamPoint = None) -> int:
    """
    Nonzero entries of a residual matrix, symbolically or at a point.

    Float points count entries above an absolute tolerance of 1e-9.
    """
    if at is None:
        return m.nnz
    values = [v.specialize(at) for _, v in m.nonzero()]
    if at.is_exact:
        return sum(1 for v in values if v != 0)
    return sum(1 for v in values if abs(v) > FLOAT_TOLERANCE)
