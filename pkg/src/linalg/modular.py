"""
Spectral fingerprints of specialized matrices.

- ``modular_charpoly``: characteristic polynomial over GF(p) via Hessenberg
  reduction and the Hessenberg determinant recurrence, O(n^3) numpy work on
  int64 arrays (primes are kept below 2**24 so products never overflow).
- ``newton_traces``: Tr(M^k) for k = 1..kmax, symbolic (Laurent), exact
  (rational) or float.
- ``power_sums_from_charpoly``: Newton's identities mod p, linking the two.
"""

import math
import random
from fractions import Fraction
from typing import List, Optional, Sequence, Union

import numpy as np

from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import ZERO, LaurentPoly, ParamPoint
from src.utils.errors import BadPrime, NonSquare

PRIME_BITS = 24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the 24-bit primes used here."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def random_primes(rng: random.Random, count: int, bits: int = PRIME_BITS) -> List[int]:
    """``count`` distinct primes drawn uniformly from [2**(bits-1), 2**bits)."""
    primes: List[int] = []
    while len(primes) < count:
        candidate = rng.randrange(2 ** (bits - 1), 2**bits) | 1
        if is_prime(candidate) and candidate not in primes:
            primes.append(candidate)
    return primes


def fraction_mod(value: Fraction, prime: int) -> int:
    den = value.denominator % prime
    if den == 0:
        raise BadPrime(f"Denominator {value.denominator} vanishes mod {prime}")
    return (value.numerator * pow(den, prime - 2, prime)) % prime


def specialize_mod(m: PolyMatrix, at: ParamPoint, prime: int) -> np.ndarray:
    """Exact specialization reduced into an int64 array mod ``prime``."""
    if not at.is_exact:
        raise ValueError("Modular specialization needs an exact parameter point")
    out = np.zeros(m.shape, dtype=np.int64)
    for (i, j), value in m.nonzero():
        out[i, j] = fraction_mod(Fraction(value.specialize(at)), prime)
    return out


def hessenberg_mod(a: np.ndarray, prime: int) -> np.ndarray:
    """Upper Hessenberg matrix similar to ``a`` over GF(prime)."""
    h = np.array(a, dtype=np.int64) % prime
    n = h.shape[0]
    for j in range(n - 2):
        nz = np.nonzero(h[j + 1 :, j])[0]
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            h[[piv, j + 1], :] = h[[j + 1, piv], :]
            h[:, [piv, j + 1]] = h[:, [j + 1, piv]]
        inv = pow(int(h[j + 1, j]), prime - 2, prime)
        u = (h[j + 2 :, j] * inv) % prime
        if not u.any():
            continue
        # rows r > j+1: R_r -= u_r R_{j+1}; then C_{j+1} += sum_r u_r C_r
        h[j + 2 :, j:] = (h[j + 2 :, j:] - np.outer(u, h[j + 1, j:]) % prime) % prime
        h[:, j + 1] = (h[:, j + 1] + (h[:, j + 2 :] @ u) % prime) % prime
    return h


def charpoly_mod(a: np.ndarray, prime: int) -> List[int]:
    """
    Characteristic polynomial det(xI - A) over GF(prime).

    Returns:
        List[int]: Coefficients from x^n down to the constant term, leading 1.
    """
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSquare(f"Characteristic polynomial needs a square matrix, got {a.shape}")
    n = a.shape[0]
    h = hessenberg_mod(a, prime)
    # polys[m] holds p_m, lowest degree first
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    chain = np.zeros(0, dtype=np.int64)
    for m in range(1, n + 1):
        prev = polys[m - 1]
        current = np.zeros(n + 1, dtype=np.int64)
        current[1:] = prev[:-1]
        current = (current - (int(h[m - 1, m - 1]) * prev) % prime) % prime
        if m > 1:
            sub = int(h[m - 1, m - 2])
            chain = np.append((chain * sub) % prime, sub)
            coef = (h[: m - 1, m - 1] * chain) % prime
            correction = (coef @ polys[: m - 1]) % prime
            current = (current - correction) % prime
        polys[m] = current
    return [int(c) for c in polys[n][::-1]]


def modular_charpoly(m: PolyMatrix, at: ParamPoint, prime: int) -> List[int]:
    """
    Characteristic polynomial of ``m`` specialized at ``at``, mod ``prime``.

    Raises:
        BadPrime: A specialization denominator vanishes mod ``prime``.
    """
    if not m.is_square():
        raise NonSquare(f"Characteristic polynomial needs a square matrix, got {m.shape}")
    return charpoly_mod(specialize_mod(m, at, prime), prime)


def power_sums_from_charpoly(coeffs: Sequence[int], kmax: int, prime: int) -> List[int]:
    """Newton's identities: Tr(A^k) mod p for k = 1..kmax from charpoly coefficients."""
    n = len(coeffs) - 1
    c = list(coeffs)
    sums: List[int] = []
    for k in range(1, kmax + 1):
        total = k * c[k] if k <= n else 0
        for i in range(1, min(k - 1, n) + 1):
            total += c[i] * sums[k - i - 1]
        sums.append((-total) % prime)
    return sums


def symbolic_traces(m: PolyMatrix, kmax: int) -> List[LaurentPoly]:
    """
    Tr(M^k) over the Laurent ring, k = 1..kmax.

    Only powers up to M^(kmax-1) are formed; each trace is read off as
    sum_ij (M^(k-1))_ij M_ji.
    """
    if not m.is_square():
        raise NonSquare(f"Traces need a square matrix, got {m.shape}")
    entries = dict(m.nonzero())
    traces: List[LaurentPoly] = []
    power = PolyMatrix.identity(m.rows)
    for k in range(1, kmax + 1):
        total = ZERO
        for (i, j), value in power.nonzero():
            other = entries.get((j, i))
            if other is not None:
                total = total + value * other
        traces.append(total)
        if k < kmax:
            power = power @ m
    return traces


def newton_traces(
    m: PolyMatrix, at: Optional[ParamPoint], kmax: int
) -> List[Union[LaurentPoly, Fraction, float]]:
    """
    Power-sum traces Tr(M^k), k = 1..kmax.

    Without a point the traces are Laurent polynomials. Exact points give exact
    Fractions (integer matrix powers after clearing denominators); float points
    give doubles.
    """
    if not m.is_square():
        raise NonSquare(f"Traces need a square matrix, got {m.shape}")
    if at is None:
        return symbolic_traces(m, kmax)
    if not at.is_exact:
        a = m.to_numpy(at)
        out: List[Union[Fraction, float]] = []
        power = np.eye(m.rows)
        for _ in range(kmax):
            power = power @ a
            out.append(float(np.trace(power)))
        return out
    dense = m.specialize(at)
    denom = 1
    for row in dense:
        for value in row:
            denom = denom * value.denominator // math.gcd(denom, value.denominator)
    ints = np.array([[int(v * denom) for v in row] for row in dense], dtype=object)
    traces: List[Union[Fraction, float]] = []
    power = ints
    for k in range(1, kmax + 1):
        if k > 1:
            power = power.dot(ints)
        traces.append(Fraction(int(np.trace(power)), denom**k))
    return traces
