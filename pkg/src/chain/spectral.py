"""
Spectral equivalence of two L-site Hamiltonians without an eigensolver.

Both chains are specialized at the same random exact parameter points and their
characteristic polynomials are compared over several random prime fields. A
disagreement anywhere is a certain failure; agreement at every (point, prime)
pair is accepted as equality of spectra. Power-sum traces in floating point are
a cheap second witness. For chains of at most four sites the traces are also
compared symbolically over the Laurent ring, which decides equality of spectra
outright, and linked back to the modular polynomials through Newton's identities.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

from src.chain.hamiltonians import (
    HamiltonianKind,
    chain_hamiltonian,
    closed_form,
    l_site_hamiltonian,
    reflect_hamiltonian,
)
from src.linalg.modular import (
    fraction_mod,
    modular_charpoly,
    newton_traces,
    power_sums_from_charpoly,
    random_primes,
)
from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import VARIABLES, ParamPoint
from src.utils.config import (
    DEFAULT_POINTS,
    DEFAULT_PRIMES,
    DEFAULT_SEED,
    EXACT_NEWTON_SITES,
    LONG_SITES,
    MAX_SITES,
    NEWTON_KMAX_FLOAT,
    default_jobs,
)
from src.utils.errors import BadPrime, ChainTooLong, SiteOutOfRange
from src.utils.logging import logger
from src.utils.reports import Report

REFLECTED = "fermionic-reflected"
MIN_POINTS = 2
MIN_PRIMES = 3
PRIME_RETRIES = 3
FLOAT_RTOL = 1e-8
NEWTON_LINK_KMAX = 12

CHAIN_NAMES = tuple(kind.value for kind in HamiltonianKind) + (REFLECTED,)


@dataclass
class SpectralReport:
    """Outcome of one spectral comparison; agreements are ordered by point, then prime."""

    sites: int
    kinds: List[str]
    seed: int
    points: List[Dict[str, str]] = field(default_factory=list)
    primes: List[int] = field(default_factory=list)
    agreements: List[Dict[str, Any]] = field(default_factory=list)
    newton: Optional[Dict[str, Any]] = None
    exact_newton: Optional[Dict[str, Any]] = None

    @property
    def confident(self) -> bool:
        return len(self.points) >= MIN_POINTS and len(self.primes) >= MIN_PRIMES

    @property
    def passed(self) -> bool:
        checks = [self.confident, bool(self.agreements)]
        checks += [row["agree"] for row in self.agreements]
        if self.newton is not None:
            checks.append(self.newton["agree"])
        if self.exact_newton is not None:
            checks.append(self.exact_newton["agree"])
        return all(checks)

    def to_report(self) -> Report:
        a, b = self.kinds
        params = {"seed": self.seed, "points": self.points, "primes": self.primes}
        replaced = [
            {"point": row["point"], "drawn": row["replaced_prime"], "used": row["prime"]}
            for row in self.agreements
            if "replaced_prime" in row
        ]
        if replaced:
            params["replaced_primes"] = replaced
        report = Report(f"spectra:{a}:{b}:L{self.sites}", params=params)
        report.add(
            "confidence",
            self.confident,
            points=len(self.points),
            primes=len(self.primes),
        )
        for row in self.agreements:
            detail = {key: value for key, value in row.items() if key != "agree"}
            name = f"charpoly-{row['point']}-{row['prime']}"
            report.add(name, row["agree"], **detail)
        if self.newton is not None:
            report.add("newton-float", self.newton["agree"], kmax=self.newton["kmax"])
        if self.exact_newton is not None:
            exact = self.exact_newton
            detail = {key: value for key, value in exact.items() if key != "agree"}
            report.add("newton-exact", self.exact_newton["agree"], **detail)
        return report


def hamiltonian_for(name: str, sites: int) -> PolyMatrix:
    """
    L-site Hamiltonian by name.

    ``fermionic-reflected`` is the fermionic chain with q, s inverted and each
    bond reflected, whose spectrum equals the fermionic one.
    """
    if name == REFLECTED:
        h2 = reflect_hamiltonian(closed_form(HamiltonianKind.FERMIONIC))
        return l_site_hamiltonian(h2, sites)
    return chain_hamiltonian(HamiltonianKind(name), sites)


def _random_value(rng: random.Random) -> Fraction:
    value = Fraction(1)
    while value in (0, 1, -1):
        value = Fraction(rng.randint(2, 29), rng.randint(1, 13))
    return value


def random_point(rng: random.Random) -> ParamPoint:
    """Exact point with every variable drawn away from 0 and +-1."""
    return ParamPoint.exact(**{name: _random_value(rng) for name in VARIABLES})


def _check_sites(sites: int, long: bool) -> None:
    if sites < 2:
        raise SiteOutOfRange(f"A chain needs at least two sites, got {sites}")
    if sites > MAX_SITES:
        raise ChainTooLong(f"At most {MAX_SITES} sites are supported, got {sites}")
    if sites >= LONG_SITES and not long:
        raise ChainTooLong(f"{sites} sites need the long-running flag")


def _compare_at(
    ha: PolyMatrix, hb: PolyMatrix, index: int, at: ParamPoint, prime: int, seed: int
) -> Dict[str, Any]:
    """Char-poly agreement at one (point, prime), replacing the prime on BadPrime."""
    rng = random.Random(f"{seed}-{index}-{prime}")
    used = prime
    for attempt in range(PRIME_RETRIES):
        try:
            ca = modular_charpoly(ha, at, used)
            cb = modular_charpoly(hb, at, used)
        except BadPrime as exc:
            logger.warning(
                "Retrying point %d with a new prime (attempt %d): %s", index, attempt + 1, exc
            )
            used = random_primes(rng, 1)[0]
            continue
        mismatches = sum(1 for x, y in zip(ca, cb) if x != y)
        row = {
            "point": index,
            "prime": used,
            "agree": ca == cb,
            "mismatched_coefficients": mismatches,
        }
        if used != prime:
            row["replaced_prime"] = prime
        return row
    raise BadPrime(f"No usable prime for point {index} after {PRIME_RETRIES} attempts")


def _float_newton(
    ha: PolyMatrix, hb: PolyMatrix, at: ParamPoint, kmax: int
) -> Dict[str, Any]:
    point = ParamPoint.floating(**{name: float(at[name]) for name in VARIABLES})
    ta = np.array(newton_traces(ha, point, kmax))
    tb = np.array(newton_traces(hb, point, kmax))
    # |Tr(A^k)| <= n * norm(A)^k bounds the rounding scale
    a = ha.to_numpy(point)
    norm = max(float(np.abs(a).sum(axis=1).max()), 1.0)
    scale = a.shape[0] * norm ** np.arange(1, kmax + 1)
    close = np.abs(ta - tb) <= FLOAT_RTOL * scale
    bad = [int(k) + 1 for k in np.nonzero(~close)[0]]
    return {"agree": not bad, "kmax": kmax, "first_mismatch": bad[0] if bad else None}


def _exact_newton(
    ha: PolyMatrix, hb: PolyMatrix, at: ParamPoint, kmax: int, prime: int
) -> Dict[str, Any]:
    """
    Symbolic traces Tr(H^k), k = 1..kmax, of both chains over the Laurent ring.

    The traces of ``ha``, specialized at ``at``, are also linked to its
    characteristic polynomial mod ``prime`` through Newton's identities.
    """
    ta = newton_traces(ha, None, kmax)
    tb = newton_traces(hb, None, kmax)
    mismatch = next((k for k, (x, y) in enumerate(zip(ta, tb), start=1) if x != y), None)
    link_k = min(kmax, NEWTON_LINK_KMAX)
    try:
        sums = power_sums_from_charpoly(modular_charpoly(ha, at, prime), link_k, prime)
        values = [fraction_mod(Fraction(t.specialize(at)), prime) for t in ta[:link_k]]
        linked = sums == values
    except BadPrime as exc:
        logger.warning("Skipping the Newton identity link: %s", exc)
        linked = None
    return {
        "agree": mismatch is None and linked is not False,
        "symbolic": True,
        "kmax": kmax,
        "traces_equal": mismatch is None,
        "first_mismatch": mismatch,
        "newton_identities": linked,
    }


def spectral_equivalence(
    kind_a: str,
    kind_b: str,
    sites: int,
    points: int = DEFAULT_POINTS,
    primes: int = DEFAULT_PRIMES,
    seed: int = DEFAULT_SEED,
    long: bool = False,
    jobs: Optional[int] = None,
    newton_kmax: int = NEWTON_KMAX_FLOAT,
    exact_kmax: Optional[int] = None,
) -> SpectralReport:
    """
    Compare the spectra of two L-site Hamiltonians.

    Args:
        kind_a (str): A HamiltonianKind value or ``fermionic-reflected``.
        kind_b (str): Second chain, same choices.
        sites (int): Chain length, 2..7.
        points (int): Random exact parameter points.
        primes (int): Random primes per point.
        seed (int): Seed for points and primes; identical seeds give identical reports.
        long (bool): Allow the seven-site chain.
        jobs (int): Worker threads; ``SL12_JOBS`` or 1 when omitted.
        newton_kmax (int): Float trace cross-check up to Tr(H^k); 0 disables it.
        exact_kmax (int): Symbolic trace comparison up to this power, for chains of
            at most four sites.

    Raises:
        SiteOutOfRange: ``sites`` < 2.
        ChainTooLong: ``sites`` > 7, or 7 without ``long``.
    """
    for name in (kind_a, kind_b):
        if name not in CHAIN_NAMES:
            raise ValueError(f"Unknown Hamiltonian {name!r}, expected one of {CHAIN_NAMES}")
    _check_sites(sites, long)
    logger.info("Comparing spectra of %s and %s on %d sites", kind_a, kind_b, sites)

    rng = random.Random(seed)
    chosen = [random_point(rng) for _ in range(points)]
    prime_list = random_primes(rng, primes)
    ha = hamiltonian_for(kind_a, sites)
    hb = hamiltonian_for(kind_b, sites)

    tasks = [(i, at, p) for i, at in enumerate(chosen) for p in prime_list]
    with ThreadPoolExecutor(max_workers=jobs or default_jobs()) as pool:
        agreements = list(pool.map(lambda t: _compare_at(ha, hb, *t, seed), tasks))

    result = SpectralReport(
        sites,
        [kind_a, kind_b],
        seed,
        points=[at.as_dict() for at in chosen],
        primes=prime_list,
        agreements=agreements,
    )
    if chosen and newton_kmax:
        result.newton = _float_newton(ha, hb, chosen[0], newton_kmax)
    if chosen and prime_list and exact_kmax and sites <= EXACT_NEWTON_SITES:
        first, prime = chosen[0], prime_list[0]
        result.exact_newton = _exact_newton(ha, hb, first, exact_kmax, prime)
    if result.passed:
        logger.info("Spectra agree on %d sites (%d points, %d primes)", sites, points, primes)
    else:
        logger.warning("Spectra of %s and %s differ on %d sites", kind_a, kind_b, sites)
    return result


__all__ = [
    "CHAIN_NAMES",
    "REFLECTED",
    "SpectralReport",
    "hamiltonian_for",
    "random_point",
    "spectral_equivalence",
]
