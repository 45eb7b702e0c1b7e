"""
Spectral reports and the consolidated ``all`` run.
"""

from typing import List, Optional

from src.chain.hamiltonians import HamiltonianKind
from src.chain.spectral import REFLECTED, spectral_equivalence
from src.suites.verify import SUITES, SuiteOptions, verify_run
from src.utils.config import (
    DEFAULT_POINTS,
    DEFAULT_PRIMES,
    DEFAULT_SEED,
    EXACT_NEWTON_SITES,
    LONG_SITES,
    NEWTON_KMAX_EXACT,
)
from src.utils.logging import logger
from src.utils.reports import Report

SPECTRA_SITES = range(2, LONG_SITES)


def spectra_run(
    kind_a: str = HamiltonianKind.FERMIONIC.value,
    kind_b: str = HamiltonianKind.DISTINGUISHED.value,
    sites: int = 2,
    long: bool = False,
    primes: int = DEFAULT_PRIMES,
    points: int = DEFAULT_POINTS,
    seed: int = DEFAULT_SEED,
    jobs: Optional[int] = None,
) -> Report:
    """Spectral comparison as a report; short chains also compare exact traces."""
    exact_kmax = NEWTON_KMAX_EXACT if sites <= EXACT_NEWTON_SITES else None
    result = spectral_equivalence(
        kind_a,
        kind_b,
        sites,
        points=points,
        primes=primes,
        seed=seed,
        long=long,
        jobs=jobs,
        exact_kmax=exact_kmax,
    )
    return result.to_report()


def all_run(
    seed: int = DEFAULT_SEED, jobs: Optional[int] = None, long: bool = False
) -> List[Report]:
    """
    Every registered suite, then the spectral comparisons for L = 2..6 (and 7
    when ``long`` is set) and the reflected fermionic chain on three sites.
    """
    logger.info("Running every suite (seed %d)", seed)
    reports = verify_run(list(SUITES), SuiteOptions(seed=seed, jobs=jobs))
    sites = list(SPECTRA_SITES) + ([LONG_SITES] if long else [])
    for length in sites:
        reports.append(spectra_run(sites=length, long=long, seed=seed, jobs=jobs))
    reflexive = spectra_run(
        HamiltonianKind.FERMIONIC.value, REFLECTED, sites=3, seed=seed, jobs=jobs
    )
    reports.append(reflexive)
    good = sum(1 for report in reports if report.passed)
    logger.info("All suites finished: %d/%d reports pass", good, len(reports))
    return reports


__all__ = ["SPECTRA_SITES", "all_run", "spectra_run"]
