"""
Named verification suites shared by the CLI.

Each suite is a function of ``SuiteOptions`` returning a list of reports. The
registry order is the order in which ``all`` runs them; suites may run on
worker threads but their reports are always collected in registry order.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.algebra.generators import DISTINGUISHED_TOKENS, FERMIONIC_TOKENS, Basis
from src.algebra.hopf import (
    NATIVE_BASIS,
    HopfVariant,
    coassociativity_check,
    deltafermtilde_check,
    e3_consistency,
    hopf_axiom_check,
)
from src.algebra.presentation import (
    chain_representation,
    fundamental_representation,
    verify_presentation,
)
from src.casimir.checks import (
    centrality_check,
    classical_limit_check,
    fundamental_scalar_check,
    quadratic_relation_check,
    quantum_limit_check,
    weyl_witness,
)
from src.casimir.families import CasimirFamily, CasimirSpec
from src.casimir.frt_casimir import ck23_check
from src.chain.commutant import invariant_commutant_with_retry
from src.chain.fermionic import fermionic_check
from src.chain.hamiltonians import (
    MATCHED_VARIANT,
    HamiltonianKind,
    closed_form,
    invariance_check,
    normalization_check,
    reflect_hamiltonian,
)
from src.chain.hecke import SHIFTS, hecke_check
from src.chain.similarity import similarity_reduce
from src.frt.appendix import rll_appendix_check, rll_matrix_check
from src.frt.lmatrices import (
    block_degree_check,
    bosonization_check,
    duality_check,
    superdet_check,
)
from src.frt.rmatrix import (
    RMatrixFamily,
    char_eq_check,
    d_identities_check,
    eigenprojector_check,
    eta_check,
    four_param_match_check,
    qybe_check,
    twist_check,
)
from src.ring.laurent import ParamPoint
from src.utils.config import DEFAULT_PARAMS, DEFAULT_SEED, K_RANGE, default_jobs
from src.utils.logging import logger
from src.utils.reports import Report

QUANTUM_P = range(-3, 6)
QUANTUM_QUADRATIC_P = range(-2, 5)
CLASSICAL_P = range(2, 6)
LIMIT_P = (3, 4, 5)
FRT_SITES = (1, 2)


@dataclass(frozen=True)
class SuiteOptions:
    """
    Selectors a suite may honour.

    Attributes:
        kind (str): Restrict chain suites to one HamiltonianKind.
        sites (int): Restrict chain and Casimir suites to one chain length.
        seed (int): Seed for random points.
        jobs (int): Worker threads.
    """

    kind: Optional[str] = None
    sites: Optional[int] = None
    seed: int = DEFAULT_SEED
    jobs: Optional[int] = None

    def site_range(self, default: Iterable[int]) -> Tuple[int, ...]:
        return (self.sites,) if self.sites is not None else tuple(default)

    def kinds(self, default: Iterable[HamiltonianKind]) -> Tuple[HamiltonianKind, ...]:
        if self.kind is not None:
            return (HamiltonianKind(self.kind),)
        return tuple(default)


def _families() -> Tuple[RMatrixFamily, RMatrixFamily]:
    return RMatrixFamily.two_param(), RMatrixFamily.four_param()


def _qybe(options: SuiteOptions) -> List[Report]:
    return [qybe_check(family) for family in _families()]


def _chareq(options: SuiteOptions) -> List[Report]:
    return [char_eq_check(family) for family in _families()]


def _eigen(options: SuiteOptions) -> List[Report]:
    return [eigenprojector_check(family) for family in _families()]


def _twist(options: SuiteOptions) -> List[Report]:
    return [twist_check(), four_param_match_check()]


def _rll_matrix(options: SuiteOptions) -> List[Report]:
    return [rll_matrix_check(family) for family in _families()]


def _rll_appendix(zeta: int) -> List[Report]:
    return [rll_appendix_check(zeta, family) for family in _families()]


def _presentation(options: SuiteOptions) -> List[Report]:
    """Every relation table on the fundamental and on two and three sites."""
    reports = [
        verify_presentation(
            "classical", Basis.FERMIONIC, fundamental_representation(Basis.FERMIONIC, True)
        ),
        verify_presentation(
            "classical",
            Basis.DISTINGUISHED,
            fundamental_representation(Basis.DISTINGUISHED, True),
        ),
        verify_presentation(
            "quantum", Basis.FERMIONIC, fundamental_representation(Basis.FERMIONIC)
        ),
        verify_presentation(
            "quantum", Basis.DISTINGUISHED, fundamental_representation(Basis.DISTINGUISHED)
        ),
    ]
    fundamental = fundamental_representation(Basis.FERMIONIC)
    at_s_one = ParamPoint.exact(**{**DEFAULT_PARAMS, "s": 1})
    reports.append(verify_presentation("printed", Basis.FERMIONIC, fundamental, at_s_one))
    generic = verify_presentation("printed", Basis.FERMIONIC, fundamental)
    generic.suite += ":generic-s"
    for case in generic.cases:
        case.asserted = False
    reports.append(generic)
    for sites in options.site_range((2, 3)):
        for basis, variant, table in (
            (Basis.FERMIONIC, HopfVariant.CLASSICAL_PRIMITIVE, "classical"),
            (Basis.FERMIONIC, HopfVariant.FERMIONIC_STANDARD, "quantum"),
            (Basis.DISTINGUISHED, HopfVariant.DISTINGUISHED_NATURAL, "quantum"),
        ):
            report = verify_presentation(
                table, basis, chain_representation(basis, variant, sites)
            )
            report.suite += f":{variant.value}:L{sites}"
            reports.append(report)
    return reports


def _hopf(options: SuiteOptions) -> List[Report]:
    reports = [
        hopf_axiom_check(token, variant)
        for variant in (HopfVariant.CLASSICAL_PRIMITIVE, HopfVariant.FERMIONIC_STANDARD)
        for token in FERMIONIC_TOKENS
    ]
    coassoc = Report("coassociativity")
    for variant in HopfVariant:
        tokens = (
            FERMIONIC_TOKENS
            if NATIVE_BASIS[variant] is Basis.FERMIONIC
            else DISTINGUISHED_TOKENS
        )
        for token in tokens:
            coassoc.add(f"{variant.value}:{token}", coassociativity_check(token, variant))
    reports.append(coassoc)
    e3 = Report("e3-products")
    for variant, sites in product(HopfVariant, options.site_range((2,))):
        plus, minus = e3_consistency(variant, sites)
        e3.add(f"{variant.value}:L{sites}:E3p", plus)
        e3.add(f"{variant.value}:L{sites}:E3m", minus)
    reports.append(e3)
    reports.append(deltafermtilde_check())
    return reports


def _specs(sites: int) -> List[Tuple[CasimirSpec, HopfVariant]]:
    pairs = [(CasimirSpec.classical(p), HopfVariant.CLASSICAL_PRIMITIVE) for p in CLASSICAL_P]
    for p in QUANTUM_P:
        pairs.append((CasimirSpec.quantum(p), HopfVariant.FERMIONIC_STANDARD))
        pairs.append((CasimirSpec.quantum(p), HopfVariant.DISTINGUISHED_NATURAL))
    if sites in FRT_SITES:
        pairs += [(CasimirSpec.frt(k), HopfVariant.FERMIONIC_STANDARD) for k in range(1, 7)]
    return pairs


def _centrality(options: SuiteOptions) -> List[Report]:
    reports = []
    for sites in options.site_range((1, 2, 3)):
        reports += [centrality_check(spec, sites, variant) for spec, variant in _specs(sites)]
    specs = [spec for spec, _ in _specs(1)]
    reports.append(fundamental_scalar_check(dict.fromkeys(specs)))
    return reports


def equal_sum_quadruples(indices: Sequence[int]) -> List[Tuple[int, int, int, int]]:
    """Unordered pairs {p1, p2} != {p3, p4} with p1 + p2 = p3 + p4."""
    pairs = [(a, b) for a in indices for b in indices if a <= b]
    return [
        (a, b, c, d)
        for (a, b), (c, d) in product(pairs, repeat=2)
        if (a, b) < (c, d) and a + b == c + d
    ]


def _quadratic(options: SuiteOptions) -> List[Report]:
    reports = []
    for family, indices in (
        (CasimirFamily.QUANTUM, QUANTUM_QUADRATIC_P),
        (CasimirFamily.CLASSICAL, CLASSICAL_P),
    ):
        merged = Report(f"quadratic:{family.value}:L2")
        for quadruple in equal_sum_quadruples(list(indices)):
            merged.extend(quadratic_relation_check(quadruple, family).cases)
        logger.info("%s", merged.summary())
        reports.append(merged)
    return reports


def _limits(options: SuiteOptions) -> List[Report]:
    reports = [classical_limit_check(p) for p in LIMIT_P]
    reports += [quantum_limit_check(p) for p in QUANTUM_QUADRATIC_P]
    reports += [weyl_witness(p) for p in QUANTUM_QUADRATIC_P]
    return reports


def _frt_casimir(options: SuiteOptions) -> List[Report]:
    return [ck23_check(max(K_RANGE))]


def _normalization(options: SuiteOptions) -> List[Report]:
    return [normalization_check()]


def _invariance(options: SuiteOptions) -> List[Report]:
    return [
        invariance_check(kind, sites)
        for kind in options.kinds(MATCHED_VARIANT)
        for sites in options.site_range((2, 3, 4))
    ]


def _hecke(options: SuiteOptions) -> List[Report]:
    kinds = options.kinds(
        (HamiltonianKind.FERMIONIC, HamiltonianKind.DISTINGUISHED, HamiltonianKind.CLASSICAL)
    )
    return [
        hecke_check(kind, shift, sites)
        for kind in kinds
        for shift in SHIFTS
        for sites in options.site_range((3,))
    ]


def _reflection(options: SuiteOptions) -> List[Report]:
    report = Report("reflection")
    h = closed_form(HamiltonianKind.FERMIONIC)
    diff = reflect_hamiltonian(h) - h
    report.add("fermionic", diff.is_zero(), residual_nonzero_entries=diff.nnz)
    return [report]


def _fermionic(options: SuiteOptions) -> List[Report]:
    return [fermionic_check(kind) for kind in options.kinds(HamiltonianKind)]


def _similarity(options: SuiteOptions) -> List[Report]:
    reports = []
    for kind in options.kinds(
        (HamiltonianKind.FOUR_PARAM, HamiltonianKind.FERMIONIC, HamiltonianKind.DISTINGUISHED)
    ):
        default = (2, 3, 4) if kind is HamiltonianKind.FOUR_PARAM else (2, 3)
        reports += [similarity_reduce(kind, sites) for sites in options.site_range(default)]
    return reports


def _commutant(options: SuiteOptions) -> List[Report]:
    return [
        invariant_commutant_with_retry(variant, options.seed).report
        for variant in (
            HopfVariant.FERMIONIC_STANDARD,
            HopfVariant.DISTINGUISHED_NATURAL,
            HopfVariant.CLASSICAL_PRIMITIVE,
        )
    ]


Suite = Callable[[SuiteOptions], List[Report]]

SUITES: Dict[str, Suite] = {
    "qybe": _qybe,
    "chareq": _chareq,
    "eigen": _eigen,
    "eta": lambda options: [eta_check()],
    "dident": lambda options: [d_identities_check()],
    "twist": _twist,
    "rll+": lambda options: _rll_appendix(1),
    "rll-": lambda options: _rll_appendix(-1),
    "rll-matrix": _rll_matrix,
    "sdet": lambda options: [superdet_check()],
    "boson": lambda options: [bosonization_check(), block_degree_check()],
    "dual": lambda options: [duality_check(family) for family in _families()],
    "presentation": _presentation,
    "hopf": _hopf,
    "centrality": _centrality,
    "quadratic": _quadratic,
    "limits": _limits,
    "frt-casimir": _frt_casimir,
    "normalization": _normalization,
    "invariance": _invariance,
    "hecke": _hecke,
    "reflection": _reflection,
    "fermionic": _fermionic,
    "similarity": _similarity,
    "commutant": _commutant,
}


def verify_run(names: Sequence[str], options: SuiteOptions = SuiteOptions()) -> List[Report]:
    """
    Run the named suites and return their reports in the order requested.

    Raises:
        ValueError: A name is not a registered suite.
    """
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"Unknown suites {unknown}; expected some of {sorted(SUITES)}")
    jobs = options.jobs or default_jobs()
    logger.info("Running %d suites with %d workers", len(names), jobs)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        batches = list(pool.map(lambda name: SUITES[name](options), names))
    reports = [report for batch in batches for report in batch]
    for report in reports:
        report.params.setdefault("seed", options.seed)
    failed = [report.suite for report in reports if not report.passed]
    if failed:
        logger.warning("Failing reports: %s", failed)
    return reports


__all__ = ["SUITES", "SuiteOptions", "equal_sum_quadruples", "verify_run"]
