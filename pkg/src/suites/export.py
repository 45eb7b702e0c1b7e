"""
Matrix export for the ``hamiltonian`` and ``casimir`` subcommands.

Symbolic matrices are written in the PolyMatrix JSON format; numeric exports are
Matrix Market text of the matrix specialized at a parameter point.
"""

from pathlib import Path
from typing import Any, Dict, Optional

from src.algebra.hopf import HopfVariant
from src.casimir.checks import centrality_check
from src.casimir.families import CasimirSpec, casimir_rep
from src.chain.hamiltonians import HamiltonianKind, chain_hamiltonian
from src.linalg.poly_matrix import PolyMatrix
from src.ring.laurent import VARIABLES, ParamPoint
from src.utils.config import MAX_SITES, default_point, parse_params
from src.utils.errors import ChainTooLong
from src.utils.logging import logger
from src.utils.reports import Report, dumps

FORMATS = ("json", "mtx")


def _point(params: Optional[str]) -> Optional[ParamPoint]:
    return parse_params(params) if params else None


def render_matrix(
    m: PolyMatrix, fmt: str, at: Optional[ParamPoint] = None, **meta: Any
) -> str:
    """
    Serialize ``m``.

    JSON keeps the Laurent entries, with the variables replaced by the values of
    ``at`` when given (exact points only). Matrix Market always needs numbers and
    falls back to the default point.
    """
    if fmt not in FORMATS:
        raise ValueError(f"Format must be one of {FORMATS}, got {fmt!r}")
    if fmt == "mtx":
        return m.to_matrix_market(at or default_point())
    if at is not None:
        if not at.is_exact:
            raise ValueError("JSON export needs exact parameter values")
        m = m.substitute({name: at[name] for name in VARIABLES})
        meta["params"] = at.as_dict()
    payload: Dict[str, Any] = {"matrix": m.to_json(), **meta}
    return dumps(payload)


def hamiltonian_run(
    kind: str, sites: int, params: Optional[str] = None, fmt: str = "json"
) -> str:
    """
    The L-site Hamiltonian of ``kind`` as JSON or Matrix Market text.

    Raises:
        ChainTooLong: ``sites`` exceeds the supported chain length.
    """
    if sites > MAX_SITES:
        raise ChainTooLong(f"At most {MAX_SITES} sites are supported, got {sites}")
    kind = HamiltonianKind(kind)
    logger.info("Building the %s Hamiltonian on %d sites", kind.value, sites)
    h = chain_hamiltonian(kind, sites)
    return render_matrix(h, fmt, _point(params), kind=kind.value, sites=sites)


def casimir_run(
    spec: CasimirSpec,
    sites: int,
    variant: HopfVariant = HopfVariant.FERMIONIC_STANDARD,
    out: Optional[str] = None,
    verify: bool = False,
) -> Optional[Report]:
    """
    Write the Casimir's image on ``sites`` sites and optionally test centrality.

    Args:
        spec (CasimirSpec): Family and index.
        sites (int): Number of sites.
        variant (HopfVariant): Coproduct used for the chain image.
        out (str): JSON destination; printed to stdout when omitted.
        verify (bool): Also commute the image with every generator.

    Returns:
        Optional[Report]: The centrality report when ``verify`` is set.
    """
    variant = HopfVariant(variant)
    m = casimir_rep(spec, sites, variant)
    text = render_matrix(m, "json", casimir=str(spec), sites=sites, hopf=variant.value)
    if out:
        target = Path(out)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
        logger.info("Casimir %s written to %s", spec, target)
    else:
        print(text, end="")
    if verify:
        return centrality_check(spec, sites, variant, matrix=m)
    return None


__all__ = ["FORMATS", "casimir_run", "hamiltonian_run", "render_matrix"]
