"""
Run-time defaults for verification suites and the CLI.

Tool configuration (formatters, pytest) lives in ``pyproject.toml``; this module
holds the numeric defaults and the helpers that turn CLI strings into parameter
points.
"""

import os
from fractions import Fraction
from typing import Dict

from src.ring.laurent import VARIABLES, ParamPoint

DEFAULT_PARAMS: Dict[str, Fraction] = {
    "q": Fraction(3, 2),
    "s": Fraction(5, 7),
    "q12": Fraction(4, 3),
    "q13": Fraction(6, 5),
    "q23": Fraction(8, 7),
}

DEFAULT_SEED = 20240917
P_RANGE = range(-3, 6)
K_RANGE = range(1, 9)
MAX_SITES = 7
LONG_SITES = 7
EXACT_NEWTON_SITES = 4
DEFAULT_PRIMES = 3
DEFAULT_POINTS = 2
NEWTON_KMAX_FLOAT = 40
NEWTON_KMAX_EXACT = 81

JOBS_ENV = "SL12_JOBS"


def default_jobs() -> int:
    """
    Worker count used when ``--jobs`` is not given.

    Returns:
        int: Value of ``SL12_JOBS`` when set to a positive integer, otherwise 1.
    """
    raw = os.environ.get(JOBS_ENV, "")
    try:
        jobs = int(raw)
    except ValueError:
        return 1
    return jobs if jobs > 0 else 1


def default_point() -> ParamPoint:
    """Exact point at the default (generic) parameter values."""
    return ParamPoint.exact(**DEFAULT_PARAMS)


def parse_params(text: str) -> ParamPoint:
    """
    Parse a ``name=value`` list such as ``"q=3/2,s=1"`` into a parameter point.

    Unlisted variables keep their defaults. A value written with a decimal point
    switches the whole point to Float mode.

    Args:
        text (str): Comma-separated assignments.

    Returns:
        ParamPoint: The parsed point.

    Raises:
        ValueError: On unknown variables or malformed assignments.
    """
    values: Dict[str, object] = dict(DEFAULT_PARAMS)
    use_float = False
    for chunk in filter(None, (part.strip() for part in text.split(","))):
        if "=" not in chunk:
            raise ValueError(f"Malformed parameter assignment: {chunk!r}")
        name, raw = (piece.strip() for piece in chunk.split("=", 1))
        if name not in VARIABLES:
            raise ValueError(f"Unknown parameter {name!r}; expected one of {VARIABLES}")
        if "." in raw or "e" in raw.lower():
            values[name] = float(raw)
            use_float = True
        else:
            values[name] = Fraction(raw)
    if use_float:
        return ParamPoint.floating(**{k: float(v) for k, v in values.items()})
    return ParamPoint.exact(**values)
