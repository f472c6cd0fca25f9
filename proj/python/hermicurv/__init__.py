"""Curvature of Hermitian metrics given in local holomorphic coordinates.

Points are sequences of complex numbers, real tangent vectors are length-2n
real sequences (x-components first, then y-components), holomorphic tangent
vectors are length-n complex sequences.
"""

import json as _json

from ._core import (
    ExtremalMode,
    HermicurvError,
    MetricDefinition,
    catalog_metric,
    catalog_names,
    chern_curvature,
    chern_sectional,
    classify,
    corollary12_probe,
    extremal_bisectional,
    extremal_sectional,
    holomorphic_bisectional,
    holomorphic_sectional,
    lu_check,
    metric_at,
    parse_metric,
    riemann_sectional,
    to_holomorphic,
    to_real,
)
from ._core import _run_cli

__version__ = "0.1.0"


def run_cli(*args):
    """Runs a command line in-process; returns (exit_code, report dict)."""
    code, text = _run_cli([str(a) for a in args])
    return code, _json.loads(text)


__all__ = [
    "ExtremalMode",
    "HermicurvError",
    "MetricDefinition",
    "catalog_metric",
    "catalog_names",
    "chern_curvature",
    "chern_sectional",
    "classify",
    "corollary12_probe",
    "extremal_bisectional",
    "extremal_sectional",
    "holomorphic_bisectional",
    "holomorphic_sectional",
    "lu_check",
    "metric_at",
    "parse_metric",
    "riemann_sectional",
    "run_cli",
    "to_holomorphic",
    "to_real",
]
