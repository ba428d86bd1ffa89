"""Statistics, bijections and q-Motzkin identities over exact integers."""

import json

from ._motzkin import (
    BFileParseError,
    PathError,
    SizeGuardError,
    distribution,
    enumerate_class,
    enumerate_paths,
    h_tableau,
    head_tail_pairs,
    in_class,
    involution_shape_path,
    motzkin_number,
    oeis_check,
    path_statistics,
    perm_statistics,
    phi1,
    phi2,
    phi3,
    phi3_inverse,
    q_motzkin,
    q_motzkin_tilde,
    series_presets,
    strip_decomposition,
    suite_names,
)
from . import _motzkin


def named_series(name, order):
    """{"order": N, "vars": [...], "coeffs": [canonical polynomial text, ...]}"""
    return json.loads(_motzkin.named_series_json(name, order))


def run_suite(suite, max_n):
    return json.loads(_motzkin.run_suite_json(suite, max_n))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
