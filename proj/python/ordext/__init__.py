"""Root data, Weyl groups, ordinary parts and Ext verdicts for split reductive groups."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    OrdextError,
    alpha_k_sequence,
    alpha_w,
    apply_weyl,
    bruhat_leq,
    ext1,
    filtration_sizes,
    hn_ord_census,
    is_center_connected,
    is_derived_simply_connected,
    preset_names,
    twisting_element,
    weyl_table,
)

__all__ = [
    "OrdextError",
    "alpha_k_sequence",
    "alpha_w",
    "apply_weyl",
    "bch",
    "bruhat_leq",
    "congruence_report",
    "ext1",
    "extn",
    "filtration_sizes",
    "hn_ord_census",
    "is_center_connected",
    "is_derived_simply_connected",
    "preset_names",
    "rho",
    "rootdata",
    "run_cli",
    "twisting_element",
    "weyl_table",
]


def rootdata(datum):
    return json.loads(_core.rootdata_json(datum))


def rho(datum):
    return [Fraction(x) for x in _core.rho(datum)]


def _strs(m):
    return [[str(Fraction(v)) for v in row] for row in m]


def bch(x, y, p):
    """log(exp x exp y) for strictly upper triangular x, y; entries as Fractions."""
    return [[Fraction(v) for v in row] for row in _core.bch(_strs(x), _strs(y), p)]


def extn(datum, field, coeff, chi_prime, chi, n):
    out = _core.extn(datum, field, coeff, chi_prime, chi, n)
    out["page"] = json.loads(out["page"])
    return out


def congruence_report(n, p, c, samples=1000, seed=1):
    return json.loads(_core.congruence_report(n, p, c, samples, seed))


def run_cli(*args):
    """Runs the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
