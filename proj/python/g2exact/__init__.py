"""Exact invariants of stable three-forms, spectral curves, and the cubic form.

The heavy lifting lives in the compiled extension ``g2exact._core``. Values
cross the boundary as JSON text in the same formats the ``g2x`` CLI uses;
the wrappers here turn them into plain dicts and lists.
"""

import json

from g2exact import _core
from g2exact._core import (
    AdmissibilityError,
    ParseError,
    UnsupportedOrbitError,
    numerology,
    run_suite,
)

__all__ = [
    "AdmissibilityError",
    "ParseError",
    "UnsupportedOrbitError",
    "rho0",
    "omega_norm1",
    "omega_norm2",
    "omega_symp",
    "kappa",
    "metric",
    "stabilizer_dim",
    "lambda_invariant",
    "char_poly",
    "g2_invariants",
    "dualize",
    "discriminant",
    "cubic_form",
    "numerology",
    "run_suite",
]


def rho0():
    """The reference stable three-form on a 7-space, as a form dict."""
    return json.loads(_core.rho0_json())


def omega_norm1():
    return json.loads(_core.omega_norm1_json())


def omega_norm2():
    return json.loads(_core.omega_norm2_json())


def omega_symp():
    return json.loads(_core.omega_symp_json())


def kappa(form):
    """kappa invariant of a 3-form dict; returns the four-string scalar."""
    return json.loads(_core.kappa(json.dumps(form)))


def metric(form):
    return json.loads(_core.metric(json.dumps(form)))


def stabilizer_dim(forms):
    """Dimension of the common annihilator in gl(n) of a list of form dicts."""
    return _core.stabilizer_dim(json.dumps(list(forms)))


def lambda_invariant(form):
    return json.loads(_core.lambda_invariant(json.dumps(form)))


def char_poly(matrix):
    """Characteristic polynomial of a matrix (rows of four-string scalars)."""
    return json.loads(_core.char_poly(json.dumps(matrix)))


def g2_invariants(matrix):
    f, q = _core.g2_invariants(json.dumps(matrix))
    return json.loads(f), json.loads(q)


def dualize(curve):
    return json.loads(_core.dualize(json.dumps(curve)))


def discriminant(curve):
    return json.loads(_core.discriminant(json.dumps(curve)))


def cubic_form(curve, t1, t2, t3):
    return json.loads(
        _core.cubic_form(json.dumps(curve), json.dumps(t1), json.dumps(t2), json.dumps(t3))
    )
