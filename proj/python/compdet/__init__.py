"""Exact determinants of composition-indexed matrices.

Rational results come back as ``fractions.Fraction`` and verification
reports as plain dicts with the same keys as the CLI's JSON output.
"""

import json
from fractions import Fraction

from ._compdet import (
    CompdetError,
    ContextError,
    DomainError,
    InternalError,
    LookupError,
    ParameterError,
    Polynomial,
    SizeError,
    compositions,
    count,
    factorial_product as _factorial_product,
    theorems,
)
from . import _compdet

__all__ = [
    "CompdetError",
    "ContextError",
    "DomainError",
    "InternalError",
    "LookupError",
    "ParameterError",
    "Polynomial",
    "SizeError",
    "compositions",
    "count",
    "determinant",
    "factorial_product",
    "matrix",
    "rhs",
    "rhs_expanded",
    "run_suite",
    "theorem_determinant",
    "theorems",
    "verify",
    "verify_kernel",
    "verify_lemmas",
    "verify_specializations",
]


def _values(values):
    return {name: str(Fraction(v)) for name, v in (values or {}).items()}


def matrix(family, n, k, domain="all"):
    return json.loads(_compdet.matrix_json(family, n, k, domain))


def determinant(family, n, k, domain="all", values=None, backend="bareiss"):
    """Fraction when every x_t and l_t is given, Polynomial otherwise."""
    text = _compdet.determinant(family, n, k, domain, _values(values), backend)
    values = values or {}
    if len(values) == 2 * k:
        return Fraction(text)
    return Polynomial(text, 2 * k)


def rhs(theorem, n, k):
    form = json.loads(_compdet.rhs_json(theorem, n, k))
    form["scalar"] = Fraction(form["scalar"])
    return form


def rhs_expanded(theorem, n, k):
    return _compdet.rhs_expanded(theorem, n, k)


def theorem_determinant(theorem, n, k):
    return _compdet.theorem_determinant(theorem, n, k)


def verify(theorem, n, k, mode="symbolic", trials=20, seed=0, cap=15):
    if mode == "symbolic":
        return json.loads(_compdet.verify_symbolic(theorem, n, k, cap))
    if mode == "numeric":
        return json.loads(_compdet.verify_numeric(theorem, n, k, trials, seed))
    raise ParameterError(f"unknown mode '{mode}'")


def verify_kernel(n, k, i, eps):
    return json.loads(_compdet.verify_kernel(n, k, i, list(eps)))


def verify_specializations(n, k):
    return [json.loads(r) for r in _compdet.verify_specializations(n, k)]


def verify_lemmas(n_max, k_max):
    return [json.loads(r) for r in _compdet.verify_lemmas(n_max, k_max)]


def run_suite(n_max=3, k_max=3, trials=20, seed=0, threads=0):
    return [json.loads(r) for r in _compdet.run_suite(n_max, k_max, trials, seed, threads)]


def factorial_product(n, k):
    return int(_factorial_product(n, k))
