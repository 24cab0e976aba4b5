"""Orlik-Solomon and local-system cohomology of discriminantal arrangements A(n, ell).

Weights and torus points are sequences of rationals (int, Fraction or "p/q"
strings) indexed by the pairs (i, j), 1 <= i <= ell < j <= n, ordered by j then i.
"""

import json
from fractions import Fraction

from . import _discoh
from ._discoh import DomainError, InvariantError, degree_dims, generic_betti, hyperplane_count

__all__ = [
    "DomainError",
    "InvariantError",
    "basis",
    "boundary",
    "boundary_derivative",
    "degree_dims",
    "generic_betti",
    "hyperplane_count",
    "local_betti",
    "local_betti_cyclotomic",
    "mu",
    "os_betti",
    "resonance_membership",
    "sandwich",
    "verify_linearization",
]


def _strs(values):
    return [str(Fraction(v)) for v in values]


def _matrix(text):
    record = json.loads(text)
    rows = [[Fraction(0)] * record["cols"] for _ in range(record["rows"])]
    for r, c, v in record["entries"]:
        rows[r][c] = Fraction(v)
    return rows


def basis(n, ell, q):
    """nbc basis of A^q as a list of (I, J) pairs."""
    return [(tuple(b["I"]), tuple(b["J"])) for b in json.loads(_discoh.basis_json(n, ell, q))]


def mu(n, ell, q, weights, closed_form=True):
    """Dense matrix of mu^q(lambda): rows index A^{q+1}, columns A^q."""
    return _matrix(_discoh.mu_json(n, ell, q, _strs(weights), closed_form))


def boundary(n, ell, q, t):
    return _matrix(_discoh.boundary_json(n, ell, q, _strs(t)))


def boundary_derivative(n, ell, q, weights):
    return _matrix(_discoh.boundary_derivative_json(n, ell, q, _strs(weights)))


def os_betti(n, ell, weights):
    return json.loads(_discoh.os_betti_json(n, ell, _strs(weights)))


def local_betti(n, ell, t):
    return json.loads(_discoh.local_betti_json(n, ell, _strs(t)))


def local_betti_cyclotomic(n, ell, weights, primes=()):
    return json.loads(_discoh.local_betti_cyclotomic_json(n, ell, _strs(weights), list(primes)))


def verify_linearization(n, ell, weights=None):
    return json.loads(_discoh.verify_linearization_json(n, ell, None if weights is None else _strs(weights)))


def resonance_membership(n, ell, k, m, weights):
    return _discoh.resonance_membership(n, ell, k, m, _strs(weights))


def sandwich(n, ell, weights, primes=()):
    return json.loads(_discoh.sandwich_json(n, ell, _strs(weights), list(primes)))
