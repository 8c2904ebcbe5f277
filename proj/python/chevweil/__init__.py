"""Certified covers, bad primes, S-integral lifting, Fermat harness.

Thin wrapper over the compiled module: the heavy entry points return
JSON text, which is decoded here.
"""

import json

try:
    from . import _chevweil as _backend
except ImportError:  # running against a build tree
    import _chevweil as _backend

classify = _backend.classify
cusp_check = _backend.cusp_check
s_units = _backend.s_units


def certify(cover_text):
    """Certify a cover description; returns the report as a dict."""
    return json.loads(_backend.certify(cover_text))


def verify(cover_text, points, prime_budget=100, force_s=()):
    """Lift points and test ramification; returns the report as a dict.

    Points are sequences of rational strings, e.g. [["4", "1/4"]].
    """
    return json.loads(
        _backend.verify(cover_text, [list(p) for p in points], prime_budget, list(force_s))
    )


def lift(cover_text, point):
    """Lift one rational target point; returns a list of fiber orbits."""
    return json.loads(_backend.lift(cover_text, list(point)))


def fermat(a, b, c, p, q, r, bound=10):
    """Search coprime solutions of a x^p + b y^q = c z^r within the box."""
    return json.loads(_backend.fermat(str(a), str(b), str(c), p, q, r, bound))


__all__ = [
    "certify",
    "verify",
    "lift",
    "fermat",
    "classify",
    "cusp_check",
    "s_units",
]
