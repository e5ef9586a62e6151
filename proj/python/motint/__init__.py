"""Exact motivic integrals of products of linear forms."""

import json
from fractions import Fraction

from . import _core
from ._core import BudgetError, DomainError, ParseError

__all__ = [
    "BudgetError",
    "DomainError",
    "ParseError",
    "RationalFunction",
    "arrangement",
    "bracket",
    "count_points",
    "integrate",
    "onevar",
    "witt_dump",
]


class RationalFunction:
    """num(L)/den(L) with integer coefficients, ascending in L."""

    def __init__(self, num, den, text=""):
        self.num = [int(c) for c in num]
        self.den = [int(c) for c in den]
        self.text = text

    @classmethod
    def from_json(cls, d):
        return cls(d["num_coeffs"], d["den_coeffs"], d["text"])

    def __call__(self, q):
        q = Fraction(q)
        num = sum(c * q**i for i, c in enumerate(self.num))
        den = sum(c * q**i for i, c in enumerate(self.den))
        return num / den

    def __eq__(self, other):
        return isinstance(other, RationalFunction) and (self.num, self.den) == (other.num, other.den)

    def __repr__(self):
        return f"RationalFunction({self.text!r})"


def _fraction(text):
    return Fraction(text)


def integrate(n, forms, method="auto"):
    """Symbolic integral; returns a dict with 'value' (RationalFunction), 'method', 'validity'."""
    d = json.loads(_core.integrate(n, forms, method))
    d["value"] = RationalFunction.from_json(d["value"])
    return d


def bracket(n, forms, q, depth, setting="zp"):
    """(lower, upper) enclosing the integral, by enumeration modulo depth."""
    d = json.loads(_core.bracket(n, forms, q, depth, setting))
    return _fraction(d["lower"]), _fraction(d["upper"])


def arrangement(n, eq="", neq="", p=0):
    d = json.loads(_core.arrangement(n, eq, neq, p))
    d["coeffs"] = [int(c) for c in d["coeffs"]]
    d["bad_primes"] = [int(c) for c in d["bad_primes"]]
    return d


def count_points(n, eq, neq, q):
    return _core.count_points(n, eq, neq, q)


def onevar(poly, p, degrees=()):
    d = json.loads(_core.onevar(poly, p, list(degrees)))
    d["evaluations"] = [_fraction(x) for x in d["evaluations"]]
    return d


def witt_dump(p, k):
    return _core.witt_dump(p, k)
