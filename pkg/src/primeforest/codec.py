"""Tree <-> number codecs.

Evaluation maps sibling branches to multiplication and a child subtree to
its parent prime's exponent, leaves first (exponentiation does not
associate).  Encoding inverts this by recursively factoring.
"""

from fractions import Fraction
from math import gcd

from .errors import InverseLabelPresent, MisplacedInverse, ZeroInput
from .primes import prime_index_of
from .tree_core import SINGLETON, Label, Tree


class OverBound:
    """Marker: a bounded evaluation exceeded its bound."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OverBound"


OVER_BOUND = OverBound()


def eval_integer_tree(t):
    """Exact integer value of a tree without inverted labels."""
    if t.has_inverted:
        raise InverseLabelPresent("tree carries inverted labels")
    value = 1
    for label, sub in t.branches:
        value *= label.prime ** eval_integer_tree(sub)
    return value


def encode_integer(m):
    """The unique valid tree evaluating to m >= 1."""
    if m == 0:
        raise ZeroInput("0 has no tree")
    if m < 0:
        raise ZeroInput("negative integers have no tree")
    if m == 1:
        return SINGLETON
    return Tree(tuple((Label(prime_index_of(p)), encode_integer(e))
                      for p, e in factor(m)))


def eval_rational_tree(t):
    """Reduced rational value; inverted root branches feed the denominator."""
    num = 1
    den = 1
    for label, sub in t.branches:
        if sub.has_inverted:
            raise MisplacedInverse("inverted label below depth 1")
        e = label.prime ** eval_integer_tree(sub)
        if label.inverted:
            den *= e
        else:
            num *= e
    # reduced by construction: a prime never heads both a plain and an
    # inverted root branch
    assert gcd(num, den) == 1
    return Fraction(num, den)


def encode_rational(num, den=1):
    """Tree for num/den (reduced internally); inverse of eval_rational_tree."""
    if num == 0 or den == 0:
        raise ZeroInput("only positive rationals have trees")
    g = gcd(num, den)
    num //= g
    den //= g
    branches = []
    if num > 1:
        branches += [(Label(prime_index_of(p)), encode_integer(e))
                     for p, e in factor(num)]
    if den > 1:
        branches += [(Label(prime_index_of(p), inverted=True), encode_integer(e))
                     for p, e in factor(den)]
    return Tree(tuple(branches))


def ilog(n, base):
    """Largest e >= 0 with base**e <= n (n >= 1, base >= 2)."""
    e = 0
    acc = base
    while acc <= n:
        e += 1
        acc *= base
    return e


def eval_bounded(t, bound):
    """Exact value if <= bound, else OVER_BOUND.

    Exponents are capped in logarithmic space before exponentiating, so
    this terminates quickly even on tall exponent towers.
    """
    if t.has_inverted:
        raise InverseLabelPresent("tree carries inverted labels")
    if bound < 1:
        return OVER_BOUND
    value = 1
    for label, sub in t.branches:
        p = label.prime
        if p > bound:
            return OVER_BOUND
        ecap = ilog(bound, p)
        e = eval_bounded(sub, ecap)
        if e is OVER_BOUND:
            return OVER_BOUND
        value *= p ** e
        if value > bound:
            return OVER_BOUND
    return value


def factor(m):
    """Prime factorization of m >= 2 by trial division, ascending primes."""
    if m < 2:
        raise ValueError("factor needs m >= 2")
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out
