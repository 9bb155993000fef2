"""Bounded-height forest generation and its counting recurrence.

g_forest(n, h) builds, by grafting and raising, the forest of all validly
labeled trees over n labels with height at most h.  g_count predicts its
size exactly, all_valid_trees_bruteforce re-derives the same set from
subtrees of the complete n-ary tree, and g_stream_value_bounded prunes
generation by integer value instead of height.
"""

import itertools

from .errors import SizeOverBudget
from .forest_algebra import Forest, UNIT_FOREST, graft_forests, raise_forest
from .primes import prime_by_index
from .tree_core import SINGLETON, Label, Tree, label_tree

DEFAULT_CAP = 10 ** 7

_g_cache = {}


def g_count(n, h):
    """Number of validly labeled trees over n labels with height <= h.

    S_0 = 1, S_i = (1 + S_{i-1})^n; exact big-integer arithmetic.
    """
    s = 1
    for _ in range(h):
        s = (1 + s) ** n
    return s


def g_forest(n, h, cap=DEFAULT_CAP):
    """The forest of all validly labeled trees over n labels, height <= h."""
    expected = g_count(n, h)
    if expected > cap:
        raise SizeOverBudget(
            f"g_forest({n}, {h}) holds {_approx(expected)} trees, cap is {cap}")
    key = (n, h)
    if key in _g_cache:
        return _g_cache[key]
    forest = UNIT_FOREST
    for i in range(1, h + 1):
        nxt = UNIT_FOREST
        for k in range(n):
            factor = UNIT_FOREST.union(raise_forest(label_tree(k), forest))
            grown = graft_forests(nxt, factor)
            # every pairwise graft must be distinct here
            assert len(grown) == len(nxt) * len(factor)
            nxt = grown
        forest = nxt
        _g_cache[(n, i)] = forest
    _g_cache[key] = forest
    return forest


def all_valid_trees_bruteforce(n, h, cap=DEFAULT_CAP):
    """Independent enumeration via rooted subtrees of the complete n-ary tree.

    Each of the n child slots of a vertex is either absent or carries,
    recursively, any subtree of the next level down; slot k maps to
    label k.
    """
    if g_count(n, h) > cap:
        raise SizeOverBudget(f"brute-force space for ({n}, {h}) exceeds cap {cap}")
    return Forest(_subtrees(n, h))


def _subtrees(n, h):
    if h == 0:
        return [SINGLETON]
    below = _subtrees(n, h - 1)
    options = [None] + below
    out = []
    for combo in itertools.product(options, repeat=n):
        branches = tuple((Label(k), sub)
                         for k, sub in enumerate(combo) if sub is not None)
        out.append(Tree(branches))
    return out


def g_stream_value_bounded(prime_indices, bound):
    """Yield, in canonical order, every non-singleton tree over the given
    prime labels whose integer evaluation is <= bound.

    Sound pruning: attaching a branch or deepening an exponent multiplies
    the evaluation by at least 2, so search is cut at the bound.
    """
    if bound < 2:
        return
    pairs = bounded_value_trees(prime_indices, bound)
    for tree in sorted(t for _, t in pairs if not t.is_singleton):
        yield tree


def bounded_value_trees(prime_indices, bound):
    """All (value, tree) pairs with value <= bound over the given labels,
    singleton included.  Values are exactly the integers in [1, bound]
    whose factorization, recursively through exponents, stays inside the
    label set.
    """
    primes = sorted((prime_by_index(k), k) for k in set(prime_indices))
    trees_memo = {}
    combo_memo = {}

    def trees_upto(budget):
        # (value, tree) with value <= budget
        if budget < 1:
            return []
        if budget not in trees_memo:
            trees_memo[budget] = [
                (v, Tree(branches)) for v, branches in combos(0, budget)]
        return trees_memo[budget]

    def combos(i, budget):
        # (value, branches) built from primes[i:], value <= budget
        key = (i, budget)
        if key in combo_memo:
            return combo_memo[key]
        out = [(1, ())]
        for j in range(i, len(primes)):
            p, k = primes[j]
            if p > budget:
                break
            max_exp = _ilog(budget, p)
            for e, etree in trees_upto(max_exp):
                pe = p ** e
                for v, branches in combos(j + 1, budget // pe):
                    out.append((pe * v, ((Label(k), etree),) + branches))
        combo_memo[key] = out
        return out

    return trees_upto(bound)


def _approx(n):
    # huge counts overflow int-to-str conversion limits; show a magnitude
    digits = n.bit_length() * 30103 // 100000 + 1
    return str(n) if digits <= 30 else f"~10^{digits - 1}"


def _ilog(n, base):
    e = 0
    acc = base
    while acc <= n:
        e += 1
        acc *= base
    return e
