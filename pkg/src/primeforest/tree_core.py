"""Canonical prime-labeled rooted trees.

A tree is a tuple of (Label, subtree) branches hanging from an implicit,
unlabeled root.  Construction canonicalizes branch order and rejects any
labeling a valid tree cannot carry, so structural equality is semantic
equality and no unchecked constructor exists.
"""

from typing import NamedTuple

from .errors import MisplacedInverse, ParseError, SiblingCollision
from .primes import prime_by_index, prime_index_of


class Label(NamedTuple):
    """Vertex decoration: the prime_index-th prime, possibly inverted.

    Inverted labels (p^-1) are only legal on children of the root.
    """

    prime_index: int
    inverted: bool = False

    @property
    def prime(self):
        return prime_by_index(self.prime_index)

    @property
    def text(self):
        p = prime_by_index(self.prime_index)
        return f"1/{p}" if self.inverted else str(p)

    @property
    def sort_rank(self):
        # plain branches before inverted ones, then by prime index
        return (self.inverted, self.prime_index)


class Tree:
    """Immutable rooted tree with canonically ordered, distinct-labeled branches."""

    __slots__ = ("branches", "height", "_hash", "_key")

    def __init__(self, branches=()):
        branches = tuple(sorted(branches, key=lambda b: b[0].sort_rank))
        seen_ranks = set()
        seen_indices = set()
        for label, sub in branches:
            if label.sort_rank in seen_ranks:
                raise SiblingCollision(
                    f"duplicate sibling label {label.text}")
            if label.prime_index in seen_indices:
                # same prime heading both a plain and an inverted branch
                # would evaluate to an unreduced rational
                raise SiblingCollision(
                    f"label {label.prime} appears both plain and inverted")
            seen_ranks.add(label.sort_rank)
            seen_indices.add(label.prime_index)
            if sub.has_inverted:
                raise MisplacedInverse(
                    f"inverted label below vertex {label.text}")
        object.__setattr__(self, "branches", branches)
        object.__setattr__(
            self, "height",
            1 + max(s.height for _, s in branches) if branches else 0)
        object.__setattr__(self, "_hash", hash(branches))
        object.__setattr__(self, "_key", None)

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    @property
    def has_inverted(self):
        return any(label.inverted for label, _ in self.branches)

    @property
    def is_singleton(self):
        return not self.branches

    def leaf_count(self):
        if not self.branches:
            return 1
        return sum(sub.leaf_count() for _, sub in self.branches)

    def depth1_labels(self):
        return frozenset(label for label, _ in self.branches)

    def max_prime_index(self):
        """Largest prime index used anywhere, or -1 for the singleton."""
        best = -1
        for label, sub in self.branches:
            best = max(best, label.prime_index, sub.max_prime_index())
        return best

    # total order: height, then branch count, then branch sequences
    def sort_key(self):
        if self._key is None:
            key = (self.height, len(self.branches),
                   tuple((label.sort_rank, sub.sort_key())
                         for label, sub in self.branches))
            object.__setattr__(self, "_key", key)
        return self._key

    def __eq__(self, other):
        return (self is other
                or (isinstance(other, Tree) and self.branches == other.branches))

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        return self.sort_key() >= other.sort_key()

    def __repr__(self):
        return f"Tree({to_sexpr(self)!r})"


SINGLETON = Tree()


def singleton():
    """The branchless tree; identity for grafting, evaluates to 1."""
    return SINGLETON


def label_tree(k, inverted=False):
    """Two-vertex tree: the root plus one vertex labeled with the k-th prime."""
    return Tree(((Label(k, inverted), SINGLETON),))


def graft(a, b):
    """Merge two trees at the root; their branch sets must be disjoint."""
    common = a.depth1_labels() & b.depth1_labels()
    if common:
        label = min(common)
        raise SiblingCollision(
            f"grafting would duplicate sibling label {label.text}")
    return Tree(a.branches + b.branches)


def height(t):
    return t.height


def leaf_count(t):
    return t.leaf_count()


def compare(a, b):
    """-1, 0 or 1; orders first by height, then arity, then lexicographically."""
    ka, kb = a.sort_key(), b.sort_key()
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def validate(raw):
    """Build a canonical Tree from nested raw data.

    Raw form: an iterable of branches, each branch a (label, sub_branches)
    pair where label is a prime value (int) or the string "1/<prime>".
    """
    return _build(raw)


def _build(raw_branches):
    branches = []
    for item in raw_branches:
        try:
            label_spec, sub = item
        except (TypeError, ValueError):
            raise ParseError(f"branch must be a (label, children) pair: {item!r}")
        branches.append((_parse_label(label_spec), _build(sub)))
    return Tree(branches)


def _parse_label(spec):
    inverted = False
    if isinstance(spec, str):
        text = spec.strip()
        if text.startswith("1/"):
            inverted = True
            text = text[2:]
        try:
            value = int(text)
        except ValueError:
            raise ParseError(f"bad label {spec!r}")
    else:
        value = spec
    try:
        k = prime_index_of(value)
    except ValueError:
        raise ParseError(f"label {spec!r} is not a prime")
    return Label(k, inverted)


# --- canonical S-expression text form ------------------------------------
# tree   := "(" "r" branch* ")"
# branch := "(" label branch* ")"
# label  := <prime decimal> | "1/" <prime decimal>
# Example: integer 12 <-> "(r (2 (2)) (3))"

def to_sexpr(t):
    return "(r" + "".join(" " + _branch_text(b) for b in t.branches) + ")"


def _branch_text(branch):
    label, sub = branch
    return ("(" + label.text
            + "".join(" " + _branch_text(b) for b in sub.branches) + ")")


def parse_sexpr(text):
    """Parse the canonical S-expression form back into a Tree."""
    tokens = _tokenize(text)
    pos = 0

    def expect(tok):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != tok:
            raise ParseError(f"expected {tok!r} at token {pos} in {text!r}")
        pos += 1

    def parse_branches():
        nonlocal pos
        branches = []
        while pos < len(tokens) and tokens[pos] == "(":
            pos += 1
            if pos >= len(tokens):
                raise ParseError("unterminated branch")
            label = _parse_label(tokens[pos])
            pos += 1
            sub = Tree(parse_branches())
            expect(")")
            branches.append((label, sub))
        return branches

    expect("(")
    expect("r")
    branches = parse_branches()
    expect(")")
    if pos != len(tokens):
        raise ParseError(f"trailing tokens in {text!r}")
    return Tree(branches)


def _tokenize(text):
    tokens = []
    atom = []
    for ch in text:
        if ch in "()":
            if atom:
                tokens.append("".join(atom))
                atom = []
            tokens.append(ch)
        elif ch.isspace():
            if atom:
                tokens.append("".join(atom))
                atom = []
        else:
            atom.append(ch)
    if atom:
        tokens.append("".join(atom))
    return tokens
