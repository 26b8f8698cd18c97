"""Matroids on ground sets [0, n) with explicit basis lists.

Desk scale by design: bases are stored outright, rank queries scan them, and
validation brute-forces the exchange axiom.  That keeps every downstream
computation exact and easy to audit for the n <= 12 ground sets this package
targets.
"""

from __future__ import annotations

import itertools


class InvalidMatroidError(ValueError):
    """Raised when input data fails the matroid axioms or is malformed."""


class BasisExchangeGraph:
    """Bipartite exchange graph of a basis B0 together with a BFS forest.

    Left vertices are the elements of B0, right vertices the rest; (a, b) is
    an edge when B0 - a + b is a basis.  The forest is discovered by BFS from
    the smallest unvisited left vertex, scanning neighbors in increasing
    label order; edges are recorded (a, b) with the B0 element first.
    """

    __slots__ = ("basis", "edges", "forestEdges")

    def __init__(self, basis, edges, forestEdges):
        self.basis = basis
        self.edges = edges
        self.forestEdges = forestEdges


class Matroid:
    """A matroid given by its full list of bases, kept in lexicographic order."""

    __slots__ = ("n", "rank", "bases", "basesSet", "name")

    def __init__(self, n, rank, bases, name=None):
        self.n = n
        self.rank = rank
        self.bases = bases
        self.basesSet = frozenset(bases)
        self.name = name

    @classmethod
    def fromBases(cls, n, bases, name=None, validate=True):
        n = int(n)
        cleaned = sorted({tuple(sorted(int(e) for e in b)) for b in bases})
        if not cleaned:
            raise InvalidMatroidError("a matroid needs at least one basis")
        rank = len(cleaned[0])
        for b in cleaned:
            if len(b) != rank or len(set(b)) != rank:
                raise InvalidMatroidError("bases must all be r-subsets")
            if b and (b[0] < 0 or b[-1] >= n):
                raise InvalidMatroidError("basis element out of range")
        m = cls(n, rank, tuple(cleaned), name=name)
        if validate:
            m._checkExchange()
        return m

    @classmethod
    def fromNonbases(cls, n, rank, nonbases, name=None, validate=True):
        n, rank = int(n), int(rank)
        if not (0 <= rank <= n):
            raise InvalidMatroidError("rank out of range")
        bad = {tuple(sorted(int(e) for e in s)) for s in nonbases}
        for s in bad:
            if len(s) != rank or len(set(s)) != rank:
                raise InvalidMatroidError("nonbases must all be r-subsets")
            if s and (s[0] < 0 or s[-1] >= n):
                raise InvalidMatroidError("nonbasis element out of range")
        bases = [b for b in itertools.combinations(range(n), rank) if b not in bad]
        if not bases:
            raise InvalidMatroidError("every r-subset was excluded")
        m = cls(n, rank, tuple(bases), name=name)
        if validate:
            m._checkExchange()
        return m

    def _checkExchange(self):
        for b1 in self.bases:
            s1 = set(b1)
            for b2 in self.bases:
                s2 = set(b2)
                for a in s1 - s2:
                    if not any(
                        tuple(sorted(s1 - {a} | {b})) in self.basesSet for b in s2 - s1
                    ):
                        raise InvalidMatroidError(
                            "exchange axiom fails for %r, %r at %r" % (b1, b2, a)
                        )

    def isBasis(self, subset):
        return tuple(sorted(subset)) in self.basesSet

    def nonbases(self):
        return tuple(
            s for s in itertools.combinations(range(self.n), self.rank)
            if s not in self.basesSet
        )

    def rankOf(self, subset):
        s = set(subset)
        return max(len(s & set(b)) for b in self.bases)

    def closure(self, subset):
        s = set(subset)
        r = self.rankOf(s)
        return tuple(
            e for e in range(self.n) if e in s or self.rankOf(s | {e}) == r
        )

    def dual(self):
        full = set(range(self.n))
        cobases = [tuple(sorted(full - set(b))) for b in self.bases]
        return Matroid.fromBases(self.n, cobases, validate=False)

    def uniqueCircuitIn(self, subset):
        """The circuit inside an r-subset of rank r - 1."""
        s = tuple(sorted(subset))
        if len(s) != self.rank or self.rankOf(s) != self.rank - 1:
            raise InvalidMatroidError("expected an r-subset of rank r - 1")
        rest = set(s)
        return tuple(e for e in s if self.rankOf(rest - {e}) == self.rank - 1)

    def uniqueCocircuitAvoiding(self, subset):
        """The cocircuit disjoint from an r-subset of rank r - 1.

        The closure of the subset is the unique hyperplane containing it; the
        cocircuit is that hyperplane's complement.
        """
        s = tuple(sorted(subset))
        if len(s) != self.rank or self.rankOf(s) != self.rank - 1:
            raise InvalidMatroidError("expected an r-subset of rank r - 1")
        hyperplane = set(self.closure(s))
        return tuple(e for e in range(self.n) if e not in hyperplane)

    def flatsOfCorank(self, k):
        """All flats of rank (rank - k), as sorted tuples in lex order."""
        t = self.rank - k
        if t < 0:
            raise InvalidMatroidError("corank exceeds the rank")
        flats = set()
        for s in itertools.combinations(range(self.n), t):
            if self.rankOf(s) == t:
                flats.add(self.closure(s))
        return tuple(sorted(flats))

    def exchangeGraphAndForest(self, basis):
        b0 = tuple(sorted(basis))
        if b0 not in self.basesSet:
            raise InvalidMatroidError("%r is not a basis" % (b0,))
        left = list(b0)
        right = [e for e in range(self.n) if e not in set(b0)]
        edges = set()
        for a in left:
            kept = set(b0) - {a}
            for b in right:
                if tuple(sorted(kept | {b})) in self.basesSet:
                    edges.add((a, b))
        neighbors = {v: [] for v in left + right}
        for a, b in sorted(edges):
            neighbors[a].append(b)
            neighbors[b].append(a)
        for v in neighbors:
            neighbors[v].sort()
        visited = set()
        forest = []
        for root in left:
            if root in visited:
                continue
            visited.add(root)
            queue = [root]
            while queue:
                v = queue.pop(0)
                onLeft = v in set(b0)
                for w in neighbors[v]:
                    if w in visited:
                        continue
                    visited.add(w)
                    forest.append((v, w) if onLeft else (w, v))
                    queue.append(w)
        return BasisExchangeGraph(b0, frozenset(edges), tuple(forest))

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.n == other.n
            and self.bases == other.bases
        )

    def __hash__(self):
        return hash((self.n, self.bases))

    def __repr__(self):
        label = self.name or "matroid"
        return "<%s: n=%d rank=%d bases=%d>" % (label, self.n, self.rank, len(self.bases))


# Nonbasis catalogs for the named matroids.  t8 is frozen from the dependent
# 4-subsets of [I4 | J-I] over GF(3), the standard defining representation.
_NAMED_NONBASES = {
    "fano": (7, 3, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]),
    "nonfano": (7, 3, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6)]),
    "pappus": (9, 3, [(0, 1, 2), (0, 4, 6), (0, 5, 7), (1, 3, 6), (1, 5, 8),
                      (2, 3, 7), (2, 4, 8), (3, 4, 5), (6, 7, 8)]),
    "nonpappus": (9, 3, [(0, 1, 2), (0, 4, 6), (0, 5, 7), (1, 3, 6), (1, 5, 8),
                         (2, 3, 7), (2, 4, 8), (3, 4, 5)]),
    "vamos": (8, 4, [(0, 1, 2, 3), (0, 1, 4, 5), (0, 1, 6, 7), (2, 3, 4, 5), (2, 3, 6, 7)]),
    "ag23": (9, 3, [(0, 1, 2), (3, 4, 5), (6, 7, 8), (0, 3, 6), (1, 4, 7), (2, 5, 8),
                    (0, 4, 8), (1, 5, 6), (2, 3, 7), (0, 5, 7), (1, 3, 8), (2, 4, 6)]),
    "t8": (8, 4, [(0, 1, 2, 7), (0, 1, 3, 6), (0, 1, 4, 5), (0, 2, 3, 5), (0, 2, 4, 6),
                  (0, 3, 4, 7), (1, 2, 3, 4), (1, 2, 5, 6), (1, 3, 5, 7), (2, 3, 6, 7),
                  (4, 5, 6, 7)]),
    "example52": (7, 3, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 4, 5), (2, 3, 5)]),
}


def namedMatroid(name):
    """Look up a named matroid; uniform ones as uniform(r,n) or uniform:r,n."""
    key = str(name).strip().lower()
    if key.startswith("uniform"):
        spec = key[len("uniform"):].strip("():")
        parts = [p for p in spec.replace(",", " ").split() if p]
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise InvalidMatroidError("expected uniform(r,n), got %r" % (name,))
        r, n = int(parts[0]), int(parts[1])
        if not (0 <= r <= n):
            raise InvalidMatroidError("uniform(r,n) needs 0 <= r <= n")
        bases = tuple(itertools.combinations(range(n), r))
        return Matroid(n, r, bases, name="uniform(%d,%d)" % (r, n))
    if key in _NAMED_NONBASES:
        n, rank, nonbases = _NAMED_NONBASES[key]
        return Matroid.fromNonbases(n, rank, nonbases, name=key, validate=False)
    raise InvalidMatroidError("unknown matroid name %r" % (name,))


def matroidToJson(m):
    nonbases = m.nonbases()
    doc = {"n": m.n, "rank": m.rank}
    if len(nonbases) <= len(m.bases):
        doc["nonbases"] = [list(s) for s in nonbases]
    else:
        doc["bases"] = [list(b) for b in m.bases]
    return doc


def matroidFromJson(doc):
    if not isinstance(doc, dict) or "n" not in doc:
        raise InvalidMatroidError("matroid document needs an 'n' field")
    n = doc["n"]
    if "bases" in doc:
        m = Matroid.fromBases(n, doc["bases"])
        if "rank" in doc and int(doc["rank"]) != m.rank:
            raise InvalidMatroidError("stated rank disagrees with the bases")
        return m
    if "nonbases" in doc and "rank" in doc:
        return Matroid.fromNonbases(n, doc["rank"], doc["nonbases"])
    raise InvalidMatroidError("matroid document needs 'bases' or 'rank'+'nonbases'")
