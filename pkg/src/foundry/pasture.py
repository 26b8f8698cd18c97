"""Finitely presented pastures.

A pasture is described here by its unit group (a GroupPresentation, written
additively), the distinguished 2-torsion element epsilon (the class of -1),
and its hexagons: the equivalence classes of fundamental pairs (x, y) with
x + y = 1.  Elements are coordinate tuples; the pasture's multiplication is
the group addition.  The three-term nullset is determined by epsilon and the
fundamental pairs, so no separate nullset data is stored.
"""

from __future__ import annotations

from .zlattice import GroupPresentation
from ._gf import FieldError, FiniteField

# Pasture elements are canonical coordinate tuples in the unit group; the
# absorbing zero never appears as a tuple and is passed as None in nullset
# queries.
PastureElement = tuple


class InvalidPastureError(ValueError):
    """Raised for malformed pasture data."""


def closureTriple(group, epsilon, x, y):
    """The three fundamental pairs derived from x + y = 1.

    Multiplying the relation x + y - 1 by -1/x and -1/y gives the partners
    of 1/x and 1/y; additively: (-x, e + y - x) and (-y, e + x - y).
    """
    x = group.reduce(x)
    y = group.reduce(y)
    second = (group.neg(x), group.reduce(tuple(e + b - a for e, a, b in zip(epsilon, x, y))))
    third = (group.neg(y), group.reduce(tuple(e + a - b for e, a, b in zip(epsilon, x, y))))
    return (x, y), second, third


class Hexagon:
    """One equivalence class of fundamental pairs, stored canonically.

    pairs holds the closure triple generated from the lexicographically
    smallest of the six oriented pairs in the class.
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        self.pairs = pairs

    def orientedPairs(self):
        """All oriented pairs, pair before its swap, duplicates dropped."""
        seen = []
        for x, y in self.pairs:
            for p in ((x, y), (y, x)):
                if p not in seen:
                    seen.append(p)
        return tuple(seen)

    def elements(self):
        return tuple(sorted({c for p in self.pairs for c in p}))

    def __eq__(self, other):
        return isinstance(other, Hexagon) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return "Hexagon(%r)" % (self.pairs,)


def hexagonClosure(group, epsilon, x, y):
    """The hexagon through the fundamental pair (x, y), canonically oriented."""
    triple = closureTriple(group, epsilon, x, y)
    candidates = [p for pair in triple for p in (pair, (pair[1], pair[0]))]
    head = min(candidates)
    return Hexagon(closureTriple(group, epsilon, head[0], head[1]))


def hexagonType(hexagon):
    """Classify a hexagon as F3, D, H, or U by its coordinate pattern."""
    distinct = len(hexagon.elements())
    if distinct == 1:
        return "F3"
    if sum(1 for x, y in hexagon.pairs if x == y) == 1:
        return "D"
    if distinct == 2:
        return "H"
    return "U"


class Pasture:
    """A finitely presented pasture with canonicalized hexagons."""

    __slots__ = ("group", "epsilon", "hexagons", "name", "field", "_pairSet", "_sublattice")

    def __init__(self, group, epsilon, hexagonHeads, name=None, field=None):
        self.group = group
        self.epsilon = group.reduce(epsilon)
        if not group.isZero(group.scale(2, self.epsilon)):
            raise InvalidPastureError("epsilon must be 2-torsion")
        hexes = []
        for x, y in hexagonHeads:
            h = hexagonClosure(group, self.epsilon, x, y)
            if h not in hexes:
                hexes.append(h)
        self.hexagons = tuple(sorted(hexes, key=lambda h: h.pairs))
        self.name = name
        self.field = field
        self._pairSet = frozenset(p for h in self.hexagons for p in h.orientedPairs())
        self._sublattice = None  # write-once cache used by the morphism search

    def one(self):
        return self.group.zero()

    def fundamentalPairs(self):
        """All oriented fundamental pairs in deterministic scan order."""
        out = []
        for h in self.hexagons:
            for p in h.orientedPairs():
                if p not in out:
                    out.append(p)
        return tuple(out)

    def pairSet(self):
        return self._pairSet

    def fundamentalElements(self):
        return tuple(sorted({p[0] for p in self._pairSet}))

    def partnersOf(self, x):
        x = self.group.reduce(x)
        return tuple(sorted(y for (a, y) in self._pairSet if a == x))

    def isSlim(self):
        return all(len(self.partnersOf(x)) == 1 for x in self.fundamentalElements())

    def hexagonTypes(self):
        return tuple(hexagonType(h) for h in self.hexagons)

    def nullsetContains(self, a, b, c):
        """Whether a + b + c contains 0; arguments are tuples or None (zero)."""
        terms = [t if t is None else self.group.reduce(t) for t in (a, b, c)]
        zeros = sum(1 for t in terms if t is None)
        if zeros == 3:
            return True
        if zeros == 2:
            return False
        if zeros == 1:
            u, v = [t for t in terms if t is not None]
            return v == self.group.add(self.epsilon, u)
        a, b, c = terms
        shift = self.group.add(self.epsilon, self.group.neg(c))
        pair = (self.group.add(a, shift), self.group.add(b, shift))
        return pair in self._pairSet

    def summary(self):
        types = self.hexagonTypes()
        return {
            "invariants": list(self.group.invariants),
            "freeRank": self.group.freeRank,
            "epsilon": list(self.epsilon),
            "hexagonCount": len(self.hexagons),
            "hexagonTypes": list(types),
        }

    def __eq__(self, other):
        return (
            isinstance(other, Pasture)
            and self.group == other.group
            and self.epsilon == other.epsilon
            and self.hexagons == other.hexagons
        )

    def __hash__(self):
        return hash((self.group, self.epsilon, self.hexagons))

    def __repr__(self):
        label = self.name or "pasture"
        return "<%s: %r, %d hexagons>" % (label, self.group, len(self.hexagons))


def gfPasture(q):
    """The pasture of GF(q): units Z/(q-1), epsilon = log(-1), field hexagons."""
    try:
        field = FiniteField(q)
    except FieldError as exc:
        raise InvalidPastureError(str(exc)) from exc
    q = field.q
    group = GroupPresentation([q - 1] if q >= 3 else [], 0)
    if q == 2:
        epsilon = ()
    else:
        epsilon = (field.log(field.neg(1)),)
    heads = []
    for a in range(1, q):
        b = field.sub(1, a)
        if b:
            heads.append(((field.log(a),) if q >= 3 else (), (field.log(b),) if q >= 3 else ()))
    return Pasture(group, epsilon, heads, name="gf:%d" % q, field=field)


def builtinPasture(name):
    """The named pastures: f1pm, krasner, sign, U, D, H, F3, P0."""
    key = str(name).strip().lower()
    if key == "f1pm":
        return Pasture(GroupPresentation([2], 0), (1,), [], name="f1pm")
    if key == "krasner":
        return Pasture(GroupPresentation([], 0), (), [((), ())], name="krasner")
    if key == "sign":
        return Pasture(GroupPresentation([2], 0), (1,), [((0,), (0,))], name="sign")
    if key == "u":
        return Pasture(
            GroupPresentation([2], 2), (1, 0, 0),
            [((0, 1, 0), (0, 0, 1))], name="U",
        )
    if key == "d":
        return Pasture(GroupPresentation([2], 1), (1, 0), [((0, 1), (0, 1))], name="D")
    if key == "h":
        return Pasture(GroupPresentation([6], 0), (3,), [((1,), (5,))], name="H")
    if key == "f3":
        return Pasture(GroupPresentation([2], 0), (1,), [((1,), (1,))], name="F3")
    if key == "p0":
        x = (0, 1, 0, 0, 0)
        y = (0, 0, 1, 0, 0)
        z = (0, 0, 0, 1, 0)
        w = (0, 0, 0, 0, 1)
        yOverZ = (0, 0, 1, -1, 0)
        return Pasture(
            GroupPresentation([2], 4), (1, 0, 0, 0, 0),
            [(x, y), (x, z), (yOverZ, w)], name="P0",
        )
    raise InvalidPastureError("unknown pasture name %r" % (name,))


def pastureToJson(p):
    return {
        "invariants": list(p.group.invariants),
        "freeRank": p.group.freeRank,
        "epsilon": list(p.epsilon),
        "hexagons": [[list(h.pairs[0][0]), list(h.pairs[0][1])] for h in p.hexagons],
    }


def pastureFromJson(doc, name=None):
    if not isinstance(doc, dict):
        raise InvalidPastureError("pasture document must be an object")
    try:
        group = GroupPresentation(doc.get("invariants", []), doc.get("freeRank", 0))
        epsilon = tuple(doc["epsilon"])
        heads = [(tuple(x), tuple(y)) for x, y in doc.get("hexagons", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidPastureError("malformed pasture document: %s" % exc) from exc
    if len(epsilon) != group.dim:
        raise InvalidPastureError("epsilon has wrong length")
    for x, y in heads:
        if len(x) != group.dim or len(y) != group.dim:
            raise InvalidPastureError("hexagon head has wrong length")
    return Pasture(group, epsilon, heads, name=name)
