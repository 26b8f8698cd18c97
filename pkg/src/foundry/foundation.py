"""The foundation of a matroid.

The foundation is presented as a quotient of the free abelian group on a
formal epsilon symbol and one symbol per basis.  Degenerate cross-ratio
relations plus a gauge (one exchange-forest symbol per edge and the base
basis itself) cut it down; hexagons are read off from quadruples of
hyperplanes over corank-2 flats.
"""

from __future__ import annotations

import itertools

from .matroid import InvalidMatroidError
from .pasture import Pasture, hexagonClosure
from .zlattice import GroupHom, GroupPresentation, IntMatrix, cokernelPresentation


class AmbientSymbolGroup:
    """Free abelian group on e_eps (coordinate 0) and e_B per basis (lex order)."""

    __slots__ = ("matroid", "pres", "index")

    def __init__(self, matroid):
        self.matroid = matroid
        self.pres = GroupPresentation([], 1 + len(matroid.bases))
        self.index = {b: i + 1 for i, b in enumerate(matroid.bases)}

    @property
    def dim(self):
        return self.pres.dim

    def zero(self):
        return [0] * self.dim

    def epsilonVector(self):
        v = self.zero()
        v[0] = 1
        return tuple(v)

    def basisVector(self, basis):
        v = self.zero()
        v[self.index[tuple(sorted(basis))]] = 1
        return tuple(v)


def inversionParity(seq):
    """Parity (0 or 1) of the permutation sorting seq."""
    count = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                count += 1
    return count & 1


def crossRatio(ambient, prefix, k1, k2, k3, k4):
    """The cross-ratio symbol vector for the pairs (k1 k3)(k2 k4) over prefix.

    Additively: X(prefix+k1k3) + X(prefix+k2k4) - X(prefix+k1k4)
    - X(prefix+k2k3), with e_eps added when the four sorting signs multiply
    to -1.  All four index sets must be bases.
    """
    prefix = tuple(prefix)
    m = ambient.matroid
    vec = list(ambient.zero())
    parity = 0
    for ki, kj, coeff in ((k1, k3, 1), (k2, k4, 1), (k1, k4, -1), (k2, k3, -1)):
        basis = tuple(sorted(prefix + (ki, kj)))
        if basis not in ambient.index:
            raise InvalidMatroidError("cross-ratio subscript %r is not a basis" % (basis,))
        vec[ambient.index[basis]] += coeff
    for ki, kj in ((k1, k3), (k2, k4), (k1, k4), (k2, k3)):
        parity ^= inversionParity(prefix + (ki, kj))
    vec[0] += parity
    return tuple(vec)


def degreeMap(ambient):
    """Total degree in the basis symbols; epsilon has degree zero."""
    row = [0] + [1] * len(ambient.matroid.bases)
    return GroupHom(ambient.pres, GroupPresentation([], 1), IntMatrix([row]))


def _nearBases(m):
    return [nb for nb in m.nonbases() if m.rankOf(nb) == m.rank - 1]


def tutteRelations(ambient, basis):
    """Gauge columns (2 e_eps, e_B0) plus the degenerate cross-ratio per
    near-basis exchange, as the columns of an integer matrix."""
    m = ambient.matroid
    cols = []
    two = list(ambient.zero())
    two[0] = 2
    cols.append(tuple(two))
    cols.append(ambient.basisVector(basis))
    for nb in _nearBases(m):
        circuit = m.uniqueCircuitIn(nb)
        cocircuit = m.uniqueCocircuitAvoiding(nb)
        i, j = circuit[0], cocircuit[0]
        for a in circuit[1:]:
            prefix = tuple(e for e in nb if e not in (i, a))
            for b in cocircuit[1:]:
                cols.append(crossRatio(ambient, prefix, i, a, j, b))
    return IntMatrix.fromColumns(cols, dim=ambient.dim)


def innerTutteRelations(ambient, graph):
    """One gauge column e_(B0 - a + b) per exchange-forest edge."""
    b0 = set(graph.basis)
    cols = []
    for a, b in graph.forestEdges:
        cols.append(ambient.basisVector(sorted(b0 - {a} | {b})))
    return IntMatrix.fromColumns(cols, dim=ambient.dim) if cols else IntMatrix(
        [[] for _ in range(ambient.dim)], cols=0)


def _greedyIndependent(m, flat, size):
    out = []
    for e in flat:
        if len(out) == size:
            break
        if m.rankOf(out + [e]) == len(out) + 1:
            out.append(e)
    if len(out) != size:
        raise InvalidMatroidError("flat %r has no independent %d-subset" % (flat, size))
    return tuple(out)


class FoundationResult:
    """The foundation pasture, the quotient map from symbols, and the gauge basis."""

    __slots__ = ("matroid", "foundation", "rhoZero", "basis", "ambient", "graph")

    def __init__(self, matroid, foundation, rhoZero, basis, ambient, graph):
        self.matroid = matroid
        self.foundation = foundation
        self.rhoZero = rhoZero
        self.basis = basis
        self.ambient = ambient
        self.graph = graph


def computeFoundation(m, basis=None):
    """Foundation of a matroid, with hexagons, relative to a gauge basis B0."""
    if basis is None:
        basis = m.bases[0]
    basis = tuple(sorted(basis))
    if basis not in m.basesSet:
        raise InvalidMatroidError("%r is not a basis" % (basis,))
    ambient = AmbientSymbolGroup(m)
    graph = m.exchangeGraphAndForest(basis)
    relations = tutteRelations(ambient, basis).hstack(innerTutteRelations(ambient, graph))
    pres, proj = cokernelPresentation(relations)
    rhoZero = GroupHom(ambient.pres, pres, proj.matrix)
    epsilon = rhoZero.apply(ambient.epsilonVector())
    heads = []
    if m.rank >= 2:
        hyperplanes = m.flatsOfCorank(1)
        for flat in m.flatsOfCorank(2):
            over = [h for h in hyperplanes if set(flat) <= set(h)]
            if len(over) < 4:
                continue
            prefix = _greedyIndependent(m, flat, m.rank - 2)
            for quad in itertools.combinations(over, 4):
                a1, a2, a3, a4 = (min(set(h) - set(flat)) for h in quad)
                first = rhoZero.apply(crossRatio(ambient, prefix, a1, a2, a3, a4))
                second = rhoZero.apply(crossRatio(ambient, prefix, a1, a3, a2, a4))
                heads.append((first, second))
    name = "foundation(%s)" % (m.name or "matroid")
    foundation = Pasture(pres, epsilon, heads, name=name)
    return FoundationResult(m, foundation, rhoZero, basis, ambient, graph)


def foundationResultToJson(fr):
    from .pasture import pastureToJson

    doc = pastureToJson(fr.foundation)
    doc["rhoZero"] = fr.rhoZero.matrix.toLists()
    doc["B0"] = list(fr.basis)
    return doc
