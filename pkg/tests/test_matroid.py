import itertools
import random

import pytest

from foundry.matroid import (
    InvalidMatroidError,
    Matroid,
    matroidFromJson,
    matroidToJson,
    namedMatroid,
)

NAMED_BASIS_COUNTS = {
    "fano": 28,
    "nonfano": 29,
    "pappus": 75,
    "nonpappus": 76,
    "vamos": 65,
    "ag23": 72,
    "t8": 59,
    "example52": 30,
}

# GF(5) representation of example52 (columns = ground set) used as a linear
# rank oracle, independent of the basis-scan implementation.
EXAMPLE52_COLUMNS = [
    (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 0, 1), (1, 1, 1), (1, 4, 4),
]
FANO_COLUMNS = [
    (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1),
]


def linearRank(columns, subset, p):
    """Row-reduce the chosen columns over GF(p)."""
    rows = [list(columns[j]) for j in subset]
    rank = 0
    for col in range(len(rows[0]) if rows else 0):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@pytest.mark.parametrize("name,count", sorted(NAMED_BASIS_COUNTS.items()))
def test_named_matroids_are_valid(name, count):
    m = namedMatroid(name)
    assert len(m.bases) == count
    m._checkExchange()  # frozen catalogs skip validation on load
    assert list(m.bases) == sorted(m.bases)


def test_uniform_matroids():
    u = namedMatroid("uniform(3,6)")
    assert len(u.bases) == 20 and u.rank == 3 and u.n == 6
    assert namedMatroid("uniform:2,4").bases == u.__class__.fromBases(
        4, itertools.combinations(range(4), 2)).bases
    with pytest.raises(InvalidMatroidError):
        namedMatroid("uniform(4,2)")
    with pytest.raises(InvalidMatroidError):
        namedMatroid("gf:5")


def test_rank_against_linear_oracle():
    for name, cols, p in (("example52", EXAMPLE52_COLUMNS, 5), ("fano", FANO_COLUMNS, 2)):
        m = namedMatroid(name)
        for size in range(m.n + 1):
            for s in itertools.combinations(range(m.n), size):
                assert m.rankOf(s) == linearRank(cols, s, p), (name, s)


def test_rank_of_uniform():
    u = namedMatroid("uniform(3,7)")
    rng = random.Random(5)
    for _ in range(30):
        s = rng.sample(range(7), rng.randint(0, 7))
        assert u.rankOf(s) == min(len(s), 3)


def test_exchange_validation_rejects_bad_data():
    with pytest.raises(InvalidMatroidError):
        Matroid.fromBases(4, [(0, 1), (2, 3)])
    with pytest.raises(InvalidMatroidError):
        Matroid.fromBases(3, [(0, 1), (0, 1, 2)])
    with pytest.raises(InvalidMatroidError):
        Matroid.fromBases(2, [(0, 3)])
    with pytest.raises(InvalidMatroidError):
        Matroid.fromNonbases(4, 2, [(0, 1), (1, 2)])  # leaves a non-matroid family
    Matroid.fromNonbases(4, 2, [(0, 1)])  # parallel pair, fine
    Matroid.fromBases(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def test_closure_and_flats_against_brute_force():
    for name in ("example52", "fano", "pappus"):
        m = namedMatroid(name)
        allFlats = set()
        for size in range(m.n + 1):
            for s in itertools.combinations(range(m.n), size):
                if set(m.closure(s)) == set(s):
                    allFlats.add(tuple(sorted(s)))
        for k in range(m.rank + 1):
            expected = sorted(f for f in allFlats if m.rankOf(f) == m.rank - k)
            assert list(m.flatsOfCorank(k)) == expected, (name, k)


def test_unique_circuit_and_cocircuit():
    for name in ("example52", "fano", "vamos", "t8"):
        m = namedMatroid(name)
        for nb in m.nonbases():
            if m.rankOf(nb) != m.rank - 1:
                continue
            c = m.uniqueCircuitIn(nb)
            # oracle: the minimal dependent subsets of nb
            dependents = [
                s for size in range(1, len(nb) + 1)
                for s in itertools.combinations(nb, size)
                if m.rankOf(s) < len(s)
            ]
            minimal = [s for s in dependents
                       if not any(set(t) < set(s) for t in dependents)]
            assert len(minimal) == 1 and tuple(minimal[0]) == c
            d = m.uniqueCocircuitAvoiding(nb)
            assert not (set(d) & set(nb))
            complement = set(range(m.n)) - set(d)
            assert m.rankOf(complement) == m.rank - 1
            assert set(m.closure(complement)) == complement
            for e in d:
                smaller = set(range(m.n)) - set(d) | {e}
                assert m.rankOf(smaller) == m.rank


def test_circuit_preconditions():
    m = namedMatroid("example52")
    with pytest.raises(InvalidMatroidError):
        m.uniqueCircuitIn((0, 1, 3))  # a basis, not rank r - 1
    with pytest.raises(InvalidMatroidError):
        m.uniqueCocircuitAvoiding((0, 1))


def test_exchange_graph_forest_example52():
    m = namedMatroid("example52")
    g = m.exchangeGraphAndForest((0, 1, 3))
    assert g.basis == (0, 1, 3)
    assert (0, 2) in g.edges and (3, 2) not in g.edges
    assert g.forestEdges == ((0, 2), (0, 4), (0, 5), (0, 6), (1, 2), (3, 4))
    # spanning forest: touches every vertex in a basis-connected component
    touched = {v for e in g.forestEdges for v in e}
    assert touched == set(range(7))
    with pytest.raises(InvalidMatroidError):
        m.exchangeGraphAndForest((0, 1, 2))


def test_exchange_graph_forest_is_acyclic():
    for name in ("fano", "pappus", "vamos"):
        m = namedMatroid(name)
        b0 = m.bases[0]
        g = m.exchangeGraphAndForest(b0)
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        # left and right labels never collide: they partition the ground set
        for a, b in g.forestEdges:
            ra, rb = find(a), find(b)
            assert ra != rb
            parent[ra] = rb
        assert g.edges >= set(g.forestEdges)


def test_dual():
    m = namedMatroid("uniform(1,3)")
    assert m.dual().bases == namedMatroid("uniform(2,3)").bases
    v = namedMatroid("vamos")
    assert v.dual().dual() == v


def test_json_round_trip():
    for name in ("fano", "example52", "uniform(2,4)"):
        m = namedMatroid(name)
        doc = matroidToJson(m)
        back = matroidFromJson(doc)
        assert back.bases == m.bases and back.n == m.n
    with pytest.raises(InvalidMatroidError):
        matroidFromJson({"rank": 3, "nonbases": []})
    with pytest.raises(InvalidMatroidError):
        matroidFromJson({"n": 4, "rank": 2, "bases": [[0], [1]]})
