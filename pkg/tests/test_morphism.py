"""Morphism search checked against exhaustive enumeration and frozen cases."""

import itertools

import pytest

from foundry.foundation import computeFoundation
from foundry.matroid import namedMatroid
from foundry.morphism import (
    NotGeneratedByFundamentalElements,
    PastureMorphism,
    SearchStats,
    fullRankSublattice,
    isIsomorphism,
    isMorphism,
    searchMorphisms,
    sublatticeOf,
)
from foundry.pasture import Pasture, builtinPasture, gfPasture
from foundry.zlattice import GroupHom, GroupPresentation, IntMatrix


def bruteMorphisms(p1, p2):
    """Every unit-group hom into a finite target, filtered by the morphism
    criterion.  Column j of the matrix is the image of the j-th generator;
    torsion generators may only go to elements their order annihilates."""
    g1, g2 = p1.group, p2.group
    assert g2.freeRank == 0
    elements = g2.allElements()
    slots = []
    for j in range(g1.dim):
        if j < len(g1.invariants):
            a = g1.invariants[j]
            slots.append([e for e in elements if g2.isZero(g2.scale(a, e))])
        else:
            slots.append(elements)
    out = set()
    for choice in itertools.product(*slots):
        mat = IntMatrix.fromColumns(list(choice), dim=g2.dim)
        f = PastureMorphism(p1, p2, GroupHom(g1, g2, mat))
        if isMorphism(f):
            out.add(f.sortKey())
    return out


def sourceFixtures():
    out = {name: builtinPasture(name)
           for name in ["f1pm", "krasner", "sign", "F3", "H", "D", "U"]}
    for q in [4, 5, 7, 9]:
        out["gf%d" % q] = gfPasture(q)
    return out


def targetFixtures():
    out = {name: builtinPasture(name)
           for name in ["f1pm", "krasner", "sign", "F3", "H"]}
    for q in [4, 5, 7, 9, 13, 17]:
        out["gf%d" % q] = gfPasture(q)
    return out


@pytest.mark.parametrize("sourceName", sorted(sourceFixtures()))
def test_search_matches_brute_force(sourceName):
    p1 = sourceFixtures()[sourceName]
    for targetName, p2 in sorted(targetFixtures().items()):
        got = {m.sortKey() for m in searchMorphisms(p1, p2)}
        want = bruteMorphisms(p1, p2)
        assert got == want, (sourceName, targetName)


def test_results_sorted_and_unique():
    fr = computeFoundation(namedMatroid("pappus"))
    ms = searchMorphisms(fr.foundation, gfPasture(8))
    keys = [m.sortKey() for m in ms]
    assert keys == sorted(keys)
    assert len(keys) == len(set(keys))


def test_find_one_is_prefix_of_full_search():
    fr = computeFoundation(namedMatroid("example52"))
    full = searchMorphisms(fr.foundation, gfPasture(5))
    one = searchMorphisms(fr.foundation, gfPasture(5), findOne=True)
    assert len(one) == 1
    assert one[0].sortKey() in {m.sortKey() for m in full}


def test_example_foundation_to_gf5():
    fr = computeFoundation(namedMatroid("example52"))
    stats = SearchStats()
    ms = searchMorphisms(fr.foundation, gfPasture(5), stats=stats)
    assert [m.matrix.toLists() for m in ms] == [[[2, 0, 3, 1]], [[2, 3, 1, 2]]]
    assert stats.valid == 2
    for m in ms:
        assert isMorphism(m)
        assert m.apply(fr.foundation.epsilon) == gfPasture(5).epsilon


SUBLATTICE_COUNTS = {
    "uniform:3,6": (6, 0, 4),
    "uniform:3,7": (16, 0, 6),
    "vamos": (20, 0, 0),
    "pappus": (1, 0, 3),
    "nonpappus": (8, 0, 0),
}


@pytest.mark.parametrize("name", sorted(SUBLATTICE_COUNTS))
def test_sublattice_counts(name):
    fr = computeFoundation(namedMatroid(name))
    sub = sublatticeOf(fr.foundation)
    c = sub.counts
    r = fr.foundation.group.freeRank
    assert c["p1"] + c["p2"] + 2 * c["p3"] == r
    assert (c["p1"], c["p2"], c["p3"]) == SUBLATTICE_COUNTS[name]
    assert len(sub.generators) == r
    assert len(sub.rules) == r
    assert len(sub.typeFourLists) == r


def test_sublattice_rules_are_consistent():
    """Each recorded rule must be an actual relation among the generators."""
    for name in ["pappus", "uniform:2,4", "example52"]:
        fr = computeFoundation(namedMatroid(name))
        p = fr.foundation
        g = p.group
        sub = sublatticeOf(p)
        pairSet = p.pairSet()
        for level, rule in enumerate(sub.rules, start=1):
            if rule[0] == "t1":
                tau, coeffs = rule[1], rule[2]
                assert not any(g.freePart(tau))
                assert len(coeffs) == level
            elif rule[0] == "t2":
                tau, coeffs = rule[1], rule[2]
                assert not any(g.freePart(tau))
                assert len(coeffs) == level + 1
        for level, bucket in enumerate(sub.typeFourLists, start=1):
            for c0u, cu, tauU, c0v, cv, tauV in bucket:
                assert c0u > 0 and c0v > 0
                assert len(cu) == level and len(cv) == level
                assert not any(g.freePart(tauU))
                assert not any(g.freePart(tauV))


def test_pappus_to_gf8_count_and_budget():
    fr = computeFoundation(namedMatroid("pappus"))
    stats = SearchStats()
    ms = searchMorphisms(fr.foundation, gfPasture(8), stats=stats)
    assert len(ms) == 18
    assert stats.leafCandidates <= 36


@pytest.mark.parametrize("name", ["vamos", "nonpappus"])
def test_one_fundamental_kills_field_morphisms(name):
    fr = computeFoundation(namedMatroid(name))
    one = (0,) * fr.foundation.group.dim
    assert one in set(fr.foundation.fundamentalElements())
    for q in [2, 3, 5, 8]:
        stats = SearchStats()
        assert searchMorphisms(fr.foundation, gfPasture(q), stats=stats) == []
        assert stats.leafCandidates == 0


def test_orientability_pins():
    sign = builtinPasture("sign")
    for name, expect in [("vamos", True), ("nonpappus", True), ("fano", False)]:
        fr = computeFoundation(namedMatroid(name))
        ms = searchMorphisms(fr.foundation, sign, findOne=True)
        assert bool(ms) == expect, name


@pytest.mark.parametrize("name,builtin", [
    ("uniform:2,4", "U"),
    ("nonfano", "D"),
    ("ag23", "H"),
    ("t8", "F3"),
])
def test_find_iso_positive(name, builtin):
    fr = computeFoundation(namedMatroid(name))
    ms = searchMorphisms(fr.foundation, builtinPasture(builtin),
                         findIso=True, findOne=True)
    assert len(ms) == 1
    assert isIsomorphism(ms[0])


def test_find_iso_negative():
    # same unit group and pair count, but epsilon pins the only candidate map
    assert searchMorphisms(builtinPasture("F3"), builtinPasture("sign"),
                           findIso=True) == []
    # different invariants
    assert searchMorphisms(builtinPasture("H"), builtinPasture("F3"),
                           findIso=True) == []


def test_embedding_is_morphism_but_not_isomorphism():
    ms = searchMorphisms(gfPasture(4), gfPasture(16))
    assert ms
    for m in ms:
        assert isMorphism(m)
        assert not isIsomorphism(m)


def test_composition_of_morphisms_is_morphism():
    fr = computeFoundation(namedMatroid("example52"))
    first = searchMorphisms(fr.foundation, gfPasture(5))
    second = searchMorphisms(gfPasture(5), gfPasture(25))
    assert first and second
    for f in first:
        for g in second:
            composite = PastureMorphism(fr.foundation, gfPasture(25),
                                        g.hom.compose(f.hom))
            assert isMorphism(composite)


def test_p0_facts():
    p0 = builtinPasture("P0")
    for q in [2, 3, 4, 5, 7, 8, 9]:
        assert searchMorphisms(p0, gfPasture(q), findOne=True) == []
    for name in ["vamos", "nonpappus"]:
        fr = computeFoundation(namedMatroid(name))
        ms = searchMorphisms(p0, fr.foundation, findOne=True)
        assert len(ms) == 1
        assert isMorphism(ms[0])


def test_not_generated_raises():
    # no hexagons at all: nothing can span the free direction
    lonely = Pasture(GroupPresentation([2], 1), (1, 0), [], name="lonely")
    with pytest.raises(NotGeneratedByFundamentalElements):
        fullRankSublattice(lonely)
    with pytest.raises(NotGeneratedByFundamentalElements):
        searchMorphisms(lonely, gfPasture(5))


def test_sublattice_is_cached():
    p = builtinPasture("U")
    assert sublatticeOf(p) is sublatticeOf(p)


def test_trivial_source_cases():
    # krasner needs (1, 1) to stay fundamental; no field satisfies that
    krasner = builtinPasture("krasner")
    assert searchMorphisms(krasner, gfPasture(2)) == []
    assert searchMorphisms(krasner, gfPasture(5)) == []
    assert len(searchMorphisms(krasner, krasner)) == 1
    # the regular partial field maps to every field: send the unit to 1
    f1pm = builtinPasture("f1pm")
    for q in [2, 3, 4, 5, 7]:
        assert len(searchMorphisms(f1pm, gfPasture(q))) >= 1
