"""Presented categories: hom sets, functors, pushouts, endofunctor monoids."""

import pytest

from cocatlab.errors import CycleWithoutBound, UnknownName
from cocatlab.fincat import (CATALOG, Functor, Graph, Path, Presentation,
                             all_functors, catalog_category, composable_pair,
                             derive_pushout, endofunctor_monoid,
                             free_category, hom_set, is_isomorphic,
                             pushout_cat, terminal_cat, try_functor,
                             walking_arrow, walking_iso, z2_loop)

# (objects, morphisms, endofunctors) for every catalog entry
CATALOG_SHAPE = {
    "zero": (0, 0, 1),
    "one": (1, 1, 1),
    "discrete2": (2, 2, 4),
    "two": (2, 3, 3),
    "three": (3, 6, 10),
    "walking_iso": (2, 4, 4),
    "z2_loop": (1, 2, 2),
}


def test_catalog_shapes():
    assert set(CATALOG) == set(CATALOG_SHAPE)
    for name, (nobj, nmor, nend) in CATALOG_SHAPE.items():
        c = catalog_category(name)
        assert len(c.objects) == nobj, name
        assert len(c.morphisms()) == nmor, name
        monoid, functors = endofunctor_monoid(c)
        assert len(monoid.elements) == nend, name
        assert functors["f0"] == c.id_functor()
    with pytest.raises(UnknownName):
        catalog_category("four")


def test_end_three_counts_composable_pairs():
    # a functor out of the free composable pair is a composable pair
    three = composable_pair()
    ms = three.morphisms()
    pairs = sum(1 for u in ms for v in ms if u.tgt == v.src)
    assert pairs == 10
    assert len(all_functors(three, three)) == pairs


def test_functors_out_of_the_walking_arrow_are_morphisms():
    two = walking_arrow()
    for c in (two, composable_pair(), walking_iso()):
        assert len(all_functors(two, c)) == len(c.morphisms())


def test_composition_is_associative_under_relations():
    for c in (walking_iso(), z2_loop(), composable_pair()):
        ms = c.morphisms()
        for u in ms:
            for v in ms:
                if u.tgt != v.src:
                    continue
                for w in ms:
                    if v.tgt != w.src:
                        continue
                    assert u.then(v).then(w) == u.then(v.then(w))


def test_relations_identify_paths():
    iso = walking_iso()
    u, v = iso.gen("u"), iso.gen("v")
    assert u.then(v) == iso.identity(0)
    assert v.then(u) == iso.identity(1)
    loop = z2_loop()
    s = loop.gen("s")
    assert s.then(s) == loop.identity(0)
    assert s != loop.identity(0)


def test_cyclic_presentation_needs_a_bound():
    g = Graph([0], [("l", 0, 0)])
    with pytest.raises(CycleWithoutBound):
        Presentation(g)
    free_loop = Presentation(g, (), bound=4)
    assert len(hom_set(free_loop, 0, 0)) == 5  # id, l, ll, lll, llll


def test_try_functor_rejects_relation_breakers():
    loop = z2_loop()
    free_loop = Presentation(Graph([0], [("l", 0, 0)]), (), bound=4)
    l = free_loop.gen("l")
    assert try_functor(loop, free_loop, {0: 0}, {"s": l}) is None
    ok = try_functor(loop, free_loop, {0: 0}, {"s": free_loop.identity(0)})
    assert ok is not None
    assert ok.apply(loop.gen("s")) == free_loop.identity(0)


def test_pushout_of_arrows_over_a_point_is_the_composable_pair():
    pt = terminal_cat()
    at_tgt = Functor(pt, walking_arrow(), {0: 1}, {})
    at_src = Functor(pt, walking_arrow(), {0: 0}, {})
    po = pushout_cat(at_tgt, at_src)
    assert is_isomorphic(po.apex, composable_pair())
    # universal property against the composable pair itself
    three = composable_pair()
    u = Functor(walking_arrow(), three, {0: 0, 1: 1}, {"f": three.gen("g")})
    v = Functor(walking_arrow(), three, {0: 1, 1: 2}, {"f": three.gen("h")})
    h = po.mediate(u, v)
    assert po.left.then(h) == u and po.right.then(h) == v
    # the derived pushout mediates the same way
    der = derive_pushout(po.left, po.right)
    assert der.mediate(u, v) == h


def test_derive_pushout_requires_joint_coverage():
    two, three = walking_arrow(), composable_pair()
    emb = Functor(two, three, {0: 0, 1: 1}, {"f": three.gen("g")})
    with pytest.raises(AssertionError):
        derive_pushout(emb, emb)  # h is hit by neither leg


def test_is_isomorphic_separates_the_catalog():
    names = sorted(CATALOG)
    cats = {n: catalog_category(n) for n in names}
    for a in names:
        assert is_isomorphic(cats[a], catalog_category(a))
        for b in names:
            if a < b:
                assert not is_isomorphic(cats[a], cats[b]), (a, b)
