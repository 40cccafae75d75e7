"""The shared world interface: equality verdicts, pushouts, derived pushouts."""

import pytest

from cocatlab.fincat import Functor, composable_pair, walking_arrow
from cocatlab.finset import FinSet, SetFn, all_fns
from cocatlab.graphs import Graph
from cocatlab.fincat import Presentation
from cocatlab.higher import (DISTINCT, EQUAL, SESQUI, DerivationScheme,
                             HigherPresentation, SesquiFunctor)
from cocatlab.worlds import CatWorld, HigherWorld, SetWorld


def test_set_world_equal_reports_a_pointwise_witness():
    w = SetWorld()
    s = FinSet(range(3))
    f = SetFn(s, s, {0: 0, 1: 1, 2: 2})
    g = SetFn(s, s, {0: 0, 1: 2, 2: 2})
    assert w.equal(f, f)["verdict"] == EQUAL
    res = w.equal(f, g)
    assert res["verdict"] == DISTINCT
    assert res["witness"] == {"at": 1, "lhs": 1, "rhs": 2}


def test_set_world_derived_pushout_mediates_like_the_pushout():
    w = SetWorld()
    pt, two = FinSet([0]), FinSet([0, 1])
    po = w.pushout(SetFn(pt, two, {0: 1}), SetFn(pt, two, {0: 0}))
    der = w.derive_pushout(po.left, po.right)
    assert der.apex == po.apex
    tgt = FinSet(range(3))
    for u in all_fns(two, tgt):
        for v in all_fns(two, tgt):
            if u(1) == v(0):
                assert der.mediate(u, v) == po.mediate(u, v)


def test_cat_world_equal_names_the_disagreeing_generator():
    w = CatWorld()
    two, three = walking_arrow(), composable_pair()
    f = Functor(two, three, {0: 0, 1: 1}, {"f": three.gen("g")})
    g = Functor(two, three, {0: 0, 1: 1},
                {"f": three.gen("g")})
    assert w.equal(f, g)["verdict"] == EQUAL
    h = Functor(two, three, {0: 0, 1: 2},
                {"f": three.gen("g").then(three.gen("h"))})
    res = w.equal(f, h)
    assert res["verdict"] == DISTINCT
    assert res["witness"]["at"] == "1"  # first disagreement is on objects


def test_cat_world_derive_pushout_requires_joint_coverage():
    w = CatWorld()
    two, three = walking_arrow(), composable_pair()
    emb = Functor(two, three, {0: 0, 1: 1}, {"f": three.gen("g")})
    with pytest.raises(AssertionError):
        w.derive_pushout(emb, emb)


def parallel_pair_presentation():
    base = Presentation(Graph([0, 1], [("a", 0, 1), ("b", 0, 1)]))
    scheme = DerivationScheme(base,
                              [("al", base.gen("a"), base.gen("b"), False),
                               ("al2", base.gen("a"), base.gen("b"), False)])
    return HigherPresentation(scheme, (), SESQUI)


def test_higher_world_equal_compares_2_cell_images():
    w = HigherWorld()
    hp = parallel_pair_presentation()
    ident = hp.id_sfunctor()
    assert w.equal(ident, ident)["verdict"] == EQUAL
    crossed = SesquiFunctor(hp, hp, hp.base.id_functor(),
                            {"al": hp.gen2("al2"), "al2": hp.gen2("al")})
    res = w.equal(ident, crossed)
    assert res["verdict"] == DISTINCT
    assert res["witness"]["at"] == "al"
    assert res["witness"]["by"] == "normal-form"
