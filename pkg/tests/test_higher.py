"""2-cell words: whiskering, reduction, and the three-valued word problem."""

import pytest

from cocatlab.errors import BoundaryMismatch
from cocatlab.fincat import Graph, Presentation
from cocatlab.higher import (DISTINCT, EQUAL, SESQUI, TWOCAT,
                             DerivationScheme, HigherPresentation,
                             locally_indiscrete, reflavor, twocell_equal)


def two_stage():
    """f, f2: 0 -> 1 and g, g2: 1 -> 2 with al: f => f2 and be: g => g2."""
    base = Presentation(Graph([0, 1, 2], [("f", 0, 1), ("f2", 0, 1),
                                          ("g", 1, 2), ("g2", 1, 2)]))
    scheme = DerivationScheme(base, [("al", base.gen("f"), base.gen("f2"), False),
                                     ("be", base.gen("g"), base.gen("g2"), False)])
    return HigherPresentation(scheme, (), SESQUI)


def grid_words(hp):
    """The two orders of firing al across g and be under f: both f.g => f2.g2."""
    base = hp.base
    f, f2 = base.gen("f"), base.gen("f2")
    g, g2 = base.gen("g"), base.gen("g2")
    al, be = hp.gen2("al"), hp.gen2("be")
    left_first = hp.whisker(base.identity(0), al, g).then(
        hp.whisker(f2, be, base.identity(2)))
    right_first = hp.whisker(f, be, base.identity(2)).then(
        hp.whisker(base.identity(0), al, g2))
    return left_first, right_first


def test_grid_words_sesqui_distinct_but_twocat_equal():
    sq = two_stage()
    l, r = grid_words(sq)
    assert l.src == r.src and l.tgt == r.tgt
    res = twocell_equal(sq, l, r)
    assert res == {"verdict": DISTINCT, "by": "normal-form"}
    tc = reflavor(sq, TWOCAT)
    res2 = twocell_equal(tc, *grid_words(tc))
    assert res2["verdict"] == EQUAL and res2["by"] == "certificate"


def test_reduce_is_idempotent_and_cancels_inverses():
    base = Presentation(Graph([0, 1], [("a", 0, 1), ("b", 0, 1)]))
    scheme = DerivationScheme(base, [("al", base.gen("a"), base.gen("b"), True)])
    hp = HigherPresentation(scheme, (), SESQUI)
    al = hp.gen2("al")
    round_trip = al.then(al.inverse())
    red = hp.reduce(round_trip)
    assert red.key() == hp.identity2(base.gen("a")).key()
    assert hp.reduce(red).key() == red.key()
    back = al.inverse().then(al)
    assert hp.reduce(back).key() == hp.identity2(base.gen("b")).key()


def test_twocell_equal_rejects_non_parallel_cells():
    hp = two_stage()
    with pytest.raises(BoundaryMismatch):
        twocell_equal(hp, hp.gen2("al"), hp.gen2("be"))


def test_locally_indiscrete_collapses_parallel_words():
    base = Presentation(Graph([0, 1], [("a", 0, 1), ("b", 0, 1)]))
    hp = locally_indiscrete(base)
    assert len(hp.twocells) == 2  # one generator per ordered pair
    n1, n2 = sorted(hp.twocells)
    ab = hp.gen2(n1)
    ba = hp.gen2(n2)
    # the two generators are mutually inverse under the collapse relations
    assert twocell_equal(hp, ba, ab.inverse())["verdict"] == EQUAL
    assert twocell_equal(hp, ab.then(ba),
                         hp.identity2(ab.src))["verdict"] == EQUAL
    assert twocell_equal(hp, ba.then(ab),
                         hp.identity2(ba.src))["verdict"] == EQUAL


def test_flavor_survives_reflavor_and_keys_differ():
    sq = two_stage()
    tc = reflavor(sq, TWOCAT)
    assert sq.flavor == SESQUI and tc.flavor == TWOCAT
    assert sq != tc
    assert reflavor(tc, SESQUI) == sq
