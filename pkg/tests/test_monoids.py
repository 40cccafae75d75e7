"""Coproduct words over a monoid: normal forms against a brute-force
congruence closure, plus the two obstruction searches."""

import itertools

import pytest
from hypothesis import given, strategies as st

from cocatlab.errors import SearchSpaceTooLarge, UnknownName
from cocatlab.monoids import (MONOID_CATALOG, FinMonoid, catalog_monoid,
                              comultiplication_candidates, cyclic_monoid,
                              eval_retraction, normal_form,
                              search_comultiplication, search_endo_2cell)


def congruence_partition(monoid, max_len):
    """Partition of all words up to max_len by the congruence generated by
    unit insertion/deletion and merging/splitting adjacent same-branch
    letters.  Independent of normal_form."""
    letters = [(b, x) for b in (0, 1) for x in monoid.elements]
    words = [()]
    for n in range(1, max_len + 1):
        words.extend(itertools.product(letters, repeat=n))

    def neighbours(w):
        out = set()
        for i in range(len(w) + 1):
            if len(w) < max_len:
                for b in (0, 1):
                    out.add(w[:i] + ((b, monoid.unit),) + w[i:])
        for i, (b, x) in enumerate(w):
            if x == monoid.unit:
                out.add(w[:i] + w[i + 1:])
            if len(w) < max_len:
                for y in monoid.elements:
                    for z in monoid.elements:
                        if monoid.mul(y, z) == x:
                            out.add(w[:i] + ((b, y), (b, z)) + w[i + 1:])
        for i in range(len(w) - 1):
            (b1, x), (b2, y) = w[i], w[i + 1]
            if b1 == b2:
                out.add(w[:i] + ((b1, monoid.mul(x, y)),) + w[i + 2:])
        return out

    parent = {w: w for w in words}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for w in words:
        for w2 in neighbours(w):
            ra, rb = find(w), find(w2)
            if ra != rb:
                parent[ra] = rb
    classes = {}
    for w in words:
        classes.setdefault(find(w), set()).add(w)
    return {frozenset(c) for c in classes.values()}


def test_normal_form_classes_match_the_congruence_closure():
    # exhaustive at desk scale: all words of length <= 5 over Z2 + Z2
    m = cyclic_monoid(2)
    by_closure = congruence_partition(m, 5)
    by_nf = {}
    for c in by_closure:
        for w in c:
            by_nf.setdefault(normal_form(m, w), set()).add(w)
    assert {frozenset(c) for c in by_nf.values()} == by_closure
    # and each normal form is the shortest member of its class
    for nf, c in by_nf.items():
        assert nf in c
        assert len(nf) == min(len(w) for w in c)


MONOID_NAMES = sorted(MONOID_CATALOG)


@given(st.sampled_from(MONOID_NAMES), st.data())
def test_normal_form_is_idempotent_and_retraction_invariant(name, data):
    m = catalog_monoid(name)
    letters = st.tuples(st.integers(0, 2), st.sampled_from(m.elements))
    word = tuple(data.draw(st.lists(letters, max_size=8)))
    nf = normal_form(m, word)
    assert normal_form(m, nf) == nf
    assert len(nf) <= len(word)
    for b in (0, 1, 2):
        assert eval_retraction(m, nf, b) == eval_retraction(m, word, b)


@given(st.sampled_from(MONOID_NAMES), st.data())
def test_concatenation_respects_normal_forms_and_retractions(name, data):
    m = catalog_monoid(name)
    letters = st.tuples(st.integers(0, 1), st.sampled_from(m.elements))
    u = tuple(data.draw(st.lists(letters, max_size=6)))
    v = tuple(data.draw(st.lists(letters, max_size=6)))
    assert normal_form(m, u + v) == \
        normal_form(m, normal_form(m, u) + normal_form(m, v))
    for b in (0, 1):
        assert eval_retraction(m, u + v, b) == \
            m.mul(eval_retraction(m, u, b), eval_retraction(m, v, b))


def test_comultiplication_candidates_are_counital_and_alternating():
    m = cyclic_monoid(3)
    for a in m.nontrivial():
        cands = comultiplication_candidates(m, a, 6)
        assert len(cands) == 30
        for w in cands:
            assert len(w) >= 2  # a single letter loses one retraction
            assert all(w[i][0] != w[i + 1][0] for i in range(len(w) - 1))
            assert all(x != m.unit for _, x in w)
            assert eval_retraction(m, w, 0) == a
            assert eval_retraction(m, w, 1) == a


def test_second_stage_expansion_juxtaposes_normal_forms():
    # substituting alternating images into an alternating word never merges
    # across block boundaries, so the result is already in normal form
    m = cyclic_monoid(3)
    outer = [w for w in comultiplication_candidates(m, 1, 4)]
    images = {a: comultiplication_candidates(m, a, 3)[0]
              for a in m.nontrivial()}
    for w in outer:
        blocks = []
        for branch, x in w:
            blocks.extend(((b, branch), y) for b, y in images[x])
        assert normal_form(m, blocks) == tuple(blocks)


def test_comultiplication_search_outcomes():
    assert search_comultiplication(catalog_monoid("trivial"))["outcome"] == \
        "unique-trivial"
    for name, counts in (("Z2", {"1": 4}),
                         ("idem2", {"1": 10}),
                         ("Z3", {"1": 30, "2": 30})):
        res = search_comultiplication(catalog_monoid(name))
        assert res["outcome"] == "none", name
        assert res["candidates"] == counts, name
    for name in ("Z4", "Z2xZ2"):
        assert search_comultiplication(catalog_monoid(name))["outcome"] == \
            "none", name


def test_endo_2cell_search_is_only_trivial_on_the_catalog():
    for name in MONOID_NAMES:
        m = catalog_monoid(name)
        res = search_endo_2cell(m)
        assert res["outcome"] == "only-trivial", name
        assert all(s["theta"] == repr(m.unit) for s in res["solutions"])


def test_search_guards_cap_the_word_length():
    with pytest.raises(SearchSpaceTooLarge):
        search_comultiplication(catalog_monoid("Z2"), max_len=9)
    with pytest.raises(SearchSpaceTooLarge):
        search_endo_2cell(catalog_monoid("Z2"), max_len=9)


def test_monoid_constructor_checks_the_axioms():
    with pytest.raises(AssertionError):
        FinMonoid((0, 1), 0, {(0, 0): 0, (0, 1): 1, (1, 0): 0, (1, 1): 1})
    with pytest.raises(UnknownName):
        catalog_monoid("Z5")
