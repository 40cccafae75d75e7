"""Finite sets and functions; pushouts against a naive quotient oracle."""

from cocatlab.finset import FinSet, SetFn, all_fns, identity_fn, pushout_set


def quotient_size_oracle(f, g):
    """Apex size by fixpoint closure over the tagged disjoint union,
    independent of the union-find in the implementation."""
    points = [("l", x) for x in f.cod] + [("r", x) for x in g.cod]
    classes = {p: frozenset([p]) for p in points}
    pairs = [(("l", f(a)), ("r", g(a))) for a in f.dom]
    changed = True
    while changed:
        changed = False
        for x, y in pairs:
            if classes[x] != classes[y]:
                merged = classes[x] | classes[y]
                for z in merged:
                    classes[z] = merged
                changed = True
    return len(set(classes.values()))


def test_all_fns_count():
    a, b = FinSet(range(3)), FinSet(range(4))
    assert len(all_fns(a, b)) == 4 ** 3
    assert len(set(all_fns(a, b))) == 4 ** 3
    assert len(all_fns(b, a)) == 3 ** 4


def test_identity_and_composition():
    s = FinSet("xyz")
    i = identity_fn(s)
    f = SetFn(s, s, {"x": "y", "y": "z", "z": "z"})
    assert i.then(f) == f and f.then(i) == f
    assert not f.is_injective() and i.is_injective()


def test_pushout_size_matches_quotient_oracle():
    a, b = FinSet(range(2)), FinSet(range(3))
    for f in all_fns(a, b):
        for g in all_fns(a, b):
            po = pushout_set(f, g)
            assert len(po.apex) == quotient_size_oracle(f, g)
            for x in a:
                assert po.left(f(x)) == po.right(g(x))


def test_pushout_mediate_is_the_unique_factorization():
    pt, two = FinSet([0]), FinSet([0, 1])
    f = SetFn(pt, two, {0: 1})
    g = SetFn(pt, two, {0: 0})
    po = pushout_set(f, g)
    assert len(po.apex) == 3
    target = FinSet(range(3))
    cocones = 0
    for u in all_fns(two, target):
        for v in all_fns(two, target):
            if u(1) != v(0):
                continue
            h = po.mediate(u, v)
            assert po.left.then(h) == u and po.right.then(h) == v
            sols = [k for k in all_fns(po.apex, target)
                    if po.left.then(k) == u and po.right.then(k) == v]
            assert sols == [h]
            cocones += 1
    assert cocones == 27
