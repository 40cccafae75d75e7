"""Finite sets and functions, with pushouts.

Used for the zero-dimensional cocategory story: elements are plain labels,
functions are dicts, and the pushout is the quotient of the tagged disjoint
union by the span identifications.
"""

import itertools

from .graphs import _UnionFind, label_key
from .fincat import Pushout


class FinSet:
    __slots__ = ("elements",)

    def __init__(self, elements):
        self.elements = tuple(sorted(set(elements), key=label_key))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in set(self.elements)

    def __eq__(self, other):
        return isinstance(other, FinSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "FinSet(%r)" % (list(self.elements),)


class SetFn:
    __slots__ = ("dom", "cod", "map")

    def __init__(self, dom, cod, mapping):
        self.dom = dom
        self.cod = cod
        self.map = dict(mapping)
        assert set(self.map) == set(dom.elements), "map not total"
        for x, y in self.map.items():
            assert y in set(cod.elements), "value %r not in codomain" % (y,)

    def __call__(self, x):
        return self.map[x]

    def then(self, other):
        assert self.cod == other.dom
        return SetFn(self.dom, other.cod,
                     {x: other.map[y] for x, y in self.map.items()})

    def is_injective(self):
        return len(set(self.map.values())) == len(self.map)

    def __eq__(self, other):
        return (isinstance(other, SetFn) and self.dom == other.dom
                and self.cod == other.cod and self.map == other.map)

    def __hash__(self):
        return hash((self.dom, self.cod, tuple(sorted(self.map.items(),
                                                      key=lambda kv: label_key(kv[0])))))

    def __repr__(self):
        return "SetFn(%r)" % (self.map,)


def identity_fn(s):
    return SetFn(s, s, {x: x for x in s})


def all_fns(dom, cod):
    out = []
    xs = list(dom)
    for values in itertools.product(list(cod), repeat=len(xs)):
        out.append(SetFn(dom, cod, dict(zip(xs, values))))
    return out


def pushout_set(f, g):
    """Pushout of finite sets along a span f: A -> B, g: A -> C."""
    assert f.dom == g.dom
    uf = _UnionFind()
    for x in f.cod:
        uf.add(("l", x))
    for x in g.cod:
        uf.add(("r", x))
    for a in f.dom:
        uf.union(("l", f(a)), ("r", g(a)))
    rep = {x: uf.find(x) for x in uf.parent}
    apex = FinSet(rep.values())
    left = SetFn(f.cod, apex, {x: rep[("l", x)] for x in f.cod})
    right = SetFn(g.cod, apex, {x: rep[("r", x)] for x in g.cod})
    members = {}
    for x, r in rep.items():
        members.setdefault(r, []).append(x)

    def mediate(u, v):
        assert u.dom == f.cod and v.dom == g.cod and u.cod == v.cod
        mapping = {}
        for r, xs in members.items():
            vals = {(u if s == "l" else v)(y) for s, y in xs}
            assert len(vals) == 1, "cocone does not agree on %r" % (r,)
            mapping[r] = next(iter(vals))
        return SetFn(apex, u.cod, mapping)

    return Pushout(apex, left, right, mediate)
