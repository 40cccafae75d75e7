"""Finitely presented categories: morphism classes, functors, pushouts.

A Presentation is a finite graph plus parallel-path relations.  Equality of
morphisms is decided by congruence closure over the enumerated path set: the
relation pairs seed a union-find which is then closed under composition with
single generators on either side.  For an acyclic graph the path set is finite
and the closure is exact; a cyclic graph needs an explicit length bound and
every equality drawn from it is only valid up to that bound.
"""

import itertools
from collections import deque

from .errors import (CycleWithoutBound, OutOfTable, SearchSpaceTooLarge,
                     UnknownName, guard)
from .graphs import Graph, Path, label_key


class PathTable:
    """Enumerated paths of a presentation together with their congruence."""

    def __init__(self, pres):
        self.pres = pres
        graph = pres.graph
        self.paths = graph.paths(pres.bound)
        self._all = {}
        for ps in self.paths.values():
            for p in ps:
                self._all[p.key()] = p
        parent = {k: k for k in self._all}
        self._parent = parent

        def find(k):
            while parent[k] != k:
                parent[k] = parent[parent[k]]
                k = parent[k]
            return k

        work = deque((u.key(), v.key()) for u, v in pres.relations)
        while work:
            ku, kv = work.popleft()
            ru, rv = find(ku), find(kv)
            if ru == rv:
                continue
            parent[max(ru, rv, key=lambda k: self._all[k].sort_key())] = \
                min(ru, rv, key=lambda k: self._all[k].sort_key())
            u, v = self._all[ku], self._all[kv]
            end = graph.path_end(u)
            for e in graph.out_edges(end):
                ku2 = (u.start, u.edges + (e,))
                kv2 = (v.start, v.edges + (e,))
                if ku2 in self._all and kv2 in self._all:
                    work.append((ku2, kv2))
            for e in graph.edges:
                if graph.tgt(e) == u.start:
                    ku2 = (graph.src(e), (e,) + u.edges)
                    kv2 = (graph.src(e), (e,) + v.edges)
                    if ku2 in self._all and kv2 in self._all:
                        work.append((ku2, kv2))

        members = {}
        for k in self._all:
            members.setdefault(find(k), []).append(k)
        self._rep = {}
        for ks in members.values():
            rep = min(ks, key=lambda k: self._all[k].sort_key())
            for k in ks:
                self._rep[k] = rep

    def rep(self, path):
        k = path.key()
        if k not in self._rep:
            raise OutOfTable(
                "path %r is outside the enumerated set (bound %r)"
                % (path, self.pres.bound))
        return self._all[self._rep[k]]

    def hom_reps(self, a, b):
        seen = []
        for p in self.paths.get((a, b), ()):
            r = self.rep(p)
            if r not in seen:
                seen.append(r)
        return sorted(seen, key=Path.sort_key)


class Morphism:
    """A morphism of a finitely presented category: a congruence class of
    paths, held by its canonical representative."""

    __slots__ = ("pres", "path")

    def __init__(self, pres, path):
        self.pres = pres
        self.path = path

    @property
    def src(self):
        return self.path.start

    @property
    def tgt(self):
        return self.pres.graph.path_end(self.path)

    def is_identity(self):
        return not self.path.edges

    def then(self, other):
        """Diagrammatic composition: self first, then other."""
        assert self.pres == other.pres, "cannot compose across presentations"
        assert self.tgt == other.src, "morphisms do not align"
        return self.pres.morphism(Path(self.src, self.path.edges + other.path.edges))

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.pres == other.pres
                and self.path == other.path)

    def __hash__(self):
        return hash(self.path)

    def __repr__(self):
        return "Mor(%r)" % (self.path,)


class Presentation:
    """A finitely presented category.

    `relations` is an iterable of parallel (Path, Path) pairs.  `bound` caps
    path enumeration and is mandatory exactly when the graph is cyclic.
    """

    def __init__(self, graph, relations=(), bound=None):
        self.graph = graph
        rels = []
        for u, v in relations:
            eu, ev = graph.path_end(u), graph.path_end(v)
            assert u.start == v.start and eu == ev, \
                "relation %r = %r is not parallel" % (u, v)
            pair = tuple(sorted((u, v), key=Path.sort_key))
            if pair[0] != pair[1] and pair not in rels:
                rels.append(pair)
        rels.sort(key=lambda uv: (uv[0].sort_key(), uv[1].sort_key()))
        self.relations = tuple(rels)
        if bound is None and not graph.is_acyclic():
            raise CycleWithoutBound(
                "presentation on a cyclic graph needs a bound")
        self.bound = bound
        self._key = (graph._key, tuple((u.key(), v.key()) for u, v in self.relations),
                     bound)
        self._hash = hash(self._key)
        self._table = None

    @property
    def objects(self):
        return self.graph.vertices

    @property
    def gens(self):
        return self.graph.edges

    def table(self):
        if self._table is None:
            self._table = PathTable(self)
        return self._table

    def morphism(self, path):
        return Morphism(self, self.table().rep(path))

    def identity(self, obj):
        return self.morphism(Path(obj))

    def gen(self, name):
        return self.morphism(Path(self.graph.src(name), (name,)))

    def hom(self, a, b):
        return [Morphism(self, p) for p in self.table().hom_reps(a, b)]

    def morphisms(self):
        out = []
        for a in self.objects:
            for b in self.objects:
                out.extend(self.hom(a, b))
        return out

    def id_functor(self):
        return Functor(self, self,
                       {o: o for o in self.objects},
                       {e: self.gen(e) for e in self.gens})

    def __eq__(self, other):
        return isinstance(other, Presentation) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Presentation(%d objects, %d gens, %d relations)" % (
            len(self.objects), len(self.gens), len(self.relations))


def free_category(graph, bound=None):
    """The free category on a graph (no relations)."""
    return Presentation(graph, (), bound)


def hom_set(pres, a, b, bound=None):
    """All morphisms a -> b.  `bound` overrides the presentation's own bound."""
    if bound is not None and bound != pres.bound:
        pres = Presentation(pres.graph, pres.relations, bound)
    return pres.hom(a, b)


class Functor:
    """A functor between presentations, given on objects and generators."""

    def __init__(self, dom, cod, obj_map, gen_map, check=True):
        self.dom = dom
        self.cod = cod
        self.obj_map = dict(obj_map)
        self.gen_map = dict(gen_map)
        assert set(self.obj_map) == set(dom.objects)
        assert set(self.gen_map) == set(dom.gens)
        for e in dom.gens:
            img = self.gen_map[e]
            assert img.pres == cod, "generator image lives elsewhere"
            assert img.src == self.obj_map[dom.graph.src(e)], \
                "image of %r starts at the wrong object" % (e,)
            assert img.tgt == self.obj_map[dom.graph.tgt(e)], \
                "image of %r ends at the wrong object" % (e,)
        if check:
            bad = self.broken_relation()
            assert bad is None, "functor breaks relation %r = %r" % bad
        self._key = (dom._key, cod._key,
                     tuple(sorted(((label_key(o), label_key(v))
                                   for o, v in self.obj_map.items()))),
                     tuple(sorted(((label_key(e), m.path.key())
                                   for e, m in self.gen_map.items()),
                                  key=lambda t: t[0])))

    def broken_relation(self):
        for u, v in self.dom.relations:
            if self.apply_path(u) != self.apply_path(v):
                return (u, v)
        return None

    def apply_path(self, path):
        start = self.obj_map[path.start]
        edges = []
        for e in path.edges:
            edges.extend(self.gen_map[e].path.edges)
        return self.cod.morphism(Path(start, tuple(edges)))

    def apply(self, mor):
        assert mor.pres == self.dom
        return self.apply_path(mor.path)

    def then(self, other):
        """Diagrammatic composition of functors: self first."""
        assert self.cod == other.dom, "functors do not align"
        return Functor(self.dom, other.cod,
                       {o: other.obj_map[v] for o, v in self.obj_map.items()},
                       {e: other.apply(m) for e, m in self.gen_map.items()},
                       check=False)

    def __eq__(self, other):
        return isinstance(other, Functor) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "Functor(%r -> %r)" % (self.dom, self.cod)


def try_functor(dom, cod, obj_map, gen_map):
    """Build a functor, or return None when the data breaks a relation."""
    f = Functor(dom, cod, obj_map, gen_map, check=False)
    return None if f.broken_relation() is not None else f


def constant_functor(dom, cod, obj):
    """The functor collapsing everything onto an object's identity."""
    return Functor(dom, cod, {o: obj for o in dom.objects},
                   {e: cod.identity(obj) for e in dom.gens}, check=False)


class Pushout:
    """A pushout apex with its two injections and a mediator factory."""

    def __init__(self, apex, left, right, mediate):
        self.apex = apex
        self.left = left
        self.right = right
        self._mediate = mediate

    def mediate(self, u, v):
        """The induced map out of the apex for a cocone (u, v)."""
        return self._mediate(u, v)


def pushout_cat(f, g):
    """Pushout of presentations along a span of functors f: A -> B, g: A -> C.

    Objects are the pushout of the object sets.  Generators are the tagged
    disjoint union of B's and C's, quotiented by identifying f(e) with g(e)
    when both images are single generators (the case for every span built
    here); a composite or identity image instead contributes an identification
    relation.  B's and C's relations are carried over.
    """
    assert f.dom == g.dom
    a, b, c = f.dom, f.cod, g.cod
    from .graphs import _UnionFind
    uf = _UnionFind()
    for v in b.objects:
        uf.add(("l", v))
    for v in c.objects:
        uf.add(("r", v))
    for v in a.objects:
        uf.union(("l", f.obj_map[v]), ("r", g.obj_map[v]))
    vrep = {x: uf.find(x) for x in uf.parent}
    members = {}
    for x, r in vrep.items():
        members.setdefault(r, []).append(x)

    euf = _UnionFind()
    for e in b.gens:
        euf.add(("l", e))
    for e in c.gens:
        euf.add(("r", e))
    rel_gens = []
    for e in a.gens:
        pf, pg = f.gen_map[e].path, g.gen_map[e].path
        if len(pf.edges) == 1 and len(pg.edges) == 1:
            euf.union(("l", pf.edges[0]), ("r", pg.edges[0]))
        else:
            rel_gens.append(e)
    erep = {x: euf.find(x) for x in euf.parent}
    emembers = {}
    for x, r in erep.items():
        emembers.setdefault(r, []).append(x)

    ends = {"l": b.graph, "r": c.graph}
    edges = []
    for r in emembers:
        s, name = emembers[r][0]
        edges.append((r, vrep[(s, ends[s].src(name))], vrep[(s, ends[s].tgt(name))]))
    graph = Graph(set(vrep.values()), edges)

    def tag(side, path):
        return Path(vrep[(side, path.start)],
                    tuple(erep[(side, e)] for e in path.edges))

    rels = [(tag("l", u), tag("l", v)) for u, v in b.relations]
    rels += [(tag("r", u), tag("r", v)) for u, v in c.relations]
    for e in rel_gens:
        rels.append((tag("l", f.gen_map[e].path), tag("r", g.gen_map[e].path)))
    bound = None
    if not graph.is_acyclic():
        bound = max(x for x in (b.bound, c.bound, len(graph.edges))
                    if x is not None)
    apex = Presentation(graph, rels, bound)

    left = Functor(b, apex, {v: vrep[("l", v)] for v in b.objects},
                   {e: apex.gen(erep[("l", e)]) for e in b.gens}, check=False)
    right = Functor(c, apex, {v: vrep[("r", v)] for v in c.objects},
                    {e: apex.gen(erep[("r", e)]) for e in c.gens}, check=False)

    def mediate(u, v):
        assert u.dom == b and v.dom == c and u.cod == v.cod
        byside = {"l": u, "r": v}
        obj_map = {}
        for r, xs in members.items():
            imgs = {byside[s].obj_map[o] for s, o in xs}
            assert len(imgs) == 1, "cocone does not agree on object %r" % (r,)
            obj_map[r] = next(iter(imgs))
        gen_map = {}
        for r, xs in emembers.items():
            imgs = {byside[s].gen_map[name] for s, name in xs}
            assert len(imgs) == 1, "cocone does not agree on generator %r" % (r,)
            gen_map[r] = next(iter(imgs))
        return Functor(apex, u.cod, obj_map, gen_map)

    return Pushout(apex, left, right, mediate)


def derive_pushout(left, right):
    """Recover pushout structure for a hand-built apex.

    `left`, `right` are functors into an apex believed to present the pushout
    of their (shared) domain boundary.  Every apex object and generator must be
    hit on the nose by one of the injections; the mediator is then read off.
    """
    apex = left.cod
    assert right.cod == apex
    obj_origin = {}
    for o in apex.objects:
        for side, inj in (("l", left), ("r", right)):
            hits = [x for x in inj.dom.objects if inj.obj_map[x] == o]
            if hits:
                obj_origin[o] = (side, hits[0])
                break
        assert o in obj_origin, "apex object %r not covered by injections" % (o,)
    gen_origin = {}
    for e in apex.gens:
        target = apex.gen(e)
        for side, inj in (("l", left), ("r", right)):
            hits = [x for x in inj.dom.gens if inj.apply(inj.dom.gen(x)) == target]
            if hits:
                gen_origin[e] = (side, hits[0])
                break
        assert e in gen_origin, "apex generator %r not covered by injections" % (e,)

    def mediate(u, v):
        assert u.dom == left.dom and v.dom == right.dom and u.cod == v.cod
        byside = {"l": u, "r": v}
        obj_map = {o: byside[s].obj_map[x] for o, (s, x) in obj_origin.items()}
        gen_map = {e: byside[s].gen_map[x] for e, (s, x) in gen_origin.items()}
        return Functor(apex, u.cod, obj_map, gen_map)

    return Pushout(apex, left, right, mediate)


def full_on_objects(functor, objs, witness=False):
    """Is the functor full when restricted to the given source objects?

    Checks that every codomain morphism between images of `objs` is the image
    of some morphism between the corresponding source objects.
    """
    objs = list(objs)
    for x in objs:
        for y in objs:
            hit = {functor.apply(s) for s in functor.dom.hom(x, y)}
            for m in functor.cod.hom(functor.obj_map[x], functor.obj_map[y]):
                if m not in hit:
                    return (False, m) if witness else False
    return (True, None) if witness else True


def all_functors(dom, cod):
    """Every functor dom -> cod, in deterministic order."""
    gens = list(dom.gens)
    out = []
    objs = list(cod.objects)
    for assignment in itertools.product(objs, repeat=len(dom.objects)):
        obj_map = dict(zip(dom.objects, assignment))
        pools = []
        for e in gens:
            pool = cod.hom(obj_map[dom.graph.src(e)], obj_map[dom.graph.tgt(e)])
            if not pool:
                break
            pools.append(pool)
        else:
            for choice in itertools.product(*pools):
                f = try_functor(dom, cod, obj_map, dict(zip(gens, choice)))
                if f is not None:
                    out.append(f)
            continue
    return out


def endofunctor_monoid(pres):
    """The monoid of endofunctors of a presentation under composition.

    Returns (FinMonoid, functors) where `functors` maps element labels to the
    corresponding Functor objects.  Element "f0" is the identity.
    """
    from .monoids import FinMonoid
    fs = all_functors(pres, pres)
    fs.sort(key=lambda f: (f != pres.id_functor(), f._key))
    assert fs and fs[0] == pres.id_functor()
    names = {f: "f%d" % i for i, f in enumerate(fs)}
    table = {}
    for f in fs:
        for g in fs:
            h = f.then(g)
            assert h in names, "endofunctors are not closed, table broken"
            table[(names[f], names[g])] = names[h]
    monoid = FinMonoid(tuple(names[f] for f in fs), "f0", table)
    return monoid, {names[f]: f for f in fs}


def is_isomorphic(p, q, max_morphisms=64):
    """Brute-force isomorphism-of-categories test for small presentations."""
    mp, mq = p.morphisms(), q.morphisms()
    guard(len(mp) <= max_morphisms and len(mq) <= max_morphisms,
          SearchSpaceTooLarge,
          "isomorphism search beyond %d morphisms" % max_morphisms)
    if len(p.objects) != len(q.objects) or len(mp) != len(mq):
        return False
    gens = list(p.gens)
    for perm in itertools.permutations(q.objects):
        obj_map = dict(zip(p.objects, perm))
        if any(len(p.hom(a, b)) != len(q.hom(obj_map[a], obj_map[b]))
               for a in p.objects for b in p.objects):
            continue
        pools = [q.hom(obj_map[p.graph.src(e)], obj_map[p.graph.tgt(e)])
                 for e in gens]
        if any(not pool for pool in pools):
            continue
        for choice in itertools.product(*pools):
            f = try_functor(p, q, obj_map, dict(zip(gens, choice)))
            if f is None:
                continue
            ok = True
            for a in p.objects:
                for b in p.objects:
                    image = {f.apply(s) for s in p.hom(a, b)}
                    if len(image) != len(p.hom(a, b)) or \
                            set(q.hom(obj_map[a], obj_map[b])) != image:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True
    return False


# ---------------------------------------------------------------------------
# catalog of small categories

def empty_cat():
    return free_category(Graph((), ()))


def terminal_cat():
    return free_category(Graph((0,), ()))


def discrete_cat(n):
    return free_category(Graph(tuple(range(n)), ()))


def walking_arrow():
    """The free arrow 0 -> 1 on generator f."""
    return free_category(Graph((0, 1), (("f", 0, 1),)))


def composable_pair():
    """The free composable pair 0 -> 1 -> 2 on generators g, h."""
    return free_category(Graph((0, 1, 2), (("g", 0, 1), ("h", 1, 2))))


def walking_iso():
    g = Graph((0, 1), (("u", 0, 1), ("v", 1, 0)))
    return Presentation(g, ((Path(0, ("u", "v")), Path(0)),
                            (Path(1, ("v", "u")), Path(1))), bound=4)


def z2_loop():
    g = Graph((0,), (("s", 0, 0),))
    return Presentation(g, ((Path(0, ("s", "s")), Path(0)),), bound=3)


CATALOG = {
    "zero": empty_cat,
    "one": terminal_cat,
    "discrete2": lambda: discrete_cat(2),
    "two": walking_arrow,
    "three": composable_pair,
    "walking_iso": walking_iso,
    "z2_loop": z2_loop,
}


def catalog_category(name):
    if name not in CATALOG:
        raise UnknownName("no catalog category named %r" % (name,))
    return CATALOG[name]()
