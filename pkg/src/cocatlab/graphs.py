"""Finite directed multigraphs, their paths, and graph pushouts.

Labels (vertex names and edge names) may be ints, strings, or nested tuples of
those; `label_key` gives them a single total order so every enumeration in the
package is deterministic.
"""

from .errors import CycleWithoutBound, NonMono


def label_key(x):
    """Total order key over int/str/tuple labels."""
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(label_key(e) for e in x))
    raise TypeError("unsupported label: %r" % (x,))


def render_label(x):
    """Deterministic flat string form of a label, used when writing files."""
    if isinstance(x, tuple):
        return "(" + ",".join(render_label(e) for e in x) + ")"
    return str(x)


class Path:
    """A directed path: a start vertex and a tuple of edge names.

    The empty edge tuple is the identity path at `start`.  Paths are dumb
    data; validation and composition live on Graph and Presentation.
    """

    __slots__ = ("start", "edges")

    def __init__(self, start, edges=()):
        self.start = start
        self.edges = tuple(edges)

    def key(self):
        return (self.start, self.edges)

    def sort_key(self):
        return (len(self.edges), label_key(self.start),
                tuple(label_key(e) for e in self.edges))

    def __eq__(self, other):
        return isinstance(other, Path) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if not self.edges:
            return "Path(id@%s)" % render_label(self.start)
        return "Path(%s: %s)" % (render_label(self.start),
                                 ";".join(render_label(e) for e in self.edges))


class Graph:
    """A finite directed multigraph with labelled edges."""

    def __init__(self, vertices, edges):
        """`edges` is an iterable of (name, src, tgt)."""
        self.vertices = tuple(sorted(set(vertices), key=label_key))
        vset = set(self.vertices)
        seen = {}
        for name, src, tgt in edges:
            assert name not in seen, "duplicate edge name %r" % (name,)
            assert src in vset and tgt in vset, "edge %r has undeclared endpoint" % (name,)
            seen[name] = (src, tgt)
        self.edges = tuple(sorted(seen, key=label_key))
        self._ends = seen
        self._out = {v: [] for v in self.vertices}
        for name in self.edges:
            self._out[seen[name][0]].append(name)
        self._key = (self.vertices, tuple((e,) + seen[e] for e in self.edges))

    def src(self, edge):
        return self._ends[edge][0]

    def tgt(self, edge):
        return self._ends[edge][1]

    def out_edges(self, v):
        return tuple(self._out[v])

    def __eq__(self, other):
        return isinstance(other, Graph) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "Graph(%d vertices, %d edges)" % (len(self.vertices), len(self.edges))

    def is_acyclic(self):
        state = {}

        def visit(v):
            state[v] = 1
            for e in self._out[v]:
                w = self.tgt(e)
                s = state.get(w)
                if s == 1:
                    return False
                if s is None and not visit(w):
                    return False
            state[v] = 2
            return True

        return all(visit(v) for v in self.vertices if v not in state)

    def path_end(self, path):
        """Validate a Path against this graph and return its end vertex."""
        assert path.start in self._out, "unknown start %r" % (path.start,)
        here = path.start
        for e in path.edges:
            assert e in self._ends, "unknown edge %r" % (e,)
            assert self.src(e) == here, "path breaks at %r" % (e,)
            here = self.tgt(e)
        return here

    def paths(self, bound=None):
        """All paths, grouped as {(src, tgt): [Path, ...]}, each list sorted.

        `bound` caps the edge count of a path; it is required when the graph
        has a directed cycle.
        """
        if bound is None:
            if not self.is_acyclic():
                raise CycleWithoutBound(
                    "graph has a directed cycle; pass an explicit bound")
            bound = len(self.edges)
        table = {}
        for a in self.vertices:
            frontier = [Path(a)]
            table.setdefault((a, a), []).append(Path(a))
            while frontier:
                nxt = []
                for p in frontier:
                    if len(p.edges) >= bound:
                        continue
                    here = self.path_end(p)
                    for e in self._out[here]:
                        q = Path(a, p.edges + (e,))
                        table.setdefault((a, self.tgt(e)), []).append(q)
                        nxt.append(q)
                frontier = nxt
        for ps in table.values():
            ps.sort(key=Path.sort_key)
        return table


class GraphMap:
    """A graph morphism: vertex map plus edge map preserving endpoints."""

    def __init__(self, dom, cod, vmap, emap):
        self.dom = dom
        self.cod = cod
        self.vmap = dict(vmap)
        self.emap = dict(emap)
        assert set(self.vmap) == set(dom.vertices)
        assert set(self.emap) == set(dom.edges)
        for e in dom.edges:
            fe = self.emap[e]
            assert cod.src(fe) == self.vmap[dom.src(e)], "map breaks src of %r" % (e,)
            assert cod.tgt(fe) == self.vmap[dom.tgt(e)], "map breaks tgt of %r" % (e,)

    def is_mono(self):
        return (len(set(self.vmap.values())) == len(self.vmap)
                and len(set(self.emap.values())) == len(self.emap))


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if label_key(ry) < label_key(rx):
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


def pushout_graph(f, g):
    """Pushout of graphs along two monos out of a common graph.

    Returns (apex, left, right) where left/right are the GraphMap injections
    of f.cod and g.cod.  Raises NonMono when f or g is not injective.
    """
    if not (f.is_mono() and g.is_mono()):
        raise NonMono("pushout_graph needs injective graph maps")
    assert f.dom == g.dom
    uf = _UnionFind()
    for v in f.cod.vertices:
        uf.add(("l", v))
    for v in g.cod.vertices:
        uf.add(("r", v))
    for v in f.dom.vertices:
        uf.union(("l", f.vmap[v]), ("r", g.vmap[v]))
    vrep = {x: uf.find(x) for x in uf.parent}

    ef = _UnionFind()
    for e in f.cod.edges:
        ef.add(("l", e))
    for e in g.cod.edges:
        ef.add(("r", e))
    for e in f.dom.edges:
        ef.union(("l", f.emap[e]), ("r", g.emap[e]))
    erep = {x: ef.find(x) for x in ef.parent}

    edges = {}
    for e in f.cod.edges:
        edges[erep[("l", e)]] = (vrep[("l", f.cod.src(e))], vrep[("l", f.cod.tgt(e))])
    for e in g.cod.edges:
        edges[erep[("r", e)]] = (vrep[("r", g.cod.src(e))], vrep[("r", g.cod.tgt(e))])
    apex = Graph(set(vrep.values()), [(n,) + st for n, st in edges.items()])
    left = GraphMap(f.cod, apex,
                    {v: vrep[("l", v)] for v in f.cod.vertices},
                    {e: erep[("l", e)] for e in f.cod.edges})
    right = GraphMap(g.cod, apex,
                     {v: vrep[("r", v)] for v in g.cod.vertices},
                     {e: erep[("r", e)] for e in g.cod.edges})
    return apex, left, right
