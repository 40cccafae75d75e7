"""Sesquicategory and 2-category presentations.

A derivation scheme adds 2-cell generators between parallel morphisms of a
base presentation.  2-cells are words of whiskered generator instances
(pre 1-cell, generator or formal inverse, post 1-cell) composed vertically;
whiskering by a fixed 1-cell acts factorwise, so the sesquicategory axioms
hold by construction.  The 2-category flavor adds no data: interchange is an
implicit rewrite move in the word problem.

2-cell equality is three-valued.  Equal comes with a rewrite certificate,
distinct either from unique reduced normal forms (free homs) or from an
exhausted rewrite class, and everything else is unknown at the given bound.
"""

from collections import deque

from .errors import BoundaryMismatch, FlavorMismatch
from .fincat import Functor, Presentation, Pushout, pushout_cat
from .graphs import label_key

SESQUI = "sesqui"
TWOCAT = "2cat"

EQUAL = "equal"
DISTINCT = "distinct"
UNKNOWN = "unknown"


class DerivationScheme:
    """A base presentation with 2-cell generators between parallel pairs."""

    def __init__(self, base, twocells=()):
        self.base = base
        cells = {}
        for name, src, tgt, invertible in twocells:
            assert name not in cells, "duplicate 2-cell %r" % (name,)
            assert src.pres == base and tgt.pres == base
            assert src.src == tgt.src and src.tgt == tgt.tgt, \
                "2-cell %r is not between parallel morphisms" % (name,)
            cells[name] = (src, tgt, bool(invertible))
        self.twocells = cells
        self._key = (base._key,
                     tuple(sorted((label_key(n), label_key(s.path.key()),
                                   label_key(t.path.key()), i)
                                  for n, (s, t, i) in cells.items())))

    def __eq__(self, other):
        return isinstance(other, DerivationScheme) and self._key == other._key

    def __hash__(self):
        return hash(self._key)


class WhiskerFactor:
    """One whiskered generator instance: pre, then the 2-cell, then post."""

    __slots__ = ("pre", "gen", "inv", "post")

    def __init__(self, pre, gen, inv, post):
        self.pre = pre
        self.gen = gen
        self.inv = bool(inv)
        self.post = post

    def key(self):
        return (self.pre.path.key(), label_key(self.gen), self.inv,
                self.post.path.key())

    def __eq__(self, other):
        return isinstance(other, WhiskerFactor) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "WhiskerFactor(%r, %r%s, %r)" % (
            self.pre.path, self.gen, "^-1" if self.inv else "", self.post.path)


class TwoCell:
    """A vertical word of whiskered generator instances, with its boundary."""

    __slots__ = ("hp", "src", "tgt", "factors")

    def __init__(self, hp, src, tgt, factors):
        self.hp = hp
        self.src = src
        self.tgt = tgt
        self.factors = tuple(factors)

    def key(self):
        return (self.src.path.key(), self.tgt.path.key(),
                tuple(f.key() for f in self.factors))

    def is_identity(self):
        return not self.factors

    def then(self, other):
        """Vertical composition, self first."""
        assert self.hp == other.hp
        if self.tgt != other.src:
            raise BoundaryMismatch("vertical composite does not chain")
        return TwoCell(self.hp, self.src, other.tgt,
                       self.factors + other.factors)

    def inverse(self):
        for f in self.factors:
            assert self.hp.twocells[f.gen][2], \
                "factor %r is not invertible" % (f,)
        return TwoCell(self.hp, self.tgt, self.src,
                       tuple(WhiskerFactor(f.pre, f.gen, not f.inv, f.post)
                             for f in reversed(self.factors)))

    def __eq__(self, other):
        return (isinstance(other, TwoCell) and self.hp == other.hp
                and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "TwoCell(%r => %r, %d factors)" % (
            self.src.path, self.tgt.path, len(self.factors))


class HigherPresentation:
    """A derivation scheme plus 2-cell relations and a flavor."""

    def __init__(self, scheme, twocell_relations=(), flavor=SESQUI):
        assert flavor in (SESQUI, TWOCAT)
        self.scheme = scheme
        self.base = scheme.base
        self.twocells = scheme.twocells
        self.flavor = flavor
        rels = []
        seen = set()
        for u, v in twocell_relations:
            ru, rv = self._rebind(u), self._rebind(v)
            if ru.src != rv.src or ru.tgt != rv.tgt:
                raise BoundaryMismatch("2-cell relation is not parallel")
            pair = tuple(sorted((ru, rv), key=lambda c: label_key(c.key())))
            pk = (pair[0].key(), pair[1].key())
            if pk[0] != pk[1] and pk not in seen:
                seen.add(pk)
                rels.append(pair)
        rels.sort(key=lambda p: (label_key(p[0].key()), label_key(p[1].key())))
        self.twocell_relations = tuple(rels)
        self._key = (scheme._key,
                     tuple((u.key(), v.key()) for u, v in self.twocell_relations),
                     flavor)

    def _rebind(self, cell):
        return TwoCell(self, cell.src, cell.tgt, cell.factors)

    # -- construction helpers ------------------------------------------------

    def gen_bounds(self, gen, inv=False):
        """Raw (src, tgt) 1-cells of a generator, inverse-aware."""
        u, v, invertible = self.twocells[gen]
        if inv:
            assert invertible, "inverse of non-invertible %r" % (gen,)
            return v, u
        return u, v

    def factor_bounds(self, f):
        """Effective (src, tgt) 1-cells of a whiskered factor."""
        u, v = self.gen_bounds(f.gen, f.inv)
        return f.pre.then(u).then(f.post), f.pre.then(v).then(f.post)

    def cell(self, factors, src=None):
        """Build a 2-cell word from factors, validating the chaining."""
        factors = tuple(factors)
        if not factors:
            assert src is not None, "identity 2-cell needs its 1-cell"
            return TwoCell(self, src, src, ())
        s0, t = self.factor_bounds(factors[0])
        if src is not None and src != s0:
            raise BoundaryMismatch("word does not start at the given 1-cell")
        for f in factors[1:]:
            fs, ft = self.factor_bounds(f)
            if fs != t:
                raise BoundaryMismatch("factors do not chain at %r" % (f,))
            t = ft
        return TwoCell(self, s0, t, factors)

    def identity2(self, mor):
        assert mor.pres == self.base
        return TwoCell(self, mor, mor, ())

    def gen2(self, name, pre=None, post=None, inv=False):
        u, _, _ = self.twocells[name]
        if pre is None:
            pre = self.base.identity(u.src)
        if post is None:
            post = self.base.identity(u.tgt)
        return self.cell((WhiskerFactor(pre, name, inv, post),))

    def whisker(self, pre, cell, post):
        """pre then the whole word then post, factorwise."""
        assert cell.hp == self
        factors = tuple(WhiskerFactor(pre.then(f.pre), f.gen, f.inv,
                                      f.post.then(post))
                        for f in cell.factors)
        return TwoCell(self, pre.then(cell.src).then(post),
                       pre.then(cell.tgt).then(post), factors)

    def reduce(self, cell):
        """Cancel adjacent factor/inverse pairs; unique normal form when the
        hom structure is free."""
        stack = []
        for f in cell.factors:
            if stack and stack[-1].gen == f.gen and stack[-1].inv != f.inv \
                    and stack[-1].pre == f.pre and stack[-1].post == f.post:
                stack.pop()
            else:
                stack.append(f)
        return TwoCell(self, cell.src, cell.tgt, tuple(stack))

    def parallel_pairs(self):
        """All ordered pairs of distinct parallel morphisms of the base."""
        out = []
        for a in self.base.objects:
            for b in self.base.objects:
                ms = self.base.hom(a, b)
                out.extend((u, v) for u in ms for v in ms if u != v)
        return out

    def id_sfunctor(self):
        return SesquiFunctor(self, self, self.base.id_functor(),
                             {n: self.gen2(n) for n in self.twocells})

    def __eq__(self, other):
        return isinstance(other, HigherPresentation) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "HigherPresentation(%r, %d twocells, %d relations, %s)" % (
            self.base, len(self.twocells), len(self.twocell_relations),
            self.flavor)


def promote_discrete(pres, flavor=SESQUI):
    """The locally discrete higher presentation on a base category."""
    return HigherPresentation(DerivationScheme(pres, ()), (), flavor)


def free_sesquicategory(scheme, flavor=SESQUI):
    """The free sesquicategory (or free 2-category) on a derivation scheme."""
    return HigherPresentation(scheme, (), flavor)


def reflavor(hp, flavor):
    return HigherPresentation(hp.scheme, hp.twocell_relations, flavor)


# ---------------------------------------------------------------------------
# 2-cell word problem

def _match_segment(hp, segment, pattern):
    """Find whiskering contexts (p, q) with segment == whisker(p, pattern, q).

    Matching is factorwise on generators and inverse flags, with p and q
    enumerated over the relevant hom-sets.
    """
    if len(segment) != len(pattern.factors):
        return
    if not pattern.factors:
        yield None, None
        return
    for i, f in enumerate(pattern.factors):
        s = segment[i]
        if s.gen != f.gen or s.inv != f.inv:
            return
    base = hp.base
    s0, f0 = segment[0], pattern.factors[0]
    for p in base.hom(s0.pre.src, f0.pre.src):
        if any(seg.pre != p.then(f.pre)
               for seg, f in zip(segment, pattern.factors)):
            continue
        for q in base.hom(f0.post.tgt, s0.post.tgt):
            if all(seg.post == f.post.then(q)
                   for seg, f in zip(segment, pattern.factors)):
                yield p, q


def _one_cell_at(hp, cell, i):
    """The 1-cell boundary between factor i-1 and factor i of the word."""
    if i == 0:
        return cell.src
    return hp.factor_bounds(cell.factors[i - 1])[1]


def _relation_moves(hp, cell):
    for lhs, rhs in hp.twocell_relations:
        for pat, rep in ((lhs, rhs), (rhs, lhs)):
            k = len(pat.factors)
            if k == 0:
                # insert a whiskered copy of rep at any chain point where its
                # boundary matches the ambient 1-cell
                a = rep.src.src
                b = rep.src.tgt
                for i in range(len(cell.factors) + 1):
                    mid = _one_cell_at(hp, cell, i)
                    for p in hp.base.hom(mid.src, a):
                        for q in hp.base.hom(b, mid.tgt):
                            if p.then(rep.src).then(q) != mid:
                                continue
                            ins = hp.whisker(p, rep, q)
                            yield TwoCell(hp, cell.src, cell.tgt,
                                          cell.factors[:i] + ins.factors
                                          + cell.factors[i:])
                continue
            for i in range(len(cell.factors) - k + 1):
                segment = cell.factors[i:i + k]
                for p, q in _match_segment(hp, segment, pat):
                    if p is None:
                        continue
                    new = hp.whisker(p, rep, q)
                    yield TwoCell(hp, cell.src, cell.tgt,
                                  cell.factors[:i] + new.factors
                                  + cell.factors[i + k:])


def _interchange_moves(hp, cell):
    """Adjacent-factor slides valid in a 2-category.

    For alpha: u => v and beta: s => t acting on disjoint stretches of a path,
    the two orders of firing them are interchange-equal:

        (P, alpha, s.Q)  then  (P.v, beta, Q)
      = (P.u, beta, Q)   then  (P, alpha, t.Q)
    """
    fs = cell.factors
    for i in range(len(fs) - 1):
        x, y = fs[i], fs[i + 1]
        ux, vx = hp.gen_bounds(x.gen, x.inv)
        uy, vy = hp.gen_bounds(y.gen, y.inv)
        # x is the left cell fired first: slide y before it
        if y.pre == x.pre.then(vx) and x.post == uy.then(y.post):
            ny = WhiskerFactor(x.pre.then(ux), y.gen, y.inv, y.post)
            nx = WhiskerFactor(x.pre, x.gen, x.inv, vy.then(y.post))
            yield TwoCell(hp, cell.src, cell.tgt,
                          fs[:i] + (ny, nx) + fs[i + 2:])
        # x is the right cell fired first: slide y before it the other way
        if x.pre == y.pre.then(uy) and y.post == vx.then(x.post):
            ny = WhiskerFactor(y.pre, y.gen, y.inv, ux.then(x.post))
            nx = WhiskerFactor(y.pre.then(vy), x.gen, x.inv, x.post)
            yield TwoCell(hp, cell.src, cell.tgt,
                          fs[:i] + (ny, nx) + fs[i + 2:])


def twocell_equal(hp, u, v, bound=None, max_visited=6000):
    """Decide equality of parallel 2-cell words.

    Returns a dict with `verdict` one of "equal" / "distinct" / "unknown" and
    `by` naming the evidence: "reduction" or a rewrite "certificate" (list of
    intermediate words) for equal; "normal-form" or "class-exhausted" for
    distinct; "bound" when the search gave out.
    """
    assert u.hp == hp and v.hp == hp
    if u.src != v.src or u.tgt != v.tgt:
        raise BoundaryMismatch("2-cells are not parallel")
    ru, rv = hp.reduce(u), hp.reduce(v)
    if ru.key() == rv.key():
        return {"verdict": EQUAL, "by": "reduction"}
    if not hp.twocell_relations and hp.flavor == SESQUI:
        return {"verdict": DISTINCT, "by": "normal-form"}
    if bound is None:
        bound = max(len(ru.factors), len(rv.factors)) + 2
    target = rv.key()
    seen = {ru.key(): None}
    queue = deque([ru])
    truncated = False
    while queue:
        cur = queue.popleft()
        neighbours = list(_relation_moves(hp, cur))
        if hp.flavor == TWOCAT:
            neighbours.extend(_interchange_moves(hp, cur))
        for nxt in neighbours:
            nxt = hp.reduce(nxt)
            k = nxt.key()
            if k in seen or len(nxt.factors) > bound:
                if k not in seen:
                    truncated = True
                continue
            seen[k] = cur.key()
            if k == target:
                chain = [k]
                while chain[-1] is not None:
                    chain.append(seen[chain[-1]])
                chain.pop()
                return {"verdict": EQUAL, "by": "certificate",
                        "steps": len(chain) - 1}
            if len(seen) >= max_visited:
                truncated = True
                queue.clear()
                break
            queue.append(nxt)
    if not truncated:
        return {"verdict": DISTINCT, "by": "class-exhausted"}
    return {"verdict": UNKNOWN, "by": "bound"}


# ---------------------------------------------------------------------------
# functors of higher presentations

class SesquiFunctor:
    """A functor of higher presentations: a base functor plus images of the
    2-cell generators as words of the target."""

    def __init__(self, dom, cod, fun, gen2_map, check=True):
        assert fun.dom == dom.base and fun.cod == cod.base
        if dom.flavor != cod.flavor:
            raise FlavorMismatch("functor across flavors")
        self.dom = dom
        self.cod = cod
        self.fun = fun
        self.gen2_map = dict(gen2_map)
        assert set(self.gen2_map) == set(dom.twocells)
        if check:
            for name, (s, t, invertible) in dom.twocells.items():
                img = self.gen2_map[name]
                assert img.hp == cod
                assert img.src == fun.apply(s) and img.tgt == fun.apply(t), \
                    "2-cell image of %r has the wrong boundary" % (name,)
                if invertible:
                    img.inverse()  # asserts every factor is invertible
        self._key = (dom._key, cod._key, fun._key,
                     tuple(sorted((label_key(n), w.key())
                                  for n, w in self.gen2_map.items())))

    def apply_obj(self, o):
        return self.fun.obj_map[o]

    def apply_mor(self, m):
        return self.fun.apply(m)

    def apply(self, cell):
        assert cell.hp == self.dom
        out = self.cod.identity2(self.fun.apply(cell.src))
        for f in cell.factors:
            img = self.gen2_map[f.gen]
            if f.inv:
                img = img.inverse()
            out = out.then(self.cod.whisker(self.fun.apply(f.pre), img,
                                            self.fun.apply(f.post)))
        return self.cod.reduce(out)

    def broken_2relation(self, bound=None, max_visited=6000):
        """First 2-cell relation of the domain whose images are not provably
        equal in the codomain, or None."""
        for lu, lv in self.dom.twocell_relations:
            res = twocell_equal(self.cod, self.apply(lu), self.apply(lv),
                                bound, max_visited)
            if res["verdict"] != EQUAL:
                return (lu, lv, res)
        return None

    def then(self, other):
        assert self.cod == other.dom
        return SesquiFunctor(self.dom, other.cod, self.fun.then(other.fun),
                             {n: other.apply(w)
                              for n, w in self.gen2_map.items()},
                             check=False)

    def __eq__(self, other):
        return isinstance(other, SesquiFunctor) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "SesquiFunctor(%r -> %r)" % (self.dom, self.cod)


def discrete_sesquifunctor(dom, cod, fun):
    """Lift a base functor to higher presentations; the domain must be
    locally discrete."""
    assert not dom.twocells
    return SesquiFunctor(dom, cod, fun, {})


# ---------------------------------------------------------------------------
# pushouts and local indiscreteness

def pushout_sesqui(f, g):
    """Pushout of higher presentations along a span of sesquifunctors."""
    if f.dom.flavor != g.dom.flavor or f.cod.flavor != g.cod.flavor:
        raise FlavorMismatch("pushout across flavors")
    assert f.dom == g.dom
    a, b, c = f.dom, f.cod, g.cod
    po = pushout_cat(f.fun, g.fun)
    lb, rb = po.left, po.right

    def is_bare(cell):
        return (len(cell.factors) == 1 and not cell.factors[0].inv
                and cell.factors[0].pre.is_identity()
                and cell.factors[0].post.is_identity())

    from .graphs import _UnionFind
    cuf = _UnionFind()
    for n in b.twocells:
        cuf.add(("l", n))
    for n in c.twocells:
        cuf.add(("r", n))
    rel_cells = []
    for n in a.twocells:
        wf, wg = f.gen2_map[n], g.gen2_map[n]
        if is_bare(wf) and is_bare(wg):
            cuf.union(("l", wf.factors[0].gen), ("r", wg.factors[0].gen))
        else:
            rel_cells.append(n)
    crep = {x: cuf.find(x) for x in cuf.parent}
    cmembers = {}
    for x, r in crep.items():
        cmembers.setdefault(r, []).append(x)

    inj_base = {"l": lb, "r": rb}
    side_hp = {"l": b, "r": c}
    cells = []
    for r, xs in cmembers.items():
        s, name = xs[0]
        src, tgt, invertible = side_hp[s].twocells[name]
        cells.append((r, inj_base[s].apply(src), inj_base[s].apply(tgt),
                      invertible))
        for s2, name2 in xs[1:]:
            s2rc, t2rc, inv2 = side_hp[s2].twocells[name2]
            assert inj_base[s2].apply(s2rc) == inj_base[s].apply(src)
            assert inj_base[s2].apply(t2rc) == inj_base[s].apply(tgt)
    scheme = DerivationScheme(po.apex, cells)

    def translate(side, cell, hp):
        inj = inj_base[side]
        factors = tuple(WhiskerFactor(inj.apply(fa.pre), crep[(side, fa.gen)],
                                      fa.inv, inj.apply(fa.post))
                        for fa in cell.factors)
        return TwoCell(hp, inj.apply(cell.src), inj.apply(cell.tgt), factors)

    proto = HigherPresentation(scheme, (), b.flavor)
    rels = [(translate("l", u, proto), translate("l", v, proto))
            for u, v in b.twocell_relations]
    rels += [(translate("r", u, proto), translate("r", v, proto))
             for u, v in c.twocell_relations]
    for n in rel_cells:
        rels.append((translate("l", f.gen2_map[n], proto),
                     translate("r", g.gen2_map[n], proto)))
    apex = HigherPresentation(scheme, rels, b.flavor)

    left = SesquiFunctor(b, apex, lb,
                         {n: apex.gen2(crep[("l", n)]) for n in b.twocells},
                         check=False)
    right = SesquiFunctor(c, apex, rb,
                          {n: apex.gen2(crep[("r", n)]) for n in c.twocells},
                          check=False)

    def mediate(u, v):
        assert u.dom == b and v.dom == c and u.cod == v.cod
        byside = {"l": u, "r": v}
        base = po.mediate(u.fun, v.fun)
        gen2 = {}
        for r, xs in cmembers.items():
            s, name = xs[0]
            gen2[r] = byside[s].gen2_map[name]
        return SesquiFunctor(apex, u.cod, base, gen2, check=False)

    return Pushout(apex, left, right, mediate)


def locally_indiscrete(base, flavor=SESQUI):
    """The higher presentation with exactly one invertible 2-cell between
    each ordered pair of distinct parallel morphisms, collapsed so that all
    parallel 2-cell words agree.
    """
    pairs = []
    for a in base.objects:
        for b in base.objects:
            ms = base.hom(a, b)
            pairs.extend((u, v) for u in ms for v in ms if u != v)
    name = {(u, v): ("al", u.path.key(), v.path.key()) for u, v in pairs}
    scheme = DerivationScheme(
        base, [(name[(u, v)], u, v, True) for u, v in pairs])
    hp = HigherPresentation(scheme, (), flavor)

    def al(u, v):
        return hp.gen2(name[(u, v)])

    rels = []
    byhom = {}
    for u, v in pairs:
        byhom.setdefault((u.src, u.tgt), set()).add(u)
        byhom.setdefault((u.src, u.tgt), set()).add(v)
    for ms in byhom.values():
        ms = sorted(ms, key=lambda m: m.path.sort_key())
        for u in ms:
            for v in ms:
                if u == v:
                    continue
                # inverse law and endo collapse
                rels.append((al(v, u), al(u, v).inverse()))
                rels.append((al(u, v).then(al(v, u)), hp.identity2(u)))
                for w in ms:
                    if w == u or w == v:
                        continue
                    rels.append((al(u, v).then(al(v, w)), al(u, w)))
    # whiskering a collapse cell is a collapse cell
    for u, v in pairs:
        for e in base.gens:
            if base.graph.tgt(e) == u.src:
                m = base.gen(e)
                wu, wv = m.then(u), m.then(v)
                lhs = hp.whisker(m, al(u, v), base.identity(u.tgt))
                rhs = al(wu, wv) if wu != wv else hp.identity2(wu)
                rels.append((lhs, rhs))
            if base.graph.src(e) == u.tgt:
                m = base.gen(e)
                wu, wv = u.then(m), v.then(m)
                lhs = hp.whisker(base.identity(u.src), al(u, v), m)
                rhs = al(wu, wv) if wu != wv else hp.identity2(wu)
                rels.append((lhs, rhs))
    return HigherPresentation(scheme, rels, flavor)


def generates_2cells(functor, bound=None, max_visited=6000, max_closure=400):
    """Is every 2-cell of the codomain generated, under whiskering, vertical
    composition and inverses, by images of domain 2-cells?

    It suffices to hit every codomain generator.  The closure is grown from
    the image words and membership is tested with `twocell_equal`.
    """
    cod = functor.cod
    targets = [cod.gen2(n) for n in cod.twocells]
    if not targets:
        return True
    closure = {}
    for n in functor.dom.twocells:
        w = cod.reduce(functor.apply(functor.dom.gen2(n)))
        closure[w.key()] = w
    grown = True
    while grown and len(closure) < max_closure:
        grown = False
        current = list(closure.values())
        fresh = []
        for w in current:
            if all(cod.twocells[f.gen][2] for f in w.factors):
                fresh.append(w.inverse())
            for e in cod.base.gens:
                m = cod.base.gen(e)
                if m.tgt == w.src.src:
                    fresh.append(cod.whisker(m, w, cod.base.identity(w.src.tgt)))
                if w.src.tgt == m.src:
                    fresh.append(cod.whisker(cod.base.identity(w.src.src), w, m))
        for a in current:
            for b in current:
                if a.tgt == b.src:
                    fresh.append(a.then(b))
        for w in fresh:
            w = cod.reduce(w)
            if w.factors and w.key() not in closure:
                closure[w.key()] = w
                grown = True
            if len(closure) >= max_closure:
                break
    for t in targets:
        hit = False
        for w in closure.values():
            if w.src == t.src and w.tgt == t.tgt:
                if twocell_equal(cod, t, w, bound, max_visited)["verdict"] == EQUAL:
                    hit = True
                    break
        if not hit:
            if t.src == t.tgt:
                res = twocell_equal(cod, t, cod.identity2(t.src), bound,
                                    max_visited)
                if res["verdict"] == EQUAL:
                    continue
            return False
    return True
