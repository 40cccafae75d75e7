"""Ambient settings for cocategory data: finite sets, categories, and
sesqui/2-categories, under one interface.

A world knows identities, diagrammatic composition, decidable (possibly
three-valued) morphism equality, pushouts along spans, and how to recover
pushout structure for an apex given only its two injections.
"""

from . import finset, fincat, higher
from .higher import EQUAL, DISTINCT, UNKNOWN


class SetWorld:
    kind = "set"

    def identity(self, obj):
        return finset.identity_fn(obj)

    def compose(self, f, g):
        return f.then(g)

    def equal(self, f, g):
        if f == g:
            return {"verdict": EQUAL}
        diff = sorted(x for x in f.map if f.map[x] != g.map[x])
        return {"verdict": DISTINCT, "witness": {"at": diff[0] if diff else None,
                                                 "lhs": f.map.get(diff[0] if diff else None),
                                                 "rhs": g.map.get(diff[0] if diff else None)}}

    def pushout(self, f, g):
        return finset.pushout_set(f, g)

    def derive_pushout(self, left, right):
        apex = left.cod
        assert right.cod == apex
        origin = {}
        for x in apex:
            for side, inj in (("l", left), ("r", right)):
                hits = [y for y in inj.dom if inj(y) == x]
                if hits:
                    origin[x] = (side, hits[0])
                    break
            assert x in origin, "apex element %r not covered" % (x,)

        def mediate(u, v):
            byside = {"l": u, "r": v}
            return finset.SetFn(apex, u.cod,
                                {x: byside[s](y) for x, (s, y) in origin.items()})

        return fincat.Pushout(apex, left, right, mediate)

    def describe(self, f):
        return {"map": {str(k): str(v) for k, v in sorted(
            f.map.items(), key=lambda kv: str(kv[0]))}}


class CatWorld:
    kind = "cat"

    def identity(self, obj):
        return obj.id_functor()

    def compose(self, f, g):
        return f.then(g)

    def equal(self, f, g):
        if f == g:
            return {"verdict": EQUAL}
        wit = None
        if f.dom == g.dom:
            for o in f.dom.objects:
                if f.obj_map[o] != g.obj_map[o]:
                    wit = {"at": str(o), "lhs": str(f.obj_map[o]),
                           "rhs": str(g.obj_map[o])}
                    break
            else:
                for e in f.dom.gens:
                    if f.gen_map[e] != g.gen_map[e]:
                        wit = {"at": str(e),
                               "lhs": str(f.gen_map[e].path),
                               "rhs": str(g.gen_map[e].path)}
                        break
        return {"verdict": DISTINCT, "witness": wit}

    def pushout(self, f, g):
        return fincat.pushout_cat(f, g)

    def derive_pushout(self, left, right):
        return fincat.derive_pushout(left, right)

    def describe(self, f):
        return {"objects": {str(o): str(v) for o, v in sorted(
                    f.obj_map.items(), key=lambda kv: str(kv[0]))},
                "generators": {str(e): str(m.path) for e, m in sorted(
                    f.gen_map.items(), key=lambda kv: str(kv[0]))}}


class HigherWorld:
    """Sesquicategories or 2-categories, depending on the data's flavor.

    Functor equality is structural on the underlying functor and semantic
    (via the bounded word problem) on 2-cell generator images, so the verdict
    can be unknown.
    """

    kind = "higher"

    def __init__(self, bound=None, max_visited=6000):
        self.bound = bound
        self.max_visited = max_visited

    def identity(self, obj):
        return obj.id_sfunctor()

    def compose(self, f, g):
        return f.then(g)

    def equal(self, f, g):
        if f.fun != g.fun:
            return {"verdict": DISTINCT,
                    "witness": {"at": "underlying functor"}}
        out = {"verdict": EQUAL}
        for n in sorted(f.dom.twocells, key=str):
            res = higher.twocell_equal(f.cod, f.gen2_map[n], g.gen2_map[n],
                                       self.bound, self.max_visited)
            if res["verdict"] == DISTINCT:
                return {"verdict": DISTINCT,
                        "witness": {"at": str(n),
                                    "lhs": _word_str(f.gen2_map[n]),
                                    "rhs": _word_str(g.gen2_map[n]),
                                    "by": res["by"]}}
            if res["verdict"] == UNKNOWN:
                out = {"verdict": UNKNOWN, "witness": {"at": str(n)}}
        return out

    def pushout(self, f, g):
        return higher.pushout_sesqui(f, g)

    def derive_pushout(self, left, right):
        apex = left.cod
        assert right.cod == apex
        base = fincat.derive_pushout(left.fun, right.fun)
        origin = {}
        for n in apex.twocells:
            target = apex.reduce(apex.gen2(n))
            for side, inj in (("l", left), ("r", right)):
                hits = [m for m in inj.dom.twocells
                        if inj.cod.reduce(inj.apply(inj.dom.gen2(m))).key()
                        == target.key()]
                if hits:
                    origin[n] = (side, hits[0])
                    break
            assert n in origin, "apex 2-cell %r not covered" % (n,)

        def mediate(u, v):
            byside = {"l": u, "r": v}
            fun = base.mediate(u.fun, v.fun)
            gen2 = {n: byside[s].gen2_map[m] for n, (s, m) in origin.items()}
            return higher.SesquiFunctor(apex, u.cod, fun, gen2, check=False)

        return fincat.Pushout(apex, left, right, mediate)

    def describe(self, f):
        cat = CatWorld().describe(f.fun)
        cat["twocells"] = {str(n): _word_str(w) for n, w in sorted(
            f.gen2_map.items(), key=lambda kv: str(kv[0]))}
        return cat


def _word_str(cell):
    if not cell.factors:
        return "id(%s)" % (cell.src.path,)
    bits = []
    for fa in cell.factors:
        gen = "%s%s" % (fa.gen, "^-1" if fa.inv else "")
        bits.append("(%s | %s | %s)" % (fa.pre.path, gen, fa.post.path))
    return " . ".join(bits)
