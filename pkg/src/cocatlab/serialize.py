"""Reading and writing the JSON file formats.

Presentations: {"objects": [...], "arrows": [{"name", "src", "tgt"}, ...],
"relations": [[path, path], ...]} with path = {"start", "edges"}, plus an
optional "bound".  Presentations with 2-cells add "flavor", "twocells"
(name, src path, tgt path, invertible) and "twocell_relations" as pairs of
words; a word is its source path plus a list of whiskered factors.  Monoids:
{"elements", "unit", "table"} with the table row-major in element order.

Labels may be ints, strings, or nested tuples of those; tuples are encoded
as JSON arrays and decoded back, so round trips are exact.  Writing is
canonical: sorted keys, fixed separators, trailing newline.
"""

import json

from .errors import ManifestError
from .fincat import Presentation
from .graphs import Graph, Path
from .higher import (SESQUI, TWOCAT, DerivationScheme, HigherPresentation,
                     WhiskerFactor)
from .monoids import FinMonoid


def label_to_json(x):
    if isinstance(x, tuple):
        return [label_to_json(e) for e in x]
    return x


def label_from_json(x):
    if isinstance(x, list):
        return tuple(label_from_json(e) for e in x)
    return x


def path_to_json(p):
    return {"start": label_to_json(p.start),
            "edges": [label_to_json(e) for e in p.edges]}


def path_from_json(d):
    return Path(label_from_json(d["start"]),
                tuple(label_from_json(e) for e in d["edges"]))


def presentation_to_json(pres):
    g = pres.graph
    out = {
        "objects": [label_to_json(o) for o in g.vertices],
        "arrows": [{"name": label_to_json(e),
                    "src": label_to_json(g.src(e)),
                    "tgt": label_to_json(g.tgt(e))} for e in g.edges],
        "relations": [[path_to_json(u), path_to_json(v)]
                      for u, v in pres.relations],
    }
    if pres.bound is not None:
        out["bound"] = pres.bound
    return out


def presentation_from_json(d):
    try:
        graph = Graph([label_from_json(o) for o in d["objects"]],
                      [(label_from_json(a["name"]), label_from_json(a["src"]),
                        label_from_json(a["tgt"])) for a in d["arrows"]])
        relations = [(path_from_json(u), path_from_json(v))
                     for u, v in d.get("relations", ())]
        return Presentation(graph, relations, d.get("bound"))
    except (KeyError, TypeError, AssertionError) as err:
        raise ManifestError("bad presentation data: %s" % (err,))


def word_to_json(cell):
    return {"src": path_to_json(cell.src.path),
            "factors": [{"pre": path_to_json(f.pre.path),
                         "gen": label_to_json(f.gen),
                         "inv": f.inv,
                         "post": path_to_json(f.post.path)}
                        for f in cell.factors]}


def word_from_json(hp, d):
    src = hp.base.morphism(path_from_json(d["src"]))
    factors = [WhiskerFactor(hp.base.morphism(path_from_json(f["pre"])),
                             label_from_json(f["gen"]), bool(f["inv"]),
                             hp.base.morphism(path_from_json(f["post"])))
               for f in d["factors"]]
    return hp.cell(factors, src=src)


def higher_to_json(hp):
    out = presentation_to_json(hp.base)
    out["flavor"] = hp.flavor
    out["twocells"] = [{"name": label_to_json(n),
                        "src": path_to_json(hp.twocells[n][0].path),
                        "tgt": path_to_json(hp.twocells[n][1].path),
                        "invertible": hp.twocells[n][2]}
                       for n in sorted(hp.twocells, key=_label_sort)]
    out["twocell_relations"] = [[word_to_json(u), word_to_json(v)]
                                for u, v in hp.twocell_relations]
    return out


def _label_sort(n):
    from .graphs import label_key
    return label_key(n)


def higher_from_json(d):
    base = presentation_from_json(d)
    try:
        flavor = d.get("flavor", SESQUI)
        assert flavor in (SESQUI, TWOCAT), "unknown flavor %r" % (flavor,)
        cells = [(label_from_json(c["name"]),
                  base.morphism(path_from_json(c["src"])),
                  base.morphism(path_from_json(c["tgt"])),
                  bool(c.get("invertible", False)))
                 for c in d.get("twocells", ())]
        scheme = DerivationScheme(base, cells)
        hp = HigherPresentation(scheme, (), flavor)
        rels = [(word_from_json(hp, u), word_from_json(hp, v))
                for u, v in d.get("twocell_relations", ())]
        return HigherPresentation(scheme, rels, flavor)
    except (KeyError, TypeError, AssertionError) as err:
        raise ManifestError("bad 2-cell data: %s" % (err,))


def any_presentation_to_json(x):
    if isinstance(x, HigherPresentation):
        return higher_to_json(x)
    return presentation_to_json(x)


def any_presentation_from_json(d):
    if "twocells" in d or "flavor" in d:
        return higher_from_json(d)
    return presentation_from_json(d)


def monoid_to_json(m):
    els = list(m.elements)
    return {"elements": [label_to_json(e) for e in els],
            "unit": label_to_json(m.unit),
            "table": [[label_to_json(m.mul(a, b)) for b in els] for a in els]}


def monoid_from_json(d):
    try:
        els = [label_from_json(e) for e in d["elements"]]
        rows = d["table"]
        assert len(rows) == len(els), "table is not square"
        table = {}
        for a, row in zip(els, rows):
            assert len(row) == len(els), "table is not square"
            for b, v in zip(els, row):
                table[(a, b)] = label_from_json(v)
        return FinMonoid(els, label_from_json(d["unit"]), table)
    except (KeyError, TypeError, AssertionError) as err:
        raise ManifestError("bad monoid data: %s" % (err,))


def canonical_dumps(data):
    """Stable serialization: sorted keys, fixed separators, final newline."""
    return json.dumps(data, sort_keys=True, indent=2,
                      separators=(",", ": ")) + "\n"


def write_json(path, data):
    with open(path, "w") as fh:
        fh.write(canonical_dumps(data))


def read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as err:
        raise ManifestError("cannot read %s: %s" % (path, err))
