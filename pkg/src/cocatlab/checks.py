"""The check registry, the default manifest, and the suite runner.

Every check is a named, parameterized verification returning a CheckReport.
The manifest pairs check ids with parameters and an expected verdict; the
negative results (interchange for the indiscrete grid, the cokernel-pair
associator, the comultiplication searches) are declared with expected
verdict "fail", so the suite succeeds exactly when the non-existence
statements are reproduced.

Suite reports are canonical: entries in manifest order, no timestamps and no
timing data, so two runs over the same manifest serialize byte-identically.
Wall-clock times are collected separately for the human-readable summary.
"""

import hashlib
import time
from concurrent.futures import ThreadPoolExecutor

from . import cocats, tensors
from .errors import ManifestError, UnknownCheck
from .fincat import CATALOG, catalog_category, endofunctor_monoid
from .monoids import catalog_monoid, search_comultiplication, search_endo_2cell
from .report import BOUNDED, FAIL, PASS, VERDICTS, CheckReport
from .serialize import canonical_dumps

VERSION = "0.1.0"

_REGISTRY = {}


class Check:

    def __init__(self, check_id, citation, expected, defaults, fn):
        self.check_id = check_id
        self.citation = citation
        self.expected = expected
        self.defaults = dict(defaults)
        self.fn = fn


def _register(check_id, citation, expected, **defaults):
    def deco(fn):
        assert check_id not in _REGISTRY
        _REGISTRY[check_id] = Check(check_id, citation, expected, defaults, fn)
        return fn
    return deco


def registered_checks():
    return sorted(_REGISTRY)


def run_check(check_id, params=None):
    """Run one check by id.  Unknown parameters are rejected."""
    if check_id not in _REGISTRY:
        raise UnknownCheck("no check named %r (known: %s)"
                           % (check_id, ", ".join(registered_checks())))
    check = _REGISTRY[check_id]
    args = dict(check.defaults)
    for k, v in (params or {}).items():
        if k not in check.defaults:
            raise UnknownCheck("check %r takes no parameter %r"
                               % (check_id, k))
        args[k] = v
    t0 = time.perf_counter()
    verdict, details = check.fn(**args)
    elapsed = time.perf_counter() - t0
    return CheckReport(check_id, verdict, details, check.citation,
                       elapsed=elapsed)


def check_expectation(check_id):
    """The verdict a check is expected to produce."""
    if check_id not in _REGISTRY:
        raise UnknownCheck("no check named %r (known: %s)"
                           % (check_id, ", ".join(registered_checks())))
    return _REGISTRY[check_id].expected


# -- cocategory laws ---------------------------------------------------------

def _cocat_verdict(x, with_coassoc=True):
    rep = cocats.check_cocategory(x, with_coassoc=with_coassoc)
    return rep.verdict, rep.details


@_register("cocat.O",
           "the endpoint interval 1 => 2 => 3 in Set is a cocategory, "
           "coassociativity included", PASS)
def _check_cocat_o():
    return _cocat_verdict(cocats.interval_cocategory())


@_register("cocat.S",
           "the arrow interval 1 => 2 => 3 in Cat is a cocategory, "
           "coassociativity included", PASS)
def _check_cocat_s():
    return _cocat_verdict(cocats.arrow_cocategory())


@_register("mutant.O.swap",
           "exchanging m and p in the Set interval breaks a counit law", FAIL)
def _check_mutant_o_swap():
    return _cocat_verdict(cocats.swap_m_p(cocats.interval_cocategory()))


@_register("mutant.O.glue",
           "replacing q by m in the Set interval breaks the cospan laws",
           FAIL)
def _check_mutant_o_glue():
    return _cocat_verdict(cocats.drop_glue(cocats.interval_cocategory()))


@_register("mutant.S.swap",
           "exchanging m and p in the arrow interval leaves no counit", FAIL)
def _check_mutant_s_swap():
    return _cocat_verdict(cocats.swap_m_p(cocats.arrow_cocategory()))


@_register("mutant.S.glue",
           "replacing q by m in the arrow interval leaves no counit", FAIL)
def _check_mutant_s_glue():
    return _cocat_verdict(cocats.drop_glue(cocats.arrow_cocategory()))


# -- double cocategories ------------------------------------------------------

def _double_verdict(name):
    rep = cocats.check_double_cocategory(cocats.standard_instance(name))
    return rep.verdict, rep.details


@_register("double.SstarS",
           "the funny tensor square of the arrow interval is a double "
           "cocategory", PASS)
def _check_double_star():
    return _double_verdict("SstarS")


@_register("double.SxS",
           "the cartesian square of the arrow interval is a double "
           "cocategory", PASS)
def _check_double_times():
    return _double_verdict("SxS")


@_register("double.SgraylS",
           "the lax interchanger square of the arrow interval is a double "
           "cocategory among 2-categories", PASS)
def _check_double_grayl():
    return _double_verdict("SgraylS")


@_register("double.SgraypS",
           "the invertible interchanger square of the arrow interval is a "
           "double cocategory among 2-categories", PASS)
def _check_double_grayp():
    return _double_verdict("SgraypS")


def _interchange_verdict(pre):
    rep = cocats.check_interchange(pre)
    return rep.verdict, rep.details


@_register("interchange.SstarS",
           "middle four interchange holds in the funny tensor square", PASS)
def _check_interchange_star():
    pre = cocats.as_pre_double(cocats.standard_instance("SstarS"))
    return _interchange_verdict(pre)


@_register("interchange.SgraypS",
           "middle four interchange holds in the invertible interchanger "
           "square among 2-categories", PASS)
def _check_interchange_grayp():
    pre = cocats.as_pre_double(cocats.standard_instance("SgraypS"))
    return _interchange_verdict(pre)


@_register("interchange.I",
           "middle four interchange fails in the indiscrete interchanger "
           "grid among sesquicategories", FAIL)
def _check_interchange_i():
    return _interchange_verdict(cocats.standard_instance("I"))


@_register("underlying.I",
           "the underlying categories of the indiscrete grid complete to a "
           "double cocategory", PASS)
def _check_underlying_i():
    pre = cocats.underlying_pre_double(cocats.standard_instance("I"))
    rep = cocats.check_double_cocategory(cocats.complete_pre_double(pre))
    return rep.verdict, rep.details


# -- completion searches -------------------------------------------------------

def _search_verdict(candidate, bound=None):
    found = cocats.search_double_completions(cocats.arrow_cocategory(),
                                             candidate, bound)
    details = {"completions": len(found), "unique": len(found) == 1}
    return (PASS if found else FAIL), details


@_register("search.star",
           "the free boundary square admits exactly one double completion",
           PASS)
def _check_search_star():
    return _search_verdict(cocats.candidate_square())


@_register("search.times",
           "the commuting boundary square admits exactly one double "
           "completion", PASS)
def _check_search_times():
    return _search_verdict(cocats.candidate_square(commuting=True))


@_register("search.X1",
           "a square with one extra diagonal admits no double completion",
           FAIL)
def _check_search_x1():
    return _search_verdict(cocats.candidate_square(diagonals=1))


@_register("search.X2",
           "a square with two extra diagonals admits no double completion",
           FAIL)
def _check_search_x2():
    return _search_verdict(cocats.candidate_square(diagonals=2))


@_register("enum.cocats",
           "up to isomorphism the endpoint interval is the only Set "
           "cocategory on a point with |A2| <= 4", PASS, max_a2=4)
def _check_enum_cocats(max_a2):
    found = cocats.enumerate_set_cocategories(max_a2)
    o = cocats.interval_cocategory()
    good = len(found) == 1 and cocats.set_cocats_isomorphic(found[0], o)
    details = {"count": len(found),
               "isomorphic_to_interval": [cocats.set_cocats_isomorphic(x, o)
                                          for x in found]}
    return (PASS if good else FAIL), details


@_register("enum.doubles",
           "the square of the endpoint interval is the only Set double "
           "completion with |A22| <= 4, up to relabeling", PASS, max_a22=4)
def _check_enum_doubles(max_a22):
    found = cocats.search_set_double_completions(max_a22)
    o = cocats.interval_cocategory()
    target = cocats.canonical_set_double_key(cocats.product_set_double(o, o))
    keys = [cocats.canonical_set_double_key(dd) for dd in found]
    good = len(found) == 1 and keys[0] == target
    return (PASS if good else FAIL), {"count": len(found),
                                      "matches_product": [k == target
                                                          for k in keys]}


# -- tensor structure ----------------------------------------------------------

@_register("tensor.cells",
           "the interval squares carry one lax, one invertible, and two "
           "cokernel-pair interchangers respectively", PASS)
def _check_tensor_cells():
    two = catalog_category("two")
    out = {}
    for kind in (tensors.GRAY_LAX, tensors.GRAY_PSEUDO, tensors.TENSOR2):
        hp = tensors.tensor(kind, two, two)
        cells = [hp.twocells[n][2] for n in sorted(hp.twocells, key=repr)]
        out[kind] = {"twocells": len(cells),
                     "invertible": sum(1 for c in cells if c)}
    good = (out[tensors.GRAY_LAX] == {"twocells": 1, "invertible": 0}
            and out[tensors.GRAY_PSEUDO] == {"twocells": 1, "invertible": 1}
            and out[tensors.TENSOR2]["twocells"] == 2)
    return (PASS if good else FAIL), out


def _assoc_verdict(kind):
    rep = tensors.check_associator_extension(kind)
    return rep.verdict, rep.details


@_register("assoc.funny",
           "the funny associator square extends to an isomorphism "
           "(trivially: no 2-cells)", PASS)
def _check_assoc_funny():
    return _assoc_verdict(tensors.FUNNY)


@_register("assoc.gray_lax",
           "the lax interchanger associator square extends to an "
           "isomorphism of 2-categories", PASS)
def _check_assoc_gray_lax():
    return _assoc_verdict(tensors.GRAY_LAX)


@_register("assoc.gray_pseudo",
           "the invertible interchanger associator square extends to an "
           "isomorphism of 2-categories", PASS)
def _check_assoc_gray_pseudo():
    return _assoc_verdict(tensors.GRAY_PSEUDO)


@_register("assoc.tensor2",
           "the cokernel-pair associator square admits no extension to an "
           "isomorphism of 2-categories", FAIL)
def _check_assoc_tensor2():
    return _assoc_verdict(tensors.TENSOR2)


# -- monoid obstructions --------------------------------------------------------

def _comult_verdict(monoid_name, max_len):
    res = search_comultiplication(catalog_monoid(monoid_name), max_len)
    details = {"outcome": res["outcome"], "candidates": res["candidates"]}
    if res.get("assignment"):
        details["assignment"] = res["assignment"]
    if res.get("reason"):
        details["reason"] = res["reason"]
    return (FAIL if res["outcome"] == "none" else PASS), details


def _register_comult(name, expected):
    check_id = "comult.%s" % name
    if expected == FAIL:
        citation = ("no counital interchange-compatible comultiplication "
                    "exists on the %s monoid at word length 6" % name)
    else:
        citation = ("the trivial monoid carries exactly the trivial "
                    "comultiplication")

    @_register(check_id, citation, expected, max_len=6)
    def _fn(max_len, _name=name):
        return _comult_verdict(_name, max_len)


_register_comult("trivial", PASS)
for _m in ("Z2", "Z3", "Z4", "Z2xZ2", "idem2"):
    _register_comult(_m, FAIL)


def _endo2_verdict(monoid_name, max_len):
    res = search_endo_2cell(catalog_monoid(monoid_name), max_len)
    details = {"outcome": res["outcome"], "solutions": res["solutions"]}
    return (PASS if res["outcome"] == "only-trivial" else FAIL), details


def _register_endo2(name):
    check_id = "endo2.%s" % name
    citation = ("every comultiplication-compatible diagonal endo 2-cell "
                "over the %s monoid is an identity" % name)

    @_register(check_id, citation, PASS, max_len=6)
    def _fn(max_len, _name=name):
        return _endo2_verdict(_name, max_len)


for _m in ("trivial", "Z2", "Z3", "Z4", "Z2xZ2", "idem2", "free1trunc3"):
    _register_endo2(_m)


@_register("ends.catalog",
           "within the catalog, only the empty and the terminal category "
           "have a trivial endofunctor monoid; the walking arrow has "
           "exactly three endofunctors", PASS)
def _check_ends():
    sizes = {}
    for name in sorted(CATALOG):
        monoid, _ = endofunctor_monoid(catalog_category(name))
        sizes[name] = len(monoid.elements)
    trivial = sorted(n for n, k in sizes.items() if k == 1)
    good = trivial == ["one", "zero"] and sizes["two"] == 3
    return (PASS if good else FAIL), {"sizes": sizes, "trivial": trivial}


# -- suite --------------------------------------------------------------------

def default_manifest():
    """Every registered check with its default parameters and expectation."""
    return [{"id": cid, "params": dict(_REGISTRY[cid].defaults),
             "expect": _REGISTRY[cid].expected}
            for cid in registered_checks()]


def validate_manifest(manifest):
    for entry in manifest:
        if not isinstance(entry, dict) or "id" not in entry:
            raise ManifestError("manifest entries need an 'id'")
        cid = entry["id"]
        if cid not in _REGISTRY:
            raise ManifestError("unknown check id %r" % (cid,))
        for k in entry.get("params", {}):
            if k not in _REGISTRY[cid].defaults:
                raise ManifestError("check %r takes no parameter %r"
                                    % (cid, k))
        if entry.get("expect", PASS) not in VERDICTS:
            raise ManifestError("bad expected verdict %r"
                                % (entry.get("expect"),))
    return manifest


def manifest_hash(manifest):
    return hashlib.sha256(canonical_dumps(manifest).encode()).hexdigest()


class SuiteReport:
    """Reports of a whole run plus the pass/expectation bookkeeping."""

    def __init__(self, manifest, reports):
        self.manifest = manifest
        self.reports = reports
        self.expected = [e.get("expect", PASS) for e in manifest]
        self.matches = [r.verdict == e
                        for r, e in zip(reports, self.expected)]
        self.ok = all(self.matches)

    def to_dict(self):
        checks = []
        for entry, rep, exp, match in zip(self.manifest, self.reports,
                                          self.expected, self.matches):
            d = rep.to_dict()
            d["witness"] = d["details"].get("witness")
            d["expect"] = exp
            d["as_expected"] = match
            checks.append(d)
        counts = {v: 0 for v in VERDICTS}
        for rep in self.reports:
            counts[rep.verdict] += 1
        return {"version": VERSION,
                "manifest_hash": manifest_hash(self.manifest),
                "checks": checks,
                "summary": {"total": len(self.reports),
                            "verdicts": counts,
                            "as_expected": sum(self.matches),
                            "mismatched": len(self.matches)
                            - sum(self.matches),
                            "ok": self.ok}}

    def timings(self):
        # quarantined from the canonical payload
        return {r.check_id: round(r.elapsed * 1000.0, 3)
                for r in self.reports}


def run_suite(manifest=None, jobs=1):
    """Run every manifest entry and assemble the report in manifest order."""
    if manifest is None:
        manifest = default_manifest()
    validate_manifest(manifest)

    def one(entry):
        return run_check(entry["id"], entry.get("params"))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(one, manifest))
    else:
        reports = [one(e) for e in manifest]
    return SuiteReport(manifest, reports)
