"""Command line entry points.

    cocatlab verify all [--out report.json] [--jobs N]
    cocatlab verify check <id> [--param key=value ...]
    cocatlab tensor --kind <kind> a.json b.json -o out.json
    cocatlab obstruction --monoid m.json [--max-len N]

Exit status 0 when every verdict matches its declared expectation, 1 when a
check ran to completion but disagreed, 2 on usage or input errors.  Reports
written with --out are canonical and byte-stable across runs; wall-clock
timings only ever go to stdout.
"""

import argparse
import json
import sys

from . import checks, tensors
from .errors import CocatlabError
from .monoids import search_comultiplication
from .serialize import (any_presentation_from_json, any_presentation_to_json,
                        canonical_dumps, monoid_from_json, read_json,
                        write_json)


def _param(text):
    if "=" not in text:
        raise argparse.ArgumentTypeError("expected key=value, got %r" % text)
    key, val = text.split("=", 1)
    try:
        val = json.loads(val)
    except json.JSONDecodeError:
        pass  # unquoted strings stay strings
    return key, val


def _verify_all(args):
    rep = checks.run_suite(jobs=args.jobs)
    d = rep.to_dict()
    ms = rep.timings()
    for row in d["checks"]:
        mark = "ok " if row["as_expected"] else "XXX"
        print("%s %-22s %-8s (expect %s) %9.1f ms"
              % (mark, row["id"], row["verdict"], row["expect"],
                 ms[row["id"]]))
    s = d["summary"]
    print("checks %d  as expected %d  mismatched %d  manifest %s"
          % (s["total"], s["as_expected"], s["mismatched"],
             d["manifest_hash"][:12]))
    if args.out:
        write_json(args.out, d)
        print("report written to %s" % args.out)
    return 0 if s["ok"] else 1


def _verify_check(args):
    rep = checks.run_check(args.id, dict(args.param or []))
    expect = checks.check_expectation(args.id)
    out = rep.to_dict()
    out["expect"] = expect
    out["as_expected"] = rep.verdict == expect
    out["elapsed_ms"] = round(rep.elapsed * 1000.0, 3)
    sys.stdout.write(canonical_dumps(out))
    return 0 if out["as_expected"] else 1


def _tensor(args):
    a = any_presentation_from_json(read_json(args.a))
    b = any_presentation_from_json(read_json(args.b))
    if args.kind in (tensors.FUNNY, tensors.CARTESIAN):
        # the plain tensors act on the underlying categories
        a = getattr(a, "base", a)
        b = getattr(b, "base", b)
    out = tensors.tensor(args.kind, a, b)
    write_json(args.out, any_presentation_to_json(out))
    return 0


def _obstruction(args):
    m = monoid_from_json(read_json(args.monoid))
    res = search_comultiplication(m, max_len=args.max_len)
    sys.stdout.write(canonical_dumps(res))
    return 0


def build_parser():
    top = argparse.ArgumentParser(
        prog="cocatlab",
        description="verify cocategory structures and the tensor "
                    "constructions they live in")
    sub = top.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run verification checks")
    vsub = verify.add_subparsers(dest="what", required=True)
    allp = vsub.add_parser("all", help="run the whole default suite")
    allp.add_argument("--out", metavar="FILE",
                      help="also write the canonical JSON report")
    allp.add_argument("--jobs", type=int, default=1, metavar="N",
                      help="run checks in N threads (report order is fixed)")
    allp.set_defaults(fn=_verify_all)
    onep = vsub.add_parser("check", help="run a single check by id")
    onep.add_argument("id", help="a check id, for example interchange.I")
    onep.add_argument("--param", action="append", type=_param,
                      metavar="KEY=VALUE",
                      help="override a default parameter (repeatable)")
    onep.set_defaults(fn=_verify_check)

    tp = sub.add_parser("tensor", help="tensor two presentation files")
    tp.add_argument("--kind", required=True, choices=tensors.KINDS)
    tp.add_argument("a", help="left presentation, JSON")
    tp.add_argument("b", help="right presentation, JSON")
    tp.add_argument("-o", "--out", required=True, metavar="FILE")
    tp.set_defaults(fn=_tensor)

    op = sub.add_parser(
        "obstruction",
        help="search a finite monoid for a counital comultiplication "
             "satisfying interchange")
    op.add_argument("--monoid", required=True, metavar="FILE",
                    help="monoid as JSON: elements, unit, table")
    op.add_argument("--max-len", type=int, default=6,
                    help="word length bound for candidate comultiplications")
    op.set_defaults(fn=_obstruction)
    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except CocatlabError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
