"""``dessinlab`` command line.

Exit codes: 0 success, 1 validation failure, 2 parse error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional

from . import formats, mutation
from .dessin import (
    PassportFilter,
    canonical_digest,
    clean_cover,
    enumerate_dessins,
    find_isomorphism,
    passport,
    random_dessin,
    triangulate,
)
from .errors import ParseError, ResourceLimitError, ValidationError
from .perm import format_cycles
from .quiver import quiver_of

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_LIMIT = 0, 1, 2, 3


class _Failure(Exception):
    """A negative answer that should exit with status 1."""


def _load(path: str) -> formats.DessinDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc.strerror)) from exc
    try:
        return formats.parse_document(text)
    except ParseError as exc:
        raise ParseError("%s: %s" % (path, exc.reason), exc.line, exc.column) from exc


def _load_dessin(path: str):
    doc = _load(path)
    return doc.to_dessin(), doc.name


def _int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError("expected integers like 4,3,1: %r" % text)
    if not vals or min(vals) < 1:
        raise argparse.ArgumentTypeError("expected positive integers: %r" % text)
    return vals


def _emit(args, text: Optional[str] = None, payload=None) -> None:
    if args.format == "json":
        out = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        out = text if text.endswith("\n") else text + "\n"
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)


def _dessin_payload(d, name=None) -> dict:
    out = {"n": d.n, "sigma": format_cycles(d.sigma), "alpha": format_cycles(d.alpha),
           "canonical_form": canonical_digest(d)}
    if name:
        out["name"] = name
    return out


# -- subcommands --------------------------------------------------------------

def cmd_validate(args):
    doc = _load(args.file)
    d = doc.to_dessin()
    p = passport(d)
    _emit(args, "ok: %d edges, genus %d, black %s, faces %s"
          % (d.n, p.genus, list(p.black_degrees), list(p.face_degrees)),
          {"valid": True, **p.as_dict()})


def cmd_info(args):
    d, name = _load_dessin(args.file)
    rep = formats.report(d, verify=args.verify, name=name)
    if args.format == "json":
        _emit(args, payload=rep)
    else:
        _emit(args, formats.report_text(rep))


def cmd_mutate(args):
    d, name = _load_dessin(args.file)
    steps = []
    for _ in range(args.times):
        step = mutation.mutate(d, args.edge)
        steps.append(step.case)
        d = step.result
    payload = _dessin_payload(d, name)
    payload["cases"] = steps
    _emit(args, formats.format_document(d, name), payload)


def cmd_period(args):
    d, _ = _load_dessin(args.file)
    exact = mutation.exact_period(d, args.edge)
    bound = mutation.period_bound(d, args.edge)
    _emit(args, "exact=%d bound=%d" % (exact, bound), {"exact": exact, "bound": bound})


def cmd_orbit(args):
    d, _ = _load_dessin(args.file)
    mc = mutation.mutation_class(d, limit=args.limit)
    stars = mc.stars
    loops = [k for k in stars if mutation.has_loop(mc.dessins[k])]
    payload = {
        "size": len(mc),
        "moves": len(mc.adjacency),
        "stars": len(stars),
        "stars_with_loop": len(loops),
        "members": [{"sigma": format_cycles(x.sigma), "path": mc.path_to(k)}
                    for k, x in enumerate(mc.dessins)],
    }
    lines = ["class size %d, %d moves, %d generalized stars (%d with a loop)"
             % (len(mc), len(mc.adjacency), len(stars), len(loops))]
    for k, x in enumerate(mc.dessins):
        lines.append("  %-28s via %s" % (format_cycles(x.sigma), mc.path_to(k)))
    _emit(args, "\n".join(lines), payload)


def cmd_star(args):
    d, name = _load_dessin(args.file)
    red = mutation.star_reduce(d, limit=args.limit)
    payload = {"path": red.path, "has_loop": red.has_loop, "star": _dessin_payload(red.star)}
    text = "path %s\nloop %s\n%s" % (red.path, "yes" if red.has_loop else "no",
                                      formats.format_document(red.star))
    _emit(args, text, payload)


def cmd_iso(args):
    d1, _ = _load_dessin(args.a)
    d2, _ = _load_dessin(args.b)
    g = find_isomorphism(d1, d2)
    if g is None:
        _emit(args, "not isomorphic", {"isomorphic": False})
        raise _Failure()
    _emit(args, "isomorphic via %s" % (format_cycles(g) or "()"),
          {"isomorphic": True, "conjugator": format_cycles(g)})


def cmd_derived_eq(args):
    d1, _ = _load_dessin(args.a)
    d2, _ = _load_dessin(args.b)
    v = mutation.derived_equivalent(d1, d2, limit=args.limit)
    text = v.kind
    if v.path is not None:
        text += "\npath %s" % v.path
    if v.reason:
        text += "\nreason %s" % v.reason
    _emit(args, text, {"verdict": v.kind, "path": v.path, "reason": v.reason})


def cmd_enumerate(args):
    flt = PassportFilter(
        genus=args.genus,
        vertices=args.vertices,
        face_degrees=args.faces,
        black_degrees=args.black,
    )
    found = enumerate_dessins(args.edges, flt, bound=max(5, args.edges) if args.force else 5)
    lines = ["%d classes" % len(found)]
    lines += ["  %s" % format_cycles(d.sigma) for d in found]
    _emit(args, "\n".join(lines),
          {"count": len(found), "dessins": [_dessin_payload(d) for d in found]})


def cmd_clean(args):
    doc = _load(args.file)
    d = clean_cover(doc.sigma, doc.alpha)
    _emit(args, formats.format_document(d, doc.name), _dessin_payload(d, doc.name))


def cmd_triangulate(args):
    d, name = _load_dessin(args.file)
    t = triangulate(d)
    _emit(args, formats.format_document(t, name), _dessin_payload(t, name))


def cmd_random(args):
    d = random_dessin(args.edges, random.Random(args.seed))
    _emit(args, formats.format_document(d), _dessin_payload(d))


def cmd_dot(args):
    d, name = _load_dessin(args.file)
    obj = quiver_of(d) if args.quiver else d
    text = formats.export_dot(obj, name)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- wiring -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)
    common.add_argument("--limit", type=int, metavar="N", default=argparse.SUPPRESS,
                        help="maximum mutation-class size")
    common.add_argument("--verify", action="store_true", default=argparse.SUPPRESS,
                        help="recompute invariants with the oracles")

    p = argparse.ArgumentParser(prog="dessinlab",
                                description="Clean dessins, Brauer graph algebras and Kauer moves.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--limit", type=int, metavar="N", default=mutation.CLASS_LIMIT)
    p.add_argument("--verify", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "parse a document and check it is a clean dessin").add_argument("file")
    add("info", cmd_info, "invariant report").add_argument("file")
    sp = add("mutate", cmd_mutate, "apply the Kauer move at an edge")
    sp.add_argument("--edge", type=int, required=True, metavar="DART")
    sp.add_argument("--times", type=int, default=1)
    sp.add_argument("file")
    sp = add("period", cmd_period, "exact period and stated bound of an edge")
    sp.add_argument("--edge", type=int, required=True, metavar="DART")
    sp.add_argument("file")
    add("orbit", cmd_orbit, "mutation class statistics").add_argument("file")
    add("star", cmd_star, "shortest reduction to a generalized star").add_argument("file")
    sp = add("iso", cmd_iso, "find a relabelling between two dessins")
    sp.add_argument("a")
    sp.add_argument("b")
    sp = add("derived-eq", cmd_derived_eq, "derived-equivalence verdict")
    sp.add_argument("a")
    sp.add_argument("b")
    sp = add("enumerate", cmd_enumerate, "isomorphism classes with n edges")
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--genus", type=int)
    sp.add_argument("--vertices", type=int, help="number of black vertices")
    sp.add_argument("--faces", type=_int_list, metavar="DEGREES",
                    help="face degree multiset, e.g. 8 or 4,4")
    sp.add_argument("--black", type=_int_list, metavar="DEGREES",
                    help="black degree multiset, e.g. 4,3,1")
    sp.add_argument("--force", action="store_true", help="allow more than 5 edges")
    add("clean", cmd_clean, "clean cover of a general (sigma, alpha) pair").add_argument("file")
    add("triangulate", cmd_triangulate, "barycentric triangulation").add_argument("file")
    sp = add("random", cmd_random, "uniformly random labelled dessin")
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp = add("dot", cmd_dot, "Graphviz export of the dessin or its quiver")
    sp.add_argument("--quiver", action="store_true")
    sp.add_argument("file")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        args.func(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print("invalid (%s): %s" % (exc.invariant, exc), file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return EXIT_LIMIT
    except _Failure:
        return EXIT_INVALID
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
