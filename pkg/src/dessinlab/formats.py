"""Text formats: cycle notation, dessin documents, JSON reports and DOT.

Cycle notation::

    permutation := cycle*
    cycle       := '(' int (ws int)* ')'

Points are 1-based and omitted points are fixed.  A dessin document is a
UTF-8 key/value file; ``#`` starts a comment::

    # Figure 1
    name  = fig1
    n     = 4
    sigma = (2 5 3)(4 6 8 7)
    alpha = (1 2)(3 4)(5 6)(7 8)    # optional, this is the default

``darts = N`` may replace ``n`` for general (not necessarily clean) pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from . import algebra
from .dessin import CleanDessin, canonical_digest, make_dessin
from .errors import ParseError
from .perm import Permutation, cycles, format_cycles, standard_involution
from .quiver import Quiver, quiver_of


def parse_permutation(text: str, domain_size: int, line: int = 1,
                      column: int = 1) -> Permutation:
    """Parse cycle notation; ``line``/``column`` locate ``text`` in its file."""
    img = list(range(1, domain_size + 1))
    seen: set[int] = set()
    pos = 0
    L = len(text)

    def err(msg: str, at: int):
        raise ParseError(msg, line, column + at)

    while pos < L:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == ")":
            err("unbalanced ')'", pos)
        if ch != "(":
            err("unexpected character %r" % ch, pos)
        open_at = pos
        pos += 1
        cyc: list[int] = []
        while True:
            while pos < L and text[pos].isspace():
                pos += 1
            if pos >= L:
                err("unbalanced '(': missing ')'", open_at)
            ch = text[pos]
            if ch == ")":
                pos += 1
                break
            if ch == "(":
                err("unbalanced '(': nested cycle", pos)
            if not ch.isdigit():
                err("unexpected character %r" % ch, pos)
            start = pos
            while pos < L and text[pos].isdigit():
                pos += 1
            x = int(text[start:pos])
            if not 1 <= x <= domain_size:
                err("point %d out of range 1..%d" % (x, domain_size), start)
            if x in seen:
                err("duplicate point %d" % x, start)
            seen.add(x)
            cyc.append(x)
        if not cyc:
            err("empty cycle", open_at)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
    return Permutation(img)


@dataclass
class DessinDocument:
    sigma: Permutation
    alpha: Permutation
    name: Optional[str] = None

    @property
    def domain_size(self) -> int:
        return self.sigma.domain_size

    def to_dessin(self) -> CleanDessin:
        return make_dessin(self.sigma, self.alpha)


_KEYS = ("name", "n", "darts", "sigma", "alpha")


def parse_document(text: str) -> DessinDocument:
    fields: dict[str, tuple[str, int, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        sep = min((body.find(c) for c in "=:" if c in body), default=-1)
        if sep < 0:
            raise ParseError("expected 'key = value'", lineno, len(body) - len(body.lstrip()) + 1)
        key = body[:sep].strip()
        if key not in _KEYS:
            raise ParseError("unknown key %r" % key, lineno, body.find(key) + 1)
        if key in fields:
            raise ParseError("duplicate key %r" % key, lineno, body.find(key) + 1)
        value = body[sep + 1:]
        col = sep + 2 + (len(value) - len(value.lstrip()))
        fields[key] = (value.strip(), lineno, col)

    if "n" in fields and "darts" in fields:
        raise ParseError("give either 'n' or 'darts', not both", fields["darts"][1], 1)
    if "n" in fields:
        size_key, factor = "n", 2
    elif "darts" in fields:
        size_key, factor = "darts", 1
    else:
        raise ParseError("missing 'n' (edge count)", 1, 1)
    raw, ln, col = fields[size_key]
    if not raw.isdigit() or int(raw) < 1:
        raise ParseError("%s must be a positive integer" % size_key, ln, col)
    size = factor * int(raw)

    if "sigma" not in fields:
        raise ParseError("missing 'sigma'", 1, 1)
    s = fields["sigma"]
    sigma = parse_permutation(s[0], size, s[1], s[2])
    if "alpha" in fields:
        a = fields["alpha"]
        alpha = parse_permutation(a[0], size, a[1], a[2])
    elif size % 2 == 0:
        alpha = standard_involution(size // 2)
    else:
        raise ParseError("'alpha' is required for an odd dart count", 1, 1)
    name = fields["name"][0] if "name" in fields else None
    return DessinDocument(sigma, alpha, name)


def format_document(d: CleanDessin, name: Optional[str] = None) -> str:
    lines = []
    if name:
        lines.append("name = %s" % name)
    lines.append("n = %d" % d.n)
    lines.append("sigma = %s" % format_cycles(d.sigma))
    lines.append("alpha = %s" % format_cycles(d.alpha))
    return "\n".join(lines) + "\n"


# -- reports -----------------------------------------------------------------

def report(d: CleanDessin, verify: bool = False, name: Optional[str] = None,
           bound: int = algebra.ORACLE_DIM_BOUND) -> dict:
    rep = algebra.invariant_report(d, verify=verify, bound=bound)
    out = {
        "n": d.n,
        "sigma": format_cycles(d.sigma, fixed_points=True),
        "alpha": format_cycles(d.alpha),
        "phi": format_cycles(d.phi, fixed_points=True),
        "passport": {
            "black_degrees": list(rep.passport.black_degrees),
            "face_degrees": list(rep.passport.face_degrees),
            "genus": rep.passport.genus,
        },
        "dim_lambda": rep.dim_lambda,
        "dim_center": rep.dim_center,
        "dim_hh1": rep.dim_hh1,
        "tube_ranks": rep.tube_ranks,
        "loop_arrows": rep.loop_arrow_count,
        "canonical_form": canonical_digest(d),
    }
    if name is not None:
        out["name"] = name
    if rep.hh1_reason is not None:
        out["dim_hh1_reason"] = rep.hh1_reason
    if verify:
        out["oracles"] = rep.oracles
    return out


def report_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def report_text(doc: dict) -> str:
    p = doc["passport"]
    lines = [
        "sigma        %s" % (doc["sigma"] or "()"),
        "phi          %s" % (doc["phi"] or "()"),
        "edges        %d" % doc["n"],
        "genus        %d" % p["genus"],
        "black        %s" % p["black_degrees"],
        "faces        %s" % p["face_degrees"],
        "dim Lambda   %d" % doc["dim_lambda"],
        "dim Z        %d" % doc["dim_center"],
        "dim HH1      %s" % (doc["dim_hh1"] if doc["dim_hh1"] is not None
                             else "n/a (%s)" % doc.get("dim_hh1_reason")),
        "tubes        %s" % doc["tube_ranks"],
        "loop arrows  %d" % doc["loop_arrows"],
        "canonical    %s" % doc["canonical_form"],
    ]
    if "oracles" in doc:
        for k in sorted(doc["oracles"]):
            lines.append("oracle %-12s %s" % (k, doc["oracles"][k]))
    return "\n".join(lines) + "\n"


def report_schema() -> dict:
    text = resources.files("dessinlab").joinpath("report.schema.json").read_text("utf-8")
    return json.loads(text)


# -- DOT ---------------------------------------------------------------------

_PALETTE = ("red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan")


def dessin_dot(d: CleanDessin, name: str = "dessin") -> str:
    """Bipartite multigraph; ``rotation`` gives each dart's slot at its black vertex."""
    out = ["graph %s {" % _dot_id(name)]
    verts = cycles(d.sigma)
    edges = cycles(d.alpha)
    for k, c in enumerate(verts):
        out.append('  b%d [shape=circle, style=filled, fillcolor=black, fontcolor=white, label="%d"];'
                   % (k, len(c)))
    for k, (i, j) in enumerate(edges):
        out.append('  w%d [shape=circle, style=filled, fillcolor=white, label="(%d %d)"];' % (k, i, j))
    edge_of = {x: k for k, e in enumerate(edges) for x in e}
    for k, c in enumerate(verts):
        for pos, x in enumerate(c):
            out.append('  b%d -- w%d [label="%d", dart=%d, rotation=%d];'
                       % (k, edge_of[x], x, x, pos))
    out.append("}")
    return "\n".join(out) + "\n"


def quiver_dot(q: Quiver, name: str = "quiver") -> str:
    out = ["digraph %s {" % _dot_id(name)]
    for v, (i, j) in enumerate(q.edge_darts):
        out.append('  v%d [label="(%d %d)"];' % (v, i, j))
    for a in q.arrows:
        ci = next(k for k, c in enumerate(q.special_cycles) if a.black_vertex == c.black_vertex)
        out.append('  v%d -> v%d [label="a%d", color=%s, special_cycle=%d, position=%d];'
                   % (a.source, a.target, a.id, _PALETTE[ci % len(_PALETTE)], ci, a.position))
    out.append("}")
    return "\n".join(out) + "\n"


def export_dot(obj, name: Optional[str] = None) -> str:
    if isinstance(obj, Quiver):
        return quiver_dot(obj, name or "quiver")
    if isinstance(obj, CleanDessin):
        return dessin_dot(obj, name or "dessin")
    raise TypeError("cannot export %r" % type(obj).__name__)


def _dot_id(name: str) -> str:
    return '"%s"' % name.replace('"', r'\"')


__all__ = [
    "DessinDocument", "parse_permutation", "parse_document", "format_document",
    "report", "report_json", "report_text", "report_schema", "export_dot",
    "dessin_dot", "quiver_dot", "quiver_of",
]
