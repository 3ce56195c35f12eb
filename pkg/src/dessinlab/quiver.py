"""The quiver of a clean dessin, its Brauer relations and admissible cuts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .dessin import CleanDessin
from .perm import cycles


@dataclass(frozen=True)
class Arrow:
    id: int
    source: int
    target: int
    black_vertex: int
    position: int

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class SpecialCycle:
    black_vertex: int
    arrows: tuple[int, ...]
    darts: tuple[int, ...]

    def __len__(self):
        return len(self.arrows)

    def rotation(self, start: int) -> tuple[int, ...]:
        """Arrow ids of the cycle beginning at position ``start``."""
        k = len(self.arrows)
        return tuple(self.arrows[(start + t) % k] for t in range(k))


@dataclass
class Quiver:
    """Vertices are edge indices of the dessin; arrows come from rotations."""

    vertex_count: int
    arrows: list[Arrow]
    special_cycles: list[SpecialCycle]
    edge_darts: list[tuple[int, int]]
    # dart -> (special cycle index, position); absent for degree-1 vertices
    dart_position: dict[int, tuple[int, int]] = field(default_factory=dict)

    def out_arrows(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def next_arrow(self, a: Arrow) -> Arrow:
        """Successor of ``a`` in its special cycle."""
        cyc = self.special_cycles_by_vertex[a.black_vertex]
        k = len(cyc)
        return self.arrows[cyc.arrows[(a.position + 1) % k]]

    @property
    def special_cycles_by_vertex(self) -> dict[int, SpecialCycle]:
        return {c.black_vertex: c for c in self.special_cycles}

    def rotations_at(self, v: int) -> list[tuple[int, int]]:
        """(special cycle index, start position) of every special cycle at ``v``."""
        out = []
        for ci, c in enumerate(self.special_cycles):
            for p in range(len(c)):
                if self.arrows[c.arrows[p]].source == v:
                    out.append((ci, p))
        return out

    def loop_arrows(self) -> list[Arrow]:
        return [a for a in self.arrows if a.is_loop]


@dataclass
class RelationSet:
    # pairs of special cycles at the same vertex, as (cycle index, start position)
    type_one: list[tuple[tuple[int, int], tuple[int, int]]]
    # paths C a, as arrow id tuples of length k + 1
    type_two: list[tuple[int, ...]]
    # length-2 paths that are not special-cycle subpaths
    type_three: list[tuple[int, int]]


AdmissibleCut = tuple  # one arrow id per special cycle, in special-cycle order


def quiver_of(d: CleanDessin) -> Quiver:
    edges = d.edges()
    edge_of = {}
    for v, (i, j) in enumerate(edges):
        edge_of[i] = edge_of[j] = v
    arrows: list[Arrow] = []
    special: list[SpecialCycle] = []
    dart_position = {}
    for bv, cyc in enumerate(cycles(d.sigma)):
        k = len(cyc)
        if k < 2:
            continue
        ids = []
        for p in range(k):
            a = Arrow(len(arrows), edge_of[cyc[p]], edge_of[cyc[(p + 1) % k]], bv, p)
            arrows.append(a)
            ids.append(a.id)
            dart_position[cyc[p]] = (len(special), p)
        special.append(SpecialCycle(bv, tuple(ids), tuple(cyc)))
    return Quiver(len(edges), arrows, special, edges, dart_position)


def relations_of(q: Quiver) -> RelationSet:
    one = []
    for i, j in q.edge_darts:
        if i in q.dart_position and j in q.dart_position:
            one.append((q.dart_position[i], q.dart_position[j]))
    two = []
    for c in q.special_cycles:
        for p in range(len(c)):
            rot = c.rotation(p)
            two.append(rot + rot[:1])
    three = []
    for a in q.arrows:
        nxt = q.next_arrow(a).id
        for b in q.out_arrows(a.target):
            if b.id != nxt:
                three.append((a.id, b.id))
    return RelationSet(one, two, three)


def admissible_cuts(q: Quiver) -> Iterator[AdmissibleCut]:
    """All ways of choosing one arrow from each special cycle."""
    return itertools.product(*(c.arrows for c in q.special_cycles))


def count_admissible_cuts(q: Quiver) -> int:
    total = 1
    for c in q.special_cycles:
        total *= len(c)
    return total


@dataclass
class GentleReport:
    ok: bool
    violations: list[str]

    def __bool__(self):
        return self.ok


def check_gentle(q: Quiver, cut: AdmissibleCut) -> GentleReport:
    """Check (S0)-(S3) for the algebra obtained by deleting ``cut``.

    The ideal of the cut algebra is generated by every Brauer relation in
    which some term survives the cut; with a genuine admissible cut only the
    length-2 monomials of type three remain.  Finite dimensionality is
    checked as well, since a gentle algebra is finite dimensional.
    """
    cut = tuple(cut)
    if len(cut) != len(q.special_cycles) or any(
            a not in c.arrows for a, c in zip(cut, q.special_cycles)):
        raise ValueError("not an admissible cut: need exactly one arrow per special cycle")
    removed = set(cut)
    kept = [a for a in q.arrows if a.id not in removed]
    rels = relations_of(q)

    def alive(path) -> bool:
        return not any(x in removed for x in path)

    surviving: list[tuple[int, ...]] = []
    for (ci, pi), (cj, pj) in rels.type_one:
        for ck, pk in ((ci, pi), (cj, pj)):
            path = q.special_cycles[ck].rotation(pk)
            if alive(path):
                surviving.append(path)
    surviving += [p for p in rels.type_two if alive(p)]
    surviving += [p for p in rels.type_three if alive(p)]
    zero2 = {p for p in surviving if len(p) == 2}

    bad = []
    for v in range(q.vertex_count):
        outs = sum(1 for a in kept if a.source == v)
        ins = sum(1 for a in kept if a.target == v)
        if outs > 2 or ins > 2:
            bad.append("S0: vertex %d has %d outgoing and %d incoming arrows" % (v, outs, ins))
    for a in kept:
        after = [b for b in kept if b.source == a.target]
        before = [c for c in kept if c.target == a.source]
        if sum((a.id, b.id) not in zero2 for b in after) > 1:
            bad.append("S1: arrow %d has two non-zero successors" % a.id)
        if sum((c.id, a.id) not in zero2 for c in before) > 1:
            bad.append("S1: arrow %d has two non-zero predecessors" % a.id)
        if sum((a.id, b.id) in zero2 for b in after) > 1:
            bad.append("S2: arrow %d has two zero successors" % a.id)
        if sum((c.id, a.id) in zero2 for c in before) > 1:
            bad.append("S2: arrow %d has two zero predecessors" % a.id)
    for p in surviving:
        if len(p) != 2:
            bad.append("S3: relation of length %d survives the cut" % len(p))
    if _has_infinite_path(kept, zero2):
        bad.append("cut algebra is infinite dimensional")
    return GentleReport(not bad, bad)


def _has_infinite_path(kept: list[Arrow], zero2: set) -> bool:
    # cycle detection in the graph a -> b whenever ab is a non-zero path
    succ = {a.id: [b.id for b in kept
                   if b.source == a.target and (a.id, b.id) not in zero2]
            for a in kept}
    state = dict.fromkeys(succ, 0)

    def visit(x) -> bool:
        state[x] = 1
        for y in succ[x]:
            if state[y] == 1 or (state[y] == 0 and visit(y)):
                return True
        state[x] = 2
        return False

    return any(state[x] == 0 and visit(x) for x in succ)
