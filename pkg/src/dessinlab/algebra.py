"""The Brauer graph algebra of a clean dessin over the rationals.

Besides the multiplication table this module holds the closed formulas for
dimension, centre, first Hochschild cohomology and exceptional tubes, and an
independent linear-algebra oracle for each of them.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .dessin import CleanDessin, canonical_digest, passport, Passport
from .errors import FormulaInapplicable, ResourceLimitError
from .linalg import Echelon, nullspace
from .perm import compose, cycle_type_list, cycles
from .quiver import Quiver, quiver_of, relations_of

ORACLE_DIM_BOUND = 64


@dataclass(frozen=True)
class BasisPath:
    """A basis element of the algebra.

    ``kind`` is ``"trivial"`` (idempotent at ``vertex``), ``"path"`` (proper
    subpath of special cycle ``cycle`` from ``start`` of length ``length``) or
    ``"socle"`` (the common class of all special cycles at ``vertex``).
    """

    kind: str
    vertex: int = -1
    cycle: int = -1
    start: int = -1
    length: int = 0

    def __str__(self):
        if self.kind == "trivial":
            return "e%d" % self.vertex
        if self.kind == "socle":
            return "C%d" % self.vertex
        return "p[%d:%d+%d]" % (self.cycle, self.start, self.length)


class AlgebraTable:
    """Multiplication table on a basis of paths.

    Every product of two basis elements is zero or a single basis element,
    so the table stores the index of the product (or -1 for zero).
    """

    def __init__(self, basis: list[BasisPath], table: list[list[int]], quiver: Quiver):
        self.basis = basis
        self.table = table
        self.quiver = quiver
        self.index = {b: i for i, b in enumerate(basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return Fraction(1) if self.table[i][j] == k else Fraction(0)

    def unit(self) -> dict[int, Fraction]:
        return {i: Fraction(1) for i, b in enumerate(self.basis) if b.kind == "trivial"}

    def multiply(self, x: dict, y: dict) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, a in x.items():
            if not a:
                continue
            row = self.table[i]
            for j, b in y.items():
                k = row[j]
                if k >= 0 and b:
                    v = out.get(k, 0) + a * b
                    if v:
                        out[k] = v
                    else:
                        out.pop(k)
        return out

    def commutator(self, x: dict, y: dict) -> dict[int, Fraction]:
        out = self.multiply(x, y)
        for k, v in self.multiply(y, x).items():
            nv = out.get(k, 0) - v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return out


def _endpoints(q: Quiver, b: BasisPath) -> tuple[int, int]:
    if b.kind != "path":
        return b.vertex, b.vertex
    c = q.special_cycles[b.cycle]
    first = q.arrows[c.arrows[b.start]]
    last = q.arrows[c.arrows[(b.start + b.length - 1) % len(c)]]
    return first.source, last.target


def build_algebra(d: CleanDessin) -> AlgebraTable:
    """Basis and multiplication table of the Brauer graph algebra.

    For the single-edge dessin the quiver has no arrows and the result is
    the two-dimensional algebra spanned by the idempotent and the socle
    element ``x`` with ``x^2 = 0``.
    """
    q = quiver_of(d)
    basis = [BasisPath("trivial", vertex=v) for v in range(q.vertex_count)]
    for ci, c in enumerate(q.special_cycles):
        k = len(c)
        for p in range(k):
            for length in range(1, k):
                basis.append(BasisPath("path", cycle=ci, start=p, length=length))
    basis += [BasisPath("socle", vertex=v) for v in range(q.vertex_count)]
    index = {b: i for i, b in enumerate(basis)}
    ends = [_endpoints(q, b) for b in basis]

    def product(x: BasisPath, y: BasisPath, ex, ey) -> int:
        if ex[1] != ey[0]:
            return -1
        if x.kind == "trivial":
            return index[y]
        if y.kind == "trivial":
            return index[x]
        if x.kind == "socle" or y.kind == "socle":
            return -1
        k = len(q.special_cycles[x.cycle])
        if x.cycle != y.cycle or y.start != (x.start + x.length) % k:
            return -1  # contains a length-2 step off the special cycles
        total = x.length + y.length
        if total < k:
            return index[BasisPath("path", cycle=x.cycle, start=x.start, length=total)]
        if total == k:
            return index[BasisPath("socle", vertex=ex[0])]
        return -1  # strictly contains a full special cycle

    table = [[product(x, y, ends[i], ends[j]) for j, y in enumerate(basis)]
             for i, x in enumerate(basis)]
    return AlgebraTable(basis, table, q)


# -- closed formulas ---------------------------------------------------------

def dim_formula(d: CleanDessin) -> int:
    return 2 * d.n + sum(k * (k - 1) for k in cycle_type_list(d.sigma) if k >= 2)


def loop_arrow_count(d: CleanDessin) -> int:
    """Number of loop arrows, i.e. fixed points of ``phi``."""
    return len(d.phi.fixed_points())


def center_formula(d: CleanDessin) -> int:
    return 1 + d.n + loop_arrow_count(d)


def hh1_formula(d: CleanDessin) -> int:
    if all(len(c) == 1 for c in cycles(d.sigma)):
        raise FormulaInapplicable("empty quiver")
    faces = Counter(cycle_type_list(d.phi))
    return 2 - len(cycles(d.sigma)) + d.n + faces[1] + faces[2]


def tube_ranks(d: CleanDessin) -> list[int]:
    """Ranks of exceptional tubes, in non-increasing order."""
    out = []
    for m in cycle_type_list(d.phi):
        out += [m] if m % 2 else [m // 2, m // 2]
    return sorted(out, reverse=True)


def tube_ranks_oracle(d: CleanDessin) -> list[int]:
    return cycle_type_list(compose(d.phi, d.phi))


@dataclass(frozen=True)
class GreenWalk:
    start: int
    darts: tuple[int, ...]

    @property
    def period(self) -> int:
        return len(self.darts)


def green_walk(d: CleanDessin, i: int) -> GreenWalk:
    if not 1 <= i <= 2 * d.n:
        raise ValueError("dart %d outside {1..%d}" % (i, 2 * d.n))
    walk = [i]
    x = d.phi(i)
    while x != i:
        walk.append(x)
        x = d.phi(x)
    return GreenWalk(i, tuple(walk))


# -- oracles -----------------------------------------------------------------

def dim_oracle(d: CleanDessin) -> int:
    """Dimension of KQ/I by linear algebra on the path algebra.

    Paths containing a monomial relation (types two and three) are dropped;
    the surviving paths span KQ modulo the monomial ideal, and the type-one
    binomials multiplied on both sides by surviving paths span the rest of
    the ideal.  Uses only the relation lists, not the basis of
    :func:`build_algebra`.
    """
    q = quiver_of(d)
    if not q.arrows:
        return 2
    rels = relations_of(q)
    monomial = set(rels.type_two) | set(rels.type_three)
    lengths = sorted({len(r) for r in monomial})

    def dead(path: tuple) -> bool:
        return any(len(path) >= L and path[-L:] in monomial for L in lengths)

    surviving: list[tuple] = [("e", v) for v in range(q.vertex_count)]
    src = {("e", v): v for v in range(q.vertex_count)}
    tgt = dict(src)
    stack = [(a.id,) for a in q.arrows]
    while stack:
        path = stack.pop()
        if dead(path):
            continue
        surviving.append(path)
        src[path] = q.arrows[path[0]].source
        tgt[path] = q.arrows[path[-1]].target
        for b in q.out_arrows(tgt[path]):
            stack.append(path + (b.id,))
    col = {p: i for i, p in enumerate(surviving)}

    def concat(*parts) -> Optional[tuple]:
        out: tuple = ()
        for p in parts:
            if p[0] != "e":
                out += p
        if not out:
            return parts[0]
        return None if dead_anywhere(out) else out

    def dead_anywhere(path: tuple) -> bool:
        return any(path[s:s + L] in monomial
                   for L in lengths for s in range(len(path) - L + 1))

    ech = Echelon()
    for (ci, pi), (cj, pj) in rels.type_one:
        c1 = q.special_cycles[ci].rotation(pi)
        c2 = q.special_cycles[cj].rotation(pj)
        v = q.arrows[c1[0]].source
        for p in surviving:
            if tgt[p] != v:
                continue
            for r in surviving:
                if src[r] != v:
                    continue
                row: dict[int, int] = {}
                t1, t2 = concat(p, c1, r), concat(p, c2, r)
                if t1 is not None:
                    row[col[t1]] = row.get(col[t1], 0) + 1
                if t2 is not None:
                    row[col[t2]] = row.get(col[t2], 0) - 1
                ech.add(row)
    return len(surviving) - ech.rank


def _check_bound(a: AlgebraTable, bound: int) -> None:
    if a.dim > bound:
        raise ResourceLimitError(
            "algebra of dimension %d exceeds the oracle bound %d" % (a.dim, bound))


def center_equations(a: AlgebraTable) -> list[dict[int, int]]:
    """Rows of the linear system ``[z, b] = 0`` for every basis element b."""
    rows = []
    d = a.dim
    for j in range(d):
        per_k: dict[int, dict[int, int]] = {}
        for m in range(d):
            k1 = a.table[m][j]
            if k1 >= 0:
                per_k.setdefault(k1, {})
                per_k[k1][m] = per_k[k1].get(m, 0) + 1
            k2 = a.table[j][m]
            if k2 >= 0:
                per_k.setdefault(k2, {})
                per_k[k2][m] = per_k[k2].get(m, 0) - 1
        rows += [r for r in per_k.values() if any(r.values())]
    return rows


def center_oracle(a: AlgebraTable, bound: int = ORACLE_DIM_BOUND
                  ) -> tuple[int, list[list[Fraction]]]:
    """Dimension and a basis of the centre, by an exact nullspace."""
    _check_bound(a, bound)
    basis = nullspace(center_equations(a), a.dim)
    return len(basis), basis


def radical_center(a: AlgebraTable) -> list[list[Fraction]]:
    """Basis of Z(A) intersected with the span of non-idempotent paths."""
    rows = center_equations(a)
    rows += [{i: 1} for i, b in enumerate(a.basis) if b.kind == "trivial"]
    return nullspace(rows, a.dim)


def center_basis_formula(a: AlgebraTable) -> list[dict[int, Fraction]]:
    """The identity, one element per loop arrow and the socles, as vectors.

    For a loop arrow l in a special cycle l b_1 ... b_{k-1}, the arrow l
    itself is not central once k >= 3 (l b_1 is non-zero, b_1 l is not
    composable); the central element is the complementary path
    b_1 ... b_{k-1}.  The count, hence the centre dimension, is unchanged.
    """
    out = [a.unit()]
    q = a.quiver
    for ci, c in enumerate(q.special_cycles):
        k = len(c)
        for p, aid in enumerate(c.arrows):
            if q.arrows[aid].is_loop:
                b = BasisPath("path", cycle=ci, start=(p + 1) % k, length=k - 1)
                out.append({a.index[b]: Fraction(1)})
    for i, b in enumerate(a.basis):
        if b.kind == "socle":
            out.append({i: Fraction(1)})
    return out


def derivation_dimension(a: AlgebraTable) -> int:
    """Dimension of the space of linear maps D with D(xy) = D(x)y + xD(y).

    Unknown ``D[r][c]`` (coefficient of basis ``c`` in ``D(b_r)``) is
    column ``r * dim + c``.
    """
    d = a.dim
    table = a.table
    # lpre[i][k]: all c with b_i b_c = b_k ; rpre[j][k]: all c with b_c b_j = b_k
    lpre = [dict() for _ in range(d)]
    rpre = [dict() for _ in range(d)]
    for x in range(d):
        for y in range(d):
            k = table[x][y]
            if k >= 0:
                lpre[x].setdefault(k, []).append(y)
                rpre[y].setdefault(k, []).append(x)
    ech = Echelon()
    for i in range(d):
        for j in range(d):
            m = table[i][j]
            ks = set(rpre[j]) | set(lpre[i])
            if m >= 0:
                ks = range(d)
            for k in ks:
                row: dict[int, int] = {}
                if m >= 0:
                    row[m * d + k] = 1
                for c in rpre[j].get(k, ()):
                    col = i * d + c
                    row[col] = row.get(col, 0) - 1
                for c in lpre[i].get(k, ()):
                    col = j * d + c
                    row[col] = row.get(col, 0) - 1
                ech.add(row)
    return d * d - ech.rank


def hh1_oracle(a: AlgebraTable, bound: int = ORACLE_DIM_BOUND) -> int:
    """dim Der(A) - dim Inn(A), with dim Inn(A) = dim A - dim Z(A)."""
    _check_bound(a, bound)
    zdim, _ = center_oracle(a, bound)
    return derivation_dimension(a) - (a.dim - zdim)


def check_associativity(a: AlgebraTable, samples: int, rng: random.Random) -> bool:
    d = a.dim
    t = a.table
    for _ in range(samples):
        i, j, k = rng.randrange(d), rng.randrange(d), rng.randrange(d)
        ij = t[i][j]
        jk = t[j][k]
        left = t[ij][k] if ij >= 0 else -1
        right = t[i][jk] if jk >= 0 else -1
        if left != right:
            return False
    return True


def check_unit(a: AlgebraTable) -> bool:
    one = a.unit()
    return all(
        a.multiply(one, {i: Fraction(1)}) == {i: Fraction(1)}
        and a.multiply({i: Fraction(1)}, one) == {i: Fraction(1)}
        for i in range(a.dim))


# -- reports -----------------------------------------------------------------

@dataclass
class InvariantReport:
    dim_lambda: int
    dim_center: int
    dim_hh1: Optional[int]
    hh1_reason: Optional[str]
    tube_ranks: list[int]
    passport: Passport
    loop_arrow_count: int
    oracles: dict = field(default_factory=dict)

    def invariants(self) -> tuple:
        """The reported invariants as one comparable value."""
        return (self.dim_lambda, self.dim_center, self.dim_hh1,
                tuple(self.tube_ranks), self.loop_arrow_count)


def invariant_report(d: CleanDessin, verify: bool = False,
                     bound: int = ORACLE_DIM_BOUND) -> InvariantReport:
    try:
        hh1, reason = hh1_formula(d), None
    except FormulaInapplicable as exc:
        hh1, reason = None, str(exc)
    rep = InvariantReport(
        dim_lambda=dim_formula(d),
        dim_center=center_formula(d),
        dim_hh1=hh1,
        hh1_reason=reason,
        tube_ranks=tube_ranks(d),
        passport=passport(d),
        loop_arrow_count=loop_arrow_count(d),
    )
    if verify:
        a = build_algebra(d)
        rep.oracles = {
            "dim_lambda": dim_oracle(d),
            "dim_center": center_oracle(a, bound)[0],
            "dim_hh1": hh1_oracle(a, bound),
            "tube_ranks": tube_ranks_oracle(d),
        }
    return rep


def report_digest(d: CleanDessin) -> str:
    return canonical_digest(d)
