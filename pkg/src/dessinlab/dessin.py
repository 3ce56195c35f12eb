"""Clean dessins d'enfants as permutation pairs.

A clean dessin with ``n`` edges lives on the dart set {1, ..., 2n}.  ``sigma``
records the counter-clockwise rotation at black vertices, ``alpha`` pairs the
two darts of each edge and ``phi = (sigma alpha)^-1`` runs around faces.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .errors import ResourceLimitError, ValidationError
from .perm import (
    Permutation,
    compose,
    cycle_type_list,
    cycles,
    inverse,
    is_fpf_involution,
    is_transitive,
    standard_involution,
)

ENUMERATION_BOUND = 5


@dataclass(frozen=True)
class CleanDessin:
    sigma: Permutation
    alpha: Permutation
    phi: Permutation = field(compare=False, repr=False)

    @property
    def n(self) -> int:
        """Number of edges."""
        return self.sigma.domain_size // 2

    @property
    def darts(self) -> range:
        return range(1, 2 * self.n + 1)

    def black_vertices(self) -> list[tuple[int, ...]]:
        return cycles(self.sigma)

    def edges(self) -> list[tuple[int, int]]:
        return [c for c in cycles(self.alpha)]

    def faces(self) -> list[tuple[int, ...]]:
        return cycles(self.phi)

    @property
    def genus(self) -> int:
        chi = len(cycles(self.sigma)) - self.n + len(cycles(self.phi))
        return (2 - chi) // 2

    def __str__(self):
        return "sigma=%s alpha=%s" % (self.sigma, self.alpha)


@dataclass(frozen=True)
class Passport:
    black_degrees: tuple[int, ...]
    face_degrees: tuple[int, ...]
    edge_count: int
    genus: int

    @property
    def vertex_count(self) -> int:
        return len(self.black_degrees)

    @property
    def face_count(self) -> int:
        return len(self.face_degrees)

    def as_dict(self) -> dict:
        return {
            "black_degrees": list(self.black_degrees),
            "face_degrees": list(self.face_degrees),
            "edge_count": self.edge_count,
            "genus": self.genus,
        }


@dataclass(frozen=True)
class PassportFilter:
    """Optional constraints for enumeration; ``None`` means unconstrained."""

    genus: Optional[int] = None
    vertices: Optional[int] = None
    faces: Optional[int] = None
    face_degrees: Optional[tuple[int, ...]] = None
    black_degrees: Optional[tuple[int, ...]] = None

    def accepts(self, p: Passport) -> bool:
        if self.genus is not None and p.genus != self.genus:
            return False
        if self.vertices is not None and p.vertex_count != self.vertices:
            return False
        if self.faces is not None and p.face_count != self.faces:
            return False
        if (self.face_degrees is not None
                and p.face_degrees != tuple(sorted(self.face_degrees, reverse=True))):
            return False
        if (self.black_degrees is not None
                and p.black_degrees != tuple(sorted(self.black_degrees, reverse=True))):
            return False
        return True


@dataclass(frozen=True)
class EdgeRef:
    i: int
    j: int
    leaf: bool
    loop: bool
    trivial_loop: bool

    @property
    def darts(self) -> tuple[int, int]:
        return (self.i, self.j)


def make_dessin(sigma: Permutation, alpha: Permutation) -> CleanDessin:
    """Validate ``(sigma, alpha)`` and return the clean dessin it encodes."""
    if sigma.domain_size != alpha.domain_size:
        raise ValidationError(
            "domain", "sigma and alpha act on different domains (%d vs %d)"
            % (sigma.domain_size, alpha.domain_size))
    if sigma.domain_size % 2:
        raise ValidationError(
            "even-domain", "a clean dessin needs an even number of darts")
    if not is_fpf_involution(alpha):
        raise ValidationError(
            "fpf-involution", "alpha is not a fixed-point-free involution")
    if not is_transitive([sigma, alpha]):
        raise ValidationError(
            "transitivity", "<sigma, alpha> does not act transitively")
    return CleanDessin(sigma, alpha, inverse(compose(sigma, alpha)))


def from_cycles(sigma_cycles, n: int, alpha_cycles=None) -> CleanDessin:
    """Convenience constructor; ``alpha`` defaults to (1 2)(3 4)...."""
    sigma = Permutation.from_cycles(sigma_cycles, 2 * n)
    if alpha_cycles is None:
        alpha = standard_involution(n)
    else:
        alpha = Permutation.from_cycles(alpha_cycles, 2 * n)
    return make_dessin(sigma, alpha)


def passport(d: CleanDessin) -> Passport:
    return Passport(
        black_degrees=tuple(cycle_type_list(d.sigma)),
        face_degrees=tuple(cycle_type_list(d.phi)),
        edge_count=d.n,
        genus=d.genus,
    )


def classify_edge(d: CleanDessin, i: int) -> EdgeRef:
    if not 1 <= i <= 2 * d.n:
        raise ValueError("dart %d outside {1..%d}" % (i, 2 * d.n))
    j = d.alpha(i)
    a, b = min(i, j), max(i, j)
    sig, phi = d.sigma, d.phi
    leaf = sig(a) == a or sig(b) == b
    loop = _same_cycle(sig, a, b)
    trivial = phi(a) == a or phi(b) == b
    return EdgeRef(a, b, leaf, loop, trivial)


def _same_cycle(p: Permutation, a: int, b: int) -> bool:
    x = p(a)
    while x != a:
        if x == b:
            return True
        x = p(x)
    return a == b


def conjugate(d: CleanDessin, g: Permutation) -> CleanDessin:
    """Relabel darts along ``g`` (dart ``x`` becomes ``x^g``)."""
    return CleanDessin(d.sigma.conjugate(g), d.alpha.conjugate(g), d.phi.conjugate(g))


# -- canonical forms ---------------------------------------------------------

def _traversal_labels(s: Sequence[int], a: Sequence[int], root: int) -> list[int]:
    # 0-based; discovery order of a breadth-first walk taking sigma then alpha
    n = len(s)
    label = [-1] * n
    label[root] = 0
    order = [root]
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for y in (s[x], a[x]):
            if label[y] < 0:
                label[y] = len(order)
                order.append(y)
    return label


def _encode(s: Sequence[int], a: Sequence[int], label: Sequence[int]) -> tuple[int, ...]:
    n = len(s)
    rs = [0] * n
    ra = [0] * n
    for x in range(n):
        rs[label[x]] = label[s[x]]
        ra[label[x]] = label[a[x]]
    return tuple(rs) + tuple(ra)


def _min_labelling(d: CleanDessin) -> tuple[tuple[int, ...], list[int]]:
    s = [x - 1 for x in d.sigma.images]
    a = [x - 1 for x in d.alpha.images]
    best = None
    best_label = None
    for root in range(len(s)):
        label = _traversal_labels(s, a, root)
        enc = _encode(s, a, label)
        if best is None or enc < best:
            best, best_label = enc, label
    return best, best_label


def _to_bytes(enc: Sequence[int]) -> bytes:
    # fixed-width big-endian keeps byte order equal to tuple order
    return b"".join(x.to_bytes(2, "big") for x in enc)


def canonical_form(d: CleanDessin) -> bytes:
    """Encoding equal for two dessins iff they are isomorphic."""
    return _to_bytes(_min_labelling(d)[0])


def canonical_digest(d: CleanDessin) -> str:
    return hashlib.sha256(canonical_form(d)).hexdigest()[:16]


def find_isomorphism(d1: CleanDessin, d2: CleanDessin) -> Optional[Permutation]:
    """Return ``g`` with ``(sigma1^g, alpha1^g) = (sigma2, alpha2)`` or None."""
    if d1.n != d2.n:
        return None
    e1, l1 = _min_labelling(d1)
    e2, l2 = _min_labelling(d2)
    if e1 != e2:
        return None
    inv2 = [0] * len(l2)
    for x, lab in enumerate(l2):
        inv2[lab] = x
    return Permutation([inv2[l1[x]] + 1 for x in range(len(l1))])


def is_isomorphic(d1: CleanDessin, d2: CleanDessin) -> bool:
    return d1.n == d2.n and canonical_form(d1) == canonical_form(d2)


# -- enumeration -------------------------------------------------------------

def _standardize(s: Sequence[int], a: Sequence[int]) -> CleanDessin:
    # relabel 0-based (s, a) so that alpha becomes (1 2)(3 4)...
    n = len(s)
    new = [-1] * n
    k = 0
    for x in range(n):
        if new[x] < 0:
            new[x] = k
            new[a[x]] = k + 1
            k += 2
    sig = [0] * n
    for x in range(n):
        sig[new[x]] = new[s[x]] + 1
    return make_dessin(Permutation(sig), standard_involution(n // 2))


def _rooted_normal_forms(n_edges: int) -> Iterator[tuple[list[int], list[int]]]:
    """Every rooted clean dessin, once, in its traversal labelling from dart 0."""
    N = 2 * n_edges
    s = [-1] * N
    s_pre = [False] * N
    a = [-1] * N

    def rec(pos: int, count: int, step: int):
        # step 0: choose s[pos]; step 1: choose a[pos]
        if pos == count:
            if count == N:
                yield list(s), list(a)
            return
        if step == 0:
            cands = [y for y in range(count) if not s_pre[y]]
            if count < N:
                cands.append(count)
            for y in cands:
                new = count + (y == count)
                s[pos] = y
                s_pre[y] = True
                yield from rec(pos, new, 1)
                s_pre[y] = False
                s[pos] = -1
        else:
            if a[pos] >= 0:
                yield from rec(pos + 1, count, 0)
                return
            cands = [y for y in range(pos + 1, count) if a[y] < 0]
            if count < N:
                cands.append(count)
            for y in cands:
                new = count + (y == count)
                a[pos], a[y] = y, pos
                yield from rec(pos + 1, new, 0)
                a[pos] = a[y] = -1

    yield from rec(0, 1, 0)


def enumerate_dessins(n: int, filter: Optional[PassportFilter] = None,
                      bound: int = ENUMERATION_BOUND) -> list[CleanDessin]:
    """One clean dessin per isomorphism class with ``n`` edges.

    Every member has ``alpha = (1 2)(3 4)...``.  Classes are generated as
    rooted maps in traversal normal form, keeping the root whose encoding is
    the canonical one, so no isomorphism test between candidates is needed.
    """
    if n < 1:
        raise ValueError("edge count must be positive")
    if n > bound:
        raise ResourceLimitError(
            "enumeration of %d-edge dessins exceeds the bound %d" % (n, bound))
    out = []
    for s, a in _rooted_normal_forms(n):
        enc = _encode(s, a, list(range(2 * n)))
        if any(_encode(s, a, _traversal_labels(s, a, r)) < enc
               for r in range(1, 2 * n)):
            continue
        d = _standardize(s, a)
        if filter is None or filter.accepts(passport(d)):
            out.append(d)
    return out


def enumerate_dessins_bruteforce(n: int, filter: Optional[PassportFilter] = None
                                 ) -> list[CleanDessin]:
    """Reference enumeration over all sigma in S_2n with standard alpha."""
    alpha = standard_involution(n)
    found = {}
    for images in itertools.permutations(range(1, 2 * n + 1)):
        sigma = Permutation(images)
        if not is_transitive([sigma, alpha]):
            continue
        d = CleanDessin(sigma, alpha, inverse(compose(sigma, alpha)))
        found.setdefault(canonical_form(d), d)
    return [d for d in found.values()
            if filter is None or filter.accepts(passport(d))]


def random_dessin(n: int, rng: random.Random) -> CleanDessin:
    """Uniform sigma with standard alpha, rejecting disconnected pairs."""
    alpha = standard_involution(n)
    pts = list(range(1, 2 * n + 1))
    while True:
        rng.shuffle(pts)
        sigma = Permutation(pts)
        if is_transitive([sigma, alpha]):
            return make_dessin(sigma, alpha)


def random_relabelling(n: int, rng: random.Random) -> Permutation:
    pts = list(range(1, 2 * n + 1))
    rng.shuffle(pts)
    return Permutation(pts)


# -- constructions -----------------------------------------------------------

def clean_cover(sigma: Permutation, alpha: Permutation) -> CleanDessin:
    """Clean dessin obtained by turning white vertices black.

    Dart ``x`` of the input splits into ``x`` (copy one, rotating with
    ``sigma``) and ``x + N`` (copy two, rotating with ``alpha``), joined
    by a new white midpoint.
    """
    if sigma.domain_size != alpha.domain_size:
        raise ValidationError("domain", "sigma and alpha act on different domains")
    if not is_transitive([sigma, alpha]):
        raise ValidationError(
            "transitivity", "<sigma, alpha> does not act transitively")
    N = sigma.domain_size
    s = [sigma(x) for x in range(1, N + 1)] + [alpha(x) + N for x in range(1, N + 1)]
    a = [x + N for x in range(1, N + 1)] + list(range(1, N + 1))
    return make_dessin(Permutation(s), Permutation(a))


def triangulate(d: CleanDessin) -> CleanDessin:
    """Barycentric subdivision of every face, as a clean dessin.

    Each dart ``i`` of ``d`` contributes six darts ``6(i-1) + k + 1``:

    ===  ==========================================================
    k=0  segment from the black vertex of ``i`` to the edge midpoint
    k=1  same segment, midpoint end
    k=2  corner spoke at the black vertex (sector between i and i^sigma)
    k=3  same spoke, face-centre end
    k=4  corner spoke at the midpoint (sector carrying label i)
    k=5  same spoke, face-centre end
    ===  ==========================================================
    """
    N = 2 * d.n
    sig, alp, phi = d.sigma, d.alpha, d.phi
    s = [0] * (6 * N)

    def dart(i: int, k: int) -> int:
        return 6 * (i - 1) + k + 1

    for i in d.darts:
        s[dart(i, 0) - 1] = dart(i, 2)
        s[dart(i, 2) - 1] = dart(sig(i), 0)
        s[dart(i, 1) - 1] = dart(alp(i), 4)
        s[dart(i, 4) - 1] = dart(i, 1)
        s[dart(i, 3) - 1] = dart(i, 5)
        s[dart(i, 5) - 1] = dart(phi(i), 3)
    return make_dessin(Permutation(s), standard_involution(3 * N))


def euler_characteristic(d: CleanDessin) -> int:
    return len(cycles(d.sigma)) - d.n + len(cycles(d.phi))


def face_degree_counter(d: CleanDessin) -> Counter:
    return Counter(len(c) for c in cycles(d.phi))
