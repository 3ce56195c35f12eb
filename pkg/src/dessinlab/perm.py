"""Permutations of a finite set {1, ..., N}, acting on the right.

Composition follows exponent notation: ``compose(p, q)`` sends ``i`` to
``(i^p)^q``.  Points are 1-based everywhere outside this module; internally
images are stored 0-based in a tuple.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence


class Permutation:
    """An immutable bijection of {1, ..., N}.

    >>> p = Permutation.from_cycles([[2, 5, 3], [4, 6, 8, 7]], 8)
    >>> p(2), p(3), p(1)
    (5, 2, 1)
    >>> p
    Permutation('(2 5 3)(4 6 8 7)', 8)
    """

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int]):
        """Build from 1-based images: ``images[k-1]`` is the image of ``k``."""
        img = tuple(int(x) - 1 for x in images)
        n = len(img)
        if n == 0:
            raise ValueError("domain size must be positive")
        seen = [False] * n
        for x in img:
            if not 0 <= x < n or seen[x]:
                raise ValueError("images do not form a bijection of {1..%d}" % n)
            seen[x] = True
        self._img = img
        self._hash = None

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> "Permutation":
        # trusted 0-based constructor, no validation
        p = cls.__new__(cls)
        p._img = img
        p._hash = None
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n <= 0:
            raise ValueError("domain size must be positive")
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        """Permutation of {1..n} with the given (1-based) disjoint cycles."""
        img = list(range(n))
        used = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise ValueError("point %d outside {1..%d}" % (x, n))
                if x in used:
                    raise ValueError("point %d appears twice" % x)
                used.add(x)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @property
    def domain_size(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image sequence."""
        return tuple(x + 1 for x in self._img)

    def __call__(self, i: int) -> int:
        return self._img[i - 1] + 1

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._img)
        return self._hash

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def __invert__(self) -> "Permutation":
        return inverse(self)

    def __repr__(self):
        return "Permutation(%r, %d)" % (format_cycles(self), self.domain_size)

    def __str__(self):
        return format_cycles(self)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def fixed_points(self) -> list[int]:
        return [i + 1 for i, x in enumerate(self._img) if i == x]

    def conjugate(self, g: "Permutation") -> "Permutation":
        """Return ``g^-1 p g``, i.e. the relabelling of ``self`` along ``g``."""
        return compose(compose(inverse(g), self), g)


def _check_same_domain(p: Permutation, q: Permutation) -> None:
    if p.domain_size != q.domain_size:
        raise ValueError(
            "domain mismatch: %d vs %d" % (p.domain_size, q.domain_size))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Right-action product: ``i`` maps to ``(i^p)^q``."""
    _check_same_domain(p, q)
    qi = q._img
    return Permutation._raw(tuple(qi[x] for x in p._img))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.domain_size
    for i, x in enumerate(p._img):
        inv[x] = i
    return Permutation._raw(tuple(inv))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = Permutation.identity(p.domain_size)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Canonical cycle decomposition, fixed points included.

    Each cycle starts at its minimum; cycles are sorted by minimum.
    """
    img = p._img
    seen = [False] * len(img)
    out = []
    for start in range(len(img)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x + 1)
            x = img[x]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Permutation) -> Counter:
    """Multiset of cycle lengths as a Counter ``{length: multiplicity}``."""
    return Counter(len(c) for c in cycles(p))


def cycle_type_list(p: Permutation) -> list[int]:
    """Cycle lengths in non-increasing order."""
    return sorted((len(c) for c in cycles(p)), reverse=True)


def is_fpf_involution(p: Permutation) -> bool:
    img = p._img
    return all(img[x] != x and img[img[x]] == x for x in range(len(img)))


def orbits(gens: Sequence[Permutation]) -> list[list[int]]:
    """Orbits of the group generated by ``gens`` (1-based, sorted)."""
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].domain_size
    for g in gens[1:]:
        _check_same_domain(gens[0], g)
    imgs = [g._img for g in gens]
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        orb = []
        while stack:
            x = stack.pop()
            orb.append(x + 1)
            for img in imgs:
                y = img[x]
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(orb))
    return out


def is_transitive(gens: Sequence[Permutation]) -> bool:
    return len(orbits(gens)) == 1


def format_cycles(p: Permutation, fixed_points: bool = False) -> str:
    """Cycle notation such as ``(2 5 3)(4 6 8 7)``.

    Fixed points are printed only on request; the identity without them is
    the empty string.
    """
    return "".join(
        "(" + " ".join(map(str, c)) + ")"
        for c in cycles(p)
        if fixed_points or len(c) > 1
    )


def standard_involution(n_edges: int) -> Permutation:
    """The pairing (1 2)(3 4)...(2n-1 2n)."""
    return Permutation._raw(tuple(i ^ 1 for i in range(2 * n_edges)))
