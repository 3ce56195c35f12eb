import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from conftest import classes, classes_upto
from dessinlab.dessin import (
    PassportFilter,
    canonical_digest,
    canonical_form,
    classify_edge,
    clean_cover,
    conjugate,
    enumerate_dessins,
    enumerate_dessins_bruteforce,
    euler_characteristic,
    find_isomorphism,
    from_cycles,
    is_isomorphic,
    make_dessin,
    passport,
    random_dessin,
    random_relabelling,
    triangulate,
)
from dessinlab.errors import ResourceLimitError, ValidationError
from dessinlab.perm import (
    Permutation,
    compose,
    cycles,
    is_fpf_involution,
    is_transitive,
    standard_involution,
)


def P(cyc, n):
    return Permutation.from_cycles(cyc, n)


def test_fig1_face_permutation(fig1):
    assert fig1.phi == P([(1, 3, 7, 6, 2), (4, 5)], 8)
    assert cycles(fig1.phi) == [(1, 3, 7, 6, 2), (4, 5), (8,)]
    assert fig1.genus == 0


def test_small_face_permutations(single_loop, single_edge):
    assert single_loop.phi.is_identity()
    assert single_edge.phi == P([(1, 2)], 2)


def test_passports(fig1, single_edge):
    p = passport(fig1)
    assert (p.black_degrees, p.face_degrees, p.edge_count, p.genus) == ((4, 3, 1), (5, 2, 1), 4, 0)
    p = passport(single_edge)
    assert (p.black_degrees, p.face_degrees, p.edge_count, p.genus) == ((1, 1), (2,), 1, 0)
    p = passport(from_cycles([(1, 3), (2, 4)], 2))
    assert p.face_degrees == (2, 2) and p.genus == 0
    assert p.as_dict()["face_degrees"] == [2, 2]


def test_classify_edges(fig1):
    e = classify_edge(fig1, 1)
    assert e.darts == (1, 2) and e.leaf and not e.loop and not e.trivial_loop
    e = classify_edge(fig1, 7)
    assert e.darts == (7, 8) and e.loop and e.trivial_loop and not e.leaf
    e = classify_edge(fig1, 4)
    assert e.darts == (3, 4) and not (e.leaf or e.loop or e.trivial_loop)


@pytest.mark.parametrize("sigma, alpha, invariant", [
    (P([], 3), P([(1, 2)], 3), "even-domain"),
    (P([], 4), P([(1, 2)], 4), "fpf-involution"),
    (P([], 4), P([(1, 2), (3, 4)], 4), "transitivity"),
    (P([], 2), P([(1, 2)], 4), "domain"),
])
def test_make_dessin_rejects(sigma, alpha, invariant):
    with pytest.raises(ValidationError) as exc:
        make_dessin(sigma, alpha)
    assert exc.value.invariant == invariant


def test_canonical_form_examples():
    a = from_cycles([(2, 3), (4, 5)], 3)
    b = from_cycles([(1, 3), (4, 6)], 3)
    assert canonical_form(a) == canonical_form(b)
    g = P([(1, 2), (5, 6)], 6)
    assert conjugate(a, g).sigma == b.sigma
    assert canonical_form(from_cycles([], 1)) != canonical_form(from_cycles([(1, 2)], 1))
    assert isinstance(canonical_form(a), bytes)
    assert len(canonical_digest(a)) == 16


def test_find_isomorphism_returns_conjugator(fig1):
    rng = random.Random(3)
    for _ in range(20):
        g = random_relabelling(4, rng)
        other = conjugate(fig1, g)
        h = find_isomorphism(fig1, other)
        assert h is not None
        assert conjugate(fig1, h) == other


def test_non_isomorphic_same_passport(fig7_left, fig7_right):
    assert passport(fig7_left) == passport(fig7_right)
    assert not is_isomorphic(fig7_left, fig7_right)
    assert find_isomorphism(fig7_left, fig7_right) is None


def test_enumeration_small_examples():
    assert len(enumerate_dessins(1)) == 2
    flt = PassportFilter(genus=0, face_degrees=(2, 2))
    found = enumerate_dessins(2, flt)
    assert len(found) == 1 and is_isomorphic(found[0], from_cycles([(1, 3), (2, 4)], 2))


def test_enumeration_totals_match_map_counts():
    # unrooted orientable maps by edge count, all genera and genus 0
    assert [len(classes(n)) for n in (1, 2, 3, 4)] == [2, 5, 20, 107]
    assert [sum(d.genus == 0 for d in classes(n)) for n in (1, 2, 3, 4)] == [2, 4, 14, 57]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_bruteforce(n):
    fast = {canonical_form(d) for d in classes(n)}
    slow = {canonical_form(d) for d in enumerate_dessins_bruteforce(n)}
    assert fast == slow
    assert len(fast) == len(classes(n))


def test_enumeration_filter_matches_bruteforce_at_four_edges():
    flt = PassportFilter(genus=1, vertices=3, faces=1)
    fast = {canonical_form(d) for d in enumerate_dessins(4, flt)}
    slow = {canonical_form(d) for d in enumerate_dessins_bruteforce(4, flt)}
    assert fast == slow and len(fast) == 11


def test_enumeration_bound():
    with pytest.raises(ResourceLimitError):
        enumerate_dessins(6)
    with pytest.raises(ValueError):
        enumerate_dessins(0)


def test_enumerated_dessins_are_valid_and_euler_consistent():
    for d in classes_upto(4):
        assert d.alpha == standard_involution(d.n)
        assert is_fpf_involution(d.alpha)
        assert compose(compose(d.sigma, d.alpha), d.phi).is_identity()
        assert is_transitive([d.sigma, d.alpha])
        p = passport(d)
        assert euler_characteristic(d) == 2 - 2 * p.genus
        assert len(p.black_degrees) - d.n + len(p.face_degrees) == 2 - 2 * p.genus


def test_enumeration_closed_under_conjugation():
    rng = random.Random(11)
    for n in (2, 3, 4):
        forms = {canonical_form(d) for d in classes(n)}
        assert len(forms) == len(classes(n))
        for d in classes(n):
            e = conjugate(d, random_relabelling(n, rng))
            assert canonical_form(e) in forms


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6))
def test_passport_conjugation_invariant(n, seed):
    rng = random.Random(seed)
    d = random_dessin(n, rng)
    e = conjugate(d, random_relabelling(n, rng))
    assert passport(d) == passport(e)
    assert canonical_form(d) == canonical_form(e)


def test_clean_cover_examples(fig1):
    c = clean_cover(fig1.sigma, fig1.alpha)
    assert c.n == 8
    assert passport(c).black_degrees == (4, 3, 2, 2, 2, 2, 1)
    c = clean_cover(P([(1, 2)], 2), Permutation.identity(2))
    assert c.n == 2 and passport(c).black_degrees == (2, 1, 1)
    c = clean_cover(Permutation.identity(2), P([(1, 2)], 2))
    assert c.n == 2 and passport(c).black_degrees == (2, 1, 1)
    assert passport(c).genus == 0 and passport(c).face_degrees == (4,)
    with pytest.raises(ValidationError):
        clean_cover(Permutation.identity(2), Permutation.identity(2))


def test_triangulate_examples(single_edge, fig1):
    t = triangulate(single_edge)
    p = passport(t)
    assert (t.n, p.vertex_count, p.face_degrees, p.genus) == (6, 4, (3,) * 4, 0)
    t = triangulate(fig1)
    p = passport(t)
    assert (t.n, p.vertex_count, len(p.face_degrees), p.genus) == (24, 10, 16, 0)
    assert set(p.face_degrees) == {3}


def test_triangulation_counts_up_to_three_edges():
    for d in classes_upto(3):
        p = passport(d)
        t = triangulate(d)
        q = passport(t)
        assert set(q.face_degrees) == {3} and len(q.face_degrees) == 4 * d.n
        assert t.n == 6 * d.n
        assert q.vertex_count == p.vertex_count + d.n + p.face_count
        assert q.genus == p.genus


def test_enumeration_is_fast_enough():
    start = time.perf_counter()
    enumerate_dessins(5)
    assert time.perf_counter() - start < 30
