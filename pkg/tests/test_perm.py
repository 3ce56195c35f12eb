from collections import Counter

import pytest
from hypothesis import given, strategies as st

from dessinlab.perm import (
    Permutation,
    compose,
    cycle_type,
    cycle_type_list,
    cycles,
    format_cycles,
    inverse,
    is_fpf_involution,
    is_transitive,
    orbits,
    power,
    standard_involution,
)


def perm(cyc, n):
    return Permutation.from_cycles(cyc, n)


def perms(n=None):
    size = st.integers(1, 12) if n is None else st.just(n)
    return size.flatmap(lambda k: st.permutations(range(1, k + 1))).map(Permutation)


SIGMA = perm([(2, 5, 3), (4, 6, 8, 7)], 8)
ALPHA = standard_involution(4)
PHI = perm([(1, 3, 7, 6, 2), (4, 5)], 8)


def test_right_action_composition():
    assert compose(SIGMA, ALPHA) == perm([(1, 2, 6, 7, 3), (4, 5)], 8)
    p, q = perm([(1, 2)], 3), perm([(2, 3)], 3)
    # i^{pq} = (i^p)^q
    assert compose(p, q)(1) == q(p(1)) == 3


def test_compose_identity_and_involution():
    assert compose(SIGMA, Permutation.identity(8)) == SIGMA
    t = perm([(1, 2)], 2)
    assert compose(t, t).is_identity()


def test_compose_domain_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_inverse():
    assert inverse(compose(SIGMA, ALPHA)) == PHI
    assert inverse(Permutation.identity(5)).is_identity()
    assert inverse(ALPHA) == ALPHA


def test_cycles_include_fixed_points():
    assert cycles(SIGMA) == [(1,), (2, 5, 3), (4, 6, 8, 7)]
    assert cycles(Permutation.identity(3)) == [(1,), (2,), (3,)]


def test_cycle_types():
    assert cycle_type(PHI) == Counter({5: 1, 2: 1, 1: 1})
    assert cycle_type(Permutation.identity(4)) == Counter({1: 4})
    assert cycle_type(ALPHA) == Counter({2: 4})
    assert cycle_type_list(power(PHI, 2)) == [5, 1, 1, 1]
    assert compose(PHI, PHI) == perm([(1, 7, 2, 3, 6)], 8)


def test_fpf_involution():
    assert is_fpf_involution(perm([(1, 2), (3, 4)], 4))
    assert not is_fpf_involution(Permutation.identity(2))
    assert not is_fpf_involution(perm([(1, 2, 3, 4)], 4))


def test_transitivity():
    assert is_transitive([SIGMA, ALPHA])
    assert not is_transitive([Permutation.identity(3)])
    assert not is_transitive([perm([(1, 2)], 4), perm([(3, 4)], 4)])
    assert orbits([perm([(1, 2)], 4), perm([(3, 4)], 4)]) == [[1, 2], [3, 4]]
    with pytest.raises(ValueError):
        orbits([])


def test_format():
    assert format_cycles(SIGMA) == "(2 5 3)(4 6 8 7)"
    assert format_cycles(SIGMA, fixed_points=True) == "(1)(2 5 3)(4 6 8 7)"
    assert format_cycles(Permutation.identity(3)) == ""
    assert repr(SIGMA) == "Permutation('(2 5 3)(4 6 8 7)', 8)"


@pytest.mark.parametrize("images", [[1, 1], [0, 1], [1, 3], []])
def test_rejects_non_bijections(images):
    with pytest.raises(ValueError):
        Permutation(images)


def test_from_cycles_rejects_bad_points():
    with pytest.raises(ValueError):
        perm([(1, 2), (2, 3)], 3)
    with pytest.raises(ValueError):
        perm([(1, 4)], 3)


@given(perms(7), perms(7), perms(7))
def test_associative(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perms())
def test_inverse_involutive(p):
    assert inverse(inverse(p)) == p
    assert compose(p, inverse(p)).is_identity()


@given(perms(9), perms(9))
def test_cycle_type_conjugation_invariant(p, g):
    assert cycle_type(compose(compose(inverse(g), p), g)) == cycle_type(p)
    assert p.conjugate(g) == compose(compose(inverse(g), p), g)


@given(perms())
def test_squaring_splits_even_cycles(p):
    expected = Counter()
    for length, mult in cycle_type(p).items():
        if length % 2:
            expected[length] += mult
        else:
            expected[length // 2] += 2 * mult
    assert cycle_type(compose(p, p)) == expected


@given(perms(), st.integers(-6, 6))
def test_power_matches_repeated_compose(p, k):
    q = Permutation.identity(p.domain_size)
    step = p if k >= 0 else inverse(p)
    for _ in range(abs(k)):
        q = compose(q, step)
    assert power(p, k) == q
