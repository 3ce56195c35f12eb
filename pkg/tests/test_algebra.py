import random
from fractions import Fraction

import pytest

from conftest import classes, classes_upto
from dessinlab import algebra as alg
from dessinlab.dessin import conjugate, enumerate_dessins, passport, random_dessin, random_relabelling
from dessinlab.errors import FormulaInapplicable, ResourceLimitError
from dessinlab.linalg import rank


def vec(v):
    return {i: Fraction(x) for i, x in enumerate(v) if x}


def test_dimension_examples(fig1, single_edge, double_edge):
    assert alg.dim_formula(fig1) == 26 == 2 * 4 + 3 * 2 + 4 * 3
    assert alg.build_algebra(fig1).dim == 26
    assert alg.dim_oracle(fig1) == 26
    assert alg.dim_formula(single_edge) == alg.build_algebra(single_edge).dim == 2
    assert alg.dim_formula(double_edge) == alg.dim_oracle(double_edge) == 8


def test_single_edge_is_dual_numbers(single_edge):
    a = alg.build_algebra(single_edge)
    kinds = sorted(b.kind for b in a.basis)
    assert kinds == ["socle", "trivial"]
    x = next(i for i, b in enumerate(a.basis) if b.kind == "socle")
    assert a.table[x][x] == -1


def test_center_examples(fig1, single_edge, single_loop):
    assert alg.center_formula(fig1) == 6
    assert alg.center_oracle(alg.build_algebra(fig1))[0] == 6
    a = alg.build_algebra(single_edge)
    assert alg.center_formula(single_edge) == alg.center_oracle(a)[0] == a.dim == 2
    a = alg.build_algebra(single_loop)
    assert alg.center_formula(single_loop) == alg.center_oracle(a)[0] == a.dim == 4


def test_center_basis_formula_spans_center():
    for d in classes_upto(4):
        a = alg.build_algebra(d)
        zdim, zbasis = alg.center_oracle(a)
        explicit = alg.center_basis_formula(a)
        assert len(explicit) == rank(explicit) == zdim
        assert rank(explicit + [vec(v) for v in zbasis]) == zdim


def test_loop_arrow_itself_is_not_central(fig1):
    a = alg.build_algebra(fig1)
    q = a.quiver
    (loop,) = q.loop_arrows()
    ci = next(k for k, c in enumerate(q.special_cycles) if loop.id in c.arrows)
    x = {a.index[alg.BasisPath("path", cycle=ci, start=loop.position, length=1)]: Fraction(1)}
    assert any(a.commutator(x, {j: Fraction(1)}) for j in range(a.dim))


def test_center_products_vanish_except_single_loop(single_loop):
    for d in classes_upto(3):
        if d.n == 1 and d.sigma == single_loop.sigma:
            continue
        a = alg.build_algebra(d)
        rad = alg.center_basis_formula(a)[1:]
        assert all(a.multiply(x, y) == {} for x in rad for y in rad)
        rad = [vec(v) for v in alg.radical_center(a)]
        assert len(rad) == alg.center_formula(d) - 1
        assert all(a.multiply(x, y) == {} for x in rad for y in rad)


def test_single_loop_center_has_nonzero_products(single_loop):
    # commutative k<a, b>/(a^2, b^2, ab - ba): the two loops multiply to the socle
    a = alg.build_algebra(single_loop)
    z = alg.center_basis_formula(a)
    assert len(z) == a.dim == 4
    socle = next(i for i, b in enumerate(a.basis) if b.kind == "socle")
    assert a.multiply(z[1], z[2]) == {socle: 1}


def test_hh1_examples(fig1, double_edge, single_loop, single_edge):
    assert alg.hh1_formula(fig1) == 5
    assert alg.hh1_oracle(alg.build_algebra(fig1)) == 5
    assert alg.hh1_formula(double_edge) == alg.hh1_oracle(alg.build_algebra(double_edge)) == 4
    assert alg.hh1_formula(single_loop) == alg.hh1_oracle(alg.build_algebra(single_loop)) == 4
    with pytest.raises(FormulaInapplicable, match="empty quiver"):
        alg.hh1_formula(single_edge)
    # only x d/dx survives on k[x]/(x^2)
    assert alg.hh1_oracle(alg.build_algebra(single_edge)) == 1


def test_oracle_bound(fig1):
    a = alg.build_algebra(fig1)
    with pytest.raises(ResourceLimitError):
        alg.hh1_oracle(a, bound=10)
    with pytest.raises(ResourceLimitError):
        alg.center_oracle(a, bound=10)


def test_green_walks(fig1):
    w = alg.green_walk(fig1, 1)
    assert w.darts == (1, 3, 7, 6, 2) and w.period == 5
    assert alg.green_walk(fig1, 8).period == 1
    for i in fig1.darts:
        a, b = alg.green_walk(fig1, i).darts, alg.green_walk(fig1, fig1.phi(i)).darts
        assert b == a[1:] + a[:1]
    with pytest.raises(ValueError):
        alg.green_walk(fig1, 9)


def test_tube_examples(fig1, double_edge):
    assert alg.tube_ranks(fig1) == alg.tube_ranks_oracle(fig1) == [5, 1, 1, 1]
    assert alg.tube_ranks(double_edge) == [1, 1, 1, 1]
    for d in classes_upto(4):
        faces = passport(d).face_degrees
        if all(m % 2 for m in faces):
            assert alg.tube_ranks(d) == list(faces)


def test_loop_arrows(fig1):
    assert alg.loop_arrow_count(fig1) == 1


def test_dim_formula_matches_oracles():
    for d in classes_upto(4):
        assert alg.dim_formula(d) == alg.build_algebra(d).dim == alg.dim_oracle(d)


def test_center_formula_matches_nullspace():
    for d in classes_upto(3):
        assert alg.center_formula(d) == alg.center_oracle(alg.build_algebra(d))[0]


def test_hh1_formula_matches_derivations():
    for d in classes_upto(3):
        if all(len(c) == 1 for c in d.black_vertices()):
            continue
        assert alg.hh1_formula(d) == alg.hh1_oracle(alg.build_algebra(d))


def test_tube_rule_matches_squared_faces():
    for d in classes_upto(4) + enumerate_dessins(5):
        assert alg.tube_ranks(d) == alg.tube_ranks_oracle(d)


def test_associativity_and_unit():
    rng = random.Random(5)
    for d in classes_upto(4):
        a = alg.build_algebra(d)
        assert alg.check_associativity(a, 200, rng)
        assert alg.check_unit(a)


def test_full_associativity_fig1(fig1):
    a = alg.build_algebra(fig1)
    t = a.table
    r = range(a.dim)
    for i in r:
        for j in r:
            ij = t[i][j]
            for k in r:
                jk = t[j][k]
                assert (t[ij][k] if ij >= 0 else -1) == (t[i][jk] if jk >= 0 else -1)


def test_report_verify(fig1, single_edge):
    rep = alg.invariant_report(fig1, verify=True)
    assert (rep.dim_lambda, rep.dim_center, rep.dim_hh1, rep.tube_ranks) == (26, 6, 5, [5, 1, 1, 1])
    assert rep.oracles == {"dim_lambda": 26, "dim_center": 6, "dim_hh1": 5,
                           "tube_ranks": [5, 1, 1, 1]}
    rep = alg.invariant_report(single_edge)
    assert rep.dim_hh1 is None and rep.hh1_reason == "empty quiver"


def test_invariants_under_relabelling():
    rng = random.Random(17)
    for _ in range(100):
        d = random_dessin(rng.randint(1, 6), rng)
        e = conjugate(d, random_relabelling(d.n, rng))
        assert alg.invariant_report(d).invariants() == alg.invariant_report(e).invariants()
