"""Cartan data, exact linear algebra and the rank 2 matrix model."""

import random
from fractions import Fraction

import pytest

from dscentral import liealg
from dscentral.liealg import (cartan_matrix, root_lengths, coroot_gram,
                              lie_central_invariants, fold, rref, nullspace,
                              solve, rank, mcomm, mscale, madd, mzero,
                              g2_algebra, chevalley_tower_g2)


def test_cartan_matrices_well_formed():
    for typ, n in (('A', 4), ('B', 4), ('C', 4), ('D', 4),
                   ('E', 6), ('E', 7), ('E', 8), ('F', 4), ('G', 2)):
        C = cartan_matrix(typ, n)
        assert all(C[i][i] == 2 for i in range(n))
        for i in range(n):
            for j in range(n):
                if i != j:
                    assert C[i][j] <= 0
                    assert (C[i][j] == 0) == (C[j][i] == 0)


def test_cartan_symmetrizable():
    for typ, n in (('B', 3), ('C', 3), ('F', 4), ('G', 2)):
        C = cartan_matrix(typ, n)
        d = root_lengths(typ, n)
        for i in range(n):
            for j in range(n):
                assert d[i] * C[i][j] == d[j] * C[j][i]


def test_root_lengths():
    assert root_lengths('A', 3) == [Fraction(2)] * 3
    assert root_lengths('B', 3) == [Fraction(2), Fraction(2), Fraction(1)]
    assert root_lengths('C', 3) == [Fraction(1), Fraction(1), Fraction(2)]
    assert root_lengths('G', 2) == [Fraction(2, 3), Fraction(2)]
    assert root_lengths('F', 4) == [Fraction(2), Fraction(2),
                                    Fraction(1), Fraction(1)]


def test_coroot_gram_diagonal():
    G = coroot_gram('G', 2)
    # (a^, a^) = 4 / (a, a): 6 for the short root, 2 for the long one
    assert G[0][0] == 6
    assert G[1][1] == 2


def test_invariant_values_from_coroots():
    for typ, n in (('A', 3), ('B', 3), ('G', 2), ('F', 4)):
        G = coroot_gram(typ, n)
        cs = lie_central_invariants(typ, n)
        assert cs == [G[i][i] / 48 for i in range(n)]


def test_fold_matches_direct():
    assert fold('B', 4) == lie_central_invariants('B', 4)
    assert fold('C', 4) == lie_central_invariants('C', 4)
    assert fold('F', 4) == lie_central_invariants('F', 4)
    assert fold('G', 3) == lie_central_invariants('G', 2)
    assert fold('G', 4) == lie_central_invariants('G', 2)


def test_rref_solve_nullspace():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randint(2, 4)
        A = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        x = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
        b = [sum(A[i][j] * x[j] for j in range(n)) for i in range(n)]
        sol = solve(A, b)
        if rank(A) == n:
            assert sol == x
        else:
            assert sol is None or \
                all(sum(A[i][j] * sol[j] for j in range(n)) == b[i]
                    for i in range(n))
    ns = nullspace([[Fraction(1), Fraction(1), Fraction(0)]])
    assert len(ns) == 2


def test_solve_inconsistent():
    A = [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]
    assert solve(A, [Fraction(1), Fraction(3)]) is None


def test_g2_model_structure():
    alg = g2_algebra()
    assert alg.dim == 14
    assert len(alg.basis) == 14
    assert alg.realized_cartan() == cartan_matrix('G', 2)
    # principal grades run from -5 to 5
    assert sorted(set(alg.grades)) == list(range(-5, 6))


def test_g2_principal_sl2():
    alg = g2_algebra()
    assert mcomm(alg.I_plus, alg.I_minus) == mscale(alg.rho, 2)


def test_g2_root_vector_of_simple_roots():
    alg = g2_algebra()
    assert alg.root_vector([1, 0]) == alg.X[0]
    assert alg.root_vector([0, 1]) == alg.X[1]


def test_g2_chevalley_tower():
    alg = g2_algebra()
    Xs, Ys = chevalley_tower_g2(alg)
    # highest root vector commutes with both positive generators
    top = Xs[-1]
    assert mcomm(alg.X[0], top) == mzero(7)
    assert mcomm(alg.X[1], top) == mzero(7)
    # and lives at grade 5
    c = alg.coords(top)
    grades = {alg.grades[i] for i, x in enumerate(c) if x}
    assert grades == {5}


def test_matrix_algebra_rejects_bad_sl2():
    X = [[[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]]]
    Y = [[[Fraction(0), Fraction(0)], [Fraction(0), Fraction(0)]]]
    with pytest.raises(Exception):
        liealg.MatrixLieAlgebra('bad', 'A', 1, X, Y, Fraction(1), 3)
