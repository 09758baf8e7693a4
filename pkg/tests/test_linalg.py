import random
from fractions import Fraction

import pytest

from polyord.errors import InputError
from polyord.linalg import (
    Matrix,
    hyperplane_through,
    lcm,
    nullspace,
    smith_normal_form,
    solve_linear,
)


def rand_matrix(rng, n, lo=-9, hi=9):
    return Matrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


class TestMatrix:
    def test_det_and_inverse(self):
        m = Matrix([[2, 1], [1, 1]])
        assert m.det() == 1
        inv = m.inverse()
        assert inv @ m == Matrix.identity(2)

    def test_rank(self):
        assert Matrix([[1, 2], [2, 4]]).rank() == 1
        assert Matrix.identity(3).rank() == 3

    def test_solve_inconsistent(self):
        assert solve_linear(Matrix([[1, 0], [1, 0]]), [1, 2]) is None

    def test_solve_underdetermined(self):
        sol = solve_linear(Matrix([[1, 1]]), [3])
        assert sol is not None
        assert sum(sol) == 3

    def test_nullspace(self):
        basis = nullspace(Matrix([[1, 1, 0]]))
        assert len(basis) == 2
        for v in basis:
            assert v[0] + v[1] == 0


class TestHyperplaneThrough:
    def test_example_polytope_facet(self):
        assert hyperplane_through([(-1, 0, 0), (1, 2, 0), (1, 0, 2)]) == (
            Fraction(-1),
            Fraction(1),
            Fraction(1),
        )

    def test_denominator_five(self):
        assert hyperplane_through([(-1, 0, 0), (1, 5, 0), (1, 0, 5)]) == (
            Fraction(-1),
            Fraction(2, 5),
            Fraction(2, 5),
        )

    def test_collinear_with_origin_rejected(self):
        with pytest.raises(InputError):
            hyperplane_through([(1, 0), (2, 0)])

    def test_evaluates_to_one(self):
        rng = random.Random(7)
        found = 0
        while found < 50:
            pts = [
                tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(3)
            ]
            try:
                e = hyperplane_through(pts)
            except InputError:
                continue
            found += 1
            for p in pts:
                assert sum(c * x for c, x in zip(e, p)) == 1


class TestSmithNormalForm:
    def test_identity(self):
        _, s, _ = smith_normal_form(Matrix.identity(3))
        assert s == Matrix.identity(3)

    def test_example_exponent_matrix(self):
        # cokernel is Z/2 + Z/2 by hand: e1 in the column lattice, 2e2 and
        # 2e3 are, while e2, e3, e2+e3 are not
        m = Matrix.from_columns([(-1, 0, 0), (1, 2, 0), (1, 0, 2)])
        _, s, _ = smith_normal_form(m)
        assert [s[i, i] for i in range(3)] == [1, 2, 2]

    def test_already_diagonal(self):
        _, s, _ = smith_normal_form(Matrix([[2, 0], [0, 4]]))
        assert [s[i, i] for i in range(2)] == [2, 4]

    def test_singular_rejected(self):
        with pytest.raises(InputError):
            smith_normal_form(Matrix([[1, 2], [2, 4]]))

    def test_random_reconstruction(self):
        rng = random.Random(2024)
        done = 0
        while done < 200:
            n = rng.choice([2, 2, 3, 3, 4])
            m = rand_matrix(rng, n)
            if m.det() == 0:
                continue
            done += 1
            u, s, v = smith_normal_form(m)
            assert u @ m @ v == s
            assert abs(u.det()) == 1 and abs(v.det()) == 1
            diag = [s[i, i] for i in range(n)]
            assert all(d > 0 for d in diag)
            for a, b in zip(diag, diag[1:]):
                assert b % a == 0
            prod = 1
            for d in diag:
                prod *= d
            assert prod == abs(m.det())
            # recomposing from the inverses reproduces the input exactly
            assert u.inverse() @ s @ v.inverse() == m


def test_lcm():
    assert lcm([4, 6]) == 12
    assert lcm([]) == 1
    assert lcm([0, 5]) == 5
