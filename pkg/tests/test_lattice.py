"""Exact integer linear algebra: normal forms, kernels, feasibility."""
import random
from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from datagen import random_int_matrix
from trinom import IntMatrix, hermite_normal_form, integer_kernel_basis, smith_normal_form
from trinom.lattice import (
    determinant,
    inverse_unimodular,
    nonnegative_null_relation,
    positive_functional,
    rational_feasible,
    solve_integer_linear,
)


def is_canonical_hnf(h: IntMatrix) -> bool:
    pivots = []
    seen_zero = False
    for row in h.rows:
        piv = next((j for j, v in enumerate(row) if v), None)
        if piv is None:
            seen_zero = True
            continue
        if seen_zero:
            return False
        if row[piv] <= 0:
            return False
        if pivots and piv <= pivots[-1][1]:
            return False
        pivots.append((row[piv], piv))
    for k, (pval, pcol) in enumerate(pivots):
        for i in range(k):
            if not (0 <= h.rows[i][pcol] < pval):
                return False
    return True


def minor_gcds(m: IntMatrix, k: int) -> int:
    g = 0
    for rows in combinations(range(m.nrows), k):
        for cols in combinations(range(m.ncols), k):
            sub = IntMatrix.from_rows(
                [[m.rows[i][j] for j in cols] for i in rows], k
            )
            g = gcd(g, abs(determinant(sub)))
    return g


class TestHermite:
    def test_identity(self):
        m = IntMatrix.identity(2)
        h, u = hermite_normal_form(m)
        assert h == m and u == m

    def test_worked_example(self):
        m = IntMatrix.from_rows([[2, 4], [1, 3]])
        h, u = hermite_normal_form(m)
        assert h.rows == ((1, 1), (0, 2))
        assert (u @ m).rows == h.rows
        assert abs(determinant(u)) == 1
        assert is_canonical_hnf(h)

    def test_zero_matrix(self):
        m = IntMatrix.zeros(2, 2)
        h, u = hermite_normal_form(m)
        assert h == m
        assert u == IntMatrix.identity(2)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10**6))
    def test_random_invariants(self, seed):
        m = random_int_matrix(random.Random(seed))
        h, u = hermite_normal_form(m)
        assert (u @ m).rows == h.rows
        assert abs(determinant(u)) == 1
        assert is_canonical_hnf(h)


class TestSmith:
    def test_diag(self):
        assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])) == (1, 6)

    def test_identity(self):
        assert smith_normal_form(IntMatrix.identity(2)) == (1, 1)

    def test_wide(self):
        assert smith_normal_form(IntMatrix.from_rows([[6, 0, 3, 2], [1, -1, 0, 0]])) == (1, 1)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10**6))
    def test_minor_gcd_oracle(self, seed):
        m = random_int_matrix(random.Random(seed), max_dim=3, span=4)
        factors = smith_normal_form(m)
        for a, b in zip(factors, factors[1:]):
            if a == 0:
                assert b == 0
            else:
                assert b % a == 0
        prod = 1
        for k, d in enumerate(factors, start=1):
            prod *= d
            assert prod == minor_gcds(m, k)


class TestKernel:
    def test_worked_example(self):
        m = IntMatrix.from_rows([[1, 1, -2, 0], [1, 1, 0, -3]])
        k = integer_kernel_basis(m)
        assert k.rows == ((1, 5, 3, 2), (0, 6, 3, 2))
        for row in k.rows:
            assert m.apply(row) == (0, 0)
        assert smith_normal_form(k) == (1, 1)

    def test_identity_kernel_trivial(self):
        k = integer_kernel_basis(IntMatrix.identity(2))
        assert k.nrows == 0 and k.ncols == 2

    def test_zero_row(self):
        k = integer_kernel_basis(IntMatrix.from_rows([[0, 0]], 2))
        assert k.rows == ((1, 0), (0, 1))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10**6))
    def test_random_kernels_saturated(self, seed):
        m = random_int_matrix(random.Random(seed))
        k = integer_kernel_basis(m)
        for row in k.rows:
            assert not any(m.apply(row))
        if k.nrows:
            assert all(f == 1 for f in smith_normal_form(k))
        # rank-nullity over Q
        rank = sum(1 for f in smith_normal_form(m) if f)
        assert k.nrows == m.ncols - rank


class TestFeasibility:
    def test_orthants(self):
        assert positive_functional([(1, 0), (0, 1)], 2) == (1, 1)

    def test_line_relation(self):
        assert nonnegative_null_relation([(1, 0), (-1, 0)], 2) == (1, 1)

    def test_skew_cone(self):
        phi = positive_functional([(2, -1), (-1, 2)], 2)
        assert phi is not None
        assert all(sum(p * g for p, g in zip(phi, v)) > 0 for v in [(2, -1), (-1, 2)])

    def test_strict_infeasible(self):
        m = IntMatrix.from_rows([[1, 0], [-1, 0]])
        assert rational_feasible(m, strict_rows=[0, 1]) is None

    def test_solution_satisfies_system(self):
        rng = random.Random(7)
        for _ in range(40):
            m = random_int_matrix(rng, max_dim=4, span=4)
            strict = [i for i in range(m.nrows) if rng.random() < 0.5]
            x = rational_feasible(m, strict_rows=strict)
            if x is None:
                continue
            vals = [sum(Fraction(a) * b for a, b in zip(row, x)) for row in m.rows]
            for i, v in enumerate(vals):
                assert v > 0 if i in strict else v >= 0

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 10**6))
    def test_duality_dichotomy(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 4)
        m = rng.randint(1, 6)
        gens = [tuple(rng.randint(-5, 5) for _ in range(n)) for _ in range(m)]
        if not any(any(g) for g in gens):
            return
        phi = positive_functional(gens, n)
        rel = nonnegative_null_relation(gens, n)
        assert (phi is None) != (rel is None)
        if phi is not None:
            assert all(
                sum(p * g for p, g in zip(phi, v)) > 0 for v in gens if any(v)
            )
        else:
            assert all(c >= 0 for c in rel)
            total = [0] * n
            for c, v in zip(rel, gens):
                for i, e in enumerate(v):
                    total[i] += c * e
            assert not any(total)
            assert any(c > 0 and any(v) for c, v in zip(rel, gens))


class TestSolvers:
    def test_integer_solve(self):
        m = IntMatrix.from_rows([[6, 10, 15]])
        e = solve_integer_linear(m, (1,))
        assert e is not None and m.apply(e) == (1,)
        assert solve_integer_linear(IntMatrix.from_rows([[2, 4]]), (1,)) is None

    def test_inverse_unimodular(self):
        m = IntMatrix.from_rows([[1, -1], [-1, 2]])
        inv = inverse_unimodular(m)
        assert (m @ inv) == IntMatrix.identity(2)
