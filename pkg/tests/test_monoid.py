"""Submonoid analysis: certificates, positive bases, orders, units."""
import random

import pytest

from datagen import random_monoid
from trinom import (
    MonoidSpec,
    NotUnmixed,
    NullRelation,
    PositiveFunctional,
    build_order,
    is_unmixed,
    maximal_subgroup,
    positive_basis,
    unit_generators,
)
from trinom.lattice import determinant


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


class TestIsUnmixed:
    def test_orthant(self):
        ok, cert = is_unmixed(MonoidSpec.make(2, [(1, 0), (0, 1)]))
        assert ok and cert == PositiveFunctional((1, 1))

    def test_line(self):
        ok, cert = is_unmixed(MonoidSpec.make(2, [(1, 0), (-1, 0)]))
        assert not ok and cert == NullRelation((1, 1))

    def test_skew(self):
        spec = MonoidSpec.make(2, [(2, -1), (-1, 2)])
        ok, cert = is_unmixed(spec)
        assert ok and cert.verify(spec)

    def test_zero_generators_only(self):
        ok, cert = is_unmixed(MonoidSpec.make(3, [(0, 0, 0)]))
        assert ok and cert.verify(MonoidSpec.make(3, [(0, 0, 0)]))


class TestPositiveBasis:
    def test_orthant_identity(self):
        basis = positive_basis(MonoidSpec.make(2, [(1, 0), (0, 1)]))
        assert abs(determinant(basis)) == 1

    def test_not_unmixed(self):
        with pytest.raises(NotUnmixed) as err:
            positive_basis(MonoidSpec.make(2, [(1, 0), (-1, 0)]))
        assert err.value.relation.verify(MonoidSpec.make(2, [(1, 0), (-1, 0)]))

    def test_skew_coordinates_nonnegative(self):
        spec = MonoidSpec.make(2, [(2, -1), (-1, 2)])
        basis = positive_basis(spec)
        assert abs(determinant(basis)) == 1
        from trinom.lattice import inverse_unimodular

        inv = inverse_unimodular(basis)
        for g in spec.generators:
            coords = [sum(g[k] * inv.rows[k][i] for k in range(2)) for i in range(2)]
            assert all(c >= 0 for c in coords)
            back = [
                sum(c * basis.rows[i][j] for i, c in enumerate(coords)) for j in range(2)
            ]
            assert tuple(back) == g


class TestBuildOrder:
    def test_orthant(self):
        order = build_order(MonoidSpec.make(2, [(1, 0), (0, 1)]))
        assert order.weight == (1, 1)
        assert order.less((0, 0), (1, 0))

    def test_mixed_signs(self):
        spec = MonoidSpec.make(2, [(6, 1), (0, -1), (3, 0), (2, 0)])
        order = build_order(spec)
        for g in spec.generators:
            assert dot(order.weight, g) > 0

    def test_not_unmixed(self):
        with pytest.raises(NotUnmixed):
            build_order(MonoidSpec.make(2, [(1, 0), (-1, 0)]))

    def test_order_laws_random(self):
        rng = random.Random(11)
        for _ in range(30):
            spec = random_monoid(rng)
            ok, _ = is_unmixed(spec)
            if not ok:
                continue
            order = build_order(spec)
            n = spec.ambient_rank
            for _ in range(20):
                a = tuple(rng.randint(-6, 6) for _ in range(n))
                b = tuple(rng.randint(-6, 6) for _ in range(n))
                c = tuple(rng.randint(-6, 6) for _ in range(n))
                # totality and antisymmetry
                assert (order.key(a) < order.key(b)) + (order.key(b) < order.key(a)) + (a == b) == 1
                # translation invariance
                ac = tuple(x + y for x, y in zip(a, c))
                bc = tuple(x + y for x, y in zip(b, c))
                assert order.less(a, b) == order.less(ac, bc)


class TestMaximalSubgroup:
    def test_free_monoid(self):
        h, torsion_free = maximal_subgroup(MonoidSpec.make(2, [(1, 0), (0, 1)]))
        assert h.nrows == 0 and torsion_free

    def test_line_plus_ray(self):
        spec = MonoidSpec.make(2, [(1, 0), (-1, 0), (0, 1)])
        h, torsion_free = maximal_subgroup(spec)
        assert h.rows == ((1, 0),) and torsion_free

    def test_even_line(self):
        spec = MonoidSpec.make(2, [(2, 0), (-2, 0), (1, 1)])
        h, torsion_free = maximal_subgroup(spec)
        assert h.rows == ((2, 0),) and torsion_free

    def test_unit_relations_verify(self):
        rng = random.Random(23)
        for _ in range(40):
            spec = random_monoid(rng)
            for j, rel in unit_generators(spec):
                assert rel[j] >= 1
                assert all(c >= 0 for c in rel)
                total = [0] * spec.ambient_rank
                for c, g in zip(rel, spec.generators):
                    for i, v in enumerate(g):
                        total[i] += c * v
                assert not any(total)
