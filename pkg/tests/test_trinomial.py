"""Data-level transformations: validation, reduction, canonical forms."""
import random
from fractions import Fraction

import pytest

from datagen import (
    random_data_with_linear_block,
    random_dim3_data,
    random_unit_partition_data,
    random_valid_data,
)
from trinom import (
    NotDimensionThree,
    NotUnitPartition,
    TrinomialData,
    ValidationError,
    dim3_normal_form,
    dimension,
    is_isomorphic_dim2,
    is_reduced,
    is_smooth,
    is_valid,
    jacobian_rank_at_origin,
    mori_normal_form,
    mori_normal_form_casewise,
    permute_blocks,
    reduce,
    tangent_dimension,
    validate,
    verify_witness,
    witness_script,
)
from trinom.trinomial import _pivot

DELTA0 = TrinomialData.make((1, 1, 1), ((5,), (3,), (2,)), (1,))


class TestValidate:
    def test_delta0_ok(self):
        validate(DELTA0)

    def test_gcd_violation(self):
        bad = TrinomialData.make((1, 1), ((2,), (2,)))
        with pytest.raises(ValidationError) as err:
            validate(bad)
        assert any(v.clause == "gcd" for v in err.value.violations)

    def test_duplicate_lambda(self):
        bad = TrinomialData.make((1, 1, 1, 1), ((5,), (3,), (2,), (7,)), (1, 1))
        with pytest.raises(ValidationError) as err:
            validate(bad)
        assert any(v.clause == "lambda" for v in err.value.violations)

    def test_all_clauses_reported(self):
        bad = TrinomialData.make((1, 0, 1), ((2,), (), (2,)), (0,))
        with pytest.raises(ValidationError) as err:
            validate(bad)
        clauses = {v.clause for v in err.value.violations}
        assert "partition" in clauses and "lambda" in clauses


class TestNumericInvariants:
    def test_dimension(self):
        assert dimension(DELTA0) == 2
        assert dimension(TrinomialData.make((1, 1), ((1,), (1,)))) == 2
        assert dimension(TrinomialData.make((2, 1, 1), ((1, 1), (2,), (3,)), (1,))) == 3

    def test_is_reduced(self):
        assert is_reduced(DELTA0)
        assert not is_reduced(TrinomialData.make((1, 1, 1), ((1,), (3,), (2,)), (1,)))
        assert is_reduced(TrinomialData.make((1, 1), ((1,), (1,))))
        assert not is_reduced(TrinomialData.make((1, 1), ((4,), (3,))))

    def test_jacobian_rank(self):
        assert jacobian_rank_at_origin(DELTA0) == 0
        assert jacobian_rank_at_origin(TrinomialData.make((1, 1, 1), ((1,), (3,), (2,)), (1,))) == 1
        assert jacobian_rank_at_origin(TrinomialData.make((1, 1), ((4,), (3,)))) == 0

    def test_tangent_dimension(self):
        assert tangent_dimension(DELTA0) == 3
        assert tangent_dimension(TrinomialData.make((1, 1, 1), ((1,), (3,), (2,)), (1,))) == 2
        assert tangent_dimension(TrinomialData.make((1, 1), ((1,), (1,)))) == 2

    def test_is_smooth(self):
        assert not is_smooth(DELTA0)
        assert is_smooth(TrinomialData.make((1, 1, 1), ((1,), (3,), (2,)), (1,)))
        assert is_smooth(TrinomialData.make((1, 1), ((4,), (3,))))


class TestReduce:
    def test_already_reduced(self):
        ring, witness = reduce(DELTA0)
        assert ring.data == DELTA0 and ring.poly_vars == 0
        assert not witness.moves

    def test_drop_tail_block(self):
        data = TrinomialData.make((1, 1, 1, 1), ((5,), (3,), (2,), (1,)), (1, 2))
        ring, witness = reduce(data)
        assert ring.data == DELTA0 and ring.poly_vars == 0
        assert verify_witness(data, ring.data, witness, ring.poly_vars) is True

    def test_linear_block0_collapse(self):
        data = TrinomialData.make((1, 1, 1), ((1,), (3,), (2,)), (1,))
        ring, witness = reduce(data)
        assert ring.data == TrinomialData.make((1, 1), ((1,), (1,)))
        assert ring.poly_vars == 0
        assert dimension(ring.data) + ring.poly_vars == dimension(data)
        assert verify_witness(data, ring.data, witness, ring.poly_vars) is True

    def test_linear_block1(self):
        data = TrinomialData.make((1, 1, 1, 1), ((5,), (1,), (2,), (3,)), (1, 2))
        ring, witness = reduce(data)
        assert is_reduced(ring.data)
        assert dimension(ring.data) + ring.poly_vars == dimension(data)
        check = verify_witness(data, ring.data, witness, ring.poly_vars)
        assert check is True or check is None

    def test_random_linear_blocks(self):
        rng = random.Random(5)
        for _ in range(40):
            data = random_data_with_linear_block(rng)
            ring, witness = reduce(data)
            assert is_valid(ring.data)
            assert is_reduced(ring.data)
            assert dimension(ring.data) + ring.poly_vars == dimension(data)
            check = verify_witness(data, ring.data, witness, ring.poly_vars)
            assert check in (True, None)
            assert witness_script(data, witness)


class TestMori:
    def test_ascending_exponents(self):
        data = TrinomialData.make((1, 1, 1), ((2,), (3,), (5,)), (1,))
        out, witness = mori_normal_form(data)
        assert out == DELTA0
        assert verify_witness(data, out, witness) is True

    def test_fixed_point(self):
        out, witness = mori_normal_form(DELTA0)
        assert out == DELTA0 and not witness.moves

    def test_lambda_rescale(self):
        data = TrinomialData.make((1, 1, 1), ((5,), (3,), (2,)), (7,))
        out, witness = mori_normal_form(data)
        assert out == DELTA0
        assert not witness.exact  # needs a cube root of 7
        assert "1/3" in witness_script(data, witness)

    def test_polynomial_ring_case(self):
        data = TrinomialData.make((1, 1), ((4,), (3,)))
        out, _ = mori_normal_form(data)
        assert out == TrinomialData.make((1, 1), ((1,), (1,)))

    def test_rejects_nonunit_partition(self):
        with pytest.raises(NotUnitPartition):
            mori_normal_form(TrinomialData.make((2, 1, 1), ((1, 1), (2,), (3,)), (1,)))

    def test_idempotent_random(self):
        rng = random.Random(31)
        for _ in range(40):
            data = random_unit_partition_data(rng)
            out, _ = mori_normal_form(data)
            again, witness2 = mori_normal_form(out)
            assert again == out
            assert not witness2.moves

    def test_routes_agree_random(self):
        rng = random.Random(37)
        for _ in range(60):
            data = random_unit_partition_data(rng)
            assert mori_normal_form(data)[0] == mori_normal_form_casewise(data)

    def test_pivot_invariance_random(self):
        rng = random.Random(41)
        for _ in range(30):
            data = random_unit_partition_data(rng)
            canonical, _ = mori_normal_form(data)
            perm = list(range(data.r + 1))
            rng.shuffle(perm)
            permuted, _ = permute_blocks(data, perm)
            assert is_valid(permuted)
            assert mori_normal_form(permuted)[0] == canonical

    def test_lambda_scaling_invariance(self):
        rng = random.Random(43)
        for _ in range(20):
            data = random_unit_partition_data(rng)
            red, _ = reduce(data)
            cur = red.data
            if cur.r < 2:
                continue
            order = sorted(range(cur.r + 1), key=lambda i: -cur.beta[i][0])
            plain, _ = _pivot(cur, order, normalize=True)
            scaled, _ = _pivot(
                cur, order, normalize=True,
                scale_a=Fraction(rng.randint(1, 9), rng.randint(1, 9)),
                scale_b=Fraction(rng.randint(1, 9), rng.randint(1, 9)),
            )
            assert plain == scaled


class TestIsomorphism:
    def test_permuted_variant(self):
        other = TrinomialData.make((1, 1, 1), ((2,), (3,), (5,)), (1,))
        assert is_isomorphic_dim2(DELTA0, other)

    def test_distinct_exponents(self):
        other = TrinomialData.make((1, 1, 1), ((7,), (3,), (2,)), (1,))
        assert not is_isomorphic_dim2(DELTA0, other)

    def test_reflexive_random(self):
        rng = random.Random(47)
        for _ in range(20):
            data = random_unit_partition_data(rng)
            assert is_isomorphic_dim2(data, data)


class TestDim3:
    def test_already_conformant(self):
        data = TrinomialData.make((1, 1, 2), ((5,), (3,), (1, 1)), (1,))
        out, witness = dim3_normal_form(data)
        assert out == data and not witness.moves

    def test_block0_size_two(self):
        data = TrinomialData.make((2, 1, 1), ((1, 1), (3,), (5,)), (Fraction(7, 2),))
        out, _ = dim3_normal_form(data)
        assert out.partition == (1, 1, 2)
        assert out.beta == ((5,), (3,), (1, 1))
        assert dimension(out) == dimension(data) == 3
        assert tangent_dimension(out) == tangent_dimension(data)

    def test_polynomial_ring_case(self):
        out, _ = dim3_normal_form(TrinomialData.make((1, 2), ((4,), (3, 3))))
        assert out == TrinomialData.make((1, 2), ((1,), (1, 1)))

    def test_exponent_pair_sorted(self):
        data = TrinomialData.make((1, 1, 2), ((5,), (3,), (1, 2)), (1,))
        out, _ = dim3_normal_form(data)
        c, d = out.beta[-1]
        assert (c, d) == (2, 1)

    def test_rejects_wrong_dimension(self):
        with pytest.raises(NotDimensionThree):
            dim3_normal_form(DELTA0)

    def test_random(self):
        rng = random.Random(53)
        from math import gcd, prod

        for _ in range(40):
            data = random_dim3_data(rng)
            out, _ = dim3_normal_form(data)
            assert is_valid(out)
            assert out.partition[-1] == 2 and all(ni == 1 for ni in out.partition[:-1])
            c, d = out.beta[-1]
            assert c >= d
            assert gcd(gcd(c, d), prod(b[0] for b in out.beta[:-1])) == 1
            assert dimension(out) == 3 == dimension(data)
            assert tangent_dimension(out) == tangent_dimension(data)
            if out.r >= 2:
                prefix = [b[0] for b in out.beta[:-1]]
                assert all(x > y for x, y in zip(prefix, prefix[1:]))
                assert all(b >= 2 for b in prefix)
                assert out.lambdas[0] == 1


class TestPermuteBlocks:
    def test_identity(self):
        out, witness = permute_blocks(DELTA0, (0, 1, 2))
        assert out == DELTA0

    def test_swap_pivots_inverts_lambdas(self):
        data = TrinomialData.make((1, 1, 1), ((5,), (3,), (2,)), (Fraction(7, 3),))
        out, _ = permute_blocks(data, (1, 0, 2))
        assert out.lambdas == (Fraction(3, 7),)

    def test_random_permutations_keep_ring(self):
        rng = random.Random(59)
        for _ in range(30):
            data = random_valid_data(rng)
            if data.r < 1:
                continue
            perm = list(range(data.r + 1))
            rng.shuffle(perm)
            out, witness = permute_blocks(data, perm)
            assert is_valid(out)
            assert dimension(out) == dimension(data)
            check = verify_witness(data, out, witness)
            assert check in (True, None)
