"""Seeded random generators shared by the test modules."""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from trinom import MonoidSpec, TrinomialData, is_valid


def random_monoid(rng: random.Random, max_rank=4, max_gens=6, span=5) -> MonoidSpec:
    n = rng.randint(1, max_rank)
    m = rng.randint(1, max_gens)
    gens = [tuple(rng.randint(-span, span) for _ in range(n)) for _ in range(m)]
    return MonoidSpec.make(n, gens)


def random_lambdas(rng: random.Random, count: int) -> list[Fraction]:
    out: list[Fraction] = []
    while len(out) < count:
        num = rng.randint(-9, 9)
        den = rng.randint(1, 4)
        if num == 0:
            continue
        lam = Fraction(num, den)
        if lam not in out:
            out.append(lam)
    return out


def _coprime_block(rng: random.Random, size: int, max_beta: int, gcds: list[int]):
    for _ in range(500):
        block = tuple(rng.randint(1, max_beta) for _ in range(size))
        d = 0
        for b in block:
            d = gcd(d, b)
        if all(gcd(d, e) == 1 for e in gcds):
            return block, d
    return None


def random_unit_partition_data(rng: random.Random, max_r=4, max_beta=13) -> TrinomialData:
    r = rng.randint(2, max_r)
    betas: list[int] = []
    while len(betas) < r + 1:
        b = rng.randint(1, max_beta)
        if all(gcd(b, c) == 1 for c in betas):
            betas.append(b)
    data = TrinomialData.make(
        [1] * (r + 1), [(b,) for b in betas], random_lambdas(rng, r - 1)
    )
    assert is_valid(data)
    return data


def random_valid_data(rng: random.Random, max_blocks=4, max_block_size=2, max_beta=6) -> TrinomialData:
    while True:
        nblocks = rng.randint(2, max_blocks)
        partition = [rng.randint(1, max_block_size) for _ in range(nblocks)]
        blocks = []
        gcds: list[int] = []
        ok = True
        for ni in partition:
            got = _coprime_block(rng, ni, max_beta, gcds)
            if got is None:
                ok = False
                break
            blocks.append(got[0])
            gcds.append(got[1])
        if not ok:
            continue
        data = TrinomialData.make(partition, blocks, random_lambdas(rng, nblocks - 2))
        assert is_valid(data)
        return data


def random_data_with_linear_block(rng: random.Random) -> TrinomialData:
    while True:
        data = random_valid_data(rng)
        if any(sum(b) == 1 for b in data.beta):
            return data
        singles = [i for i, ni in enumerate(data.partition) if ni == 1]
        if not singles:
            continue
        i = rng.choice(singles)
        beta = list(data.beta)
        beta[i] = (1,)
        cand = TrinomialData(data.partition, tuple(beta), data.lambdas)
        if is_valid(cand):
            return cand


def random_dim3_data(rng: random.Random, max_r=3, max_beta=7) -> TrinomialData:
    while True:
        r = rng.randint(1, max_r)
        sizes = [1] * (r + 1)
        sizes[rng.randrange(r + 1)] = 2
        blocks = []
        gcds: list[int] = []
        ok = True
        for ni in sizes:
            got = _coprime_block(rng, ni, max_beta, gcds)
            if got is None:
                ok = False
                break
            blocks.append(got[0])
            gcds.append(got[1])
        if not ok:
            continue
        data = TrinomialData.make(sizes, blocks, random_lambdas(rng, r - 1))
        assert is_valid(data)
        return data


def random_int_matrix(rng: random.Random, max_dim=4, span=6):
    from trinom import IntMatrix

    nr = rng.randint(1, max_dim)
    nc = rng.randint(1, max_dim)
    return IntMatrix.from_rows(
        [[rng.randint(-span, span) for _ in range(nc)] for _ in range(nr)], nc
    )
