"""Trinomial data sets and their presentation-level transformations.

A data set consists of a partition n = n_0 + ... + n_r (r >= 1, n_i >= 1),
positive exponent vectors beta_i whose block gcds are pairwise coprime,
and distinct nonzero rational scalars lambda_2..lambda_r.  It presents the
quotient ring

    k[t_ij] / ( T_0^beta_0 + lambda_i T_1^beta_1 + T_i^beta_i ),  2 <= i <= r,

where T_i^beta_i is the monomial t_i1^beta_i1 ... t_in_i^beta_in_i, an
affine rational UFD of dimension n - r + 1.  For r = 1 there are no
relations and the ring is the polynomial ring in n variables.

All scalar bookkeeping in the transformations below is rational and hence
machine-verifiable; the only irrational ingredients are generator
rescalings by fixed roots, which are quarantined in FormalRadical values
inside the recorded SubstitutionWitness.  Isomorphism statements are
understood over an algebraically closed field of characteristic zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Union

from .errors import (
    NotDimensionThree,
    NotUnitPartition,
    ValidationError,
    Violation,
)
from .lattice import RowSpace
from .poly import Polynomial


@dataclass(frozen=True)
class TrinomialData:
    partition: tuple[int, ...]
    beta: tuple[tuple[int, ...], ...]
    lambdas: tuple[Fraction, ...]

    @classmethod
    def make(cls, partition, beta, lambdas=()) -> "TrinomialData":
        return cls(
            tuple(int(v) for v in partition),
            tuple(tuple(int(b) for b in block) for block in beta),
            tuple(Fraction(l) for l in lambdas),
        )

    @property
    def r(self) -> int:
        return len(self.partition) - 1

    @property
    def n(self) -> int:
        return sum(self.partition)

    def var_offset(self, block: int) -> int:
        return sum(self.partition[:block])

    def block_gcd(self, block: int) -> int:
        g = 0
        for b in self.beta[block]:
            g = gcd(g, b)
        return g

    def block_monomial(self, block: int) -> tuple[int, ...]:
        """Exponent vector of T_block^beta_block over all n variables."""
        exps = [0] * self.n
        off = self.var_offset(block)
        for j, e in enumerate(self.beta[block]):
            exps[off + j] = e
        return tuple(exps)

    def defining_polynomials(self) -> list[Polynomial]:
        """The relations T_0^b0 + lambda_i T_1^b1 + T_i^bi, i = 2..r."""
        out = []
        m0 = self.block_monomial(0)
        m1 = self.block_monomial(1)
        for i in range(2, self.r + 1):
            p = (
                Polynomial.monomial(m0)
                + Polynomial.monomial(m1, self.lambdas[i - 2])
                + Polynomial.monomial(self.block_monomial(i))
            )
            out.append(p)
        return out


@dataclass(frozen=True)
class ClassifiedRing:
    """The shape k[data]^[poly_vars]: a trinomial ring with free variables."""

    data: TrinomialData
    poly_vars: int

    @property
    def dimension(self) -> int:
        return dimension(self.data) + self.poly_vars


@dataclass(frozen=True)
class FormalRadical:
    """base**(1/root_index) for a fixed branch over the algebraic closure.

    With root_index 1 the scalar is an honest rational and everything that
    mentions it stays machine-verifiable.
    """

    base: Fraction
    root_index: int

    @classmethod
    def of(cls, base, root_index: int = 1) -> "FormalRadical":
        b = Fraction(base)
        if b == 0:
            raise ValueError("radical of zero")
        if b == 1:
            root_index = 1
        return cls(b, int(root_index))

    @property
    def exact(self) -> bool:
        return self.root_index == 1

    def inverse(self) -> "FormalRadical":
        return FormalRadical(1 / self.base, self.root_index)

    def describe(self) -> str:
        if self.root_index == 1:
            return str(self.base)
        return f"({self.base})^(1/{self.root_index})"


@dataclass(frozen=True)
class EliminateVariable:
    """Remove one generator using a relation linear in it.

    `replacement` is its expression in the surviving generators, written
    in the post-elimination variable layout.
    """

    block: int
    var: int
    replacement: Polynomial


@dataclass(frozen=True)
class RescaleVariable:
    """New generator = scalar * old generator (same variable slot)."""

    block: int
    var: int
    scalar: FormalRadical


@dataclass(frozen=True)
class PermuteVariables:
    """Reorder blocks (and variables inside blocks).

    block_order[new_slot] = old block index; var_order[new_flat_index] =
    old flat index.  Pure relabelling, no algebra.
    """

    block_order: tuple[int, ...]
    var_order: tuple[int, ...]


@dataclass(frozen=True)
class PivotRelations:
    """Change of the two pivot monomial values.

    The defining relations say every block monomial is a linear form in
    u = T_0^beta_0 and v = T_1^beta_1.  The matrix rows express the new
    pair (u', v') in terms of (u, v); the relation set is rewritten in the
    new pair without touching any generator.
    """

    matrix: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


Move = Union[EliminateVariable, RescaleVariable, PermuteVariables, PivotRelations]


@dataclass(frozen=True)
class SubstitutionWitness:
    moves: tuple[Move, ...]

    @property
    def exact(self) -> bool:
        """True when every rescaling scalar is rational (root index 1)."""
        return all(
            m.scalar.exact for m in self.moves if isinstance(m, RescaleVariable)
        )

    def extend(self, more: Sequence[Move]) -> "SubstitutionWitness":
        return SubstitutionWitness(self.moves + tuple(more))


# ---------------------------------------------------------------------------
# Validation and basic invariants
# ---------------------------------------------------------------------------


def validate(data: TrinomialData) -> None:
    """Check the three defining constraints; raises ValidationError listing
    every violated clause with the offending indices."""
    violations: list[Violation] = []
    part = data.partition
    if len(part) < 2:
        violations.append(Violation("partition", (), "need at least two blocks"))
    for i, ni in enumerate(part):
        if ni < 1:
            violations.append(Violation("partition", (i,), f"block {i} has size {ni} < 1"))
    if len(data.beta) != len(part):
        violations.append(
            Violation(
                "partition",
                (),
                f"{len(data.beta)} exponent blocks for {len(part)} partition blocks",
            )
        )
    shaped = len(data.beta) == len(part) and all(ni >= 1 for ni in part)
    if shaped:
        for i, block in enumerate(data.beta):
            if len(block) != part[i]:
                violations.append(
                    Violation(
                        "partition",
                        (i,),
                        f"exponent block {i} has length {len(block)}, expected {part[i]}",
                    )
                )
                shaped = False
    if shaped:
        for i, block in enumerate(data.beta):
            for j, b in enumerate(block):
                if b < 1:
                    violations.append(
                        Violation("gcd", (i, j), f"exponent beta[{i}][{j}] = {b} < 1")
                    )
        gcds = [data.block_gcd(i) for i in range(len(part))]
        for i in range(len(part)):
            for j in range(i + 1, len(part)):
                if gcd(gcds[i], gcds[j]) != 1:
                    violations.append(
                        Violation(
                            "gcd",
                            (i, j),
                            f"block gcds {gcds[i]} and {gcds[j]} are not coprime",
                        )
                    )
    r = len(part) - 1
    if len(data.lambdas) != max(r - 1, 0):
        violations.append(
            Violation(
                "lambda",
                (),
                f"{len(data.lambdas)} scalars for r = {r} (need {max(r - 1, 0)})",
            )
        )
    for i, lam in enumerate(data.lambdas):
        if lam == 0:
            violations.append(Violation("lambda", (i + 2,), "zero scalar"))
    for i in range(len(data.lambdas)):
        for j in range(i + 1, len(data.lambdas)):
            if data.lambdas[i] == data.lambdas[j]:
                violations.append(
                    Violation(
                        "lambda",
                        (i + 2, j + 2),
                        f"scalars {i + 2} and {j + 2} coincide",
                    )
                )
    if violations:
        raise ValidationError(violations)


def is_valid(data: TrinomialData) -> bool:
    try:
        validate(data)
    except ValidationError:
        return False
    return True


def dimension(data: TrinomialData) -> int:
    """Krull dimension of the presented ring: n - r + 1."""
    validate(data)
    return data.n - data.r + 1


def is_reduced(data: TrinomialData) -> bool:
    """Reduced means no relation can be used to eliminate a generator:
    either r = 1 with both blocks a single exponent-1 variable, or r >= 2
    with every block exponent sum at least 2."""
    validate(data)
    if data.r == 1:
        return data.partition == (1, 1) and data.beta == ((1,), (1,))
    return all(sum(block) >= 2 for block in data.beta)


def jacobian_rank_at_origin(data: TrinomialData) -> int:
    """Rank of the Jacobian of the defining relations at the point where
    every generator vanishes.  An entry survives only where a relation is
    linear in a variable, i.e. a block of size one and exponent one."""
    validate(data)
    space = RowSpace(data.n)
    for rel in range(2, data.r + 1):
        row = [Fraction(0)] * data.n
        for b, coeff in ((0, Fraction(1)), (1, data.lambdas[rel - 2]), (rel, Fraction(1))):
            if data.partition[b] == 1 and data.beta[b][0] == 1:
                row[data.var_offset(b)] += coeff
        space.add(row)
    return space.rank


def tangent_dimension(data: TrinomialData) -> int:
    """Dimension of the tangent space at the distinguished origin; for
    reduced data this equals n, the minimal number of algebra generators."""
    return data.n - jacobian_rank_at_origin(data)


def is_smooth(data: TrinomialData) -> bool:
    """True exactly when the ring is a polynomial ring over the algebraic
    closure, i.e. the reduction collapses all relations."""
    ring, _ = reduce(data)
    return ring.data.r == 1


# ---------------------------------------------------------------------------
# Reduction: eliminate generators that appear linearly in a relation
# ---------------------------------------------------------------------------


def _block_layout_offsets(partition: Sequence[int]) -> list[int]:
    offs = [0]
    for ni in partition[:-1]:
        offs.append(offs[-1] + ni)
    return offs


def _monomial_over(partition, beta, block) -> tuple[int, ...]:
    n = sum(partition)
    exps = [0] * n
    off = sum(partition[:block])
    for j, e in enumerate(beta[block]):
        exps[off + j] = e
    return tuple(exps)


def _permutation_moves(partition, block_order) -> PermuteVariables:
    var_order = []
    for old_block in block_order:
        off = sum(partition[:old_block])
        var_order.extend(range(off, off + partition[old_block]))
    return PermuteVariables(tuple(block_order), tuple(var_order))


def _drop_block(data: TrinomialData, i: int, moves: list[Move]) -> TrinomialData:
    """Case i >= 2: the relation for block i is linear in its generator;
    drop the block and its scalar."""
    new_partition = data.partition[:i] + data.partition[i + 1:]
    new_beta = data.beta[:i] + data.beta[i + 1:]
    new_lambdas = data.lambdas[: i - 2] + data.lambdas[i - 1:]
    n_new = sum(new_partition)
    repl = Polynomial.monomial(_monomial_over(new_partition, new_beta, 0), -1) + Polynomial.monomial(
        _monomial_over(new_partition, new_beta, 1), -data.lambdas[i - 2]
    )
    moves.append(EliminateVariable(block=i, var=data.var_offset(i), replacement=repl))
    assert repl.nvars == n_new
    return TrinomialData(new_partition, new_beta, new_lambdas)


def _drop_block0(data: TrinomialData, moves: list[Move]) -> TrinomialData:
    """Case block 0 linear: substitute it from the first relation.  The
    surviving relations pivot onto block 2, whose monomial picks up a sign
    that is absorbed by rescaling its first generator with a root of -1."""
    r = data.r
    mid_partition = data.partition[1:]
    mid_beta = data.beta[1:]
    lam2 = data.lambdas[0]
    repl = Polynomial.monomial(_monomial_over(mid_partition, mid_beta, 0), -lam2) + Polynomial.monomial(
        _monomial_over(mid_partition, mid_beta, 1), -1
    )
    moves.append(EliminateVariable(block=0, var=0, replacement=repl))
    if r == 2:
        return TrinomialData(mid_partition, mid_beta, ())
    moves.append(
        RescaleVariable(
            block=1,
            var=mid_partition[0],
            scalar=FormalRadical.of(Fraction(-1), data.beta[2][0]),
        )
    )
    block_order = (1, 0) + tuple(range(2, r))
    moves.append(_permutation_moves(mid_partition, block_order))
    new_partition = (data.partition[2], data.partition[1]) + data.partition[3:]
    new_beta = (data.beta[2], data.beta[1]) + data.beta[3:]
    new_lambdas = tuple(lam - lam2 for lam in data.lambdas[1:])
    return TrinomialData(new_partition, new_beta, new_lambdas)


def _drop_block1(data: TrinomialData, moves: list[Move]) -> TrinomialData:
    """Case block 1 linear: substitute it from the first relation.  The
    surviving relations pivot onto block 2 with rational scalar updates
    lambda_j -> lambda_j/(lambda_j - lambda_2); the trailing monomials
    absorb rational constants via root rescalings."""
    r = data.r
    mid_partition = data.partition[:1] + data.partition[2:]
    mid_beta = data.beta[:1] + data.beta[2:]
    lam2 = data.lambdas[0]
    repl = Polynomial.monomial(_monomial_over(mid_partition, mid_beta, 0), Fraction(-1, 1) / lam2) + Polynomial.monomial(
        _monomial_over(mid_partition, mid_beta, 1), Fraction(-1, 1) / lam2
    )
    moves.append(EliminateVariable(block=1, var=data.var_offset(1), replacement=repl))
    if r == 2:
        return TrinomialData(mid_partition, mid_beta, ())
    offs = _block_layout_offsets(mid_partition)
    for j in range(3, r + 1):
        lamj = data.lambdas[j - 2]
        scalar = FormalRadical.of(lam2 / (lam2 - lamj), data.beta[j][0])
        moves.append(RescaleVariable(block=j - 1, var=offs[j - 1], scalar=scalar))
    new_lambdas = tuple(
        data.lambdas[j - 2] / (data.lambdas[j - 2] - lam2) for j in range(3, r + 1)
    )
    return TrinomialData(mid_partition, mid_beta, new_lambdas)


def reduce(data: TrinomialData) -> tuple[ClassifiedRing, SubstitutionWitness]:
    """Eliminate every block with exponent sum one.

    Returns (ring, witness) with ring = (data', m) satisfying
    k[data] = k[data']^[m] and data' reduced.  Each elimination removes one
    generator and one relation, so the dimension n - r + 1 is preserved;
    when the relations collapse entirely the ring is a polynomial ring and
    the canonical reduced shape ((1),(1)) with m = n' - 2 is emitted.
    """
    validate(data)
    cur = data
    moves: list[Move] = []
    while cur.r >= 2:
        linear = [i for i in range(cur.r + 1) if sum(cur.beta[i]) == 1]
        if not linear:
            break
        tail = [i for i in linear if i >= 2]
        if tail:
            cur = _drop_block(cur, tail[0], moves)
        elif 0 in linear:
            cur = _drop_block0(cur, moves)
        else:
            cur = _drop_block1(cur, moves)
    if cur.r == 1:
        out = TrinomialData((1, 1), ((1,), (1,)), ())
        return ClassifiedRing(out, cur.n - 2), SubstitutionWitness(tuple(moves))
    return ClassifiedRing(cur, 0), SubstitutionWitness(tuple(moves))


# ---------------------------------------------------------------------------
# The linear-forms pivot
# ---------------------------------------------------------------------------
#
# Inside the ring, every block monomial m_i = T_i^beta_i is a linear form in
# u = m_0 and v = m_1: m_0 = u, m_1 = v, m_i = -u - lambda_i v.  Reordering
# blocks amounts to a rational 2x2 change of the pair (u, v); the scalars of
# the reordered presentation are forced up to one global constant, and the
# constant is fixed by normalizing the first trailing scalar to 1.


def _block_forms(data: TrinomialData) -> list[tuple[Fraction, Fraction]]:
    forms = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    forms.extend((Fraction(-1), -lam) for lam in data.lambdas)
    return forms


def _pivot(
    data: TrinomialData,
    order: Sequence[int],
    normalize: bool,
    scale_a: Fraction = Fraction(1),
    scale_b: Fraction = Fraction(1),
) -> tuple[TrinomialData, list[Move]]:
    """Present the ring with blocks reordered as `order`.

    Solves each block form against the forms of the two new pivot blocks;
    the y/x ratios are the scalar data of the new presentation up to one
    global constant.  With normalize=True the constant is fixed so the
    first trailing scalar becomes 1 (absorbed by rescaling the new block-1
    generator); the scale_a/scale_b knobs only rescale the pivot pair and
    must not change normalized output.
    """
    r = data.r
    assert r >= 2 and sorted(order) == list(range(r + 1))
    forms = _block_forms(data)
    a, b = order[0], order[1]
    la = (scale_a * forms[a][0], scale_a * forms[a][1])
    lb = (scale_b * forms[b][0], scale_b * forms[b][1])
    det = la[0] * lb[1] - la[1] * lb[0]
    assert det != 0
    xs: dict[int, Fraction] = {}
    rhos: dict[int, Fraction] = {}
    for c in order[2:]:
        lc = forms[c]
        x = (lc[0] * lb[1] - lc[1] * lb[0]) / det
        y = (la[0] * lc[1] - la[1] * lc[0]) / det
        assert x != 0 and y != 0
        xs[c] = x
        rhos[c] = y / x
    k1 = rhos[order[2]] if normalize else Fraction(1)
    new_lambdas = tuple(rhos[c] / k1 for c in order[2:])
    new_partition = tuple(data.partition[i] for i in order)
    new_beta = tuple(data.beta[i] for i in order)
    new_data = TrinomialData(new_partition, new_beta, new_lambdas)
    moves: list[Move] = []
    if tuple(order) != tuple(range(r + 1)):
        moves.append(_permutation_moves(data.partition, tuple(order)))
    offs = _block_layout_offsets(new_partition)
    if k1 != 1:
        moves.append(
            RescaleVariable(block=1, var=offs[1], scalar=FormalRadical.of(k1, data.beta[b][0]))
        )
    for pos, c in enumerate(order[2:], start=2):
        kc = Fraction(-1) / xs[c]
        if kc != 1:
            moves.append(
                RescaleVariable(
                    block=pos, var=offs[pos], scalar=FormalRadical.of(kc, data.beta[c][0])
                )
            )
    matrix = (la, (k1 * lb[0], k1 * lb[1]))
    identity = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
    if moves or matrix != identity:
        moves.append(PivotRelations(matrix))
    return new_data, moves


def permute_blocks(data: TrinomialData, order: Sequence[int]) -> tuple[TrinomialData, SubstitutionWitness]:
    """Reorder the blocks of a presentation; scalars are recomputed so the
    result presents the same ring.  No normalization is applied."""
    validate(data)
    order = tuple(int(i) for i in order)
    if sorted(order) != list(range(data.r + 1)):
        raise ValueError("not a permutation of the blocks")
    if data.r == 1:
        new_data = TrinomialData(
            tuple(data.partition[i] for i in order),
            tuple(data.beta[i] for i in order),
            (),
        )
        move = _permutation_moves(data.partition, order)
        return new_data, SubstitutionWitness((move,))
    new_data, moves = _pivot(data, order, normalize=False)
    return new_data, SubstitutionWitness(tuple(moves))


# ---------------------------------------------------------------------------
# Canonical forms in dimension two
# ---------------------------------------------------------------------------


def mori_normal_form(data: TrinomialData) -> tuple[TrinomialData, SubstitutionWitness]:
    """Canonical presentation for unit-partition (dimension-two) data.

    Output is either ((1),(1)) for the polynomial ring, or has strictly
    decreasing exponents beta_0 > beta_1 > ... > beta_r >= 2 with the
    first scalar equal to 1.  Computed by reducing, then a single
    linear-forms pivot onto the blocks sorted by exponent, then the
    scalar normalization.  This is a complete isomorphism invariant over
    an algebraically closed field of characteristic zero.
    """
    validate(data)
    if any(ni != 1 for ni in data.partition):
        raise NotUnitPartition("normal form requires all blocks of size one")
    ring, witness = reduce(data)
    cur = ring.data
    if cur.r == 1:
        return cur, witness
    order = sorted(range(cur.r + 1), key=lambda i: -cur.beta[i][0])
    new_data, moves = _pivot(cur, order, normalize=True)
    out = witness.extend(moves)
    assert _in_mori_form(new_data)
    return new_data, out


def _in_mori_form(data: TrinomialData) -> bool:
    if data.r == 1:
        return data.beta == ((1,), (1,))
    exps = [b[0] for b in data.beta]
    return (
        all(ni == 1 for ni in data.partition)
        and all(x > y for x, y in zip(exps, exps[1:]))
        and exps[-1] >= 2
        and data.lambdas[0] == 1
    )


def mori_normal_form_casewise(data: TrinomialData) -> TrinomialData:
    """Independent route to the canonical form, as a chain of elementary
    moves: bring the largest exponent to the front, then the second
    largest to the second slot, sort the tail, and scale the first
    trailing scalar to 1.  Used to cross-check the pivot route."""
    validate(data)
    if any(ni != 1 for ni in data.partition):
        raise NotUnitPartition("normal form requires all blocks of size one")
    ring, _ = reduce(data)
    cur = ring.data
    if cur.r == 1:
        return cur
    exps = [b[0] for b in cur.beta]
    lams = list(cur.lambdas)
    r = cur.r

    big = max(range(r + 1), key=lambda i: exps[i])
    if big == 1:
        # swap the two pivot blocks; scalars invert
        exps = [exps[1], exps[0]] + exps[2:]
        lams = [1 / l for l in lams]
    elif big >= 2:
        lam_big = lams[big - 2]
        tail_exps = [exps[0]] + [exps[i] for i in range(2, r + 1) if i != big]
        tail_lams = [lam_big] + [lam_big - lams[i - 2] for i in range(2, r + 1) if i != big]
        exps = [exps[big], exps[1]] + tail_exps
        lams = tail_lams

    second = max(range(1, r + 1), key=lambda i: exps[i])
    if second >= 2:
        lam_sec = lams[second - 2]
        tail_exps = [exps[1]] + [exps[i] for i in range(2, r + 1) if i != second]
        tail_lams = [Fraction(1)] + [
            lams[i - 2] / (lams[i - 2] - lam_sec) for i in range(2, r + 1) if i != second
        ]
        exps = [exps[0], exps[second]] + tail_exps
        lams = tail_lams

    tail = sorted(range(2, r + 1), key=lambda i: -exps[i])
    exps = exps[:2] + [exps[i] for i in tail]
    lams = [lams[i - 2] for i in tail]
    lam2 = lams[0]
    lams = [l / lam2 for l in lams]
    return TrinomialData(
        tuple(1 for _ in range(r + 1)), tuple((e,) for e in exps), tuple(lams)
    )


def is_isomorphic_dim2(a: TrinomialData, b: TrinomialData) -> bool:
    """Isomorphism test for dimension-two rings, over an algebraically
    closed field of characteristic zero: canonical forms must agree
    exactly."""
    fa, _ = mori_normal_form(a)
    fb, _ = mori_normal_form(b)
    return fa == fb


# ---------------------------------------------------------------------------
# Dimension three
# ---------------------------------------------------------------------------


def dim3_normal_form(data: TrinomialData) -> tuple[TrinomialData, SubstitutionWitness]:
    """Presentation normal form for dimension-three data.

    The single block of size two moves to the last slot with its exponent
    pair sorted descending; the size-one prefix satisfies the
    dimension-two constraints (strictly decreasing exponents, first
    trailing scalar 1) or collapses to the polynomial ring, in which case
    the canonical shape is partition (1, 2) with all exponents 1.  This is
    a normal form of the presentation only: no uniqueness statement is
    made in dimension three.
    """
    validate(data)
    two_blocks = [i for i, ni in enumerate(data.partition) if ni == 2]
    if dimension(data) != 3 or len(two_blocks) != 1 or any(
        ni not in (1, 2) for ni in data.partition
    ):
        raise NotDimensionThree(
            "need exactly one block of size two and all others of size one"
        )
    ring, witness = reduce(data)
    cur = ring.data
    if cur.r == 1:
        return TrinomialData((1, 2), ((1,), (1, 1)), ()), witness
    moves: list[Move] = []
    size1 = sorted(
        (i for i, ni in enumerate(cur.partition) if ni == 1),
        key=lambda i: -cur.beta[i][0],
    )
    size2 = next(i for i, ni in enumerate(cur.partition) if ni == 2)
    order = tuple(size1) + (size2,)
    new_data, pivot_moves = _pivot(cur, order, normalize=True)
    moves.extend(pivot_moves)
    c, d = new_data.beta[-1]
    if c < d:
        off = new_data.var_offset(new_data.r)
        var_order = tuple(range(off)) + (off + 1, off)
        moves.append(
            PermuteVariables(tuple(range(new_data.r + 1)), var_order)
        )
        new_beta = new_data.beta[:-1] + ((d, c),)
        new_data = TrinomialData(new_data.partition, new_beta, new_data.lambdas)
    validate(new_data)
    return new_data, witness.extend(moves)


# ---------------------------------------------------------------------------
# Witness replay
# ---------------------------------------------------------------------------


def replay_witness(source: TrinomialData, witness: SubstitutionWitness) -> Optional[list[Polynomial]]:
    """Express each source generator in the final presentation.

    Returns None when some rescaling uses a genuine root, in which case
    only the human-readable script documents the transformation.
    """
    if not witness.exact:
        return None
    exprs = [Polynomial.variable(source.n, v) for v in range(source.n)]
    for move in witness.moves:
        if isinstance(move, EliminateVariable):
            exprs = [e.eliminate_var(move.var, move.replacement) for e in exprs]
        elif isinstance(move, RescaleVariable):
            factor = 1 / move.scalar.base
            exprs = [e.scale_var(move.var, factor) for e in exprs]
        elif isinstance(move, PermuteVariables):
            nv = len(move.var_order)
            new_of_old = [0] * nv
            for new, old in enumerate(move.var_order):
                new_of_old[old] = new
            exprs = [e.remap_vars(new_of_old, nv) for e in exprs]
        elif isinstance(move, PivotRelations):
            pass
        else:
            raise TypeError(f"unknown move {move!r}")
    return exprs


def verify_witness(
    source: TrinomialData,
    result: TrinomialData,
    witness: SubstitutionWitness,
    poly_vars: int = 0,
) -> Optional[bool]:
    """Replay the witness and check that every defining relation of the
    source dies in the result ring.  None means the witness contains
    irrational rescalings and cannot be machine-checked."""
    from .ring import RewriteSystem

    exprs = replay_witness(source, witness)
    if exprs is None:
        return None
    expected = result.n + poly_vars
    if any(e.nvars != expected for e in exprs):
        return False
    rs = RewriteSystem.for_data(result, extra_vars=poly_vars)
    for rel in source.defining_polynomials():
        image = rel.compose(exprs) if exprs else rel
        if not rs.reduce(image).is_zero():
            return False
    return True


def _var_names(partition: Sequence[int]) -> list[str]:
    names = []
    for i, ni in enumerate(partition):
        if ni == 1:
            names.append(f"t{i}")
        else:
            names.extend(f"t{i}_{j + 1}" for j in range(ni))
    return names


def witness_script(source: TrinomialData, witness: SubstitutionWitness) -> str:
    """Human/CAS-readable replay script for a recorded transformation."""
    lines = [f"generators: {', '.join(_var_names(source.partition))}"]
    for idx, move in enumerate(witness.moves, start=1):
        if isinstance(move, EliminateVariable):
            lines.append(
                f"{idx}. eliminate generator of block {move.block} "
                f"(variable {move.var}) = {move.replacement.format()}"
            )
        elif isinstance(move, RescaleVariable):
            lines.append(
                f"{idx}. rescale variable {move.var} (block {move.block}) "
                f"by {move.scalar.describe()}"
            )
        elif isinstance(move, PermuteVariables):
            lines.append(f"{idx}. reorder blocks as {move.block_order}")
        elif isinstance(move, PivotRelations):
            (a0, a1), (b0, b1) = move.matrix
            lines.append(
                f"{idx}. rewrite relations with pivot pair "
                f"u' = ({a0})*u + ({a1})*v, v' = ({b0})*u + ({b1})*v"
            )
    if not witness.moves:
        lines.append("identity (no moves)")
    return "\n".join(lines)
