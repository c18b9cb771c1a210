"""Exact arithmetic in the quotient ring via confluent monomial rewriting.

The defining relations rewrite T_i^beta_i -> -T_0^beta_0 - lambda_i
T_1^beta_1 for i >= 2.  The pattern monomials live on pairwise disjoint
variable blocks, so they are pairwise coprime and the relation set is a
Groebner basis for any term order that selects the patterns as leading
terms (blocks i >= 2 ranked above blocks 0 and 1); reduction therefore
terminates and is confluent, and normal forms are canonical ideal
representatives.  The S-pair criterion is asserted computationally at
construction anyway.

Monomials not divisible by any pattern ("standard" monomials) form a
vector-space basis of the quotient; graded pieces are enumerated by a
bounded integer knapsack made finite by a strictly positive functional on
the variable degrees.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvalidTarget, NotHomogeneous, NotPointed, VariableCountMismatch
from .grading import GradingMatrix, check_B0_trivial, check_unmixed_grading, weight_order
from .lattice import RowSpace
from .monoid import GroupOrder
from .poly import Monomial, Polynomial, monomial_div, monomial_divides
from .trinomial import TrinomialData, validate


def block_weight_key(data: TrinomialData, mono: Monomial) -> tuple[int, int, Monomial]:
    """Term-order key ranking block >= 2 content first, then total degree,
    then the exponent tuple; the rewrite patterns lead their relations
    under this order."""
    tail_start = data.var_offset(2) if data.r >= 2 else data.n
    tail = sum(mono[tail_start:])
    return (tail, sum(mono), mono)


@dataclass(frozen=True)
class RewriteSystem:
    """Rewrite rules of one data set, patterns on pairwise disjoint blocks."""

    data: TrinomialData
    nvars: int
    rules: tuple[tuple[Monomial, Polynomial], ...]

    @classmethod
    def for_data(cls, data: TrinomialData, extra_vars: int = 0) -> "RewriteSystem":
        validate(data)
        nvars = data.n + extra_vars
        pad = (0,) * extra_vars

        def padded(block: int) -> Monomial:
            return data.block_monomial(block) + pad

        rules = []
        for i in range(2, data.r + 1):
            pattern = padded(i)
            repl = Polynomial.monomial(padded(0), -1) + Polynomial.monomial(
                padded(1), -data.lambdas[i - 2]
            )
            rules.append((pattern, repl))
        rs = cls(data, nvars, tuple(rules))
        rs._assert_confluent()
        return rs

    def _assert_confluent(self) -> None:
        # Buchberger criterion: every S-polynomial of the relation set
        # reduces to zero.  Holds structurally (coprime leading terms) but
        # is asserted computationally.
        for i in range(len(self.rules)):
            for j in range(i + 1, len(self.rules)):
                pi, ri = self.rules[i]
                pj, rj = self.rules[j]
                fi = Polynomial.monomial(pi) - ri
                fj = Polynomial.monomial(pj) - rj
                s = Polynomial.monomial(pj) * fi - Polynomial.monomial(pi) * fj
                if not self.reduce(s).is_zero():
                    raise AssertionError("S-polynomial did not reduce to zero")

    def _find_reducible(self, f: Polynomial) -> Optional[tuple[Monomial, int]]:
        for mono, _ in f.sorted_terms():
            for k, (pattern, _) in enumerate(self.rules):
                if monomial_divides(pattern, mono):
                    return mono, k
        return None

    def reduce(self, f: Polynomial) -> Polynomial:
        """Fully reduced canonical representative of f."""
        if f.nvars != self.nvars:
            raise VariableCountMismatch(
                f"polynomial has {f.nvars} variables, ring has {self.nvars}"
            )
        cur = f
        while True:
            hit = self._find_reducible(cur)
            if hit is None:
                return cur
            mono, k = hit
            pattern, repl = self.rules[k]
            coeff = cur.terms[mono]
            quotient = monomial_div(mono, pattern)
            step = Polynomial.monomial(quotient, coeff) * repl - Polynomial.monomial(
                mono, coeff
            )
            cur = cur + step

    def reduce_with_strategy(self, f: Polynomial, rng: random.Random) -> Polynomial:
        """Reduction applying rules in random order; confluence makes the
        result independent of the strategy (asserted by tests)."""
        if f.nvars != self.nvars:
            raise VariableCountMismatch(
                f"polynomial has {f.nvars} variables, ring has {self.nvars}"
            )
        cur = f
        while True:
            options = [
                (mono, k)
                for mono in cur.terms
                for k, (pattern, _) in enumerate(self.rules)
                if monomial_divides(pattern, mono)
            ]
            if not options:
                return cur
            mono, k = rng.choice(sorted(options))
            pattern, repl = self.rules[k]
            coeff = cur.terms[mono]
            quotient = monomial_div(mono, pattern)
            step = Polynomial.monomial(quotient, coeff) * repl - Polynomial.monomial(
                mono, coeff
            )
            cur = cur + step

    def is_standard(self, mono: Monomial) -> bool:
        return not any(monomial_divides(p, mono) for p, _ in self.rules)


def normal_form(f: Polynomial, data: TrinomialData) -> Polynomial:
    """Canonical representative: no term divisible by a rewrite pattern.
    NF(f) == NF(g) exactly when f - g lies in the defining ideal."""
    return RewriteSystem.for_data(data).reduce(f)


def ring_arithmetic(f: Polynomial, g: Polynomial, op: str, data: TrinomialData) -> Polynomial:
    """Normal form of f+g or f*g."""
    rs = RewriteSystem.for_data(data)
    if f.nvars != rs.nvars or g.nvars != rs.nvars:
        raise VariableCountMismatch("operand variable counts do not match the ring")
    if op == "add":
        return rs.reduce(f + g)
    if op == "mul":
        return rs.reduce(f * g)
    raise ValueError(f"unknown operation {op!r}")


def homogeneous_degree(f: Polynomial, gm: GradingMatrix) -> Optional[tuple[int, ...]]:
    """Common degree of all terms, None for the zero polynomial; raises
    when terms disagree."""
    deg: Optional[tuple[int, ...]] = None
    for mono in f.terms:
        d = gm.monomial_degree(mono)
        if deg is None:
            deg = d
        elif d != deg:
            raise NotHomogeneous(f"terms of degree {deg} and {d}")
    return deg


def _positive_weight(gm: GradingMatrix) -> tuple[int, ...]:
    ok, cert = check_unmixed_grading(gm)
    if not ok or any(not any(col) for col in gm.columns()):
        raise NotPointed("grading admits a nontrivial degree-zero piece")
    return cert.phi


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def enumerate_graded_piece(
    degree: Sequence[int], gm: GradingMatrix, data: TrinomialData
) -> list[Monomial]:
    """All standard monomials of the given degree, in ascending exponent
    order.  Finite because a strictly positive functional bounds every
    exponent; the grading must have trivial degree-zero part."""
    validate(data)
    target = tuple(int(v) for v in degree)
    if len(target) != gm.rank:
        raise InvalidTarget(f"degree has length {len(target)}, grading rank is {gm.rank}")
    phi = _positive_weight(gm)
    rs = RewriteSystem.for_data(data)
    cols = gm.columns()
    weights = [_dot(phi, c) for c in cols]
    n = gm.nvars
    out: list[Monomial] = []

    def walk(var: int, remaining: tuple[int, ...], budget: int, exps: list[int]):
        if var == n:
            if not any(remaining):
                mono = tuple(exps)
                if rs.is_standard(mono):
                    out.append(mono)
            return
        top = budget // weights[var]
        for e in range(top + 1):
            rem = tuple(x - e * c for x, c in zip(remaining, cols[var]))
            walk(var + 1, rem, budget - e * weights[var], exps + [e])

    budget = _dot(phi, target)
    if budget >= 0:
        walk(0, target, budget, [])
    return sorted(out)


def _exponent_tuples(degrees: list[tuple[int, ...]], target, phi) -> list[tuple[int, ...]]:
    """All e in N^k with sum e_i * degrees_i == target, phi-bounded."""
    k = len(degrees)
    weights = [_dot(phi, d) for d in degrees]
    budget = _dot(phi, target)
    out: list[tuple[int, ...]] = []

    def walk(i: int, remaining, left: int, exps: list[int]):
        if i == k:
            if not any(remaining):
                out.append(tuple(exps))
            return
        top = left // weights[i]
        for e in range(top + 1):
            rem = tuple(x - e * c for x, c in zip(remaining, degrees[i]))
            walk(i + 1, rem, left - e * weights[i], exps + [e])

    if budget >= 0:
        walk(0, tuple(target), budget, [])
    return out


def subalgebra_membership(
    x: Polynomial,
    gens: Sequence[Polynomial],
    gm: GradingMatrix,
    data: TrinomialData,
) -> bool:
    """Does x lie in the subalgebra generated by homogeneous gens?

    Decidable for homogeneous x: only finitely many generator products
    share its degree (positivity of the grading), so membership reduces to
    one exact linear solve over the coordinates of the graded piece.
    """
    validate(data)
    phi = _positive_weight(gm)
    rs = RewriteSystem.for_data(data)
    nf_x = rs.reduce(x)
    if nf_x.is_zero():
        return True
    deg_x = homogeneous_degree(nf_x, gm)
    if not any(deg_x):
        return True  # constants always belong
    useful: list[tuple[Polynomial, tuple[int, ...]]] = []
    for g in gens:
        nf_g = rs.reduce(g)
        if nf_g.is_zero():
            continue
        deg_g = homogeneous_degree(nf_g, gm)
        if not any(deg_g):
            continue
        useful.append((nf_g, deg_g))
    products: list[Polynomial] = []
    for e in _exponent_tuples([d for _, d in useful], deg_x, phi):
        if not any(e):
            continue
        prod = Polynomial.constant(rs.nvars, 1)
        for (g, _), exp in zip(useful, e):
            if exp:
                prod = rs.reduce(prod * g ** exp)
        if not prod.is_zero():
            products.append(prod)
    index = {m: i for i, m in enumerate(sorted(set(nf_x.terms) | {m for p in products for m in p.terms}))}

    def coords(p: Polynomial) -> list[Fraction]:
        vec = [Fraction(0)] * len(index)
        for m, c in p.terms.items():
            vec[index[m]] = c
        return vec

    space = RowSpace(len(index))
    for p in products:
        space.add(coords(p))
    return space.contains(coords(nf_x))


@dataclass(frozen=True)
class FiniteTypeReport:
    """Graded-piece dimensions for all weight-monoid degrees within a
    positive-functional budget."""

    budget: int
    degrees: tuple[tuple[int, ...], ...]
    dimensions: tuple[int, ...]
    zero_degree_dimension: int
    all_degrees_nonnegative: bool

    @property
    def clean(self) -> bool:
        return self.zero_degree_dimension == 1 and self.all_degrees_nonnegative


def weight_monoid_degrees(
    gm: GradingMatrix, budget: int, order: Optional[GroupOrder] = None
) -> list[tuple[int, ...]]:
    """All sums of variable degrees with positive-functional value at most
    budget, sorted by the group order (the scan order of every
    enumeration in this library)."""
    phi = _positive_weight(gm)
    if order is None:
        order = weight_order(gm)
    cols = sorted(set(gm.columns()))
    seen = {tuple(0 for _ in range(gm.rank))}
    frontier = [tuple(0 for _ in range(gm.rank))]
    while frontier:
        nxt = []
        for g in frontier:
            for c in cols:
                cand = tuple(x + y for x, y in zip(g, c))
                if cand not in seen and _dot(phi, cand) <= budget:
                    seen.add(cand)
                    nxt.append(cand)
        frontier = nxt
    return sorted(seen, key=order.key)


def check_finite_type(
    gm: GradingMatrix, data: TrinomialData, degree_budget: int
) -> FiniteTypeReport:
    """Enumerate every graded piece within the budget; the degree-zero
    piece must be one-dimensional and no weight-monoid degree may be
    negative under the constructed order."""
    validate(data)
    if not check_B0_trivial(gm):
        raise NotPointed("grading admits a nontrivial degree-zero piece")
    order = weight_order(gm)
    zero = tuple(0 for _ in range(gm.rank))
    degs = weight_monoid_degrees(gm, degree_budget, order)
    dims = tuple(len(enumerate_graded_piece(g, gm, data)) for g in degs)
    zero_dim = dims[degs.index(zero)]
    nonneg = all(order.key(g) >= order.key(zero) for g in degs)
    return FiniteTypeReport(degree_budget, tuple(degs), dims, zero_dim, nonneg)
