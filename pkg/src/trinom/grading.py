"""The integer grading induced by a trinomial data set.

Variable degrees are determined by making every defining relation
homogeneous: block monomials must share a common degree.  We define the
grading lattice as the HNF-canonical basis of the saturated integer kernel
of those homogeneity constraints, which is the unique such lattice up to a
GL transformation and makes the grading effective and unmixed with trivial
degree-zero part.  By convention the constraint deg T_1^beta_1 =
deg T_0^beta_0 is imposed even when there are no relations (r = 1), so a
polynomial ring still receives the expected weights.

Variables are ordered block-major: t_01..t_0n0, t_11, ... .
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidTarget, NotRepresentable
from .lattice import (
    IntMatrix,
    integer_kernel_basis,
    smith_normal_form,
    solve_integer_linear,
)
from .monoid import GroupOrder, MonoidSpec, UnmixedCertificate, build_order, is_unmixed
from .poly import Monomial
from .trinomial import TrinomialData, validate


@dataclass(frozen=True)
class GradingMatrix:
    """Degrees of the n variables under a Z^rank grading, one column per
    variable in block-major order."""

    rank: int
    degrees: IntMatrix

    def __post_init__(self):
        if self.degrees.nrows != self.rank:
            raise ValueError("rank does not match degree matrix")

    @property
    def nvars(self) -> int:
        return self.degrees.ncols

    def column(self, j: int) -> tuple[int, ...]:
        return self.degrees.column(j)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return self.degrees.columns()

    def monomial_degree(self, exps: Sequence[int]) -> tuple[int, ...]:
        return self.degrees.apply(exps)


def homogeneity_constraints(data: TrinomialData) -> IntMatrix:
    """r x n matrix whose kernel is the grading lattice: row i says
    deg T_0^beta_0 - deg T_i^beta_i = 0."""
    rows = []
    n = data.n
    for i in range(1, data.r + 1):
        row = [0] * n
        off0 = data.var_offset(0)
        for j, e in enumerate(data.beta[0]):
            row[off0 + j] = e
        offi = data.var_offset(i)
        for j, e in enumerate(data.beta[i]):
            row[offi + j] = -e
        rows.append(row)
    return IntMatrix.from_rows(rows, n)


def induced_grading(data: TrinomialData) -> GradingMatrix:
    """The canonical grading: HNF basis of the saturated kernel of the
    homogeneity constraints.  Rank is n - r = dimension - 1."""
    validate(data)
    kernel = integer_kernel_basis(homogeneity_constraints(data))
    return GradingMatrix(kernel.nrows, kernel)


def check_effective(gm: GradingMatrix) -> bool:
    """True when the variable degrees generate the full grading group,
    i.e. all Smith invariant factors of the degree matrix are 1."""
    if gm.rank == 0:
        return True
    factors = smith_normal_form(gm.degrees)
    return len(factors) == gm.rank and all(f == 1 for f in factors)


def check_unmixed_grading(gm: GradingMatrix) -> tuple[bool, UnmixedCertificate]:
    """Unmixedness of the weight monoid generated by the variable degrees."""
    return is_unmixed(MonoidSpec.make(gm.rank, gm.columns()))


def check_B0_trivial(gm: GradingMatrix) -> bool:
    """True when the degree-zero piece is spanned by 1: no variable has
    degree zero and no nontrivial nonnegative combination of degrees
    vanishes."""
    if any(not any(col) for col in gm.columns()):
        return False
    ok, _ = check_unmixed_grading(gm)
    return ok


def weight_order(gm: GradingMatrix) -> GroupOrder:
    """Group order under which every variable degree is strictly positive."""
    return build_order(MonoidSpec.make(gm.rank, gm.columns()))


def effectiveness_witness(gm: GradingMatrix, target: Sequence[int]) -> tuple[Monomial, Monomial]:
    """Monomials (a, b) with deg(a) - deg(b) = target.

    Solves the integer system degree-matrix · e = target and splits the
    solution into positive and negative parts; the representative is
    canonicalized modulo the kernel of the degree matrix, so output is
    deterministic and small.  Solvable for every target when the grading
    is effective.
    """
    target = tuple(int(v) for v in target)
    if len(target) != gm.rank:
        raise InvalidTarget(f"target has length {len(target)}, grading rank is {gm.rank}")
    e = solve_integer_linear(gm.degrees, target)
    if e is None:
        raise NotRepresentable("target is not an integer combination of the degrees")
    e = list(e)
    kernel = integer_kernel_basis(gm.degrees)
    for row in kernel.rows:
        piv = next(j for j, v in enumerate(row) if v)
        q = e[piv] // row[piv]
        if q:
            e = [x - q * y for x, y in zip(e, row)]
    a = tuple(max(v, 0) for v in e)
    b = tuple(max(-v, 0) for v in e)
    return a, b
