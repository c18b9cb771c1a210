"""Signature sequences for the graded quotient rings.

A signature sequence starts with the constant 1 and adjoins, at each step,
a homogeneous element of minimal degree outside the subalgebra generated
so far; it is complete when the sequence generates the whole ring.  For
reduced data the variable images, sorted by degree, already form a
complete homogeneous signature sequence of length n + 1; the greedy
construction below recovers this from the grading alone by scanning
weight-monoid degrees in their well-order.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotPointed, NotReduced
from .grading import GradingMatrix, check_B0_trivial
from .lattice import RowSpace
from .monoid import GroupOrder
from .poly import Polynomial
from .ring import (
    RewriteSystem,
    _dot,
    _exponent_tuples,
    _positive_weight,
    enumerate_graded_piece,
    homogeneous_degree,
    subalgebra_membership,
    weight_monoid_degrees,
)
from .trinomial import TrinomialData, is_reduced, validate


@dataclass(frozen=True)
class SignatureSequence:
    """Ordered homogeneous elements starting with 1, with nondecreasing
    degrees; complete means they generate the ring."""

    elements: tuple[Polynomial, ...]
    degrees: tuple[tuple[int, ...], ...]
    complete: bool

    def __len__(self) -> int:
        return len(self.elements)


def verify_signature_criteria(
    gens: Sequence[Polynomial],
    data: TrinomialData,
    gm: GradingMatrix,
    order: GroupOrder,
) -> bool:
    """Check the two signature conditions on an ordered homogeneous list:
    degrees nondecreasing under the order, and each element outside the
    subalgebra generated by its predecessors.  When the list additionally
    generates the ring, it is a complete homogeneous signature sequence
    (with 1 prepended)."""
    validate(data)
    rs = RewriteSystem.for_data(data)
    nfs = [rs.reduce(g) for g in gens]
    degs = [homogeneous_degree(f, gm) for f in nfs]
    keys = [order.key(d) for d in degs if d is not None]
    if any(f.is_zero() for f in nfs):
        return False
    if any(ka > kb for ka, kb in zip(keys, keys[1:])):
        return False
    for i, f in enumerate(nfs):
        if subalgebra_membership(f, nfs[:i], gm, data):
            return False
    return True


def canonical_generator_order(
    data: TrinomialData, gm: GradingMatrix, order: GroupOrder
) -> SignatureSequence:
    """The variable images sorted by degree (ties by variable index) form
    a complete homogeneous signature sequence for reduced data."""
    if not is_reduced(data):
        raise NotReduced("variable ordering is canonical only for reduced data")
    n = data.n
    cols = gm.columns()
    idx = sorted(range(n), key=lambda v: (order.key(cols[v]), v))
    vars_sorted = [Polynomial.variable(n, v) for v in idx]
    assert verify_signature_criteria(vars_sorted, data, gm, order)
    zero = tuple(0 for _ in range(gm.rank))
    return SignatureSequence(
        (Polynomial.constant(n, 1),) + tuple(vars_sorted),
        (zero,) + tuple(cols[v] for v in idx),
        True,
    )


def greedy_signature_sequence(
    data: TrinomialData,
    gm: GradingMatrix,
    order: GroupOrder,
    step_budget: int = 64,
    degree_budget: int = 128,
) -> SignatureSequence:
    """Build a signature sequence degree by degree.

    Weight-monoid degrees are scanned in increasing order; at each degree
    whose graded piece is not yet contained in the current subalgebra, the
    lexicographically smallest standard monomial independent of it is
    adjoined.  Smaller pieces are absorbed before the scan moves on, so
    each adjoined element has minimal degree by construction.  The
    sequence is flagged complete once every variable lies in the generated
    subalgebra; if a budget runs out first, the partial sequence is
    returned with complete=False.
    """
    validate(data)
    if not check_B0_trivial(gm):
        raise NotPointed("grading admits a nontrivial degree-zero piece")
    phi = _positive_weight(gm)
    rs = RewriteSystem.for_data(data)
    n = data.n
    cols = gm.columns()
    zero = tuple(0 for _ in range(gm.rank))
    elements: list[Polynomial] = []
    degrees: list[tuple[int, ...]] = []

    def all_variables_inside() -> bool:
        return all(
            subalgebra_membership(Polynomial.variable(n, v), elements, gm, data)
            for v in range(n)
        )

    complete = False
    steps = 0
    for g in weight_monoid_degrees(gm, degree_budget, order):
        if g == zero:
            continue
        piece = enumerate_graded_piece(g, gm, data)
        if not piece:
            continue
        index = {m: i for i, m in enumerate(piece)}
        span = RowSpace(len(piece))
        for e in _exponent_tuples(degrees, g, phi):
            if not any(e):
                continue
            prod = Polynomial.constant(n, 1)
            for h, exp in zip(elements, e):
                if exp:
                    prod = rs.reduce(prod * h ** exp)
            if prod.is_zero():
                continue
            vec = [Fraction(0)] * len(piece)
            for m, c in prod.terms.items():
                vec[index[m]] = c
            span.add(vec)
        for pos, mono in enumerate(piece):
            if span.rank == len(piece):
                break
            unit = [Fraction(0)] * len(piece)
            unit[pos] = Fraction(1)
            if span.add(unit):
                if steps >= step_budget:
                    return SignatureSequence(
                        (Polynomial.constant(n, 1),) + tuple(elements),
                        (zero,) + tuple(degrees),
                        False,
                    )
                elements.append(Polynomial.monomial(mono))
                degrees.append(g)
                steps += 1
        if steps and all_variables_inside():
            complete = True
            break
    else:
        complete = bool(elements) and all_variables_inside()
    return SignatureSequence(
        (Polynomial.constant(n, 1),) + tuple(elements),
        (zero,) + tuple(degrees),
        complete,
    )
