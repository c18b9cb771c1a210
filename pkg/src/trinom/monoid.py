"""Finitely generated submonoids of Z^n.

A monoid given by finitely many integer generators is *unmixed* when its
maximal subgroup is trivial, i.e. no nonzero element has an inverse inside
the monoid.  This module decides unmixedness with verifiable certificates,
constructs positive bases and compatible group orders for unmixed monoids,
and computes the maximal subgroup together with a torsion report for the
quotient of the generated group.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import NotUnmixed
from .lattice import (
    IntMatrix,
    determinant,
    hermite_normal_form,
    inverse_unimodular,
    nonnegative_null_relation,
    positive_functional,
    rational_feasible,
    smith_normal_form,
    solve_integer_linear,
)


@dataclass(frozen=True)
class MonoidSpec:
    """A submonoid of Z^ambient_rank given by a finite generator list.

    Duplicates and zero vectors are allowed; they change nothing about the
    monoid but are kept so certificates can refer to generator indices.
    """

    ambient_rank: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.ambient_rank < 1:
            raise ValueError("ambient rank must be at least 1")
        for g in self.generators:
            if len(g) != self.ambient_rank:
                raise ValueError("generator length does not match ambient rank")

    @classmethod
    def make(cls, ambient_rank: int, generators: Sequence[Sequence[int]]) -> "MonoidSpec":
        return cls(int(ambient_rank), tuple(tuple(int(v) for v in g) for g in generators))


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class PositiveFunctional:
    """Integer functional strictly positive on every nonzero generator."""

    phi: tuple[int, ...]

    def verify(self, spec: MonoidSpec) -> bool:
        if len(self.phi) != spec.ambient_rank:
            return False
        return all(_dot(self.phi, g) > 0 for g in spec.generators if any(g))


@dataclass(frozen=True)
class NullRelation:
    """Nonnegative integer combination of the generators equal to zero.

    At least one nonzero generator carries positive weight, so the
    relation exhibits a nontrivial unit of the monoid.
    """

    coeffs: tuple[int, ...]

    def verify(self, spec: MonoidSpec) -> bool:
        c = self.coeffs
        if len(c) != len(spec.generators):
            return False
        if any(v < 0 for v in c):
            return False
        if not any(cj > 0 and any(g) for cj, g in zip(c, spec.generators)):
            return False
        total = [0] * spec.ambient_rank
        for cj, g in zip(c, spec.generators):
            for i, v in enumerate(g):
                total[i] += cj * v
        return not any(total)


UnmixedCertificate = Union[PositiveFunctional, NullRelation]


@dataclass(frozen=True)
class GroupOrder:
    """Total group order on Z^n: positive weight first, lexicographic tiebreak.

    Comparison is translation-invariant, so (Z^n, <) is a totally ordered
    abelian group, and every finitely generated submonoid whose generators
    are strictly positive under the weight is well-ordered.
    """

    weight: tuple[int, ...]
    tiebreak: tuple[int, ...]

    def key(self, v: Sequence[int]):
        return (_dot(self.weight, v), tuple(v[i] for i in self.tiebreak))

    def less(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.key(a) < self.key(b)

    def compare(self, a: Sequence[int], b: Sequence[int]) -> int:
        ka, kb = self.key(a), self.key(b)
        return -1 if ka < kb else (1 if ka > kb else 0)


def is_unmixed(spec: MonoidSpec) -> tuple[bool, UnmixedCertificate]:
    """Decide unmixedness; the certificate re-verifies by exact arithmetic.

    Exactly one of the two certificate kinds exists: a strictly positive
    functional (unmixed) or a nonnegative null relation through a nonzero
    generator (not unmixed).
    """
    phi = positive_functional(spec.generators, spec.ambient_rank)
    if phi is not None:
        return True, PositiveFunctional(phi)
    rel = nonnegative_null_relation(spec.generators, spec.ambient_rank)
    if rel is None:
        raise RuntimeError("feasibility engine violated the duality dichotomy")
    return False, NullRelation(rel)


def positive_basis(spec: MonoidSpec) -> IntMatrix:
    """A Z-basis of the ambient lattice in which the monoid sits in N^n.

    Rows are the basis vectors u_1..u_n; every generator has nonnegative
    integer coordinates in this basis and the basis matrix is unimodular.
    Built from a strictly positive functional phi: phi becomes the first
    dual vector, a unimodular completion of it is pushed into the dual
    cone by adding large multiples of phi, and the primal basis is the
    inverse transpose.  Correctness is checked before returning.
    """
    ok, cert = is_unmixed(spec)
    if not ok:
        raise NotUnmixed(cert)
    n = spec.ambient_rank
    phi = cert.phi
    # unimodular matrix whose first row is phi
    col = IntMatrix.from_rows([[v] for v in phi], 1)
    h, u = hermite_normal_form(col)
    assert h.rows[0][0] == 1, "functional was not primitive"
    w = inverse_unimodular(u).transpose()  # rows: w[0] == phi
    gens = [g for g in spec.generators if any(g)]
    shift = 1
    for row in w.rows[1:]:
        for g in gens:
            shift = max(shift, 1 - _dot(g, row))
    dual_rows = [phi] + [
        tuple(shift * p + r for p, r in zip(phi, row)) for row in w.rows[1:]
    ]
    v = IntMatrix.from_rows(dual_rows, n)
    basis = inverse_unimodular(v).transpose()
    assert abs(determinant(basis)) == 1
    for g in spec.generators:
        coords = [_dot(g, dual) for dual in v.rows]
        assert all(c >= 0 for c in coords), "completion left the dual cone"
        back = [sum(c * basis.rows[i][j] for i, c in enumerate(coords)) for j in range(n)]
        assert tuple(back) == tuple(g)
    return basis


def build_order(spec: MonoidSpec) -> GroupOrder:
    """Group order making every nonzero generator strictly positive."""
    ok, cert = is_unmixed(spec)
    if not ok:
        raise NotUnmixed(cert)
    return GroupOrder(cert.phi, tuple(range(spec.ambient_rank)))


def unit_generators(spec: MonoidSpec) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Indices of generators invertible inside the monoid, with proofs.

    Generator g_j is a unit exactly when some nonnegative rational
    combination of the generators vanishes with weight >= 1 on g_j; the
    returned integer relation c satisfies sum c_i g_i = 0 and c_j >= 1, so
    -g_j = (c_j - 1) g_j + sum_{i != j} c_i g_i lies in the monoid.
    """
    m = len(spec.generators)
    out = []
    for j, g in enumerate(spec.generators):
        if not any(g):
            continue
        rows = [tuple(1 if t == i else 0 for t in range(m)) for i in range(m)]
        for i in range(spec.ambient_rank):
            coeffs = tuple(spec.generators[t][i] for t in range(m))
            rows.append(coeffs)
            rows.append(tuple(-c for c in coeffs))
        x = rational_feasible(IntMatrix.from_rows(rows, m), strict_rows=[j])
        if x is not None:
            from .lattice import primitive_integer_vector

            rel = primitive_integer_vector(x)
            out.append((j, rel))
    return tuple(out)


def maximal_subgroup(spec: MonoidSpec) -> tuple[IntMatrix, bool]:
    """Maximal subgroup H of the monoid and torsion-freeness of G'/H.

    H is generated by the unit generators; G' is the group generated by
    all generators.  Torsion-freeness of G'/H is decided by the Smith
    normal form of H's coordinates in a lattice basis of G'.  No example
    with torsion is known; finding one would be a genuine discovery and is
    reported, never suppressed.
    """
    units = unit_generators(spec)
    unit_vecs = [spec.generators[j] for j, _ in units]
    n = spec.ambient_rank
    if unit_vecs:
        h_canon, _ = hermite_normal_form(IntMatrix.from_rows(unit_vecs, n))
        h_basis = IntMatrix(tuple(r for r in h_canon.rows if any(r)), n)
    else:
        h_basis = IntMatrix(tuple(), n)
    all_vecs = [g for g in spec.generators if any(g)]
    if not all_vecs:
        return h_basis, True
    g_canon, _ = hermite_normal_form(IntMatrix.from_rows(all_vecs, n))
    g_basis = IntMatrix(tuple(r for r in g_canon.rows if any(r)), n)
    if h_basis.nrows == 0:
        return h_basis, True
    coords = []
    bt = g_basis.transpose()
    for h in h_basis.rows:
        sol = solve_integer_linear(bt, h)
        assert sol is not None, "subgroup escaped the generated group"
        coords.append(sol)
    factors = smith_normal_form(IntMatrix.from_rows(coords, g_basis.nrows))
    torsion_free = all(f in (0, 1) for f in factors)
    return h_basis, torsion_free
