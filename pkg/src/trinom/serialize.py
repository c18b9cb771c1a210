"""JSON codecs for every externally visible type.

Rationals travel as canonical fraction strings ("3", "-5/7") so nothing
is lost in transit; every emitter here round-trips through its parser.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from .grading import GradingMatrix
from .lattice import IntMatrix
from .monoid import GroupOrder, MonoidSpec, NullRelation, PositiveFunctional
from .poly import Polynomial
from .ring import FiniteTypeReport
from .signature import SignatureSequence
from .trinomial import (
    ClassifiedRing,
    EliminateVariable,
    FormalRadical,
    PermuteVariables,
    PivotRelations,
    RescaleVariable,
    SubstitutionWitness,
    TrinomialData,
)


def fraction_to_str(value: Fraction) -> str:
    return str(Fraction(value))


def fraction_from_str(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text))


# -- trinomial data ---------------------------------------------------------


def data_to_json(data: TrinomialData) -> dict[str, Any]:
    return {
        "partition": list(data.partition),
        "beta": [list(block) for block in data.beta],
        "lambda": [fraction_to_str(l) for l in data.lambdas],
    }


def data_from_json(obj: dict[str, Any]) -> TrinomialData:
    return TrinomialData.make(
        obj["partition"], obj["beta"], [fraction_from_str(l) for l in obj.get("lambda", [])]
    )


def classified_to_json(ring: ClassifiedRing) -> dict[str, Any]:
    out = data_to_json(ring.data)
    out["poly_vars"] = ring.poly_vars
    return out


def classified_from_json(obj: dict[str, Any]) -> ClassifiedRing:
    return ClassifiedRing(data_from_json(obj), int(obj.get("poly_vars", 0)))


# -- polynomials ------------------------------------------------------------


def poly_to_json(p: Polynomial) -> dict[str, Any]:
    return {
        "vars": p.nvars,
        "terms": [
            {"coeff": fraction_to_str(c), "exp": list(m)} for m, c in p.sorted_terms()
        ],
    }


def poly_from_json(obj: dict[str, Any]) -> Polynomial:
    nvars = int(obj["vars"])
    terms = {}
    for t in obj.get("terms", []):
        exps = tuple(int(e) for e in t["exp"])
        terms[exps] = terms.get(exps, Fraction(0)) + fraction_from_str(t["coeff"])
    return Polynomial(nvars, terms)


# -- witnesses --------------------------------------------------------------


def _radical_to_json(s: FormalRadical) -> dict[str, Any]:
    return {"base": fraction_to_str(s.base), "root_index": s.root_index}


def _radical_from_json(obj) -> FormalRadical:
    return FormalRadical(fraction_from_str(obj["base"]), int(obj["root_index"]))


def witness_to_json(w: SubstitutionWitness) -> list[dict[str, Any]]:
    moves = []
    for m in w.moves:
        if isinstance(m, EliminateVariable):
            moves.append(
                {
                    "move": "eliminate",
                    "block": m.block,
                    "var": m.var,
                    "replacement": poly_to_json(m.replacement),
                }
            )
        elif isinstance(m, RescaleVariable):
            moves.append(
                {
                    "move": "rescale",
                    "block": m.block,
                    "var": m.var,
                    "scalar": _radical_to_json(m.scalar),
                }
            )
        elif isinstance(m, PermuteVariables):
            moves.append(
                {
                    "move": "permute",
                    "block_order": list(m.block_order),
                    "var_order": list(m.var_order),
                }
            )
        elif isinstance(m, PivotRelations):
            moves.append(
                {
                    "move": "pivot",
                    "matrix": [[fraction_to_str(v) for v in row] for row in m.matrix],
                }
            )
    return moves


def witness_from_json(obj) -> SubstitutionWitness:
    moves = []
    for m in obj:
        kind = m["move"]
        if kind == "eliminate":
            moves.append(
                EliminateVariable(int(m["block"]), int(m["var"]), poly_from_json(m["replacement"]))
            )
        elif kind == "rescale":
            moves.append(
                RescaleVariable(int(m["block"]), int(m["var"]), _radical_from_json(m["scalar"]))
            )
        elif kind == "permute":
            moves.append(
                PermuteVariables(tuple(m["block_order"]), tuple(m["var_order"]))
            )
        elif kind == "pivot":
            rows = tuple(tuple(fraction_from_str(v) for v in row) for row in m["matrix"])
            moves.append(PivotRelations(rows))
        else:
            raise ValueError(f"unknown move kind {kind!r}")
    return SubstitutionWitness(tuple(moves))


# -- monoids ----------------------------------------------------------------


def monoid_to_json(spec: MonoidSpec) -> dict[str, Any]:
    return {
        "ambient_rank": spec.ambient_rank,
        "generators": [list(g) for g in spec.generators],
    }


def monoid_from_json(obj) -> MonoidSpec:
    return MonoidSpec.make(obj["ambient_rank"], obj["generators"])


def certificate_to_json(cert) -> dict[str, Any]:
    if isinstance(cert, PositiveFunctional):
        return {"kind": "positive_functional", "phi": list(cert.phi)}
    if isinstance(cert, NullRelation):
        return {"kind": "null_relation", "coeffs": list(cert.coeffs)}
    raise TypeError(f"not a certificate: {cert!r}")


def certificate_from_json(obj):
    if obj["kind"] == "positive_functional":
        return PositiveFunctional(tuple(int(v) for v in obj["phi"]))
    if obj["kind"] == "null_relation":
        return NullRelation(tuple(int(v) for v in obj["coeffs"]))
    raise ValueError(f"unknown certificate kind {obj['kind']!r}")


def order_to_json(order: GroupOrder) -> dict[str, Any]:
    return {"weight": list(order.weight), "tiebreak": list(order.tiebreak)}


def order_from_json(obj) -> GroupOrder:
    return GroupOrder(tuple(int(v) for v in obj["weight"]), tuple(int(v) for v in obj["tiebreak"]))


# -- gradings ---------------------------------------------------------------


def grading_to_json(gm: GradingMatrix) -> dict[str, Any]:
    return {
        "rank": gm.rank,
        "degrees": [list(gm.column(j)) for j in range(gm.nvars)],
        "variable_order": "block-major",
    }


def grading_from_json(obj) -> GradingMatrix:
    rank = int(obj["rank"])
    cols = [tuple(int(v) for v in col) for col in obj["degrees"]]
    rows = [[col[i] for col in cols] for i in range(rank)]
    return GradingMatrix(rank, IntMatrix.from_rows(rows, len(cols)) if rows or cols else IntMatrix(tuple(), 0))


def matrix_to_json(m: IntMatrix) -> list[list[int]]:
    return [list(row) for row in m.rows]


# -- signature sequences ----------------------------------------------------


def sigseq_to_json(seq: SignatureSequence) -> dict[str, Any]:
    return {
        "elements": [poly_to_json(p) for p in seq.elements],
        "degrees": [list(d) for d in seq.degrees],
        "complete": seq.complete,
    }


def sigseq_from_json(obj) -> SignatureSequence:
    return SignatureSequence(
        tuple(poly_from_json(p) for p in obj["elements"]),
        tuple(tuple(int(v) for v in d) for d in obj["degrees"]),
        bool(obj["complete"]),
    )


def finite_type_report_to_json(report: FiniteTypeReport) -> dict[str, Any]:
    return {
        "budget": report.budget,
        "degrees": [list(d) for d in report.degrees],
        "dimensions": list(report.dimensions),
        "zero_degree_dimension": report.zero_degree_dimension,
        "all_degrees_nonnegative": report.all_degrees_nonnegative,
        "clean": report.clean,
    }
