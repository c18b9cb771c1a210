"""Command-line front door: every operation, JSON in and JSON out.

Exit codes: 0 for any successful answer (including a false predicate),
1 for a structural domain failure (e.g. asking for a positive basis of a
mixed monoid), 2 for malformed input.  Results go to stdout, diagnostics
to stderr; identical invocations produce byte-identical stdout.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional

from . import grading as grading_mod
from . import monoid as monoid_mod
from . import ring as ring_mod
from . import signature as signature_mod
from . import trinomial as trinomial_mod
from . import serialize as ser
from .errors import (
    InvalidTarget,
    NotDimensionThree,
    NotHomogeneous,
    NotPointed,
    NotReduced,
    NotRepresentable,
    NotUnitPartition,
    NotUnmixed,
    TrinomError,
    ValidationError,
    VariableCountMismatch,
)

_STRUCTURAL = (
    NotUnmixed,
    NotUnitPartition,
    NotDimensionThree,
    NotReduced,
    NotPointed,
    NotHomogeneous,
    NotRepresentable,
)
_MALFORMED = (ValidationError, VariableCountMismatch, InvalidTarget)


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(obj: Any, output: Optional[str]) -> None:
    text = _dump(obj)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fail(kind: str, payload: dict[str, Any], code: int) -> int:
    sys.stderr.write(_dump({"error": {"kind": kind, **payload}}))
    return code


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _load_data(path: str) -> trinomial_mod.TrinomialData:
    return ser.data_from_json(_load_json(path))


def _parse_vector(text: str) -> tuple[int, ...]:
    value = json.loads(text)
    if not isinstance(value, list) or not all(isinstance(v, int) for v in value):
        raise ValueError("expected a JSON list of integers")
    return tuple(value)


def _grading_context(data):
    gm = grading_mod.induced_grading(data)
    order = grading_mod.weight_order(gm)
    return gm, order


def _cmd_validate(args) -> dict:
    data = _load_data(args.data)
    trinomial_mod.validate(data)
    return {"result": "ok"}


def _cmd_dim(args) -> dict:
    return {"result": trinomial_mod.dimension(_load_data(args.data))}


def _cmd_tangent(args) -> dict:
    return {"result": trinomial_mod.tangent_dimension(_load_data(args.data))}


def _cmd_smooth(args) -> dict:
    return {"result": trinomial_mod.is_smooth(_load_data(args.data))}


def _cmd_reduce(args) -> dict:
    ring, witness = trinomial_mod.reduce(_load_data(args.data))
    return {
        "result": {
            "ring": ser.classified_to_json(ring),
            "witness": ser.witness_to_json(witness),
            "witness_exact": witness.exact,
        }
    }


def _cmd_mori(args) -> dict:
    out, witness = trinomial_mod.mori_normal_form(_load_data(args.data))
    return {
        "result": {
            "data": ser.data_to_json(out),
            "witness": ser.witness_to_json(witness),
            "witness_exact": witness.exact,
        }
    }


def _cmd_iso(args) -> dict:
    a = _load_data(args.first)
    b = _load_data(args.second)
    return {"result": trinomial_mod.is_isomorphic_dim2(a, b)}


def _cmd_dim3(args) -> dict:
    out, witness = trinomial_mod.dim3_normal_form(_load_data(args.data))
    return {
        "result": {
            "data": ser.data_to_json(out),
            "witness": ser.witness_to_json(witness),
            "witness_exact": witness.exact,
            "canonical_up_to_isomorphism": False,
        }
    }


def _cmd_grading(args) -> dict:
    gm = grading_mod.induced_grading(_load_data(args.data))
    return {"result": ser.grading_to_json(gm)}


def _cmd_witness(args) -> dict:
    data = _load_data(args.data)
    gm = grading_mod.induced_grading(data)
    a, b = grading_mod.effectiveness_witness(gm, _parse_vector(args.target))
    n = gm.nvars
    from .poly import Polynomial

    return {
        "result": {
            "numerator": ser.poly_to_json(Polynomial.monomial(a)),
            "denominator": ser.poly_to_json(Polynomial.monomial(b)),
        }
    }


def _cmd_nf(args) -> dict:
    data = _load_data(args.data)
    f = ser.poly_from_json(_load_json(args.poly))
    return {"result": ser.poly_to_json(ring_mod.normal_form(f, data))}


def _cmd_piece(args) -> dict:
    data = _load_data(args.data)
    gm = grading_mod.induced_grading(data)
    degree = _parse_vector(args.degree)
    monos = ring_mod.enumerate_graded_piece(degree, gm, data)
    return {
        "result": {
            "degree": list(degree),
            "monomials": [list(m) for m in monos],
            "dimension": len(monos),
        }
    }


def _cmd_member(args) -> dict:
    data = _load_data(args.data)
    gm = grading_mod.induced_grading(data)
    x = ser.poly_from_json(_load_json(args.element))
    gens = [ser.poly_from_json(p) for p in _load_json(args.generators)]
    return {"result": ring_mod.subalgebra_membership(x, gens, gm, data)}


def _cmd_sigseq(args) -> dict:
    data = _load_data(args.data)
    gm, order = _grading_context(data)
    if args.greedy:
        seq = signature_mod.greedy_signature_sequence(
            data, gm, order, step_budget=args.step_budget, degree_budget=args.degree_budget
        )
    else:
        seq = signature_mod.canonical_generator_order(data, gm, order)
    return {"result": ser.sigseq_to_json(seq)}


def _cmd_monoid(args) -> dict:
    spec = ser.monoid_from_json(_load_json(args.monoid))
    if args.action == "unmixed":
        ok, cert = monoid_mod.is_unmixed(spec)
        return {"result": {"unmixed": ok, "certificate": ser.certificate_to_json(cert)}}
    if args.action == "basis":
        basis = monoid_mod.positive_basis(spec)
        return {"result": {"basis": ser.matrix_to_json(basis)}}
    if args.action == "order":
        order = monoid_mod.build_order(spec)
        return {"result": ser.order_to_json(order)}
    if args.action == "units":
        units = monoid_mod.unit_generators(spec)
        h_basis, torsion_free = monoid_mod.maximal_subgroup(spec)
        return {
            "result": {
                "units": [j for j, _ in units],
                "relations": [list(rel) for _, rel in units],
                "subgroup_basis": ser.matrix_to_json(h_basis),
                "torsion_free": torsion_free,
            }
        }
    raise ValueError(f"unknown monoid action {args.action!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trinom",
        description="Exact computer algebra for graded trinomial quotient rings.",
    )
    parser.add_argument("--output", help="write the result JSON to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    def data_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("data", help="trinomial data JSON file")
        p.set_defaults(func=func)
        return p

    data_cmd("validate", _cmd_validate, "check the data constraints")
    data_cmd("dim", _cmd_dim, "Krull dimension n - r + 1")
    data_cmd("reduce", _cmd_reduce, "eliminate linear blocks; outputs ring and witness")
    data_cmd("mori", _cmd_mori, "dimension-two canonical form")
    data_cmd("dim3", _cmd_dim3, "dimension-three presentation normal form")
    data_cmd("tangent", _cmd_tangent, "tangent-space dimension at the origin")
    data_cmd("smooth", _cmd_smooth, "is the variety smooth (a polynomial ring)?")
    data_cmd("grading", _cmd_grading, "induced grading matrix")

    p = sub.add_parser("iso", help="isomorphism test for unit-partition data")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_iso)

    p = data_cmd("witness", _cmd_witness, "monomial pair a, b with deg a - deg b = target")
    p.add_argument("--target", required=True, help="degree vector as a JSON list")

    p = sub.add_parser("nf", help="normal form of a polynomial in the quotient ring")
    p.add_argument("data")
    p.add_argument("poly")
    p.set_defaults(func=_cmd_nf)

    p = data_cmd("piece", _cmd_piece, "standard-monomial basis of one graded piece")
    p.add_argument("--degree", required=True, help="degree vector as a JSON list")

    p = sub.add_parser("member", help="homogeneous subalgebra membership")
    p.add_argument("data")
    p.add_argument("element", help="polynomial JSON file")
    p.add_argument("generators", help="JSON file with a list of polynomials")
    p.set_defaults(func=_cmd_member)

    p = data_cmd("sigseq", _cmd_sigseq, "signature sequence of the graded ring")
    p.add_argument("--greedy", action="store_true", help="greedy construction instead of the sorted variables")
    p.add_argument("--step-budget", type=int, default=64)
    p.add_argument("--degree-budget", type=int, default=128)

    p = sub.add_parser("monoid", help="submonoid analysis")
    p.add_argument("action", choices=["unmixed", "basis", "order", "units"])
    p.add_argument("monoid", help="monoid JSON file")
    p.set_defaults(func=_cmd_monoid)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        result = args.func(args)
    except ValidationError as exc:
        return _fail(
            "validation",
            {
                "violations": [
                    {"clause": v.clause, "indices": list(v.indices), "message": v.message}
                    for v in exc.violations
                ]
            },
            2,
        )
    except NotUnmixed as exc:
        payload = {"message": str(exc)}
        if isinstance(exc.relation, monoid_mod.NullRelation):
            payload["certificate"] = ser.certificate_to_json(exc.relation)
        return _fail("not_unmixed", payload, 1)
    except _STRUCTURAL as exc:
        return _fail(type(exc).__name__, {"message": str(exc)}, 1)
    except _MALFORMED as exc:
        return _fail(type(exc).__name__, {"message": str(exc)}, 2)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        return _fail("bad_input", {"message": str(exc)}, 2)
    _emit(result, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
