"""Batch command-line front end.

Every subcommand reads JSON inputs, runs one engine computation, and
writes a machine-readable verdict to stdout.  Exit codes: 0 success,
1 input error, 2 enumeration budget refusal, 3 internal invariant
violation.  Outputs are deterministic for identical inputs and seeds.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import deligne as deligne_mod
from . import io as io_mod
from .decomposition import (
    Decomposition,
    collapsing_decomposition,
    degree_polygon,
    hyperplane_split,
    is_complete,
    is_regular,
    star_decomposition,
    validate_decomposition,
)
from .diagonal import exponent_matrix, is_ordinary_diagonal
from .errors import BudgetExceeded, InputError, InternalError, PolyordError
from .expsum import DEFAULT_BUDGET, is_ordinary, l_polynomial, newton_polygon_of, sample_gnp
from .finitefield import make_field
from .expsum import LaurentPolynomial
from .hull import PlanarPolygon
from .polytope import ConeRegion, hodge_numbers, hodge_polygon, weight_counts
from .rationals import format_rational, parse_rational


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _emit(text: str):
    sys.stdout.write(text)


def _emit_polygon(polygon: PlanarPolygon, fmt: str, key: str = "vertices"):
    if fmt == "tsv":
        _emit(io_mod.polygon_to_tsv(polygon))
    elif fmt == "svg":
        _emit(io_mod.polygon_to_svg(polygon))
    else:
        _emit(io_mod.dump_json({key: io_mod.polygon_to_json(polygon)}))


def _parse_vector(text: str) -> list[Fraction]:
    try:
        return [parse_rational(part.strip()) for part in text.split(",")]
    except ValueError as exc:
        raise InputError(f"cannot parse vector {text!r}: {exc}") from exc


def _cmd_hodge(args) -> int:
    polytope = io_mod.polytope_from_json(io_mod.load_json(args.input))
    polygon = hodge_polygon(polytope)
    if args.format != "json":
        _emit_polygon(polygon, args.format)
        return 0
    d = polytope.weight_denominator()
    numbers = hodge_numbers(polytope)
    counts = weight_counts(ConeRegion.full_cone(polytope), polytope.dim * d, d)
    _emit(
        io_mod.dump_json(
            {
                "hodge": io_mod.polygon_to_json(polygon),
                "weight_denominator": d,
                "normalized_volume": polytope.normalized_volume(),
                "weight_counts": counts,
                "hodge_numbers": numbers,
            }
        )
    )
    return 0


def _cmd_lfunction(args) -> int:
    f = io_mod.laurent_from_json(io_mod.load_json(args.input))
    lpoly = l_polynomial(f, budget=args.budget, check_degree=args.check_degree)
    _emit(
        io_mod.dump_json(
            {
                "p": lpoly.p,
                "a": lpoly.a,
                "sign_exponent": lpoly.sign_exponent,
                "coefficients": [list(c.coords) for c in lpoly.coefficients],
            }
        )
    )
    return 0


def _cmd_newton(args) -> int:
    f = io_mod.laurent_from_json(io_mod.load_json(args.input))
    polygon = newton_polygon_of(l_polynomial(f, budget=args.budget))
    _emit_polygon(polygon, args.format, key="newton")
    return 0


def _cmd_ordinary(args) -> int:
    f = io_mod.laurent_from_json(io_mod.load_json(args.input))
    verdict = is_ordinary(f, budget=args.budget)
    _emit(
        io_mod.dump_json(
            {
                "ordinary": verdict.ordinary,
                "np": io_mod.polygon_to_json(verdict.newton),
                "hp": io_mod.polygon_to_json(verdict.hodge),
            }
        )
    )
    return 0


def _cmd_diag_ordinary(args) -> int:
    doc = io_mod.load_json(args.input)
    f = io_mod.laurent_from_json(doc)
    p = args.p if args.p is not None else f.field.p
    verdict = is_ordinary_diagonal(exponent_matrix(f), p)
    _emit(
        io_mod.dump_json(
            {
                "ordinary": verdict.ordinary,
                "witness": (
                    [format_rational(c) for c in verdict.witness]
                    if verdict.witness is not None
                    else None
                ),
                "group_order": verdict.group_order,
                "p": p,
            }
        )
    )
    return 0


def _load_decomposition(path: str, need_cells: bool):
    config, decomposition = io_mod.configuration_from_json(io_mod.load_json(path))
    if need_cells and decomposition is None:
        raise InputError("this subcommand needs a decomposition with cells")
    return config, decomposition


def _cmd_decomp(args) -> int:
    action = args.action
    if action == "validate":
        _, decomposition = _load_decomposition(args.input, need_cells=True)
        report = validate_decomposition(decomposition)
        _emit(
            io_mod.dump_json(
                {"valid": report.valid, "violations": list(report.violations)}
            )
        )
        return 0
    if action == "star":
        config, _ = _load_decomposition(args.input, need_cells=False)
        if args.apex is None:
            raise InputError("star needs --apex INDEX")
        decomposition, heights = star_decomposition(config, args.apex)
        doc = io_mod.decomposition_to_json(decomposition)
        doc["heights"] = [format_rational(h) for h in heights]
        _emit(io_mod.dump_json(doc))
        return 0
    if action == "hyperplane":
        config, _ = _load_decomposition(args.input, need_cells=False)
        if args.normal is None or args.rhs is None:
            raise InputError("hyperplane needs --normal a,b,... and --rhs r")
        decomposition, heights, _ = hyperplane_split(
            config, _parse_vector(args.normal), parse_rational(args.rhs)
        )
        doc = io_mod.decomposition_to_json(decomposition)
        doc["heights"] = [format_rational(h) for h in heights]
        _emit(io_mod.dump_json(doc))
        return 0
    if action == "collapse":
        config, _ = _load_decomposition(args.input, need_cells=False)
        if args.drop is None:
            raise InputError("collapse needs --drop INDEX")
        decomposition = collapsing_decomposition(config, args.drop)
        _emit(io_mod.dump_json(io_mod.decomposition_to_json(decomposition)))
        return 0
    if action == "regular":
        _, decomposition = _load_decomposition(args.input, need_cells=True)
        certificate = is_regular(decomposition)
        doc = {
            "regular": certificate.regular,
            "slack": format_rational(certificate.slack),
            "heights": (
                [format_rational(h) for h in certificate.heights]
                if certificate.heights is not None
                else None
            ),
            "complete": is_complete(decomposition),
        }
        _emit(io_mod.dump_json(doc))
        return 0
    raise InputError(f"unknown decomp action {action!r}")


def _cmd_degree_polygon(args) -> int:
    config, decomposition = _load_decomposition(args.input, need_cells=False)
    if args.phi is not None:
        phi = _parse_vector(args.phi)
        if len(phi) != len(config):
            raise InputError("--phi needs one value per configuration point")
    else:
        phi = [Fraction(1)] * len(config)
    ambient = config.ambient_polytope()
    region = ConeRegion.full_cone(ambient)
    polygon = degree_polygon(region, phi, config, args.p, args.m)
    _emit_polygon(polygon, args.format, key="degree_polygon")
    return 0


def _cmd_deligne(args) -> int:
    geometry = deligne_mod.build(args.d, args.n)
    polygon = deligne_mod.hodge_polygon(args.d, args.n)
    doc = {
        "d": args.d,
        "n": args.n,
        "weight_denominator": deligne_mod.weight_denominator(args.d),
        "normalized_volume": geometry.lower.normalized_volume(),
        "hodge": io_mod.polygon_to_json(polygon),
    }
    if args.p is not None:
        doc["prediction"] = deligne_mod.predict_ordinarity(args.d, args.p)
        all_ordinary, witness, _ = deligne_mod.cells_ordinarity(args.d, args.n, args.p)
        doc["cells_all_ordinary"] = all_ordinary
        doc["witness_cell"] = witness
    if args.format != "json":
        _emit_polygon(polygon, args.format, key="hodge")
        return 0
    _emit(io_mod.dump_json(doc))
    return 0


def _cmd_sample_gnp(args) -> int:
    polytope = io_mod.polytope_from_json(io_mod.load_json(args.input))
    polygon = sample_gnp(
        polytope,
        args.p,
        args.a,
        trials=args.trials,
        seed=args.seed,
        budget=args.budget,
    )
    if args.format == "json":
        _emit(
            io_mod.dump_json(
                {
                    "estimate": io_mod.polygon_to_json(polygon),
                    "note": (
                        "pointwise minimum over sampled Newton polygons; an "
                        "upper bound for the generic Newton polygon"
                    ),
                    "trials": args.trials,
                    "seed": args.seed,
                }
            )
        )
    else:
        _emit_polygon(polygon, args.format)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="polyord", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("json", "tsv", "svg"), default="json"
        )

    def add_budget(p):
        p.add_argument(
            "--budget",
            type=int,
            default=DEFAULT_BUDGET,
            help="maximum point evaluations per exponential sum",
        )

    p = sub.add_parser("hodge", help="Hodge polygon of a polytope")
    p.add_argument("input")
    add_format(p)
    p.set_defaults(func=_cmd_hodge)

    p = sub.add_parser("lfunction", help="L-polynomial coefficients")
    p.add_argument("input")
    add_budget(p)
    p.add_argument("--check-degree", action="store_true")
    p.set_defaults(func=_cmd_lfunction)

    p = sub.add_parser("newton", help="Newton polygon of the L-polynomial")
    p.add_argument("input")
    add_budget(p)
    add_format(p)
    p.set_defaults(func=_cmd_newton)

    p = sub.add_parser("ordinary", help="compare Newton and Hodge polygons")
    p.add_argument("input")
    add_budget(p)
    p.set_defaults(func=_cmd_ordinary)

    p = sub.add_parser("diag-ordinary", help="diagonal stability criterion")
    p.add_argument("input")
    p.add_argument("--p", type=int, default=None)
    p.set_defaults(func=_cmd_diag_ordinary)

    p = sub.add_parser("decomp", help="decomposition constructions and checks")
    p.add_argument("action", choices=("validate", "star", "hyperplane", "collapse", "regular"))
    p.add_argument("input")
    p.add_argument("--apex", type=int, default=None)
    p.add_argument("--drop", type=int, default=None)
    p.add_argument("--normal", type=str, default=None)
    p.add_argument("--rhs", type=str, default=None)
    p.set_defaults(func=_cmd_decomp)

    p = sub.add_parser("degree-polygon", help="degree polygon of a configuration")
    p.add_argument("input")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--phi", type=str, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_degree_polygon)

    p = sub.add_parser("deligne", help="Deligne-polytope computations")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_deligne)

    p = sub.add_parser("sample-gnp", help="sampled upper estimate of the GNP")
    p.add_argument("input")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    add_budget(p)
    add_format(p)
    p.set_defaults(func=_cmd_sample_gnp)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except BudgetExceeded as exc:
        sys.stderr.write(f"budget refusal: {exc}\n")
        return 2
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 1
    except InternalError as exc:
        sys.stderr.write(f"internal invariant violation: {exc}\n")
        return 3
    except PolyordError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
