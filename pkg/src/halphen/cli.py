"""Command line interface.

Subcommands: hilbert, invariants, classify, region, smooth-at, tangent.
Exit codes: 0 success, 1 domain error (diagnostic on stderr), 2 usage.
All JSON output is exact: integers stay integers, rationals are "p/q"
strings, and repeated runs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import classifier, geometry, graded, groebner, invariants
from .parsing import ParseError, format_polynomial, format_rational, parse_ideal_file, parse_polynomial

SCHEMA_VERSION = 1


class DomainError(ValueError):
    pass


def _load_ideal(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from None
    spec = parse_ideal_file(text)
    if spec.label is None:
        spec = spec.__class__(spec.ring_vars, spec.generators, Path(path).stem)
    return spec


def _rational(x: Fraction):
    return int(x) if x.denominator == 1 else format_rational(x)


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _invariants_payload(spec) -> dict:
    data = groebner.hilbert_polynomial(spec)
    inv = invariants.invariants_of(data.polynomial)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "ideal": spec.label,
        "hilbert_polynomial": str(data.polynomial),
        "stabilization_from": data.stabilizes_from,
        "dimension": inv.dimension,
        "degree": inv.degree,
    }
    if inv.genus is not None:
        payload["genus"] = inv.genus
    return payload


def _cmd_hilbert(args) -> int:
    spec = _load_ideal(args.ideal)
    m_max = args.max_degree
    if m_max is None:
        data = groebner.hilbert_polynomial(spec)
        m_max = max(6, data.stabilizes_from + 2)
    table = graded.hilbert_function_table(spec, m_max)
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "ideal": spec.label,
            "values": {str(m): h for m, h in sorted(table.values.items())},
        }
        sys.stdout.write(_dump(payload))
    else:
        sys.stdout.write("m,hilbert_function\n")
        for m, h in sorted(table.values.items()):
            sys.stdout.write(f"{m},{h}\n")
    return 0


def _cmd_invariants(args) -> int:
    spec = _load_ideal(args.ideal)
    sys.stdout.write(_dump(_invariants_payload(spec)))
    return 0


def _cmd_classify(args) -> int:
    v = classifier.classify(args.d, args.g)
    if args.json:
        payload = {
            "schema_version": SCHEMA_VERSION,
            "d": v.d,
            "g": v.g,
            "exists_plane": v.exists_plane,
            "exists_on_quadric": v.exists_on_quadric,
            "exists_off_quadric": v.exists_off_quadric,
            "exists_any": v.exists_any,
            "category": classifier.category(v),
            "bounds": {
                "plane_bound": v.plane_bound,
                "castelnuovo_bound": v.castelnuovo_bound,
                "gruson_peskine_bound": _rational(v.gruson_peskine_bound),
            },
        }
        sys.stdout.write(_dump(payload))
    else:
        word = "exists" if v.exists_any else "does not exist"
        sys.stdout.write(
            f"a smooth curve of degree {v.d} and genus {v.g} in P^3 {word}\n"
            f"  plane curve:        {'yes' if v.exists_plane else 'no'} (g = {plane_word(v)})\n"
            f"  on a quadric:       {'yes' if v.exists_on_quadric else 'no'}"
            f" (Castelnuovo bound {v.castelnuovo_bound})\n"
            f"  off every quadric:  {'yes' if v.exists_off_quadric else 'no'}"
            f" (Gruson-Peskine bound {format_rational(v.gruson_peskine_bound)})\n"
        )
    return 0


def plane_word(v) -> str:
    return f"{v.plane_bound} required"


def _cmd_region(args) -> int:
    if args.format == "svg":
        sys.stdout.write(classifier.region_svg(args.dmax))
    else:
        sys.stdout.write(classifier.region_csv(args.dmax))
    return 0


def _cmd_smooth_at(args) -> int:
    spec = _load_ideal(args.ideal)
    point = geometry.ProjectivePoint.parse(args.point)
    if not geometry.on_variety(spec, point):
        raise DomainError(f"point {point} is not on the variety of {args.ideal}")
    data = groebner.hilbert_polynomial(spec)
    inv = invariants.invariants_of(data.polynomial)
    codim = spec.n_vars - 1 - inv.dimension
    rank = geometry.jacobian_rank_at(spec, point)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "ideal": spec.label,
        "point": str(point),
        "on_variety": True,
        "dimension": inv.dimension,
        "codimension": codim,
        "jacobian_rank": rank,
        "smooth": rank == codim,
    }
    sys.stdout.write(_dump(payload))
    return 0


def _cmd_tangent(args) -> int:
    ring = tuple(args.ring.split())
    f = parse_polynomial(args.poly, ring)
    point = geometry.ProjectivePoint.parse(args.point)
    line = geometry.tangent_line(f, point)
    form = geometry.tangent_line_polynomial(line, ring)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "point": str(point),
        "coefficients": [_rational(c) for c in line.coefficients],
        "line": f"{format_polynomial(form)} = 0",
    }
    sys.stdout.write(_dump(payload))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halphen",
        description="Exact Hilbert functions and degree/genus classification "
        "for projective curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert function table by exact rank")
    p.add_argument("--ideal", required=True, help="ideal file")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("invariants", help="Hilbert polynomial, dimension, degree, genus")
    p.add_argument("--ideal", required=True)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("classify", help="does a smooth curve of degree D, genus G exist in P^3")
    p.add_argument("d", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("region", help="classification table for all d <= dmax")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.set_defaults(func=_cmd_region)

    p = sub.add_parser("smooth-at", help="Jacobian smoothness test at a rational point")
    p.add_argument("--ideal", required=True)
    p.add_argument("--point", required=True, help='e.g. "1:0:0:0"')
    p.set_defaults(func=_cmd_smooth_at)

    p = sub.add_parser("tangent", help="tangent line to a plane curve at a point")
    p.add_argument("--poly", required=True)
    p.add_argument("--point", required=True, help='e.g. "0:1:0"')
    p.add_argument("--ring", default="x y z", help="space-separated variable names")
    p.set_defaults(func=_cmd_tangent)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        DomainError,
        ParseError,
        ValueError,
        geometry.SingularPointError,
        groebner.EmptyProjectiveSet,
        groebner.GroebnerBudgetExceeded,
    ) as exc:
        print(f"halphen: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
