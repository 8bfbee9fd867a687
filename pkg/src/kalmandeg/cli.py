"""Command-line surface for every computation in the package.

Subcommands: degree, genfun, isotropic, codim, asympt, table.  Results go to
stdout (text, JSON records, or CSV for tables), diagnostics to stderr.  Exit
codes: 0 success, 2 validation error, 3 internal assertion failure.  All
potentially large integers are emitted as exact decimal strings in JSON so
64-bit consumers never truncate them.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

from . import asympt, degrees, genfun, isotropic


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _emit_json(record: dict) -> None:
    print(json.dumps(record, sort_keys=True))


def _map_cells(fn: Callable, items: Sequence, jobs: int) -> list:
    # Cells are independent; order of the output never depends on scheduling.
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _cmd_degree(args: argparse.Namespace) -> int:
    fmt = degrees.TensorFormat(args.n, args.omega)
    cv = degrees.CodimVec(args.delta)
    factor = degrees.extract_degree(fmt, cv)
    record = {
        "command": "degree",
        "inputs": {"n": list(fmt.n), "delta": list(cv.delta), "omega": list(fmt.omega)},
        "degree_factor": str(factor),
        "result": str(factor),
        "provenance": "coefficient extraction from the capped geometric-factor product",
    }
    if args.deg_z is not None:
        total = degrees.kalman_degree(fmt, cv, args.deg_z)
        record["inputs"]["deg_z"] = list(args.deg_z)
        record["kalman_degree"] = str(total)
        record["result"] = str(total)
    if args.format == "json":
        _emit_json(record)
    else:
        print(f"degree_factor = {factor}")
        if args.deg_z is not None:
            print(f"kalman_degree = {record['kalman_degree']}")
    return 0


def _cmd_genfun(args: argparse.Namespace) -> int:
    if args.show_h:
        h = genfun.build_H(args.omega)
        h_det = genfun.build_H_via_determinant(args.omega)
        if args.format == "json":
            _emit_json(
                {
                    "command": "genfun",
                    "inputs": {"omega": list(args.omega)},
                    "result": str(h),
                    "h_via_determinant": str(h_det),
                    "provenance": "closed-form generating polynomial and its bordered-determinant twin",
                }
            )
        else:
            print(f"H = {h}")
            print(f"H_via_det = {h_det}")
        return 0
    if args.caps is None:
        raise ValueError("--caps is required unless --show-h is given")
    coeffs = genfun.expand_series(args.omega, args.caps, args.y_cap)
    if args.format == "json":
        _emit_json(
            {
                "command": "genfun",
                "inputs": {"omega": list(args.omega), "caps": list(args.caps), "y_cap": args.y_cap},
                "provenance": "capped series expansion of the reciprocal generating polynomial",
            }
        )
    for (n_vec, delta) in sorted(coeffs):
        value = coeffs[(n_vec, delta)]
        if args.format == "json":
            print(json.dumps({"n": list(n_vec), "delta": delta, "coefficient": str(value)}, sort_keys=True))
        else:
            print(f"n={','.join(map(str, n_vec))} delta={delta} d={value}")
    return 0


def _cmd_isotropic(args: argparse.Namespace) -> int:
    fmt = degrees.TensorFormat(args.n, args.omega)
    res = isotropic.isotropic_degree(fmt)
    record = {
        "command": "isotropic",
        "inputs": {"n": list(fmt.n), "omega": list(fmt.omega)},
        "result": str(res.degree),
        "degree": str(res.degree),
        "components": res.components,
        "ambient_dim": res.ambient_dim,
        "provenance": "alternating polar-class sum over bounded compositions, exact rationals",
    }
    if args.format == "json":
        _emit_json(record)
    else:
        print(f"degree = {res.degree}")
        print(f"components = {res.components}")
    return 0


def _cmd_codim(args: argparse.Namespace) -> int:
    if args.parts is None:
        value = isotropic.symmetric_tuple_codim(args.n, args.k)
        provenance = "fully repeated singular tuple: (k-1)(n-1)"
    else:
        value = isotropic.partition_tuple_codim(args.n, args.k, args.parts)
        provenance = "tuple repeated along a t-part partition: (k-t)(n-1)"
    record = {
        "command": "codim",
        "inputs": {"n": args.n, "k": args.k, "parts": args.parts},
        "result": str(value),
        "provenance": provenance,
    }
    if args.format == "json":
        _emit_json(record)
    else:
        print(f"codim = {value}")
    return 0


def _cmd_asympt(args: argparse.Namespace) -> int:
    if args.verify:
        report = asympt.verify_critical_point(args.k, args.omega)
        record = {
            "command": "asympt",
            "inputs": {"k": args.k, "omega": args.omega, "verify": True},
            "f_d_at_c": str(report.f_d_at_c),
            "slope_product": str(report.slope_product),
            "expected_slope_product": str(report.expected_slope_product),
            "result": "ok" if report.ok else "mismatch",
            "provenance": "exact rational evaluation of the reduced denominator at the critical point",
        }
        if args.format == "json":
            _emit_json(record)
        else:
            print(f"F_D(c) = {report.f_d_at_c}")
            print(f"-c_k*dF_D(c) = {report.slope_product} (expected {report.expected_slope_product})")
            print(f"verify = {record['result']}")
        if not report.ok:
            raise ArithmeticError("critical-point identities failed")
        return 0
    if args.constants:
        cc = asympt.critical_constants(args.k, args.omega, args.delta)
        record = {
            "command": "asympt",
            "inputs": {"k": args.k, "omega": args.omega, "delta": args.delta, "constants": True},
            "c": str(cc.c),
            "det_hessian": str(cc.det_hessian),
            "l0": str(cc.l0),
            "minus_ck_dk": str(cc.minus_ck_dk),
            "result": str(cc.l0),
            "provenance": "closed-form critical-point constants, exact rationals",
        }
        if args.format == "json":
            _emit_json(record)
        else:
            for key in ("c", "det_hessian", "l0", "minus_ck_dk"):
                print(f"{key} = {record[key]}")
        return 0
    if args.n is None:
        raise ValueError("--n is required unless --verify or --constants is given")
    est = asympt.asymptotic_degree(args.k, args.omega, args.delta, args.n)
    record = {
        "command": "asympt",
        "inputs": {"k": args.k, "omega": args.omega, "delta": args.delta, "n": args.n},
        "log10_estimate": est.log10_value,
        "estimate": est.value_if_representable,
        "result": repr(est.log10_value),
        "provenance": "leading-order estimate evaluated in log10 space",
    }
    if args.compare:
        row = asympt.compare_exact_asymptotic(args.k, args.omega, args.delta, [args.n])[0]
        record["exact"] = str(row.exact)
        record["ratio"] = row.ratio
    if args.format == "json":
        _emit_json(record)
    else:
        print(f"log10_estimate = {est.log10_value!r}")
        if est.value_if_representable is not None:
            print(f"estimate = {est.value_if_representable!r}")
        if args.compare:
            print(f"exact = {record['exact']}")
            print(f"ratio = {record['ratio']!r}")
    return 0


def _table_rows(args: argparse.Namespace) -> tuple[list[str], Iterable[list]]:
    if args.kind == "matrix-ed":
        cells = [(n1, n2) for n1 in range(1, args.max_n + 1) for n2 in range(1, args.max_n + 1)]

        def cell(pair: tuple[int, int]) -> list:
            n1, n2 = pair
            fmt = degrees.TensorFormat((n1, n2), (1, 1))
            return [n1, n2, str(degrees.extract_degree(fmt, degrees.CodimVec((0, 0))))]

        return ["n1", "n2", "degree"], _map_cells(cell, cells, args.jobs)

    if args.kind == "hypercubical-compare":
        ns = list(range(args.n_min, args.n_max + 1))

        def compare_cell(n: int) -> list:
            row = asympt.compare_exact_asymptotic(args.k, args.omega, args.delta, [n])[0]
            return [row.n, str(row.exact), repr(row.log10_estimate), repr(row.ratio)]

        return ["n", "exact", "log10_estimate", "ratio"], _map_cells(compare_cell, ns, args.jobs)

    if args.kind == "isotropic-sym":
        cells = [(n, w) for n in range(2, args.max_n + 1) for w in range(1, args.max_omega + 1)]

        def iso_cell(pair: tuple[int, int]) -> list:
            n, w = pair
            return [n, w, str(isotropic.isotropic_degree_symmetric(n, w))]

        return ["n", "omega", "degree"], _map_cells(iso_cell, cells, args.jobs)

    raise ValueError(f"unknown table kind {args.kind!r}")


def _cmd_table(args: argparse.Namespace) -> int:
    header, rows = _table_rows(args)
    if args.format == "json":
        for row in rows:
            print(json.dumps(dict(zip(header, row)), sort_keys=True))
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kalmandeg",
        description="Exact degrees, generating functions and asymptotics for Kalman varieties of partially symmetric tensors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degree", help="degree factor by coefficient extraction")
    p.add_argument("--n", type=_int_list, required=True, help="dimensions n_1,..,n_k")
    p.add_argument("--delta", type=_int_list, required=True, help="codimensions delta_1,..,delta_k")
    p.add_argument("--omega", type=_int_list, required=True, help="weights omega_1,..,omega_k")
    p.add_argument("--deg-z", type=_int_list, default=None, help="degrees of the constraint varieties")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("genfun", help="series coefficients of the generating function")
    p.add_argument("--omega", type=_int_list, required=True)
    p.add_argument("--caps", type=_int_list, default=None, help="per-variable bounds on n")
    p.add_argument("--y-cap", type=int, default=0, help="bound on delta")
    p.add_argument("--show-h", action="store_true", help="print the generating polynomial both ways and exit")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_genfun)

    p = sub.add_parser("isotropic", help="degree of the totally isotropic variety")
    p.add_argument("--n", type=_int_list, required=True)
    p.add_argument("--omega", type=_int_list, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_isotropic)

    p = sub.add_parser("codim", help="codimension of repeated-singular-tuple varieties")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--parts", type=int, default=None, help="number of parts of the repetition partition")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_codim)

    p = sub.add_parser("asympt", help="hypercubical asymptotic estimate and critical-point checks")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--omega", type=int, required=True)
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--compare", action="store_true", help="also compute the exact value and the ratio")
    p.add_argument("--verify", action="store_true", help="check the critical-point identities exactly")
    p.add_argument("--constants", action="store_true", help="print the closed-form constants")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_asympt)

    p = sub.add_parser("table", help="sweep tables (CSV or JSON lines)")
    p.add_argument("--kind", choices=("matrix-ed", "hypercubical-compare", "isotropic-sym"), required=True)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-omega", type=int, default=4)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--omega", type=int, default=1)
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1, help="evaluate table cells on this many threads")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_table)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
