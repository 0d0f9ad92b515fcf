"""Command-line front end: construct, analyze, spectrum, verify, table.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error,
3 I/O error.  All JSON output is serialized with sorted keys so identical
invocations are byte-for-byte reproducible.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import closedforms as cf
from .cages import (
    ConstructionError,
    InadmissibleParametersError,
    construct,
    construct_cage,
    moore_bound,
    moore_exists,
    parse_family,
)
from .exactmath import CharPolyCapError, char_poly_exact
from .graphs import (
    DisconnectedGraphError,
    EdgeListError,
    adjacency_matrix,
    diameter,
    distance_matrix,
    from_edge_list,
    girth,
    regularity as graph_regularity,
    subdivision,
    to_edge_list,
)
from .regularity import (
    dbr_arrays,
    dbr_quotient_from_arrays,
    dr_intersection_array,
    is_transmission_regular,
)
from .spectra import eig_symmetric, group_spectrum
from .verify import verify_cage

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _read_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return from_edge_list(fh.read())


def _girth_json(G):
    val = girth(G)
    return "infinity" if val == math.inf else int(val)


def cmd_construct(args) -> int:
    fam = parse_family(args.family)
    G = construct(fam)
    label = fam.describe()
    if args.subdivide:
        G = subdivision(G)
        label += " subdivided"
    info = {
        "family": label,
        "vertices": G.n,
        "edges": G.m,
        "girth": _girth_json(G),
        "regularity": graph_regularity(G),
    }
    text = to_edge_list(G)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        info["out"] = args.out
        print(_dump(info) if args.json else _format_info(info))
    else:
        sys.stdout.write(text)
        print(_dump(info) if args.json else _format_info(info), file=sys.stderr)
    return EXIT_OK


def _format_info(info: dict) -> str:
    parts = [f"{key}={info[key]}" for key in sorted(info)]
    return "  ".join(parts)


def cmd_analyze(args) -> int:
    G = _read_graph(args.input)
    report: dict = {
        "vertices": G.n,
        "edges": G.m,
        "girth": _girth_json(G),
        "regularity": graph_regularity(G),
        "connected": G.connected,
    }
    if G.connected:
        report["diameter"] = diameter(G)
        report["transmission_regular"] = is_transmission_regular(G)
        arr = dr_intersection_array(G)
        report["distance_regular"] = (
            {"b": list(arr.b), "c": list(arr.c), "shells": list(arr.shell_sizes)}
            if arr
            else None
        )
        arrs = dbr_arrays(G)
        if arrs:
            report["distance_biregular"] = {
                "part1": {"b": list(arrs.part1_b), "c": list(arrs.part1_c)},
                "part2": {"b": list(arrs.part2_b), "c": list(arrs.part2_c)},
                "part_sizes": [len(p) for p in arrs.parts],
                "quotient": [
                    [int(x) for x in row] for row in dbr_quotient_from_arrays(arrs).q
                ],
            }
        else:
            report["distance_biregular"] = None
    if args.json:
        print(_dump(report))
    else:
        for key in sorted(report):
            print(f"{key}: {report[key]}")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    G = _read_graph(args.input)
    G.require_connected()
    M = adjacency_matrix(G) if args.matrix == "adjacency" else distance_matrix(G)
    grouped = group_spectrum(eig_symmetric(M), tol=args.tol)
    report: dict = {
        "matrix": args.matrix,
        "vertices": G.n,
        "spectrum": grouped.to_json(),
    }
    if args.exact_charpoly:
        poly = char_poly_exact(M, cap=args.charpoly_cap)
        report["charpoly"] = [int(c) for c in poly.int_coeffs()]
    if args.json:
        print(_dump(report))
    else:
        print(f"{args.matrix} spectrum ({G.n} vertices):")
        for value, mult in grouped:
            print(f"  {value:.10g}  x{mult}")
        if args.exact_charpoly:
            print(f"charpoly (ascending): {report['charpoly']}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_cage(args.k, args.g, tol=args.tol)
    if args.json:
        print(_dump(report.to_json()))
    else:
        for c in report.checks:
            mark = {"pass": "ok", "fail": "FAIL", "skip": "--"}[c.status]
            detail = f"  ({c.detail})" if c.detail else ""
            print(f"[{mark:>4}] {c.name}{detail}")
        print(f"({args.k},{args.g}): {report.status}")
    return EXIT_OK if report.passed else EXIT_VERIFY


def _table_rows(g: int, ks: list[int]) -> list[dict]:
    rows = []
    for k in ks:
        status = moore_exists(k, g)
        row: dict = {
            "k": k,
            "g": g,
            "d": g // 2,
            "n0": moore_bound(k, g),
            "constructible": status.constructible,
            "status": status.reason if not status.exists else "ok",
        }
        if status.formula_ok:
            if k >= 3:
                row["dr_radius"] = cf.dr_radius(k, g)
            else:
                sizes = cf.moore_shell_sizes(k, g)
                row["dr_radius"] = sum(i * s for i, s in enumerate(sizes))
            if g in cf.EXACT_GIRTHS:
                spec = cf.cage_distance_spectrum(k, g)
                row["distance_spectrum"] = spec.to_json()
                row["distance_spectrum_text"] = " ".join(
                    f"{v}^({m})" for v, m in spec
                )
            if g % 2 == 0 or g in (3, 5):
                row["subdivision_radius"] = cf.subdivision_radius(k, g).to_json()
                row["subdivision_radius_text"] = str(cf.subdivision_radius(k, g))
        rows.append(row)
    return rows


def cmd_table(args) -> int:
    rows = _table_rows(args.g, args.k)
    out = sys.stdout
    if args.out:
        out = open(args.out, "w", encoding="utf-8")
    try:
        if args.json:
            out.write(_dump(rows) + "\n")
        else:
            cols = [
                "k",
                "g",
                "d",
                "n0",
                "constructible",
                "status",
                "dr_radius",
                "distance_spectrum_text",
                "subdivision_radius_text",
            ]
            out.write(",".join(cols) + "\n")
            for row in rows:
                cells = []
                for col in cols:
                    val = row.get(col, "")
                    cells.append(str(val))
                out.write(",".join(cells) + "\n")
    finally:
        if args.out:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cagespectra",
        description=(
            "Construct minimal (k,g)-cages and their subdivisions, compute "
            "distance spectra, and verify the closed-form results against "
            "brute-force oracles."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a cage family member")
    p.add_argument("family", help="family spec, e.g. petersen, pg2:3, cycle:7")
    p.add_argument("--subdivide", action="store_true", help="subdivide the result")
    p.add_argument("--out", help="write the edge list here instead of stdout")
    p.add_argument("--json", action="store_true", help="machine-readable info")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="regularity / girth / quotient report")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("spectrum", help="numeric spectrum, optional exact charpoly")
    p.add_argument("input", help="edge-list file")
    p.add_argument(
        "--matrix", choices=("adjacency", "distance"), default="distance"
    )
    p.add_argument("--exact-charpoly", action="store_true")
    p.add_argument("--charpoly-cap", type=int, default=64)
    p.add_argument("--tol", type=float, default=1e-7, help="grouping tolerance")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run the full oracle battery for (k,g)")
    p.add_argument("k", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="closed-form summary table over a k range")
    p.add_argument("g", type=int)
    p.add_argument("k", type=int, nargs="+")
    p.add_argument("--json", action="store_true", help="JSON instead of CSV")
    p.add_argument("--csv", action="store_true", help="CSV output (the default)")
    p.add_argument("--out", help="write the table here instead of stdout")
    p.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        EdgeListError,
        DisconnectedGraphError,
        InadmissibleParametersError,
        CharPolyCapError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
