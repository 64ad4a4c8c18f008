"""Command line interface.

Exit codes: 0 success, 1 a checked claim was falsified, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import amazing as am
from . import dynkin as dk
from . import expected as ex
from . import ideals as idl
from . import verify as vf
from .poset import FalsificationError, RootSet
from .rootsys import (
    RankedType,
    RootSystem,
    RootSystemError,
    admissible_types,
    coroot_height,
    get_root_system,
    is_long,
    theta_is_fundamental,
)

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _system(args) -> RootSystem:
    if args.type is None:
        raise UsageError("--type is required")
    try:
        return get_root_system(RankedType.parse(args.type, args.rank))
    except RootSystemError as e:
        raise UsageError(str(e)) from e


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)


# -- build --------------------------------------------------------------

def root_rows(rs: RootSystem) -> list[dict]:
    h = idl.heisenberg_set(rs)
    com = idl.commutative_roots(rs)
    return [
        {
            "coeffs": list(g),
            "bracket": rs.bracket(g),
            "eps": rs.eps_str(g) if rs.is_classical else None,
            "height": sum(g),
            "coroot_height": coroot_height(rs, g),
            "long": is_long(rs, g),
            "in_H": g in h,
            "commutative": g in com,
        }
        for g in rs.positive_roots
    ]


def cmd_build(args) -> tuple[str, int]:
    rs = _system(args)
    rows = root_rows(rs)
    if args.format == "json":
        return _dump({"type": rs.family, "rank": rs.rank, "roots": rows}), EXIT_OK
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({**r, "coeffs": " ".join(map(str, r["coeffs"]))})
        return buf.getvalue(), EXIT_OK
    head = ["root", "eps", "ht", "ht_vee", "long", "in_H", "com"]
    body = [
        [r["bracket"], r["eps"] or "-", str(r["height"]), str(r["coroot_height"]),
         "y" if r["long"] else "n", "y" if r["in_H"] else "n", "y" if r["commutative"] else "n"]
        for r in rows
    ]
    out = f"# {rs.rtype}: {len(rows)} positive roots, theta = {rs.name(rs.theta)}\n"
    return out + _table([head] + body), EXIT_OK


# -- amazing ------------------------------------------------------------

def cmd_amazing(args) -> tuple[str, int]:
    rs = _system(args)
    rep = am.amazing_report(rs)
    if args.format == "json":
        return _dump({"type": rs.family, "rank": rs.rank, "report": rep.to_dict()}), EXIT_OK
    lines = [f"# {rs.rtype}"]
    for label, s in (("Gamma", rep.gamma_set), ("Gamma_pr", rep.primitive_set), ("Gamma_H", rep.gamma_H)):
        lines.append(f"{label} ({len(s)}): " + ", ".join(s.names()))
    lines.append("primitive -> simple:")
    for g, i in am.primitive_bijection(rs).items():
        lines.append(f"  {rs.name(g):>14}  ->  a{rs.display_index(i)}")
    short = am.short_equality_cases(rs)
    if short:
        lines.append("note: equality also holds for short commutative roots " +
                     ", ".join(rs.name(g) for g in short))
    return "\n".join(lines) + "\n", EXIT_OK


# -- hasse --------------------------------------------------------------

def hasse_graph(rs: RootSystem, which: str) -> dk.LabeledGraph:
    if which == "poset":
        return dk.hasse_tree(rs, RootSet(rs, (1 << len(rs)) - 1))
    if not theta_is_fundamental(rs):
        raise UsageError(
            f"{rs.rtype}: the Gamma_H tree is defined only for systems "
            "not of type A_n or C_n (the highest root must be fundamental)")
    if which == "gammaH":
        return dk.gamma_H_tree(rs)
    if rs.family not in "BFG":
        raise UsageError(f"{rs.rtype}: the augmented tree exists only for types B_n, F4 and G2")
    return dk.augment_gamma_H(rs)[1]


def _graph_text(rs: RootSystem, g: dk.LabeledGraph) -> str:
    lines = [f"# {rs.rtype}: {len(g.nodes)} nodes, {len(g.edges)} edges"]
    for i in range(len(g.nodes)):
        mark = "*" if i in g.short else "o"
        lines.append(f"{mark} {g.node_name(rs, i)}")
    for (i, j), lab in sorted(g.edges.items()):
        tag = "" if lab is None else f" [{rs.display_index(lab)}]"
        link = "=" * g.bonds.get((i, j), 1) if (i, j) in g.bonds else "--"
        lines.append(f"{g.node_name(rs, i)} {link} {g.node_name(rs, j)}{tag}")
    return "\n".join(lines) + "\n"


def cmd_hasse(args) -> tuple[str, int]:
    rs = _system(args)
    g = hasse_graph(rs, args.set)
    if args.png:
        from .figures import draw_tree
        draw_tree(rs, g, args.png, title=f"{rs.rtype} {args.set}")
    if args.format == "dot":
        return g.to_dot(rs, name=f"{rs.rtype}_{args.set}"), EXIT_OK
    if args.format == "json":
        return _dump({"type": rs.family, "rank": rs.rank, "graph": g.to_dict(rs)}), EXIT_OK
    return _graph_text(rs, g), EXIT_OK


# -- verify -------------------------------------------------------------

def cmd_verify(args) -> tuple[str, int]:
    types = None
    if args.type is not None:
        types = [_system(args).rtype]
    outcome = vf.run(args.suite, types, args.max_rank)
    code = EXIT_OK if outcome.passed else EXIT_FALSIFIED
    if args.format == "json":
        t = types[0] if types else None
        return _dump({"type": t.family if t else None, "rank": t.rank if t else args.max_rank,
                      "outcome": outcome.to_dict()}), code
    lines = []
    for r in outcome.records:
        line = f"{r.status.upper():4}  {r.rtype:4}  {r.claim:32}  {r.anchor}"
        if r.counterexample is not None:
            line += f"  counterexample={json.dumps(r.counterexample)}"
        lines.append(line)
    n = {s: sum(1 for r in outcome.records if r.status == s) for s in (vf.PASS, vf.FAIL, vf.NA)}
    lines.append(f"suite={args.suite} passed={n[vf.PASS]} failed={n[vf.FAIL]} "
                 f"not-applicable={n[vf.NA]} overall={'PASS' if outcome.passed else 'FAIL'}")
    return "\n".join(lines) + "\n", code


# -- table --------------------------------------------------------------

def count_rows(max_rank: int) -> list[dict]:
    rows = []
    for t in admissible_types(max_rank):
        rs = get_root_system(t)
        want = ex.expected_counts(rs)
        if want is None:
            continue
        gam = am.amazing_roots(rs)
        gh = gam & idl.heisenberg_set(rs)
        rows.append({
            "type": str(t), "family": t.family, "rank": t.rank,
            "gamma": len(gam), "gamma_expected": want[0],
            "gamma_H": len(gh), "gamma_H_expected": want[1],
            "ok": (len(gam), len(gh)) == want,
        })
    return rows


def cmd_table(args) -> tuple[str, int]:
    if args.max_rank < 4:
        raise UsageError("--max-rank must be at least 4")
    rows = count_rows(args.max_rank)
    series = {r["type"]: r["gamma"] for r in rows if r["type"] in ("D5", "E6", "E7", "E8")}
    series_ok = all(v == 10 for v in series.values())
    ok = all(r["ok"] for r in rows) and series_ok
    code = EXIT_OK if ok else EXIT_FALSIFIED
    if args.format == "json":
        return _dump({"type": None, "rank": args.max_rank, "table": rows,
                      "formulas": ex.table_formulas(), "constant_series": series}), code
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue(), code
    body = [["type", "#Gamma", "expected", "#Gamma_H", "expected", "status"]]
    for r in rows:
        body.append([r["type"], str(r["gamma"]), str(r["gamma_expected"]), str(r["gamma_H"]),
                     str(r["gamma_H_expected"]), "ok" if r["ok"] else "MISMATCH"])
    out = _table(body)
    out += "formulas: " + "; ".join(f"{k}: {a}, {b}" for k, a, b in
                                   ((k, *v) for k, v in ex.table_formulas().items())) + "\n"
    out += ("#Gamma for D5, E6, E7, E8: " + ", ".join(f"{k}={v}" for k, v in series.items())
            + (" (constant)" if series_ok else " (NOT constant)") + "\n")
    return out, code


# -- report -------------------------------------------------------------

def cmd_report(args) -> tuple[str, int]:
    """Write the count table as CSV plus figures for every tree."""
    from .figures import draw_tree, plot_counts

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = count_rows(args.max_rank)
    with open(out / "counts.csv", "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    written = [out / "counts.csv", plot_counts(rows, out / "counts.png")]
    for t in admissible_types(args.max_rank):
        rs = get_root_system(t)
        if not theta_is_fundamental(rs):
            continue
        sets = ["gammaH"] + (["augmented"] if rs.family in "BFG" else [])
        for which in sets:
            g = hasse_graph(rs, which)
            stem = out / f"{t}_{which}"
            stem.with_suffix(".dot").write_text(g.to_dot(rs, name=f"{t}_{which}"))
            written.append(stem.with_suffix(".dot"))
            written.append(draw_tree(rs, g, stem.with_suffix(".png"), title=f"{t} {which}"))
    ok = all(r["ok"] for r in rows)
    return "".join(f"{p}\n" for p in written), EXIT_OK if ok else EXIT_FALSIFIED


# -- parser -------------------------------------------------------------

def _add_type(p, required=True):
    p.add_argument("--type", "-t", required=required, help="family letter or compact token such as D6")
    p.add_argument("--rank", "-r", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rootposet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="list positive roots with their attributes")
    _add_type(p)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("amazing", help="amazing, primitive and H-amazing roots")
    _add_type(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_amazing)

    p = sub.add_parser("hasse", help="Hasse diagrams as text, DOT or JSON")
    _add_type(p)
    p.add_argument("--set", choices=("gammaH", "augmented", "poset"), default="gammaH")
    p.add_argument("--format", choices=("text", "dot", "json"), default="text")
    p.add_argument("--png", default=None, help="also render the diagram to this image file")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", help="run verification suites")
    _add_type(p, required=False)
    p.add_argument("--suite", choices=vf.SUITES + ("all",), default="all")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="counts of amazing roots per type")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("report", help="write the count table and tree figures to a directory")
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--out", default="report")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as e:
        print(f"rootposet: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FalsificationError as e:
        print(f"rootposet: falsified: {e}", file=sys.stderr)
        return EXIT_FALSIFIED
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
