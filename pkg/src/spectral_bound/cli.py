"""Command-line interface: bounds, the summary table, certification, search, catalog and spectra."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys

from .catalog import build, certify_attainment, entry, export, names
from .catalog.registry import charpoly_factors
from .catalog.table import MAX_K, summary_table
from .errors import CertificationError, DomainError
from .exactnum import format_factorization, format_scalar, parse_scalar
from .graphcore import Graph, Graph6Error, char_poly, from_adjlist, from_graph6, is_connected, second_eig, spectrum
from .graphcore.spectra import CHARPOLY_CAP
from .lpbound import bound_for_lambda

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2

_LABEL = re.compile(r"^(\w+)(?:\((.*)\))?$")


class UsageError(Exception):
    pass


def _emit_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue().rstrip("\n")


def _params(items: list[str] | None) -> dict:
    out = {}
    for item in items or []:
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"parameters look like key=value, got {item!r}")
        try:
            out[key.strip()] = int(val)
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer") from None
    return out


def _named(label: str, extra: list[str] | None = None) -> tuple[str, dict]:
    m = _LABEL.match(label.strip())
    if not m or m.group(1) not in names():
        raise UsageError(f"unknown graph {label!r}; registry: {', '.join(names())}")
    inner = [p for p in (m.group(2) or "").split(",") if p.strip()]
    return m.group(1), _params(inner + list(extra or []))


def _read_graph_file(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError(f"{path} is empty")
    if len(lines) == 1 or lines[0].startswith(">>graph6<<"):
        return from_graph6(lines[0].strip())
    return from_adjlist(text)


def _graph_from_args(args) -> Graph:
    given = [x for x in (args.graph, args.g6, args.file) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --graph NAME, --g6 STRING, --file PATH")
    if args.graph:
        name, params = _named(args.graph, getattr(args, "param", None))
        return build(name, **params)
    if args.g6:
        return from_graph6(args.g6)
    return _read_graph_file(args.file)


def _lambda(text: str):
    return parse_scalar(text)


def cmd_bound(args) -> tuple[int, str]:
    cert = bound_for_lambda(args.k, _lambda(args.lam))
    d = cert.to_dict()
    if args.json:
        return EXIT_OK, json.dumps(d, indent=2)
    if args.csv:
        return EXIT_OK, _emit_csv([d], list(d))
    note = "floor(M) is odd and k is odd, so v_ub = floor(M) - 1" if cert.parity_applied else "no parity adjustment"
    lines = [
        f"k = {d['k']}, lambda = {d['lambda2']}",
        f"t = {d['t']}",
        f"c = {d['c']}",
        f"M = {d['M']} (~{d['M_approx']:.6f})",
        f"v_ub = {d['v_ub']}",
        f"parity: {note}",
    ]
    return EXIT_OK, "\n".join(lines)


TABLE_COLUMNS = ["k", "lambda", "v", "source", "published", "v_ub", "attained_by", "flag"]


def cmd_table(args) -> tuple[int, str]:
    if not 2 <= args.max_k <= MAX_K:
        raise DomainError(f"--max-k must lie in 2..{MAX_K}")
    rows = summary_table(args.max_k, run_search=not args.no_search)
    if args.verify:
        from .catalog.table import verify_row

        for r in rows:
            if r.graph is not None and not verify_row(r):
                raise CertificationError(f"row ({r.k}, {format_scalar(r.lam)}): {r.attained_by} does not attain {r.v}")
    dicts = [r.to_dict() for r in rows]
    if args.json:
        return EXIT_OK, json.dumps(dicts, indent=2)
    if args.csv:
        return EXIT_OK, _emit_csv(dicts, TABLE_COLUMNS)
    out = [f"{'k':>3}  {'lambda':<16} {'v':>8}  {'source':<15} {'attained by':<26} flag"]
    for d in dicts:
        out.append(f"{d['k']:>3}  {d['lambda']:<16} {d['v']:>8}  {d['source']:<15} {d['attained_by'] or '-':<26} {d['flag']}")
    return EXIT_OK, "\n".join(out)


def cmd_certify(args) -> tuple[int, str]:
    g = _graph_from_args(args)
    if not is_connected(g):
        raise DomainError("certify needs a connected graph")
    rep = certify_attainment(g, args.k, _lambda(args.lam))
    code = EXIT_OK if rep.attains else EXIT_NEGATIVE
    if args.json:
        return code, json.dumps(rep.to_dict(), indent=2)
    lines = [rep.summary()]
    for ch in rep.checks:
        lines.append(f"  [{ch.status}] {ch.name}: {ch.detail}")
    return code, "\n".join(lines)


def cmd_search(args) -> tuple[int, str]:
    from .search import HOOKS, SearchSpec, enumerate_graphs, find_extremal

    jobs = args.jobs
    if args.mode == "extremal":
        if args.lam_max is None:
            raise UsageError("--extremal needs --lambda")
        res = find_extremal(args.k, _lambda(args.lam_max), jobs=jobs)
    else:
        n_min = args.n if args.n is not None else args.n_min
        n_max = args.n if args.n is not None else args.n_max
        if n_min is None or n_max is None:
            raise UsageError("give --n or both --n-min and --n-max")
        hooks = HOOKS if args.hooks is None else frozenset(h for h in args.hooks.split(",") if h)
        spec = SearchSpec(
            args.k,
            n_min,
            n_max,
            girth_min=args.min_girth,
            girth_exact=args.girth,
            lambda2_max=None if args.lam_max is None else _lambda(args.lam_max),
            lambda2_min=None if args.lam_min is None else _lambda(args.lam_min),
            mode=args.mode,
            hooks=hooks,
            split_depth=args.split_depth,
        )
        sink = None
        fh = None
        if args.output and args.mode == "collect":
            fh = open(args.output, "w")
            sink = lambda line: fh.write(line + "\n")  # noqa: E731
        try:
            res = enumerate_graphs(spec, jobs=jobs, sink=sink)
        finally:
            if fh is not None:
                fh.close()
    d = res.to_dict()
    if args.json:
        return EXIT_OK, json.dumps(d, indent=2)
    if args.csv:
        return EXIT_OK, _emit_csv([{"n": n, "count": c, "scanned": res.scanned_by_n.get(n, 0)} for n, c in sorted(res.counts_by_n.items())], ["n", "count", "scanned"])
    lines = [f"n={n}: {c}" for n, c in sorted(res.counts_by_n.items())]
    lines.append(f"total: {res.total}")
    if args.mode == "extremal":
        lines.append(f"max order: {res.max_order}")
        lines += [f"  {w['graph6']}  lambda2 = {w['lambda2']}" for w in res.witnesses]
    elif args.mode == "collect" and not args.output:
        lines += res.all_graphs()
    for w in res.warnings:
        lines.append(f"warning: {w}")
    return EXIT_OK, "\n".join(lines)


def cmd_catalog(args) -> tuple[int, str]:
    if args.action == "list":
        rows = [entry(n).metadata() for n in names()]
        if args.json:
            return EXIT_OK, json.dumps(rows, indent=2)
        cols = ["name", "n", "k", "lambda2", "girth", "provenance"]
        if args.csv:
            return EXIT_OK, _emit_csv(rows, cols)
        return EXIT_OK, "\n".join(f"{r['name']:<22} n={r['n']:<5} k={r['k']:<3} lambda2={r['lambda2']:<28} {r['provenance']}" for r in rows)
    if not args.name:
        raise UsageError("catalog export needs --name")
    name, params = _named(args.name, args.param)
    return EXIT_OK, export(name, args.format, **params)


def cmd_spectrum(args) -> tuple[int, str]:
    g = _graph_from_args(args)
    if g.n > CHARPOLY_CAP:
        raise DomainError(f"spectra are computed exactly up to {CHARPOLY_CAP} vertices")
    p = char_poly(g)
    spec = spectrum(g)
    lam2 = format_scalar(second_eig(g)) if is_connected(g) and g.n > 1 else None
    if args.json:
        d = {
            "n": g.n,
            "charpoly": format_factorization(p),
            "factors": charpoly_factors(g),
            "eigenvalues": [{"value": format_scalar(r), "multiplicity": m} for r, m in spec.roots],
            "lambda2": lam2,
        }
        return EXIT_OK, json.dumps(d, indent=2)
    lines = [format_factorization(p), f"spectrum: {spec}"]
    if lam2 is not None:
        lines.append(f"lambda2: {lam2}")
    return EXIT_OK, "\n".join(lines)


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="registry name, e.g. petersen or 'pg_incidence(q=3)'")
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="parameter for a registry family")
    p.add_argument("--g6", help="graph6 string")
    p.add_argument("--file", help="file holding a graph6 line or an adjacency list")


def _add_format(p: argparse.ArgumentParser, csv_ok: bool = True) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="JSON output")
    if csv_ok:
        g.add_argument("--csv", action="store_true", help="CSV output")
    p.set_defaults(csv=False)


def _default_jobs() -> int | None:
    value = os.environ.get("SPECTRAL_BOUND_JOBS")
    return int(value) if value and value.isdigit() else None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spectral-bound", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="LP upper bound on v(k, lambda)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help='e.g. "sqrt(6)", "19/10", "(sqrt(5)-1)/2"')
    _add_format(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="recompute the summary of v(k, lambda) for k <= 22")
    p.add_argument("--max-k", type=int, default=MAX_K)
    p.add_argument("--verify", action="store_true", help="also build and certify every attaining graph")
    p.add_argument("--no-search", action="store_true", help="use the stored value for search-sourced rows")
    _add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("certify", help="check whether a graph attains v(k, lambda)")
    _add_graph_input(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    _add_format(p, csv_ok=False)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("search", help="exhaustive search over connected k-regular graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, help="single order")
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--girth", type=int, help="exact girth")
    p.add_argument("--min-girth", type=int, default=3)
    p.add_argument("--lambda", "--lambda-max", dest="lam_max", help="keep lambda_2 <= this value")
    p.add_argument("--lambda-min", dest="lam_min", help="keep lambda_2 > this value")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", dest="mode", action="store_const", const="count")
    mode.add_argument("--collect", dest="mode", action="store_const", const="collect")
    mode.add_argument("--extremal", dest="mode", action="store_const", const="extremal")
    p.set_defaults(mode="count")
    p.add_argument("--hooks", help="comma-separated prune hooks (interlacing,moore,subgraph); empty disables")
    p.add_argument("--split-depth", type=int, default=8)
    p.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes (default $SPECTRAL_BOUND_JOBS or 1)")
    p.add_argument("--output", help="write graph6 lines here in collect mode")
    _add_format(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", help="list or export named graphs")
    p.add_argument("action", choices=["list", "export"])
    p.add_argument("--name")
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--format", default="graph6", choices=["graph6", "adjlist", "json"])
    _add_format(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("spectrum", help="exact characteristic polynomial and spectrum")
    _add_graph_input(p)
    _add_format(p, csv_ok=False)
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = args.func(args)
    except (DomainError, UsageError, Graph6Error, OSError, CertificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
