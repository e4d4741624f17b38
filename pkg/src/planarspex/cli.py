"""Command-line entry point: ``planarspex <command> ...``.

Exit codes: 0 success, 1 assertion failure, 2 usage or parse error,
3 enumeration budget refusal.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, fields
from pathlib import Path

from . import __version__
from .families import DESCRIPTION, KINDS, FamilySpec, build, closed_form_rho
from .graph import Graph, GraphError
from .io import decode_graph6, encode_graph6, parse_edge_list, read_graph6_lines
from .patterns import PatternSpec, contains
from .planarity import GraphClass, is_outerplanar, is_planar
from .search import (
    BudgetExceeded,
    SearchInstance,
    canonical_graph6,
    conjecture_scan,
    enumerate_graphs,
    extremal,
    star_crossover_scan,
)
from .spectral import COMPARE_TOL, DEFAULT_TOL, ConvergenceError, spectral_radius

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

FAMILY_HELP = ", ".join(f"{k}:N ({DESCRIPTION[k]})" for k in KINDS)
PATTERN_HELP = "path:k, cycle:l, matching:t, clique:r, g6:<graph6>"


class UsageError(Exception):
    pass


@dataclass
class Config:
    rho_tol: float = DEFAULT_TOL
    compare_tol: float = COMPARE_TOL
    enum_budget_m: int | None = None
    workers: int = 1
    output_format: str = "text"

    def validate(self) -> None:
        if self.rho_tol <= 0 or self.compare_tol <= 0:
            raise UsageError("tolerances must be positive")
        if self.enum_budget_m is not None and self.enum_budget_m < 1:
            raise UsageError("enum_budget_m must be at least 1")
        if self.workers < 1:
            raise UsageError("workers must be at least 1")
        if self.output_format not in ("json", "csv", "text"):
            raise UsageError(f"unknown output format {self.output_format!r}")


def load_config(args: argparse.Namespace) -> Config:
    cfg = Config()
    if getattr(args, "config", None):
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        known = {f.name for f in fields(Config)}
        for key, value in data.items():
            if key not in known:
                raise UsageError(f"unknown config key {key!r}")
            setattr(cfg, key, value)
    for name in ("rho_tol", "compare_tol", "enum_budget_m", "workers", "output_format"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(cfg, name, value)
    cfg.validate()
    return cfg


def read_graph(token: str) -> tuple[Graph, FamilySpec | None]:
    """Resolve a graph argument: ``-`` (graph6 on stdin), a file, a family token or graph6."""
    if token == "-":
        lines = [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
        if not lines:
            raise GraphError("no graph on stdin")
        return decode_graph6(lines[0]), None
    kind, sep, _ = token.partition(":")
    if sep and kind.lower() in KINDS:
        spec = FamilySpec.parse(token)
        return build(spec), spec
    path = Path(token)
    if path.is_file():
        text = path.read_text()
        if path.suffix in (".g6", ".graph6"):
            return read_graph6_lines(text.splitlines())[0], None
        return parse_edge_list(text), None
    return decode_graph6(token), None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_rho(args: argparse.Namespace, cfg: Config) -> int:
    g, spec = read_graph(args.graph)
    r = spectral_radius(g, tol=cfg.rho_tol)
    closed = closed_form_rho(spec) if spec else None
    if cfg.output_format == "json":
        payload = {
            "graph6": encode_graph6(g),
            "n": g.n,
            "m": g.m,
            "rho": r.rho,
            "residual": r.residual,
            "iterations": r.iterations,
            "top_entries": r.top_entries(args.top),
        }
        if closed is not None:
            payload["closed_form"] = closed
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    print(f"n={g.n} m={g.m}")
    print(f"rho={r.rho!r}")
    print(f"residual={r.residual:.3e} iterations={r.iterations}")
    print("top Perron entries: " + ", ".join(f"{v}:{x:.6f}" for v, x in r.top_entries(args.top)))
    if closed is not None:
        print(f"closed form {spec}: {closed!r} (difference {abs(closed - r.rho):.3e})")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, cfg: Config) -> int:
    g, _ = read_graph(args.graph)
    result = {"n": g.n, "m": g.m, "planar": is_planar(g), "outerplanar": is_outerplanar(g)}
    for token in args.forbid or []:
        result[f"contains {token}"] = contains(g, PatternSpec.parse(token))
    if cfg.output_format == "json":
        print(json.dumps(result, indent=2))
    else:
        for key, value in result.items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_build(args: argparse.Namespace, cfg: Config) -> int:
    spec = FamilySpec.parse(args.family)
    g = build(spec)
    closed = closed_form_rho(spec)
    if cfg.output_format == "json":
        print(json.dumps({"family": str(spec), "graph6": encode_graph6(g), "n": g.n, "m": g.m, "closed_form": closed}))
    elif args.edges:
        print(f"{g.n} {g.m}")
        for u, v in g.edges():
            print(f"{u} {v}")
    else:
        print(encode_graph6(g))
    return EXIT_OK


def _instance(args: argparse.Namespace, cfg: Config) -> SearchInstance:
    pattern = PatternSpec.parse(args.forbid) if args.forbid else None
    cls = GraphClass(args.graph_class) if args.graph_class != "any" else None
    return SearchInstance(args.m, cls, pattern, not args.allow_disconnected, cfg.compare_tol)


def cmd_enumerate(args: argparse.Namespace, cfg: Config) -> int:
    inst = _instance(args, cfg)
    lines: list[str] = []
    count = enumerate_graphs(inst, lambda g: lines.append(canonical_graph6(g)), workers=cfg.workers, budget=cfg.enum_budget_m)
    if args.count:
        _emit(f"{count}\n", args.out)
    else:
        _emit("".join(f"{s}\n" for s in sorted(lines)), args.out)
    return EXIT_OK


def cmd_extremal(args: argparse.Namespace, cfg: Config) -> int:
    inst = _instance(args, cfg)
    report = extremal(inst, workers=cfg.workers, budget=cfg.enum_budget_m)
    if cfg.output_format == "json":
        text = report.to_json() + "\n"
    elif cfg.output_format == "csv":
        text = report.to_csv()
    else:
        head = f"m={inst.m} class={args.graph_class} forbid={args.forbid or '-'}"
        text = f"{head}\nenumerated {report.graphs_enumerated} graphs; rho_max={report.rho_max!r}\n"
        text += "".join(f"{x.graph6}\tn={x.n}\trho={x.rho!r}\n" for x in report.maximizers)
        text += f"reference star S_{inst.m}: rho={math.sqrt(inst.m)!r}\n"
    _emit(text, args.out)
    return EXIT_OK


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise UsageError(f"range {text!r} must look like A..B") from None
    if b < a:
        raise UsageError(f"empty range {text!r}")
    return range(a, b + 1)


def cmd_scan(args: argparse.Namespace, cfg: Config) -> int:
    span = parse_range(args.range)
    rows: list[dict]
    if args.kind == "conjecture":
        table = conjecture_scan(span, tol=cfg.compare_tol)
        rows = [{"m": r.m, "rho_G": r.rho_g, "rho_H": r.rho_h, "winner": r.winner, "margin": r.margin} for r in table]
        summary = {}
    else:
        m_star, table = star_crossover_scan(span.stop - 1)
        rows = [{"m": r.m, "sqrt_m": r.sqrt_m, "rho_fan": r.rho_fan, "gap": r.gap} for r in table if r.m >= span.start]
        summary = {"m_star": m_star}
    if cfg.output_format == "json":
        text = json.dumps({"kind": args.kind, **summary, "rows": rows}, indent=2) + "\n"
    else:
        sep = "," if cfg.output_format == "csv" else "\t"
        keys = list(rows[0]) if rows else []
        text = sep.join(keys) + "\n"
        text += "".join(sep.join(str(r[k]) for k in keys) + "\n" for r in rows)
        if summary and cfg.output_format == "text":
            text += f"m* = {summary['m_star']}\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: Config) -> int:
    from .verify import report_json, run_suite

    graphs = None
    if args.population:
        try:
            graphs = read_graph6_lines(Path(args.population).read_text().splitlines())
        except OSError as exc:
            raise UsageError(f"cannot read population file: {exc}") from None
    report = run_suite(args.suite, args.seed, graphs)
    text = report_json(report) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    if cfg.output_format == "json" and not args.out:
        sys.stdout.write(text)
    else:
        for check in report["checks"]:
            print(f"{check['check_id']:<13} {check['status']:<4} cases={check['cases_run']}")
        print(f"overall: {report['status']}")
    return EXIT_OK if report["status"] == "pass" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planarspex",
        description="Spectral radii, extremal families and exhaustive searches for planar graphs by edge count.",
        epilog=f"family tokens: {FAMILY_HELP}. pattern tokens: {PATTERN_HELP}.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--config", help="JSON file with rho_tol, compare_tol, enum_budget_m, workers, output_format")
    parser.add_argument("--rho-tol", dest="rho_tol", type=float)
    parser.add_argument("--compare-tol", dest="compare_tol", type=float)
    parser.add_argument("--budget", dest="enum_budget_m", type=int, help="largest m the enumerator may attempt")
    parser.add_argument("--workers", type=int)
    parser.add_argument("--format", dest="output_format", choices=["json", "csv", "text"])
    sub = parser.add_subparsers(dest="command", required=True)

    graph_help = "graph6 string, edge-list file, family token, or - for graph6 on stdin"
    p = sub.add_parser("rho", help="spectral radius and Perron vector")
    p.add_argument("graph", help=graph_help)
    p.add_argument("--top", type=int, default=5, help="number of Perron entries to show")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("classify", help="planarity, outerplanarity and pattern containment")
    p.add_argument("graph", help=graph_help)
    p.add_argument("--forbid", action="append", help=f"pattern token ({PATTERN_HELP}); repeatable")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("build", help="construct a named family", epilog=f"families: {FAMILY_HELP}")
    p.add_argument("family", help="family token, e.g. gm:7")
    p.add_argument("--edges", action="store_true", help="print an edge list instead of graph6")
    p.set_defaults(func=cmd_build)

    for name, func, helptext in (
        ("enumerate", cmd_enumerate, "list one graph per isomorphism class"),
        ("extremal", cmd_extremal, "spectral maximisers over a class"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--class", dest="graph_class", choices=["planar", "outerplanar", "any"], default="planar")
        p.add_argument("--forbid", help=f"pattern token ({PATTERN_HELP})")
        p.add_argument("--allow-disconnected", action="store_true")
        p.add_argument("--out")
        if name == "enumerate":
            p.add_argument("--count", action="store_true", help="print only the number of classes")
        p.set_defaults(func=func)

    p = sub.add_parser("scan", help="G_m vs H_m, or star vs fan crossover")
    p.add_argument("--kind", choices=["conjecture", "crossover"], required=True)
    p.add_argument("--range", required=True, help="A..B")
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run the lemma property checks")
    p.add_argument("--suite", choices=["default", "all"], default="default")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--population", help="file of graph6 lines replacing the graph populations")
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        cfg = load_config(args)
        return args.func(args, cfg)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"error: {exc}; best estimate rho={exc.best.rho!r}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
