"""Command-line interface.

Four subcommands: ``analyze`` a weighted edge list into a coefficient
summary and per-degree curves, ``generate`` seeded random networks,
``sweep`` a seeded ensemble into aggregate reports, and ``project``
bipartite event data onto a weighted co-occurrence network.

Output conventions: progress goes to stderr, stdout carries CSV only (when
no --out is given), CSV files use empty cells for absent values and JSON
files use null, and identical invocations (same seed, any worker count)
produce byte-identical outputs. Exit codes: 0 success, 1 usage error,
2 input error, 3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import IO

from .generate import EnsembleSummary, GeneratorConfig, realization, run_ensemble
from .graph import WeightedGraph
from .ingest import EdgeListError, parse_bipartite, parse_edge_list, project_count, project_newman, write_edge_list
from .metrics import DegreeCurve, NetworkAnalysis, NetworkSummary, analyze_network

SCHEMA_VERSION = 1

#: Leading summary columns, in the order of the reference coefficient table.
SUMMARY_COLUMNS = (
    "N",
    "M",
    "k0",
    "k0_w",
    "k0w_over_k0",
    "CC",
    "sigma",
    "beta",
    "sigma_over_cc",
    "beta_over_cc",
    "beta_over_sigma",
    "beta_over_sigma_cc",
)
#: Extra columns appended after the reference ones.
SUMMARY_EXTRAS = ("k0_interior", "k0w_interior", "isolated_nodes", "leaf_victims")

CURVE_COLUMNS = (
    "k",
    "count",
    "sigma_k",
    "beta_k",
    "cc_k",
    "beta_over_sigma_k",
    "beta_over_sigma_cc_k",
)


class _UsageError(Exception):
    pass


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1 (argparse's default would be 2, reserved for input errors)
    def error(self, message: str):
        raise _UsageError(f"{self.prog}: {message}")


def _note(message: str) -> None:
    print(message, file=sys.stderr)


# -- value formatting ---------------------------------------------------------


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _summary_row(s: NetworkSummary) -> dict[str, object]:
    return {
        "N": s.n_nodes,
        "M": s.n_edges,
        "k0": s.k0,
        "k0_w": s.k0_w,
        "k0w_over_k0": s.k0w_over_k0,
        "CC": s.cc,
        "sigma": s.sigma,
        "beta": s.beta,
        "sigma_over_cc": s.sigma_over_cc,
        "beta_over_cc": s.beta_over_cc,
        "beta_over_sigma": s.beta_over_sigma,
        "beta_over_sigma_cc": s.beta_over_sigma_cc,
        "k0_interior": s.k0_interior,
        "k0w_interior": s.k0w_interior,
        "isolated_nodes": s.n_isolated,
        "leaf_victims": s.n_leaf_victims,
    }


def _curve_rows(a: NetworkAnalysis) -> list[dict[str, object]]:
    degrees = sorted(
        set(a.cc_curve.degrees())
        | set(a.sigma_curve.degrees() if a.sigma_curve else ())
        | set(a.beta_curve.degrees() if a.beta_curve else ())
    )

    def _val(curve: DegreeCurve | None, k: int):
        return curve.value(k) if curve is not None and k in curve else None

    rows = []
    for k in degrees:
        count = a.cc_curve.count(k) if k in a.cc_curve else 0
        rows.append(
            {
                "k": k,
                "count": count,
                "sigma_k": _val(a.sigma_curve, k),
                "beta_k": _val(a.beta_curve, k),
                "cc_k": _val(a.cc_curve, k),
                "beta_over_sigma_k": _val(a.beta_over_sigma_curve, k),
                "beta_over_sigma_cc_k": _val(a.beta_over_sigma_cc_curve, k),
            }
        )
    return rows


def _write_csv(path_or_stream: Path | IO[str], columns, rows: list[dict]) -> None:
    if isinstance(path_or_stream, Path):
        with open(path_or_stream, "w", encoding="utf-8", newline="") as fh:
            _write_csv(fh, columns, rows)
        return
    writer = csv.writer(path_or_stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row[c]) for c in columns])


def _write_json(path: Path, payload: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2, allow_nan=False)
        fh.write("\n")


def _write_labels(path: Path, g: WeightedGraph) -> None:
    rows = [{"index": i, "label": lab} for i, lab in enumerate(g.labels)]
    _write_csv(path, ("index", "label"), rows)


def _config_dict(cfg: GeneratorConfig) -> dict[str, object]:
    return {
        "model": cfg.model,
        "N": cfg.N,
        "p": cfg.p,
        "m0": cfg.m0,
        "m": cfg.m,
        "k": cfg.k,
        "weight_mean": cfg.weight_mean,
        "weight_stddev": cfg.weight_stddev,
        "weight_truncation": cfg.weight_truncation,
        "seed": cfg.seed,
        "realizations": cfg.realizations,
    }


# -- commands -----------------------------------------------------------------


def _load_graph(path: str) -> WeightedGraph:
    try:
        g = parse_edge_list(path)
    except (EdgeListError, OSError, UnicodeDecodeError) as exc:
        raise _InputError(str(exc)) from exc
    if g.edge_count == 0:
        raise _InputError(f"{path}: no edges")
    return g


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    analysis = analyze_network(g, args.model, args.min_samples)
    summary_row = _summary_row(analysis.summary)
    columns = SUMMARY_COLUMNS + SUMMARY_EXTRAS
    if args.out is None:
        _write_csv(sys.stdout, columns, [summary_row])
        return 0
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    curve_rows = _curve_rows(analysis)
    if args.format in ("csv", "both"):
        _write_csv(out / "summary.csv", columns, [summary_row])
        _write_csv(out / "curves.csv", CURVE_COLUMNS, curve_rows)
        _note(f"wrote {out / 'summary.csv'} and {out / 'curves.csv'}")
    if args.format in ("json", "both"):
        _write_json(
            out / "summary.json",
            {"schema_version": SCHEMA_VERSION, "model": args.model, "summary": summary_row},
        )
        _write_json(
            out / "curves.json",
            {"schema_version": SCHEMA_VERSION, "model": args.model, "curves": curve_rows},
        )
        _note(f"wrote {out / 'summary.json'} and {out / 'curves.json'}")
    _write_labels(out / "labels.csv", g)
    return 0


def _generator_config(args: argparse.Namespace) -> GeneratorConfig:
    cfg = GeneratorConfig(
        model=args.model,
        N=args.N,
        p=args.p,
        m0=args.m0,
        m=args.m,
        k=args.k,
        weight_mean=args.weight_mean,
        weight_stddev=args.weight_stddev,
        weight_truncation=args.weight_truncation,
        seed=args.seed,
        realizations=args.realizations,
    )
    try:
        cfg.validate()
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    return cfg


def cmd_generate(args: argparse.Namespace) -> int:
    cfg = _generator_config(args)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    files = []
    for i in range(cfg.realizations):
        g = realization(cfg, i)
        name = f"realization_{i:03d}.edges"
        write_edge_list(g, out / name)
        files.append(name)
        _note(f"wrote {out / name} (N={g.node_count}, M={g.edge_count})")
    _write_json(
        out / "manifest.json",
        {
            "schema_version": SCHEMA_VERSION,
            "kind": "generate",
            "config": _config_dict(cfg),
            "seed_streams": {
                "structure": [cfg.seed, "realization_index", 0],
                "weights": [cfg.seed, "realization_index", 1],
            },
            "files": files,
        },
    )
    _note(f"wrote {out / 'manifest.json'}")
    return 0


def _mean_curve_rows(ens: EnsembleSummary) -> list[dict[str, object]]:
    degrees = sorted(
        set(ens.sigma_curve.degrees())
        | set(ens.beta_curve.degrees())
        | set(ens.cc_curve.degrees())
    )
    rows = []
    for k in degrees:
        rows.append(
            {
                "k": k,
                "realizations": ens.curve_realizations.get(k, 0),
                "victims": ens.sigma_curve.count(k) if k in ens.sigma_curve else 0,
                "sigma_k": ens.sigma_curve.value(k) if k in ens.sigma_curve else None,
                "beta_k": ens.beta_curve.value(k) if k in ens.beta_curve else None,
                "cc_k": ens.cc_curve.value(k) if k in ens.cc_curve else None,
            }
        )
    return rows


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = _generator_config(args)
    ens = run_ensemble(cfg, min_samples=args.min_samples, workers=args.workers)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    columns = ("realization",) + SUMMARY_COLUMNS + SUMMARY_EXTRAS
    if args.format in ("csv", "both"):
        rows = [
            {"realization": i, **_summary_row(s)} for i, s in enumerate(ens.summaries)
        ]
        _write_csv(out / "realizations.csv", columns, rows)
        _write_csv(
            out / "mean_curves.csv",
            ("k", "realizations", "victims", "sigma_k", "beta_k", "cc_k"),
            _mean_curve_rows(ens),
        )
        _note(f"wrote {out / 'realizations.csv'} and {out / 'mean_curves.csv'}")
    if args.format in ("json", "both"):
        _write_json(
            out / "ensemble.json",
            {
                "schema_version": SCHEMA_VERSION,
                "config": _config_dict(cfg),
                "realizations": cfg.realizations,
                "mean": ens.mean,
                "std": ens.std,
                "defined": ens.defined,
                "k0_of_mean_curve": ens.k0_of_mean_curve,
                "k0w_of_mean_curve": ens.k0w_of_mean_curve,
                "summaries": [_summary_row(s) for s in ens.summaries],
            },
        )
        _note(f"wrote {out / 'ensemble.json'}")
    return 0


def cmd_project(args: argparse.Namespace) -> int:
    try:
        events = parse_bipartite(args.input)
    except (EdgeListError, OSError, UnicodeDecodeError) as exc:
        raise _InputError(str(exc)) from exc
    if not events:
        _note(f"warning: {args.input}: no event records, writing empty output")
        if args.out is not None:
            Path(args.out).write_text("", encoding="utf-8")
        return 0
    project = project_count if args.scheme == "count" else project_newman
    g = project(events)
    try:
        if args.out is None:
            rows = sorted(
                (min(str(x), str(y)), max(str(x), str(y)), w) for x, y, w in g.edges()
            )
            for lo, hi, w in rows:
                if any(ch.isspace() for ch in lo + hi):
                    raise ValueError(f"label {lo!r}/{hi!r} cannot be written to an edge list")
                sys.stdout.write(f"{lo} {hi} {w:.17g}\n")
            return 0
        out = Path(args.out)
        if out.parent != Path(""):
            out.parent.mkdir(parents=True, exist_ok=True)
        write_edge_list(g, out)
    except ValueError as exc:  # unwritable labels in the input data
        raise _InputError(str(exc)) from exc
    _note(f"wrote {out} (N={g.node_count}, M={g.edge_count})")
    _write_labels(Path(str(out) + ".labels.csv"), g)
    return 0


# -- parser -------------------------------------------------------------------


def _add_generator_flags(p: argparse.ArgumentParser, default_realizations: int) -> None:
    p.add_argument("--model", required=True, choices=("ER", "BA", "WS"),
                   help="generator family")
    p.add_argument("--N", required=True, type=int, help="number of nodes")
    p.add_argument("--p", type=float, default=None,
                   help="ER connection probability / WS rewiring probability")
    p.add_argument("--m0", type=int, default=None, help="BA seed clique size")
    p.add_argument("--m", type=int, default=None, help="BA edges per new node")
    p.add_argument("--k", type=int, default=None, help="WS ring degree (even)")
    p.add_argument("--weight_mean", type=float, default=1.0,
                   help="mean of the per-node weight Gaussian (default 1.0)")
    p.add_argument("--weight_stddev", type=float, default=1.0,
                   help="stddev of the per-node weight Gaussian (default 1.0)")
    p.add_argument("--weight_truncation", choices=("resample", "clamp"),
                   default="resample",
                   help="how to keep node weights positive (default resample)")
    p.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    p.add_argument("--realizations", type=int, default=default_realizations,
                   help=f"number of realizations (default {default_realizations})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="gossipnet",
        description="Gossip spreading on weighted networks: analysis, generation, projection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[], help="summarize a weighted edge list",
                       description="Compute the coefficient summary and per-degree "
                                   "curves of a weighted edge-list network.")
    p.add_argument("--input", required=True, help="weighted edge-list file")
    p.add_argument("--model", choices=("unweighted", "weighted", "both"), default="both")
    p.add_argument("--out", default=None,
                   help="output directory (omit to print the summary CSV to stdout)")
    p.add_argument("--format", choices=("csv", "json", "both"), default="both")
    p.add_argument("--min-samples", dest="min_samples", type=int, default=1,
                   help="minimum victims per degree for the critical-degree search")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="write seeded random networks",
                       description="Generate ER/BA/WS networks with node-based "
                                   "Gaussian edge weights.")
    _add_generator_flags(p, default_realizations=1)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sweep", help="run a seeded generator ensemble",
                       description="Generate an ensemble, summarize every realization "
                                   "and write aggregate reports.")
    _add_generator_flags(p, default_realizations=50)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--format", choices=("csv", "json", "both"), default="both")
    p.add_argument("--min-samples", dest="min_samples", type=int, default=1)
    p.add_argument("--workers", type=int, default=1,
                   help="worker processes for realizations (output is identical "
                        "for any value)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("project", help="project bipartite events onto a network",
                       description="Build a weighted co-occurrence network from "
                                   "group/member event records.")
    p.add_argument("--input", required=True, help="bipartite event file")
    p.add_argument("--scheme", choices=("count", "newman"), default="count",
                   help="pair weighting: shared-event count, or 1/(n-1) per event")
    p.add_argument("--out", default=None,
                   help="output edge-list file (omit to print to stdout)")
    p.set_defaults(func=cmd_project)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal invariant violation
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
