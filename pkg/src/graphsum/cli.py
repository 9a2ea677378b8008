"""Command-line front end.

Subcommands:

    lossless   optimal lossless summary of an edge list
    lossy      utility-threshold summary (T-BUDS style)
    query      triangles / pagerank / sssp on a saved lossless summary
    eval       rn / app-utility / verify-lossless reports

Exit codes: 0 ok, 1 internal error, 2 usage, 3 unsupported input,
4 resource cap exceeded. Identical flags and seed produce byte-identical
output directories.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import centrality as cent
from . import evaluate, lossless, lossy, queries
from .errors import (
    CapExceededError,
    GraphSumError,
    ModelUndefinedError,
    UnsupportedSummaryError,
)
from .graph import load_edge_list, write_id_map
from .summary import (
    DEFAULT_RECONSTRUCT_CAP,
    load_summary,
    save_summary,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_CAP = 4


@dataclass(frozen=True)
class RunConfig:
    """Everything a run depends on; recorded in meta.txt where applicable."""

    command: str
    input: str | None = None
    out: str | None = None
    tau: float | None = None
    centrality: str = "pagerank"
    damping: float = cent.DEFAULT_DAMPING
    tol: float = cent.DEFAULT_TOL
    max_iter: int = cent.DEFAULT_MAX_ITER
    seed: int = 42
    top_percent: float = 20.0
    cap_betweenness: int = cent.DEFAULT_BETWEENNESS_CAP
    cap_reconstruction: int = DEFAULT_RECONSTRUCT_CAP

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        fields = {
            name: getattr(args, name)
            for name in cls.__dataclass_fields__
            if hasattr(args, name)
        }
        return cls(**fields)

    def usage_error(self) -> str | None:
        """Validate before any real work (or memory) happens."""
        if self.tau is not None and not 0.0 < self.tau <= 1.0:
            return f"--tau must lie in (0, 1], got {self.tau}"
        if not 0.0 < self.top_percent <= 100.0:
            return f"--top-percent must lie in (0, 100], got {self.top_percent}"
        return None


def _stats_line(pairs: list[tuple[str, object]]) -> str:
    return " ".join(f"{k}={v}" for k, v in pairs)


def _fmt(x: float) -> str:
    return repr(float(x))


def _compute_centrality(g, cfg: RunConfig) -> cent.NodeCentrality:
    if cfg.centrality == "pagerank":
        return cent.pagerank(g, cfg.damping, cfg.tol, cfg.max_iter)
    if cfg.centrality == "degree":
        return cent.degree_centrality(g)
    if cfg.centrality == "eigenvector":
        return cent.eigenvector_centrality(g, cfg.tol)
    if cfg.centrality == "betweenness":
        return cent.betweenness_centrality(g, cap=cfg.cap_betweenness)
    raise ValueError(f"unknown centrality kind {cfg.centrality!r}")


def cmd_lossless(args) -> int:
    cfg = RunConfig.from_args(args)
    t0 = time.perf_counter()
    loaded = load_edge_list(cfg.input)
    g = loaded.graph
    s = lossless.summarize(g, seed=cfg.seed)
    meta = {
        "algorithm": "lossless-clique-is",
        "n": g.n,
        "m": g.m,
        "avg_degree": _fmt(2.0 * g.m / g.n) if g.n else _fmt(0.0),
        "supernodes": s.num_supernodes,
        "superedges": s.num_superedges,
        "rn": _fmt(evaluate.reduction_in_nodes(s)) if g.n else _fmt(0.0),
        "seed": cfg.seed,
    }
    out = Path(cfg.out)
    save_summary(s, out, meta)
    write_id_map(loaded, out / "node_ids.txt")
    wall = time.perf_counter() - t0
    print(
        _stats_line(
            [
                ("n", g.n),
                ("m", g.m),
                ("supernodes", s.num_supernodes),
                ("superedges", s.num_superedges),
                ("rn", meta["rn"]),
                ("wall_time_s", f"{wall:.3f}"),
            ]
        )
    )
    return EXIT_OK


def cmd_lossy(args) -> int:
    cfg = RunConfig.from_args(args)
    problem = cfg.usage_error()
    if problem:
        print(f"error: {problem}", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    loaded = load_edge_list(cfg.input)
    g = loaded.graph
    c = _compute_centrality(g, cfg)
    model = cent.build_weight_model(g, c)
    result = lossy.summarize_lossy(g, model, cfg.tau)
    s = result.summary
    meta = {
        "algorithm": "lossy-threshold-mst",
        "n": g.n,
        "m": g.m,
        "supernodes": s.num_supernodes,
        "superedges": s.num_superedges,
        "rn": _fmt(evaluate.reduction_in_nodes(s)),
        "tau": _fmt(cfg.tau),
        "utility": _fmt(result.utility),
        "prefix_length": result.prefix_length,
        "mst_size": result.num_candidates,
        "centrality": cfg.centrality,
        "damping": _fmt(cfg.damping),
        "tol": _fmt(cfg.tol),
        "max_iter": cfg.max_iter,
        "tie_break": lossy.TIE_BREAK_RULE,
        "seed": cfg.seed,
    }
    out = Path(cfg.out)
    save_summary(s, out, meta)
    write_id_map(loaded, out / "node_ids.txt")
    wall = time.perf_counter() - t0
    print(
        _stats_line(
            [
                ("n", g.n),
                ("m", g.m),
                ("supernodes", s.num_supernodes),
                ("superedges", s.num_superedges),
                ("rn", meta["rn"]),
                ("tau", meta["tau"]),
                ("utility", meta["utility"]),
                ("prefix_length", result.prefix_length),
                ("wall_time_s", f"{wall:.3f}"),
            ]
        )
    )
    return EXIT_OK


def _emit(lines: list[str], outdir: str | None, filename: str) -> None:
    text = "".join(line + "\n" for line in lines)
    sys.stdout.write(text)
    if outdir:
        out = Path(outdir)
        out.mkdir(parents=True, exist_ok=True)
        (out / filename).write_text(text, encoding="ascii")


def cmd_query(args) -> int:
    s = load_summary(args.summary)
    if args.query == "triangles":
        report = queries.count_triangles(s)
        _emit(
            [f"{report.count_a} {report.count_b} {report.count_c} {report.total}"],
            args.out,
            "triangles.txt",
        )
    elif args.query == "pagerank":
        pr = queries.pagerank_on_summary(s, args.damping, args.tol, args.max_iter)
        lines = [f"{u} {x!r}" for u, x in enumerate(pr.node_scores.tolist())]
        _emit(lines, args.out, "pagerank.txt")
    elif args.query == "sssp":
        if args.u is None or args.v is None:
            print("error: sssp needs node ids u and v", file=sys.stderr)
            return EXIT_USAGE
        d = queries.shortest_path_length(s, args.u, args.v)
        text = "inf" if math.isinf(d) else str(int(d))
        _emit([f"{args.u} {args.v} {text}"], args.out, "distance.txt")
    else:  # unreachable, argparse restricts choices
        return EXIT_USAGE
    return EXIT_OK


def cmd_eval(args) -> int:
    cfg = RunConfig.from_args(args)
    problem = cfg.usage_error()
    if problem:
        print(f"error: {problem}", file=sys.stderr)
        return EXIT_USAGE
    s = load_summary(args.summary)
    if args.metric == "rn":
        lines = [f"rn {evaluate.reduction_in_nodes(s)!r}"]
        _emit(lines, args.out, "rn.txt")
        return EXIT_OK
    if args.input is None:
        print(f"error: --metric {args.metric} needs --input", file=sys.stderr)
        return EXIT_USAGE
    if args.metric == "app-utility":
        loaded = load_edge_list(args.input)
        c = _compute_centrality(loaded.graph, cfg)
        report = evaluate.app_utility(s, c, cfg.top_percent)
        lines = [
            f"centrality {report.centrality_kind}",
            f"t_percent {report.t_percent!r}",
            f"v_t_size {report.v_t_size}",
            f"app_utility {report.app_utility!r}",
        ]
        _emit(lines, args.out, "app_utility.txt")
        return EXIT_OK
    if args.metric == "verify-lossless":
        loaded = load_edge_list(args.input)
        report = evaluate.verify_lossless(
            loaded.graph, s, max_edges=args.cap_reconstruction
        )
        lines = [f"lossless {str(report.lossless).lower()}"]
        for u, v in report.missing_edges:
            lines.append(f"missing {u} {v}")
        for u, v in report.spurious_edges:
            lines.append(f"spurious {u} {v}")
        _emit(lines, args.out, "verify_lossless.txt")
        return EXIT_OK if report.lossless else EXIT_INTERNAL
    return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphsum",
        description="Graph summarization toolkit: lossless and lossy summaries, "
        "summary-native queries, evaluation metrics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_centrality_flags(p):
        p.add_argument(
            "--centrality",
            choices=cent.CENTRALITY_KINDS,
            default="pagerank",
            help="node centrality weighting the edges",
        )
        p.add_argument("--damping", type=float, default=cent.DEFAULT_DAMPING)
        p.add_argument("--tol", type=float, default=cent.DEFAULT_TOL)
        p.add_argument("--max-iter", type=int, default=cent.DEFAULT_MAX_ITER)
        p.add_argument(
            "--cap-betweenness",
            type=int,
            default=cent.DEFAULT_BETWEENNESS_CAP,
            help="largest n accepted by exact betweenness",
        )

    p = sub.add_parser("lossless", help="optimal lossless summary")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--out", required=True, help="summary output directory")
    p.add_argument("--seed", type=int, default=42, help="hash seed")
    p.set_defaults(func=cmd_lossless)

    p = sub.add_parser("lossy", help="utility-threshold summary")
    p.add_argument("--input", required=True, help="edge-list file")
    p.add_argument("--out", required=True, help="summary output directory")
    p.add_argument("--tau", type=float, required=True, help="utility threshold in (0,1]")
    add_centrality_flags(p)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_lossy)

    p = sub.add_parser("query", help="query a saved lossless summary")
    p.add_argument("--summary", required=True, help="summary directory")
    p.add_argument("query", choices=["triangles", "pagerank", "sssp"])
    p.add_argument("u", type=int, nargs="?", help="source node (sssp)")
    p.add_argument("v", type=int, nargs="?", help="target node (sssp)")
    p.add_argument("--damping", type=float, default=cent.DEFAULT_DAMPING)
    p.add_argument("--tol", type=float, default=cent.DEFAULT_TOL)
    p.add_argument("--max-iter", type=int, default=cent.DEFAULT_MAX_ITER)
    p.add_argument("--out", help="also write the report into this directory")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("eval", help="evaluate a saved summary")
    p.add_argument("--summary", required=True, help="summary directory")
    p.add_argument("--metric", required=True, choices=["rn", "app-utility", "verify-lossless"])
    p.add_argument("--input", help="original edge-list file (app-utility, verify-lossless)")
    p.add_argument("--top-percent", type=float, default=20.0)
    add_centrality_flags(p)
    p.add_argument(
        "--cap-reconstruction",
        type=int,
        default=DEFAULT_RECONSTRUCT_CAP,
        help="largest edge count verify-lossless will materialize",
    )
    p.add_argument("--out", help="also write the report into this directory")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedSummaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ModelUndefinedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphSumError, OSError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
