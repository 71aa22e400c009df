"""Command-line harness.

Subcommands:
    run <config> [--scale paper|desk]      execute an experiment grid
    analyze <bundle> [--control PSOX] [--alpha 0.05] [--paper-format]
    plot <bundle> [--problems 4,5,7,11] [--output DIR]
    sweep <config> [--scale paper|desk]    mutation-rate sweep (PSOX-GM)
    list-benchmarks                        registry overview

Worker count comes from the config's ``workers`` key, overridden by the
RCGA_WORKERS environment variable. Exit status is 0 on success, 2 on bad
configs/usage, 1 on runtime failure.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import benchmarks
from .experiment import (
    ConfigError,
    analyze,
    format_sci,
    mutation_sweep,
    plot_convergence,
    run_experiment,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rcga", description="Real-coded GA benchmark harness")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute all runs of an experiment config")
    p_run.add_argument("config", type=Path)
    p_run.add_argument("--scale", choices=["paper", "desk"], help="override the config's scale preset")
    p_run.add_argument("--output-dir", type=Path, help="override the bundle directory")

    p_an = sub.add_parser("analyze", help="summaries plus Kruskal-Wallis and Dunnett tables")
    p_an.add_argument("bundle", type=Path)
    p_an.add_argument("--control", default="PSOX", help="control operator for the post-hoc test")
    p_an.add_argument("--alpha", type=float, default=None, help="significance level (default: manifest)")
    p_an.add_argument("--paper-format", action="store_true", help="2 significant digits in the CSVs")

    p_plot = sub.add_parser("plot", help="convergence panels (SVG) from a bundle")
    p_plot.add_argument("bundle", type=Path)
    p_plot.add_argument("--problems", help="comma-separated problem ids (default: all in bundle)")
    p_plot.add_argument("--output", type=Path, help="directory for the SVG files")

    p_sweep = sub.add_parser("sweep", help="mutation-rate sweep with the PSOX-GM configuration")
    p_sweep.add_argument("config", type=Path)
    p_sweep.add_argument("--scale", choices=["paper", "desk"])
    p_sweep.add_argument("--output-dir", type=Path)

    sub.add_parser("list-benchmarks", help="show the benchmark registry")
    return parser


def _overrides(args) -> dict:
    out = {}
    if getattr(args, "scale", None):
        out["scale"] = args.scale
    if getattr(args, "output_dir", None):
        out["output_dir"] = str(args.output_dir)
    return out


def _cmd_run(args) -> int:
    bundle = run_experiment(args.config, _overrides(args))
    print(f"bundle written to {bundle}")
    return 0


def _cmd_analyze(args) -> int:
    sig = 2 if args.paper_format else 6
    analyses = analyze(args.bundle, control_label=args.control, alpha=args.alpha, sig_figs=sig)
    print(f"wrote {args.bundle}/summary.csv and {args.bundle}/dunnett.csv")
    print(
        "dunnett orientation: one-sided, '+' = treatment objective significantly "
        f"larger than {args.control}'s (control better under minimization)"
    )
    for a in analyses:
        if a.report is None:
            print(f"problem {a.problem} [{a.mutation}]: tests skipped (insufficient groups or runs)")
            continue
        print(
            f"problem {a.problem} [{a.mutation}]: KW H={a.report.kw_h:.4f} "
            f"p={a.report.kw_p:.4f} {a.report.kw_flag}"
        )
    return 0


def _cmd_plot(args) -> int:
    problems = None
    if args.problems:
        problems = [int(tok) for tok in args.problems.split(",") if tok.strip()]
    written = plot_convergence(args.bundle, problems=problems, output=args.output)
    for path in written:
        print(path)
    return 0


def _cmd_sweep(args) -> int:
    bundle = mutation_sweep(args.config, _overrides(args))
    print(f"sweep written to {bundle}")
    return 0


def _cmd_list_benchmarks() -> int:
    print(f"{'id':>3}  {'name':<34} {'bounds':<20} {'f* (n=30)':<14} {'landscape'}")
    for pid in sorted(benchmarks.REGISTRY):
        e = benchmarks.REGISTRY[pid]
        spec = benchmarks.benchmark_spec(pid)
        tags = "multimodal" if e.multimodal else "unimodal"
        if e.noisy:
            tags += ", noisy"
        bounds = f"[{e.lower:g}, {e.upper:g}]"
        fstar = format_sci(spec.optimum_value, 3)
        if e.noisy:
            fstar += " (exp.)"
        print(f"{pid:>3}  {e.name:<34} {bounds:<20} {fstar:<14} {tags}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "plot":
            return _cmd_plot(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "list-benchmarks":
            return _cmd_list_benchmarks()
        return 2
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
