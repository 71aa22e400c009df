"""Experiment orchestration: config files, parallel runs, bundles, analysis.

A bundle directory holds one trace CSV per cell (problem x operator x
mutation, or problem x rate for sweeps) plus a ``manifest.json``. Per-run
seeds are ``master_seed + cell_index * runs + run_index``, so re-running a
config reproduces every trace byte for byte regardless of worker scheduling.

Config files are flat ``key = value`` text. The ``mutation_rate`` key uses
chromosome-level semantics: a rate of m perturbs an expected m genes per
child (per-gene probability m/dimension). A flat per-gene 0.1 on 30 genes
would disturb 96% of offspring, which measurably destroys the elite-lineage
convergence the operator comparisons rely on; see README.
"""
from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import benchmarks, svgplot
from .core import make_rng
from .engine import GaConfig, RunTrace, run_ga
from .operators import CrossoverConfig, CrossoverKind, MutationConfig, MutationKind
from .stats import FLAG_NOT_RUN, SampleGroup, StatReport, build_report

MANIFEST_NAME = "manifest.json"

SCALE_PRESETS = {
    "paper": (300, 1000, 30),  # population, generations, runs
    "desk": (100, 300, 10),
}

OPERATOR_ALIASES = {
    "AX": CrossoverKind.AX,
    "FX": CrossoverKind.FX,
    "BLX_ALPHA": CrossoverKind.BLX_ALPHA,
    "BLX-ALPHA": CrossoverKind.BLX_ALPHA,
    "BLX": CrossoverKind.BLX_ALPHA,
    "SBX": CrossoverKind.SBX,
    "LAPLACE": CrossoverKind.LAPLACE,
    "LX": CrossoverKind.LAPLACE,
    "PSOX": CrossoverKind.PSOX,
}


class ConfigError(ValueError):
    """Config problem with a ``file: field: message`` diagnostic."""


@dataclass(frozen=True)
class ExperimentConfig:
    """Parsed experiment description (one config file)."""

    name: str
    problems: tuple[int, ...]
    dimension: int = 30
    operators: tuple[CrossoverKind, ...] = tuple(CrossoverKind)
    mutations: tuple[MutationKind, ...] = (MutationKind.NUM, MutationKind.GM)
    population_size: int = 300
    generations: int = 1000
    runs: int = 30
    crossover_rate: float = 0.8
    mutation_rate: float = 0.1
    mutation_rates: tuple[float, ...] = (0.1, 0.4, 0.7, 1.0)
    selection_k: int = 3
    elitism: int = 1
    seed: int = 1
    alpha: float = 0.05
    mc_samples: int = 100_000
    workers: int = 0  # 0 = logical CPU count
    output_dir: Path = Path("results")
    ax_alpha: float = 0.5
    blx_alpha: float = 0.5
    sbx_eta: float = 2.0
    laplace_a: float = 0.0
    laplace_b: float = 0.15
    psox_w: float = 0.6
    psox_c1: float = 1.5
    psox_c2: float = 1.5
    psox_per_gene_draws: bool = True
    gm_sigma_fraction: float = 0.05
    num_b: float = 5.0


def format_sci(value: float, sig: int = 6) -> str:
    """Scientific notation with ``sig`` significant digits, e.g. 1.23457E+05."""
    if not math.isfinite(value):
        return str(value).upper()
    return f"{value:.{sig - 1}E}"


# ---------------------------------------------------------------------------
# Config parsing


def _parse_problems(raw: str) -> tuple[int, ...]:
    """Accept ids, id ranges ("1-15") and registry names, comma-separated."""
    out: list[int] = []
    for token in raw.split(","):
        token = token.strip()
        if not token:
            continue
        parts = token.split("-")
        if len(parts) == 2 and all(p.strip().isdigit() for p in parts):
            out.extend(range(int(parts[0]), int(parts[1]) + 1))
        else:
            out.append(benchmarks.resolve_problem_id(token))
    if not out:
        raise ValueError("no problem ids given")
    for pid in out:
        if pid not in benchmarks.REGISTRY:
            raise ValueError(f"unknown problem id {pid}")
    return tuple(out)


def _parse_operators(raw: str) -> tuple[CrossoverKind, ...]:
    kinds = []
    for token in raw.split(","):
        key = token.strip().upper()
        if key not in OPERATOR_ALIASES:
            raise ValueError(f"unknown operator {token.strip()!r}")
        kinds.append(OPERATOR_ALIASES[key])
    return tuple(kinds)


def _parse_mutations(raw: str) -> tuple[MutationKind, ...]:
    kinds = []
    for token in raw.split(","):
        key = token.strip().upper()
        try:
            kinds.append(MutationKind[key])
        except KeyError:
            raise ValueError(f"unknown mutation {token.strip()!r}") from None
    return tuple(kinds)


def _parse_rates(raw: str) -> tuple[float, ...]:
    rates = tuple(float(tok) for tok in raw.split(",") if tok.strip())
    if not rates:
        raise ValueError("no rates given")
    for r in rates:
        if not 0.0 <= r <= 1.0:
            raise ValueError(f"rate {r} outside [0, 1]")
    return rates


def _parse_bool(raw: str) -> bool:
    low = raw.strip().lower()
    if low in ("true", "yes", "1", "on"):
        return True
    if low in ("false", "no", "0", "off"):
        return False
    raise ValueError(f"expected a boolean, got {raw!r}")


_INT_KEYS = {"dimension", "population_size", "generations", "runs", "selection_k", "elitism", "seed", "mc_samples", "workers"}
_FLOAT_KEYS = {
    "crossover_rate", "mutation_rate", "alpha",
    "ax_alpha", "blx_alpha", "sbx_eta", "laplace_a", "laplace_b",
    "psox_w", "psox_c1", "psox_c2", "gm_sigma_fraction", "num_b",
}


def parse_config(
    path: Path | str,
    overrides: Optional[dict] = None,
    defaults: Optional[dict] = None,
) -> ExperimentConfig:
    """Read a flat key=value config file into an ExperimentConfig.

    ``defaults`` fill keys the file leaves unset; ``overrides`` (e.g. from CLI
    flags) are applied after the file. A ``scale`` entry expands to its
    population/generations/runs preset before explicit keys are applied.
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"{path}: config file not found")
    raw: dict[str, str] = {k.lower(): str(v) for k, v in (defaults or {}).items()}
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {stripped!r}")
        key, _, value = stripped.partition("=")
        raw[key.strip().lower()] = value.split("#", 1)[0].strip()
    if overrides:
        raw.update({k.lower(): str(v) for k, v in overrides.items() if v is not None})

    fields: dict = {"name": raw.pop("name", path.stem)}

    scale = raw.pop("scale", None)
    if scale is not None:
        if scale not in SCALE_PRESETS:
            raise ConfigError(f"{path}: scale: must be one of {sorted(SCALE_PRESETS)}, got {scale!r}")
        fields["population_size"], fields["generations"], fields["runs"] = SCALE_PRESETS[scale]

    def fail(key: str, message: str):
        raise ConfigError(f"{path}: {key}: {message}")

    for key, value in raw.items():
        try:
            if key == "problems":
                fields["problems"] = _parse_problems(value)
            elif key == "operators":
                fields["operators"] = _parse_operators(value)
            elif key == "mutations":
                fields["mutations"] = _parse_mutations(value)
            elif key == "mutation_rates":
                fields["mutation_rates"] = _parse_rates(value)
            elif key == "output_dir":
                fields["output_dir"] = Path(value)
            elif key == "psox_per_gene_draws":
                fields["psox_per_gene_draws"] = _parse_bool(value)
            elif key in _INT_KEYS:
                fields[key] = int(value)
            elif key in _FLOAT_KEYS:
                fields[key] = float(value)
            else:
                fail(key, "unknown key")
        except ConfigError:
            raise
        except (TypeError, ValueError, KeyError) as exc:
            fail(key, str(exc.args[0]) if exc.args else str(exc))

    if "problems" not in fields:
        fail("problems", "required key is missing")
    cfg = ExperimentConfig(**fields)

    if cfg.runs < 1:
        fail("runs", "must be >= 1")
    if cfg.population_size < 2:
        fail("population_size", "must be >= 2")
    if cfg.generations < 1:
        fail("generations", "must be >= 1")
    if cfg.dimension < 2:
        fail("dimension", "must be >= 2 (chained benchmarks need two genes)")
    if not 0.0 <= cfg.crossover_rate <= 1.0:
        fail("crossover_rate", "must lie in [0, 1]")
    if not 0.0 <= cfg.mutation_rate <= 1.0:
        fail("mutation_rate", "must lie in [0, 1]")
    if not 0.0 < cfg.alpha < 1.0:
        fail("alpha", "must lie in (0, 1)")
    if cfg.seed < 0:
        fail("seed", "must be non-negative")
    if not cfg.operators:
        fail("operators", "must list at least one operator")
    if not cfg.mutations:
        fail("mutations", "must list at least one mutation")
    try:  # surface operator-parameter violations as config diagnostics
        for kind in cfg.operators:
            _crossover_config(cfg, kind)
        MutationConfig(
            kind=cfg.mutations[0],
            per_gene_rate=cfg.mutation_rate / cfg.dimension,
            gm_sigma_fraction=cfg.gm_sigma_fraction,
            num_b=cfg.num_b,
        )
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return cfg


# ---------------------------------------------------------------------------
# Cell construction and execution


@dataclass(frozen=True)
class Cell:
    """One (problem, operator, mutation[, rate]) combination of an experiment."""

    index: int
    problem: int
    operator: CrossoverKind
    mutation: MutationKind
    rate: Optional[float] = None  # set for sweep bundles

    @property
    def label(self) -> str:
        base = f"{self.operator.value}-{self.mutation.value}"
        if self.rate is not None:
            base += f"@{self.rate:g}"
        return base

    @property
    def filename(self) -> str:
        stem = f"trace_p{self.problem:02d}_{self.operator.value}_{self.mutation.value}"
        if self.rate is not None:
            stem += f"_rate{self.rate:g}"
        return stem + ".csv"


def _crossover_config(cfg: ExperimentConfig, kind: CrossoverKind) -> CrossoverConfig:
    return CrossoverConfig(
        kind=kind,
        ax_alpha=cfg.ax_alpha,
        blx_alpha=cfg.blx_alpha,
        sbx_eta=cfg.sbx_eta,
        laplace_a=cfg.laplace_a,
        laplace_b=cfg.laplace_b,
        psox_w=cfg.psox_w,
        psox_c1=cfg.psox_c1,
        psox_c2=cfg.psox_c2,
        psox_per_gene_draws=cfg.psox_per_gene_draws,
        crossover_rate=cfg.crossover_rate,
    )


def ga_config_for(cfg: ExperimentConfig, cell: Cell, run_index: int) -> GaConfig:
    """Assemble the engine config for one run of one cell.

    The study-level mutation rate is chromosome-level: a rate of m gives each
    child an expected m perturbed genes (per-gene probability m/dimension).
    """
    rate = cfg.mutation_rate if cell.rate is None else cell.rate
    mutation = MutationConfig(
        kind=cell.mutation,
        per_gene_rate=rate / cfg.dimension,
        gm_sigma_fraction=cfg.gm_sigma_fraction,
        num_b=cfg.num_b,
    )
    return GaConfig(
        objective=benchmarks.benchmark_spec(cell.problem, dimension=cfg.dimension),
        population_size=cfg.population_size,
        generations=cfg.generations,
        crossover=_crossover_config(cfg, cell.operator),
        mutation=mutation,
        selection_k=cfg.selection_k,
        seed=cfg.seed + cell.index * cfg.runs + run_index,
        elitism=cfg.elitism,
    )


def _execute_run(ga_cfg: GaConfig) -> RunTrace:
    return run_ga(ga_cfg)


def resolve_workers(cfg_workers: int) -> int:
    env = os.environ.get("RCGA_WORKERS")
    if env:
        return max(1, int(env))
    if cfg_workers > 0:
        return cfg_workers
    return os.cpu_count() or 1


def _run_cells(cfg: ExperimentConfig, cells: Sequence[Cell]):
    """Execute runs x cells; returns {cell_index: list[RunTrace] | error str}."""
    workers = resolve_workers(cfg.workers)
    jobs = [(cell, r) for cell in cells for r in range(cfg.runs)]
    results: dict[int, dict[int, RunTrace]] = {c.index: {} for c in cells}
    errors: dict[int, str] = {}

    if workers == 1 or len(jobs) == 1:
        for cell, r in jobs:
            try:
                results[cell.index][r] = _execute_run(ga_config_for(cfg, cell, r))
            except Exception as exc:  # noqa: BLE001 - cell isolation
                errors.setdefault(cell.index, f"run {r + 1}: {exc}")
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {
                pool.submit(_execute_run, ga_config_for(cfg, cell, r)): (cell.index, r)
                for cell, r in jobs
            }
            for future, (cell_index, r) in futures.items():
                try:
                    results[cell_index][r] = future.result()
                except Exception as exc:  # noqa: BLE001
                    errors.setdefault(cell_index, f"run {r + 1}: {exc}")

    traces = {}
    for cell in cells:
        if cell.index in errors:
            traces[cell.index] = errors[cell.index]
        else:
            per_run = results[cell.index]
            traces[cell.index] = [per_run[r] for r in range(cfg.runs)]
    return traces


def _write_trace_csv(path: Path, traces: Sequence[RunTrace]) -> None:
    lines = ["run,generation,best_so_far"]
    for run_index, trace in enumerate(traces, start=1):
        for gen, value in enumerate(trace.best_per_generation, start=1):
            lines.append(f"{run_index},{gen},{format_sci(value)}")
    path.write_text("\n".join(lines) + "\n")


def read_trace_csv(path: Path) -> dict[int, np.ndarray]:
    """Per-run best-so-far curves, keyed by 1-based run id."""
    runs: dict[int, list[float]] = {}
    with open(path) as fh:
        header = fh.readline().strip()
        if header != "run,generation,best_so_far":
            raise ValueError(f"{path}: unexpected trace header {header!r}")
        for line in fh:
            if not line.strip():
                continue
            run_s, _, value_s = line.strip().split(",")
            runs.setdefault(int(run_s), []).append(float(value_s))
    return {r: np.asarray(v) for r, v in runs.items()}


def _manifest_payload(cfg: ExperimentConfig, kind: str, cells: Sequence[Cell], statuses: dict[int, str]) -> dict:
    return {
        "format": "rcga-bundle-v1",
        "kind": kind,
        "name": cfg.name,
        "problems": list(cfg.problems),
        "operators": [k.value for k in cfg.operators],
        "mutations": [m.value for m in cfg.mutations],
        "mutation_rates": list(cfg.mutation_rates) if kind == "sweep" else None,
        "dimension": cfg.dimension,
        "population_size": cfg.population_size,
        "generations": cfg.generations,
        "runs": cfg.runs,
        "crossover_rate": cfg.crossover_rate,
        "mutation_rate": cfg.mutation_rate,
        "master_seed": cfg.seed,
        "mc_seed": cfg.seed,
        "mc_samples": cfg.mc_samples,
        "alpha": cfg.alpha,
        "cells": [
            {
                "index": c.index,
                "problem": c.problem,
                "operator": c.operator.value,
                "mutation": c.mutation.value,
                "rate": c.rate,
                "label": c.label,
                "file": c.filename,
                "status": statuses[c.index],
            }
            for c in cells
        ],
    }


def _persist_bundle(cfg: ExperimentConfig, kind: str, cells: Sequence[Cell]) -> Path:
    out = cfg.output_dir
    out.mkdir(parents=True, exist_ok=True)
    traces = _run_cells(cfg, cells)
    statuses = {}
    for cell in cells:
        payload = traces[cell.index]
        if isinstance(payload, str):
            statuses[cell.index] = f"failed: {payload}"
        else:
            _write_trace_csv(out / cell.filename, payload)
            statuses[cell.index] = "ok"
    manifest = _manifest_payload(cfg, kind, cells, statuses)
    (out / MANIFEST_NAME).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return out


def experiment_cells(cfg: ExperimentConfig) -> list[Cell]:
    cells = []
    for problem in cfg.problems:
        for op in cfg.operators:
            for mut in cfg.mutations:
                cells.append(Cell(index=len(cells), problem=problem, operator=op, mutation=mut))
    return cells


def run_experiment(config_path: Path | str, overrides: Optional[dict] = None) -> Path:
    """Execute the full grid of a config file; returns the bundle directory."""
    cfg = parse_config(config_path, overrides)
    return _persist_bundle(cfg, "experiment", experiment_cells(cfg))


# ---------------------------------------------------------------------------
# Analysis


def load_manifest(bundle_dir: Path | str) -> dict:
    path = Path(bundle_dir) / MANIFEST_NAME
    if not path.is_file():
        raise FileNotFoundError(f"{bundle_dir}: bundle manifest not found")
    return json.loads(path.read_text())


def final_bests(bundle_dir: Path, cell: dict) -> Optional[np.ndarray]:
    """Final best objective per run for one ok cell, or None if unusable."""
    if cell["status"] != "ok":
        return None
    path = Path(bundle_dir) / cell["file"]
    if not path.is_file():
        return None
    runs = read_trace_csv(path)
    if not runs or any(curve.size == 0 for curve in runs.values()):
        return None
    return np.array([runs[r][-1] for r in sorted(runs)])


@dataclass
class ProblemAnalysis:
    problem: int
    mutation: str
    report: Optional[StatReport]
    groups: list[tuple[str, Optional[np.ndarray]]]  # (operator, finals or None)


def analyze(
    bundle_dir: Path | str,
    control_label: str = "PSOX",
    alpha: Optional[float] = None,
    sig_figs: int = 6,
) -> list[ProblemAnalysis]:
    """Build per-problem summary and post-hoc tables; writes summary.csv and dunnett.csv.

    Within each (problem, mutation) block the operators form the comparison
    groups; ``control_label`` names the control operator. Blocks lacking the
    control, with fewer than two usable groups, or with single-run cells keep
    their test columns dashed. Results depend only on the bundle contents,
    alpha and the manifest's Monte Carlo seed.
    """
    bundle_dir = Path(bundle_dir)
    manifest = load_manifest(bundle_dir)
    if alpha is None:
        alpha = float(manifest.get("alpha", 0.05))
    control_label = control_label.upper()
    if control_label in OPERATOR_ALIASES:
        control_label = OPERATOR_ALIASES[control_label].value

    cells = manifest["cells"]
    problems = sorted({c["problem"] for c in cells})
    mutations = list(dict.fromkeys(c["mutation"] for c in cells))
    operators = list(dict.fromkeys(c["operator"] for c in cells))

    analyses: list[ProblemAnalysis] = []
    block_index = 0
    for problem in problems:
        for mutation in mutations:
            block = [c for c in cells if c["problem"] == problem and c["mutation"] == mutation]
            if not block:
                continue
            by_op = {c["operator"]: final_bests(bundle_dir, c) for c in block}
            groups = [(op, by_op.get(op)) for op in operators if op in by_op]
            usable = [
                SampleGroup(f"{op}-{mutation}", vals)
                for op, vals in groups
                if vals is not None and vals.size >= 2
            ]
            report = None
            control_group = f"{control_label}-{mutation}"
            if len(usable) >= 2 and any(g.label == control_group for g in usable):
                rng = make_rng(int(manifest["mc_seed"]) + block_index)
                report = build_report(
                    usable,
                    control_group,
                    alpha,
                    rng,
                    mc_samples=int(manifest.get("mc_samples", 100_000)),
                )
            analyses.append(ProblemAnalysis(problem, mutation, report, groups))
            block_index += 1

    _write_summary_csv(bundle_dir / "summary.csv", analyses, sig_figs)
    _write_dunnett_csv(bundle_dir / "dunnett.csv", analyses, sig_figs)
    return analyses


def _write_summary_csv(path: Path, analyses: Sequence[ProblemAnalysis], sig_figs: int) -> None:
    lines = ["problem,operator,mutation,mean,std,kw_flag"]
    for a in analyses:
        kw_flag = a.report.kw_flag if a.report else FLAG_NOT_RUN
        summaries = {s.label: s for s in a.report.groups} if a.report else {}
        for op, vals in a.groups:
            label = f"{op}-{a.mutation}"
            if label in summaries:
                s = summaries[label]
                mean_s, std_s = format_sci(s.mean, sig_figs), format_sci(s.std, sig_figs)
            elif vals is not None and vals.size > 0:
                mean_s, std_s = format_sci(float(np.mean(vals)), sig_figs), (
                    format_sci(float(np.std(vals, ddof=1)), sig_figs) if vals.size > 1 else format_sci(0.0, sig_figs)
                )
            else:
                mean_s = std_s = "-"
            lines.append(f"{a.problem},{op},{a.mutation},{mean_s},{std_s},{kw_flag}")
    path.write_text("\n".join(lines) + "\n")


def _write_dunnett_csv(path: Path, analyses: Sequence[ProblemAnalysis], sig_figs: int) -> None:
    lines = ["problem,treatment,p_value,flag"]
    for a in analyses:
        if a.report is None:
            for op, _ in a.groups:
                label = f"{op}-{a.mutation}"
                lines.append(f"{a.problem},{label},-,-")
            continue
        for outcome in a.report.dunnett:
            p_s = "-" if outcome.p_value is None else format_sci(outcome.p_value, sig_figs)
            lines.append(f"{a.problem},{outcome.label},{p_s},{outcome.flag}")
    path.write_text("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Convergence plots


def plot_convergence(
    bundle_dir: Path | str,
    problems: Optional[Sequence[int]] = None,
    output: Optional[Path | str] = None,
) -> list[Path]:
    """One SVG panel per problem: mean best-so-far vs generation, +/-1 std band."""
    bundle_dir = Path(bundle_dir)
    manifest = load_manifest(bundle_dir)
    out_dir = Path(output) if output else bundle_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    available = sorted({c["problem"] for c in manifest["cells"]})
    wanted = list(problems) if problems else available

    written: list[Path] = []
    for problem in wanted:
        series = []
        for cell in manifest["cells"]:
            if cell["problem"] != problem or cell["status"] != "ok":
                continue
            runs = read_trace_csv(bundle_dir / cell["file"])
            if not runs:
                continue
            curves = np.vstack([runs[r] for r in sorted(runs)])
            gens = np.arange(1, curves.shape[1] + 1)
            mean = curves.mean(axis=0)
            std = curves.std(axis=0, ddof=1) if curves.shape[0] > 1 else np.zeros_like(mean)
            series.append(svgplot.Series(cell["label"], gens, mean, std))
        if not series:
            continue
        name = benchmarks.REGISTRY[problem].name
        svg = svgplot.render_panel(
            f"Problem {problem}: {name}", "generation", "best objective (mean of runs)", series
        )
        path = out_dir / f"convergence_p{problem:02d}.svg"
        path.write_text(svg)
        written.append(path)
    if not written:
        raise FileNotFoundError(f"{bundle_dir}: no usable traces for problems {wanted}")
    return written


# ---------------------------------------------------------------------------
# Mutation-rate sweep


SWEEP_DEFAULTS = {"problems": "4,5,7,11", "population_size": "100", "generations": "100"}


def sweep_cells(cfg: ExperimentConfig) -> list[Cell]:
    cells = []
    for problem in cfg.problems:
        for rate in cfg.mutation_rates:
            cells.append(
                Cell(index=len(cells), problem=problem, operator=CrossoverKind.PSOX,
                     mutation=MutationKind.GM, rate=rate)
            )
    return cells


def mutation_sweep(config_path: Path | str, overrides: Optional[dict] = None) -> Path:
    """PSOX-GM runs across the configured mutation rates; emits sweep.csv and panels."""
    cfg = parse_config(config_path, overrides, defaults=SWEEP_DEFAULTS)
    out = _persist_bundle(cfg, "sweep", sweep_cells(cfg))
    manifest = load_manifest(out)

    lines = ["rate,problem,mean,std"]
    per_problem: dict[int, list[tuple[float, float, float]]] = {}
    for cell in manifest["cells"]:
        finals = final_bests(out, cell)
        if finals is None:
            lines.append(f"{format_sci(cell['rate'])},{cell['problem']},-,-")
            continue
        mean = float(np.mean(finals))
        std = float(np.std(finals, ddof=1)) if finals.size > 1 else 0.0
        lines.append(f"{format_sci(cell['rate'])},{cell['problem']},{format_sci(mean)},{format_sci(std)}")
        per_problem.setdefault(cell["problem"], []).append((cell["rate"], mean, std))
    (out / "sweep.csv").write_text("\n".join(lines) + "\n")

    for problem, rows in per_problem.items():
        rows.sort()
        series = [svgplot.Series(
            "PSOX-GM",
            [r for r, _, _ in rows],
            [m for _, m, _ in rows],
            [s for _, _, s in rows],
        )]
        name = benchmarks.REGISTRY[problem].name
        svg = svgplot.render_panel(
            f"Problem {problem}: {name}", "mutation rate", "final best objective (mean)", series
        )
        (out / f"sweep_p{problem:02d}.svg").write_text(svg)
    return out
