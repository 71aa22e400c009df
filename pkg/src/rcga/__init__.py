"""Real-coded GA library with pluggable crossovers and a benchmark harness."""

from .core import (
    Bounds,
    Individual,
    ObjectiveSpec,
    RealVector,
    RngStream,
    clamp_to_bounds,
    make_rng,
    uniform_vector,
)
from .benchmarks import benchmark_eval, benchmark_spec, batch_eval, penalty_u
from .operators import (
    CrossoverConfig,
    CrossoverKind,
    MutationConfig,
    MutationKind,
    ax_crossover,
    blx_alpha_crossover,
    fx_crossover,
    gaussian_mutation,
    laplace_crossover,
    nonuniform_mutation,
    psox_crossover,
    sbx_crossover,
    tournament_select,
)
from .engine import GaConfig, GaState, RunTrace, SwarmMemory, init_state, run_ga, step_generation
from .stats import SampleGroup, StatReport, build_report, dunnett_one_sided, kruskal_wallis, rank_with_ties, summarize

__version__ = "0.1.0"
