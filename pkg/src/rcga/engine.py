"""Generational GA loop with a persistent per-slot best archive.

The archive gives PSOX its inter-generational reach: slot i's personal best
survives wholesale replacement, so a child can inherit genes from any earlier
occupant of another slot, and from the global best found so far. The archive
is maintained for every crossover kind (it also supplies the best-so-far
trace) but only PSOX reads it during variation.

Draw order within one offspring is fixed: crossover-rate decision, tournament
draws, operator draws, mutation draws. Identical config and seed therefore
replay bit-identical runs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import benchmarks
from .core import ObjectiveSpec, RngStream, make_rng, uniform_vector
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
    tournament_index,
)


@dataclass
class SwarmMemory:
    """Per-slot personal bests plus the global best, kept across generations."""

    pbest_positions: np.ndarray  # (pop, n)
    pbest_fitness: np.ndarray  # (pop,)
    gbest_position: np.ndarray  # (n,)
    gbest_fitness: float

    @classmethod
    def from_population(cls, positions: np.ndarray, fitness: np.ndarray) -> "SwarmMemory":
        g = int(np.argmin(fitness))
        return cls(positions.copy(), fitness.copy(), positions[g].copy(), float(fitness[g]))

    def observe(self, positions: np.ndarray, fitness: np.ndarray) -> None:
        """Fold a freshly evaluated population into the archive."""
        improved = fitness < self.pbest_fitness
        self.pbest_positions[improved] = positions[improved]
        self.pbest_fitness[improved] = fitness[improved]
        g = int(np.argmin(self.pbest_fitness))
        if self.pbest_fitness[g] < self.gbest_fitness:
            self.gbest_fitness = float(self.pbest_fitness[g])
            self.gbest_position = self.pbest_positions[g].copy()


@dataclass(frozen=True)
class GaConfig:
    """One run's full parameterization. Defaults mirror the benchmark study:
    population 300, 1000 generations, tournament size 3, one elite."""

    objective: ObjectiveSpec
    population_size: int = 300
    generations: int = 1000
    crossover: CrossoverConfig = field(default_factory=CrossoverConfig)
    mutation: MutationConfig = field(default_factory=MutationConfig)
    selection_k: int = 3
    seed: int = 0
    elitism: int = 1

    def __post_init__(self):
        if self.population_size < 1:
            raise ValueError("population_size must be positive")
        if self.crossover.kind is CrossoverKind.PSOX and self.population_size < 2:
            raise ValueError("PSOX needs a population of at least 2 (partner slot must differ)")
        if self.generations < 0:
            raise ValueError("generations must be non-negative")
        if self.selection_k < 1:
            raise ValueError("selection_k must be at least 1")
        if not 0 <= self.elitism <= self.population_size:
            raise ValueError("elitism must lie in [0, population_size]")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass
class GaState:
    """Single-owner mutable run state; one RNG stream per state."""

    config: GaConfig
    rng: RngStream
    positions: np.ndarray  # (pop, n)
    fitness: np.ndarray  # (pop,)
    memory: SwarmMemory
    generation: int = 0
    evaluations: int = 0


@dataclass
class RunTrace:
    """Best-so-far objective after each generation, plus the final best."""

    best_per_generation: np.ndarray
    final_best_position: np.ndarray
    final_best_fitness: float
    evaluations: int


def _evaluate(cfg: GaConfig, X: np.ndarray, rng: RngStream) -> np.ndarray:
    return benchmarks.batch_eval(cfg.objective.problem_id, X, rng=rng)


def init_state(cfg: GaConfig) -> GaState:
    """Uniform-random evaluated population; archive seeded from it."""
    rng = make_rng(cfg.seed)
    bounds = cfg.objective.bounds
    positions = np.empty((cfg.population_size, bounds.dimension))
    for i in range(cfg.population_size):
        positions[i] = uniform_vector(bounds, rng)
    fitness = _evaluate(cfg, positions, rng)
    memory = SwarmMemory.from_population(positions, fitness)
    return GaState(
        config=cfg,
        rng=rng,
        positions=positions,
        fitness=fitness,
        memory=memory,
        generation=0,
        evaluations=cfg.population_size,
    )


def _mutate(child, cfg: GaConfig, gen: int, rng: RngStream) -> np.ndarray:
    mcfg = cfg.mutation
    if mcfg.individual_rate < 1.0 and rng.random() >= mcfg.individual_rate:
        return child
    bounds = cfg.objective.bounds
    if mcfg.kind is MutationKind.GM:
        return gaussian_mutation(child, bounds, mcfg, rng)
    return nonuniform_mutation(child, bounds, gen, max(cfg.generations, 1), mcfg, rng)


def step_generation(state: GaState, psox_audit: Optional[Callable[[int, int], None]] = None) -> GaState:
    """Produce one full offspring generation and fold it into the state.

    Each offspring: tournament selection, crossover with probability
    ``crossover_rate`` (PSOX pairs the selected individual with another
    slot's personal best and the global best), clamp, mutation, evaluation.
    Replacement is wholesale with the configured elite count carried over;
    the archive is updated last.

    ``psox_audit`` receives (parent_slot, partner_slot) for every PSOX child.
    """
    cfg = state.config
    rng = state.rng
    xo = cfg.crossover
    pop = cfg.population_size
    bounds = cfg.objective.bounds
    lower, upper = bounds.lower, bounds.upper
    next_gen = state.generation + 1

    children = np.empty_like(state.positions)
    filled = 0
    while filled < pop:
        if rng.random() >= xo.crossover_rate:
            i = tournament_index(state.fitness, cfg.selection_k, rng)
            raw_children = (state.positions[i],)
        elif xo.kind is CrossoverKind.PSOX:
            i = tournament_index(state.fitness, cfg.selection_k, rng)
            j = int(rng.integers(0, pop - 1))
            if j >= i:
                j += 1
            if psox_audit is not None:
                psox_audit(i, j)
            child = psox_crossover(
                state.positions[i],
                state.memory.pbest_positions[j],
                state.memory.gbest_position,
                xo,
                rng,
            )
            raw_children = (child,)
        else:
            p1 = state.positions[tournament_index(state.fitness, cfg.selection_k, rng)]
            p2 = state.positions[tournament_index(state.fitness, cfg.selection_k, rng)]
            if xo.kind is CrossoverKind.AX:
                raw_children = (ax_crossover(p1, p2, xo.ax_alpha),)
            elif xo.kind is CrossoverKind.FX:
                raw_children = (fx_crossover(p1, p2, rng),)
            elif xo.kind is CrossoverKind.BLX_ALPHA:
                raw_children = (blx_alpha_crossover(p1, p2, xo.blx_alpha, rng),)
            elif xo.kind is CrossoverKind.SBX:
                raw_children = sbx_crossover(p1, p2, xo.sbx_eta, rng)
            else:
                raw_children = laplace_crossover(p1, p2, xo.laplace_a, xo.laplace_b, rng)
        for child in raw_children:
            if filled == pop:
                break
            child = np.clip(child, lower, upper)
            children[filled] = _mutate(child, cfg, next_gen, rng)
            filled += 1

    fitness = _evaluate(cfg, children, rng)
    state.evaluations += pop

    if cfg.elitism > 0:
        e = cfg.elitism
        elite = np.argsort(state.fitness, kind="stable")[:e]
        doomed = np.argsort(fitness, kind="stable")[pop - e :]
        children[doomed] = state.positions[elite]
        fitness[doomed] = state.fitness[elite]

    state.positions = children
    state.fitness = fitness
    state.memory.observe(children, fitness)
    state.generation = next_gen
    return state


def run_ga(
    cfg: GaConfig,
    on_generation: Optional[Callable[[GaState], None]] = None,
    psox_audit: Optional[Callable[[int, int], None]] = None,
) -> RunTrace:
    """Full run: init plus ``generations`` steps; returns the best-so-far trace."""
    state = init_state(cfg)
    best = np.empty(cfg.generations)
    for t in range(cfg.generations):
        state = step_generation(state, psox_audit=psox_audit)
        best[t] = state.memory.gbest_fitness
        if on_generation is not None:
            on_generation(state)
    return RunTrace(
        best_per_generation=best,
        final_best_position=state.memory.gbest_position.copy(),
        final_best_fitness=state.memory.gbest_fitness,
        evaluations=state.evaluations,
    )
