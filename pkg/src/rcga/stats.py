"""Statistical comparison pipeline: summaries, Kruskal-Wallis omnibus test,
and a one-sided Dunnett post-hoc with a designated control group.

The Dunnett step tests, for each treatment, H1: treatment mean > control mean.
Under minimization a larger objective is worse, so a "+" flag reads "the
treatment is significantly worse than the control", i.e. the control operator
wins. Family-adjusted p-values come from seeded Monte Carlo sampling of the
max-statistic null distribution; both raw p and flag are always reported so
the orientation can be re-mapped by the reader.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.stats import chi2

from .core import RngStream

FLAG_SIGNIFICANT = "+"
FLAG_NOT_SIGNIFICANT = "~"
FLAG_NOT_RUN = "-"


@dataclass(frozen=True)
class SampleGroup:
    """Final best objective values of one configuration, one value per run."""

    label: str
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        if values.ndim != 1 or values.size == 0:
            raise ValueError(f"group {self.label!r}: values must be a nonempty 1-D array")
        if not np.all(np.isfinite(values)):
            raise ValueError(f"group {self.label!r}: values must be finite")


@dataclass(frozen=True)
class GroupSummary:
    label: str
    mean: float
    std: float


@dataclass(frozen=True)
class DunnettOutcome:
    label: str
    p_value: Optional[float]  # None when the omnibus test did not fire
    flag: str


@dataclass(frozen=True)
class StatReport:
    groups: tuple[GroupSummary, ...]
    control_label: str
    kw_h: float
    kw_p: float
    kw_flag: str
    dunnett: tuple[DunnettOutcome, ...]


def summarize(values) -> tuple[float, float]:
    """Arithmetic mean and sample standard deviation (n-1 divisor; 0 for n=1)."""
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        raise ValueError("summarize: empty input")
    mean = float(np.mean(v))
    std = float(np.std(v, ddof=1)) if v.size > 1 else 0.0
    return mean, std


def rank_with_ties(values) -> np.ndarray:
    """Midranks 1..N: tied values share the mean of their rank positions."""
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        raise ValueError("rank_with_ties: empty input")
    order = np.argsort(v, kind="stable")
    ranks = np.empty(v.size)
    i = 0
    while i < v.size:
        j = i
        while j + 1 < v.size and v[order[j + 1]] == v[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks


def kruskal_wallis(groups: Sequence[SampleGroup], alpha: float = 0.05) -> tuple[float, float, str]:
    """Tie-corrected H statistic with a chi-square upper-tail p (k-1 dof).

    A fully degenerate input (every value identical) is reported as no
    detectable difference: H = 0, p = 1.
    """
    if len(groups) < 2:
        raise ValueError("kruskal_wallis: need at least 2 groups")
    sizes = [g.values.size for g in groups]
    if min(sizes) < 2:
        raise ValueError("kruskal_wallis: every group needs at least 2 values")
    pooled = np.concatenate([g.values for g in groups])
    n_total = pooled.size
    if np.all(pooled == pooled[0]):
        return 0.0, 1.0, FLAG_NOT_SIGNIFICANT

    ranks = rank_with_ties(pooled)
    h = 0.0
    offset = 0
    for size in sizes:
        r = float(np.sum(ranks[offset : offset + size]))
        h += r * r / size
        offset += size
    h = 12.0 / (n_total * (n_total + 1.0)) * h - 3.0 * (n_total + 1.0)

    _, tie_counts = np.unique(pooled, return_counts=True)
    correction = 1.0 - float(np.sum(tie_counts**3 - tie_counts)) / (n_total**3 - n_total)
    h = max(h / correction, 0.0)

    p = float(chi2.sf(h, len(groups) - 1))
    flag = FLAG_SIGNIFICANT if p < alpha else FLAG_NOT_SIGNIFICANT
    return h, p, flag


def _dunnett_statistics(control: SampleGroup, treatments: Sequence[SampleGroup]):
    """Per-treatment t statistics with pooled within-group variance."""
    all_groups = [control, *treatments]
    sizes = np.array([g.values.size for g in all_groups], dtype=float)
    means = np.array([float(np.mean(g.values)) for g in all_groups])
    sum_sq = sum(float(np.sum((g.values - np.mean(g.values)) ** 2)) for g in all_groups)
    dof = int(np.sum(sizes)) - len(all_groups)
    pooled_var = sum_sq / dof
    return sizes, means, pooled_var, dof


def dunnett_one_sided(
    control: SampleGroup,
    treatments: Sequence[SampleGroup],
    alpha: float,
    mc_samples: int,
    rng: RngStream,
) -> list[tuple[float, str]]:
    """Family-adjusted one-sided p for each treatment (H1: treatment mean > control mean).

    The null of the max statistic is sampled ``mc_samples`` times: shared
    control deviate, independent treatment deviates, and a shared pooled-
    variance chi-square factor, which reproduces the classic correlation
    structure of the comparison family. With zero pooled variance the p-value
    degenerates to 0 or 1 by the sign of the mean difference.
    """
    if len(treatments) == 0:
        raise ValueError("dunnett_one_sided: need at least one treatment")
    if control.values.size < 2 or any(t.values.size < 2 for t in treatments):
        raise ValueError("dunnett_one_sided: every group needs at least 2 values")
    if mc_samples < 10**4:
        raise ValueError("dunnett_one_sided: mc_samples must be at least 10^4")

    sizes, means, pooled_var, dof = _dunnett_statistics(control, treatments)
    n0, nj = sizes[0], sizes[1:]
    diffs = means[1:] - means[0]

    if pooled_var == 0.0:
        return [(0.0, FLAG_SIGNIFICANT) if d > 0 else (1.0, FLAG_NOT_SIGNIFICANT) for d in diffs]

    scale = np.sqrt(pooled_var * (1.0 / nj + 1.0 / n0))
    t_obs = diffs / scale

    z0 = rng.standard_normal(mc_samples)
    zt = rng.standard_normal((mc_samples, len(treatments)))
    s = np.sqrt(rng.chisquare(dof, mc_samples) / dof)
    t_null = (zt / np.sqrt(nj) - z0[:, None] / np.sqrt(n0)) / (s[:, None] * np.sqrt(1.0 / nj + 1.0 / n0))
    max_null = t_null.max(axis=1)

    results = []
    for t in t_obs:
        p = float(np.mean(max_null >= t))
        results.append((p, FLAG_SIGNIFICANT if p < alpha else FLAG_NOT_SIGNIFICANT))
    return results


def build_report(
    groups: Sequence[SampleGroup],
    control_label: str,
    alpha: float,
    rng: RngStream,
    mc_samples: int = 100_000,
) -> StatReport:
    """Two-stage pipeline: omnibus Kruskal-Wallis, then Dunnett versus the control.

    The post-hoc runs only on a significant omnibus result; otherwise every
    Dunnett cell is marked not-run ("-").
    """
    labels = [g.label for g in groups]
    if control_label not in labels:
        raise ValueError(f"control group {control_label!r} not among {labels}")
    control = groups[labels.index(control_label)]
    treatments = [g for g in groups if g.label != control_label]

    summaries = tuple(GroupSummary(g.label, *summarize(g.values)) for g in groups)
    kw_h, kw_p, kw_flag = kruskal_wallis(groups, alpha)

    if kw_flag == FLAG_SIGNIFICANT:
        outcomes = dunnett_one_sided(control, treatments, alpha, mc_samples, rng)
        dunnett = tuple(DunnettOutcome(t.label, p, flag) for t, (p, flag) in zip(treatments, outcomes))
    else:
        dunnett = tuple(DunnettOutcome(t.label, None, FLAG_NOT_RUN) for t in treatments)

    return StatReport(
        groups=summaries,
        control_label=control_label,
        kw_h=kw_h,
        kw_p=kw_p,
        kw_flag=kw_flag,
        dunnett=dunnett,
    )
