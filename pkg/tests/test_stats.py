import math

import numpy as np
import pytest
import scipy.stats
from hypothesis import given
from hypothesis import strategies as st

from rcga.core import make_rng
from rcga.stats import (
    FLAG_NOT_RUN,
    FLAG_NOT_SIGNIFICANT,
    FLAG_SIGNIFICANT,
    SampleGroup,
    build_report,
    dunnett_one_sided,
    kruskal_wallis,
    rank_with_ties,
    summarize,
)


def groups(*value_lists, labels=None):
    labels = labels or [f"g{i}" for i in range(len(value_lists))]
    return [SampleGroup(lab, np.asarray(vals, dtype=float)) for lab, vals in zip(labels, value_lists)]


class TestSummarize:
    def test_constant_sample(self):
        assert summarize([1.0, 1.0, 1.0]) == (1.0, 0.0)

    def test_two_point_sample(self):
        mean, std = summarize([0.0, 2.0])
        assert mean == 1.0 and abs(std - math.sqrt(2.0)) < 1e-15

    def test_against_two_pass_oracle(self):
        values = make_rng(21).random(30) * 7 - 3
        mean, std = summarize(values)
        oracle_mean = math.fsum(values) / 30
        oracle_std = math.sqrt(math.fsum((v - oracle_mean) ** 2 for v in values) / 29)
        assert abs(mean - oracle_mean) < 1e-12
        assert abs(std - oracle_std) < 1e-12

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            summarize([])


class TestRankWithTies:
    def test_distinct(self):
        assert np.array_equal(rank_with_ties([10.0, 20.0, 30.0]), [1.0, 2.0, 3.0])

    def test_pair_tie(self):
        assert np.array_equal(rank_with_ties([5.0, 5.0]), [1.5, 1.5])

    def test_interior_tie(self):
        assert np.array_equal(rank_with_ties([3.0, 1.0, 3.0, 2.0]), [3.5, 1.0, 3.5, 2.0])

    @given(st.lists(st.floats(-100, 100, allow_nan=False), min_size=1, max_size=60))
    def test_rank_sum_is_exact(self, values):
        n = len(values)
        assert math.fsum(rank_with_ties(values)) == n * (n + 1) / 2

    def test_matches_scipy_midranks(self):
        values = make_rng(5).integers(0, 8, size=40).astype(float)
        assert np.array_equal(rank_with_ties(values), scipy.stats.rankdata(values))


class TestKruskalWallis:
    def test_fixed_example(self):
        h, p, flag = kruskal_wallis(groups([1, 2, 3], [4, 5, 6], [7, 8, 9]), alpha=0.05)
        assert abs(h - 7.2) < 1e-9
        assert abs(p - math.exp(-3.6)) < 1e-9  # chi-square tail, 2 dof
        assert flag == FLAG_SIGNIFICANT

    def test_identical_groups_convention(self):
        h, p, flag = kruskal_wallis(groups([5, 5, 5], [5, 5, 5], [5, 5, 5]), alpha=0.05)
        assert (h, p, flag) == (0.0, 1.0, FLAG_NOT_SIGNIFICANT)

    def test_null_calibration(self):
        rng = make_rng(303)
        quiet = 0
        for _ in range(100):
            a, b = rng.standard_normal(30), rng.standard_normal(30)
            _, _, flag = kruskal_wallis(groups(a, b), alpha=0.05)
            quiet += flag == FLAG_NOT_SIGNIFICANT
        assert quiet >= 90

    def test_monotone_transform_invariance(self):
        rng = make_rng(42)
        raw = [rng.standard_normal(12), rng.standard_normal(12) + 0.5, rng.standard_normal(12)]
        h1, p1, _ = kruskal_wallis(groups(*raw))
        h2, p2, _ = kruskal_wallis(groups(*[np.exp(g) for g in raw]))
        assert abs(h1 - h2) < 1e-9 and abs(p1 - p2) < 1e-12

    def test_matches_scipy_with_ties(self):
        rng = make_rng(77)
        a = np.round(rng.random(15), 1)
        b = np.round(rng.random(12), 1)
        c = np.round(rng.random(18), 1)
        h, p, _ = kruskal_wallis(groups(a, b, c))
        ref = scipy.stats.kruskal(a, b, c)
        assert abs(h - ref.statistic) < 1e-10
        assert abs(p - ref.pvalue) < 1e-10

    @given(st.integers(0, 2**31 - 1))
    def test_h_nonnegative_p_in_unit_interval(self, seed):
        rng = make_rng(seed)
        gs = groups(rng.integers(0, 4, 8).astype(float), rng.integers(0, 4, 8).astype(float))
        h, p, _ = kruskal_wallis(gs)
        assert h >= 0.0 and 0.0 <= p <= 1.0

    def test_preconditions(self):
        with pytest.raises(ValueError):
            kruskal_wallis(groups([1, 2, 3]))
        with pytest.raises(ValueError):
            kruskal_wallis(groups([1, 2], [3]))


class TestDunnettOneSided:
    def test_identical_treatment_not_flagged(self):
        control = SampleGroup("ctl", np.array([1.0, 2.0, 3.0, 4.0]))
        twin = SampleGroup("twin", np.array([1.0, 2.0, 3.0, 4.0]))
        [(p, flag)] = dunnett_one_sided(control, [twin], 0.05, 10_000, make_rng(1))
        assert p >= 0.4
        assert flag == FLAG_NOT_SIGNIFICANT

    def test_k1_reduces_to_pooled_t_test(self):
        rng = make_rng(2)
        control = SampleGroup("ctl", rng.standard_normal(30))
        shifted = SampleGroup("t", rng.standard_normal(30) + 2.0)
        [(p_mc, flag)] = dunnett_one_sided(control, [shifted], 0.05, 100_000, make_rng(3))
        assert p_mc < 0.001 and flag == FLAG_SIGNIFICANT
        # Analytic oracle: one-sided two-sample pooled t test.
        t_stat, p_ref = scipy.stats.ttest_ind(shifted.values, control.values, alternative="greater")
        assert abs(p_mc - p_ref) < 0.01

    def test_degenerate_variance_signs(self):
        control = SampleGroup("ctl", np.zeros(4))
        worse = SampleGroup("worse", np.ones(4))
        better = SampleGroup("better", -np.ones(4))
        results = dunnett_one_sided(control, [worse, better], 0.05, 10_000, make_rng(4))
        assert results[0] == (0.0, FLAG_SIGNIFICANT)
        assert results[1] == (1.0, FLAG_NOT_SIGNIFICANT)

    def test_location_scale_invariance(self):
        rng = make_rng(5)
        base = [rng.standard_normal(10), rng.standard_normal(10) + 1.0, rng.standard_normal(10) - 0.3]
        def run(transform):
            ctl, t1, t2 = [SampleGroup(str(i), transform(v)) for i, v in enumerate(base)]
            return dunnett_one_sided(ctl, [t1, t2], 0.05, 50_000, make_rng(6))
        plain = run(lambda v: v)
        moved = run(lambda v: 3.5 * v + 11.0)
        for (pa, fa), (pb, fb) in zip(plain, moved):
            assert abs(pa - pb) < 1e-3 and fa == fb

    def test_family_adjustment_exceeds_marginal(self):
        # With many null treatments the max-statistic family p for a fixed
        # difference must be larger than the single-comparison p.
        rng = make_rng(7)
        control = SampleGroup("ctl", rng.standard_normal(20))
        shifted = SampleGroup("s", rng.standard_normal(20) + 0.6)
        nulls = [SampleGroup(f"n{i}", rng.standard_normal(20)) for i in range(4)]
        [(p_alone, _)] = dunnett_one_sided(control, [shifted], 0.05, 100_000, make_rng(8))
        ps = dunnett_one_sided(control, [shifted, *nulls], 0.05, 100_000, make_rng(8))
        assert ps[0][0] > p_alone

    def test_requires_enough_samples(self):
        control = SampleGroup("ctl", np.array([1.0, 2.0]))
        t1 = SampleGroup("t", np.array([1.0, 2.0]))
        with pytest.raises(ValueError):
            dunnett_one_sided(control, [t1], 0.05, 100, make_rng(0))
        with pytest.raises(ValueError):
            dunnett_one_sided(control, [], 0.05, 10_000, make_rng(0))


class TestBuildReport:
    def test_identical_groups_dash_dunnett(self):
        gs = groups([5, 5, 5], [5, 5, 5], [5, 5, 5], labels=["PSOX", "AX", "FX"])
        report = build_report(gs, "PSOX", 0.05, make_rng(1))
        assert report.kw_flag == FLAG_NOT_SIGNIFICANT
        assert all(o.flag == FLAG_NOT_RUN and o.p_value is None for o in report.dunnett)

    def test_dominant_control_flags_all_treatments(self):
        rng = make_rng(2)
        gs = [
            SampleGroup("PSOX", rng.random(30) * 1e-6),
            SampleGroup("AX", rng.random(30) + 1.0),
            SampleGroup("FX", rng.random(30) + 2.0),
        ]
        report = build_report(gs, "PSOX", 0.05, make_rng(3))
        assert report.kw_flag == FLAG_SIGNIFICANT
        assert [o.label for o in report.dunnett] == ["AX", "FX"]
        assert all(o.flag == FLAG_SIGNIFICANT for o in report.dunnett)

    def test_deterministic_given_seed(self):
        rng = make_rng(9)
        gs = groups(rng.random(10), rng.random(10) + 0.2, labels=["PSOX", "AX"])
        r1 = build_report(gs, "PSOX", 0.05, make_rng(4))
        r2 = build_report(gs, "PSOX", 0.05, make_rng(4))
        assert r1 == r2

    def test_missing_control_rejected(self):
        with pytest.raises(ValueError):
            build_report(groups([1, 2], [3, 4]), "PSOX", 0.05, make_rng(0))
