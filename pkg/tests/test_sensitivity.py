import json

import pytest

from conftest import REF_RANKS, REF_WEIGHTS
from mcdm_workbench.errors import InputError
from mcdm_workbench.sensitivity import (
    SplitMix64,
    monte_carlo_weights,
    oat_weight_perturbation,
    roadmap_tiers,
)
from mcdm_workbench.topsis import DecisionMatrix, topsis_pipeline


def dominated_instance():
    """Alternative B beats A on every criterion (all benefit)."""
    return DecisionMatrix(
        ("A", "B"), ("c1", "c2", "c3"), ("benefit",) * 3,
        ((2.0, 3.0, 1.0), (5.0, 6.0, 4.0)))


class TestSplitMix64:
    def test_known_first_output(self):
        # reference value for seed 0 from the reference splitmix64 algorithm
        assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF

    def test_uniform_in_unit_interval(self):
        rng = SplitMix64(123)
        vals = [rng.uniform() for _ in range(1000)]
        assert all(0.0 < v <= 1.0 for v in vals)

    def test_simplex_point(self):
        w = SplitMix64(7).simplex_point(5)
        assert sum(w) == pytest.approx(1.0, abs=1e-12)
        assert all(x > 0 for x in w)


class TestOat:
    def test_zero_delta_is_noop(self, ref_decision_matrix):
        rep = oat_weight_perturbation(ref_decision_matrix, REF_WEIGHTS, [0.0])
        assert rep.rank_reversal_count == 0
        for s in rep.scenarios:
            assert s.ranking.rank == rep.base.rank
            assert s.ranking.cc == rep.base.cc

    def test_reference_dataset_scenario_oracle(self, ref_decision_matrix):
        deltas = [-0.05, 0.05]
        rep = oat_weight_perturbation(ref_decision_matrix, REF_WEIGHTS, deltas)
        # independent rerun per scenario (base weights renormalized on entry)
        w0 = [x / sum(REF_WEIGHTS) for x in REF_WEIGHTS]
        k = 0
        for j in range(ref_decision_matrix.n):
            for delta in deltas:
                w = list(w0)
                w[j] += delta
                w = [x / sum(w) for x in w]
                expected = topsis_pipeline(ref_decision_matrix, w)
                assert rep.scenarios[k].ranking.cc == pytest.approx(expected.cc)
                k += 1

    def test_weight_renormalized(self, ref_decision_matrix):
        rep = oat_weight_perturbation(ref_decision_matrix, REF_WEIGHTS, [0.04])
        for s in rep.scenarios:
            if not s.skipped:
                assert sum(s.weights) == pytest.approx(1.0, abs=1e-9)

    def test_invalid_delta_skipped_not_fatal(self, ref_decision_matrix):
        rep = oat_weight_perturbation(ref_decision_matrix, REF_WEIGHTS, [-0.5])
        assert rep.skipped_scenarios  # scalability weight 0.057 - 0.5 < 0
        assert any(s.skipped for s in rep.scenarios)

    def test_dominant_alternative_stays_top(self):
        d = dominated_instance()
        rep = oat_weight_perturbation(d, (0.4, 0.3, 0.3), [-0.1, 0.1, 0.2])
        for s in rep.scenarios:
            if not s.skipped:
                assert s.ranking.rank[1] == 1


class TestMonteCarlo:
    def test_single_sample(self, ref_decision_matrix):
        rep = monte_carlo_weights(ref_decision_matrix, 1, seed=5)
        assert len(rep.scenarios) == 1

    def test_sample_count_validated(self, ref_decision_matrix):
        with pytest.raises(InputError):
            monte_carlo_weights(ref_decision_matrix, 0, seed=1)

    def test_dominated_never_first(self):
        rep = monte_carlo_weights(dominated_instance(), 500, seed=11)
        assert rep.rank_frequencies["A"].get(1, 0) == 0
        assert rep.rank_frequencies["B"][1] == 500

    def test_determinism_bit_exact(self, ref_decision_matrix):
        a = monte_carlo_weights(ref_decision_matrix, 200, seed=42,
                                weights=REF_WEIGHTS)
        b = monte_carlo_weights(ref_decision_matrix, 200, seed=42,
                                weights=REF_WEIGHTS)
        assert json.dumps(a.to_json(), sort_keys=True) == \
            json.dumps(b.to_json(), sort_keys=True)

    def test_seed_changes_draws(self, ref_decision_matrix):
        a = monte_carlo_weights(ref_decision_matrix, 10, seed=1)
        b = monte_carlo_weights(ref_decision_matrix, 10, seed=2)
        assert a.scenarios[0].weights != b.scenarios[0].weights

    def test_frequencies_sum_to_scenario_count(self, ref_decision_matrix):
        rep = monte_carlo_weights(ref_decision_matrix, 100, seed=9)
        for freq in rep.rank_frequencies.values():
            assert sum(freq.values()) == 100


class TestRoadmapTiers:
    def test_reference_default_bands(self, ref_decision_matrix):
        ranking = topsis_pipeline(ref_decision_matrix, REF_WEIGHTS, rounding=2)
        assert ranking.rank == REF_RANKS
        tiers = roadmap_tiers(ranking)
        assert tiers.short_term == ("posture",)
        assert tiers.medium_term == ("fatigue", "ppe")
        assert tiers.long_term == ("health", "skill")

    def test_single_band(self, ref_decision_matrix):
        ranking = topsis_pipeline(ref_decision_matrix, REF_WEIGHTS)
        tiers = roadmap_tiers(ranking, [5])
        assert len(tiers.short_term) == 5
        assert tiers.medium_term == () and tiers.long_term == ()

    def test_rebanding(self, ref_decision_matrix):
        ranking = topsis_pipeline(ref_decision_matrix, REF_WEIGHTS, rounding=2)
        tiers = roadmap_tiers(ranking, [2, 2, 1])
        assert tiers.short_term == ("posture", "fatigue")
        assert tiers.medium_term == ("ppe", "health")
        assert tiers.long_term == ("skill",)

    def test_band_sum_mismatch(self, ref_decision_matrix):
        ranking = topsis_pipeline(ref_decision_matrix, REF_WEIGHTS)
        with pytest.raises(InputError, match="band"):
            roadmap_tiers(ranking, [1, 1, 1])

    def test_boundary_tie_rejected(self):
        d = DecisionMatrix(("A", "B", "C"), ("c1",), ("benefit",),
                           ((3.0,), (3.0,), (1.0,)))
        ranking = topsis_pipeline(d, [1.0])
        assert ranking.cc[0] == ranking.cc[1]
        with pytest.raises(InputError, match="tie"):
            roadmap_tiers(ranking, [1, 1, 1])

    def test_partition_property(self, ref_decision_matrix):
        ranking = topsis_pipeline(ref_decision_matrix, REF_WEIGHTS)
        tiers = roadmap_tiers(ranking, [2, 1, 2])
        seen = tiers.short_term + tiers.medium_term + tiers.long_term
        assert sorted(seen) == sorted(ranking.alternative_ids)
