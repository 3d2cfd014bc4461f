import pytest
from hypothesis import given
from hypothesis import strategies as st

from mcdm_workbench.errors import InputError
from mcdm_workbench.screening import LikertAssessment, screen_items


def item(scores, item_id="x", kind="criterion"):
    return LikertAssessment(item_id, kind, tuple(scores))


class TestAssessment:
    def test_score_bounds(self):
        with pytest.raises(InputError):
            item([0, 3])
        with pytest.raises(InputError):
            item([6])

    def test_empty_scores(self):
        with pytest.raises(InputError):
            item([])

    def test_unknown_kind(self):
        with pytest.raises(InputError):
            LikertAssessment("x", "widget", (3,))


class TestScreen:
    def test_high_consensus_retained(self):
        retained, eliminated = screen_items([item([5, 4, 5, 4, 5])])
        assert len(retained) == 1 and not eliminated
        assert retained[0].item.mean == pytest.approx(4.6)
        assert retained[0].item.dispersion == pytest.approx(0.49, abs=0.01)

    def test_unimportant_eliminated(self):
        _, eliminated = screen_items([item([1, 2, 1, 2, 1])])
        assert eliminated[0].reasons == ("unimportant",)

    def test_polarized_fails_both_rules(self):
        _, eliminated = screen_items([item([5, 1, 5, 1, 5])])
        assert set(eliminated[0].reasons) == {"unimportant", "low_consensus"}

    def test_empty_input(self):
        with pytest.raises(InputError):
            screen_items([])

    def test_bad_thresholds(self):
        with pytest.raises(InputError):
            screen_items([item([4])], mean_threshold=0)

    @given(st.permutations([5, 1, 4, 2, 3]))
    def test_order_invariance(self, scores):
        retained, eliminated = screen_items([item(scores)])
        baseline = screen_items([item([1, 2, 3, 4, 5])])
        assert bool(retained) == bool(baseline[0])

    @given(st.integers(1, 9), st.floats(1.01, 4.99), st.floats(0.1, 3.0))
    def test_unanimous_extremes(self, n, mean_t, sd_t):
        retained, _ = screen_items([item([5] * n)], mean_t, sd_t)
        assert retained
        _, eliminated = screen_items([item([1] * n)], mean_t, sd_t)
        assert eliminated

    @given(st.lists(st.integers(1, 5), min_size=1, max_size=8),
           st.floats(1.5, 4.0), st.floats(1.5, 4.5))
    def test_mean_threshold_monotonicity(self, scores, low_t, high_t):
        low_t, high_t = sorted((low_t, high_t))
        low_kept, _ = screen_items([item(scores)], low_t)
        high_kept, _ = screen_items([item(scores)], high_t)
        if high_kept:
            assert low_kept
