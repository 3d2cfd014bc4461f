import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mcdm_workbench.errors import DomainError, InputError
from mcdm_workbench.fuzzy import (
    LINGUISTIC_LABELS,
    LINGUISTIC_SCALE,
    Tfn,
    defuzzify_centroid,
    linguistic_to_tfn,
    tfn_add,
    tfn_invert,
    tfn_mul,
    tfn_nth_root,
)


def triple(t):
    return (t.l, t.m, t.u)


def positive_tfns(min_value=1e-3, max_value=1e3):
    return st.tuples(
        st.floats(min_value, max_value), st.floats(min_value, max_value),
        st.floats(min_value, max_value),
    ).map(lambda t: Tfn(*sorted(t)))


class TestConstruction:
    def test_ordering_enforced(self):
        with pytest.raises(DomainError):
            Tfn(3, 2, 4)

    def test_degenerate_allowed(self):
        assert Tfn(9, 9, 9).m == 9

    def test_json_round_trip(self):
        t = Tfn(0.25, 1 / 3, 0.5)
        assert Tfn.from_json(t.to_json()) == t

    def test_bad_json(self):
        with pytest.raises(InputError):
            Tfn.from_json([1, 2])


class TestAdd:
    def test_identity(self):
        assert tfn_add(Tfn(1, 1, 1), Tfn(0, 0, 0)) == Tfn(1, 1, 1)

    def test_componentwise(self):
        assert tfn_add(Tfn(1, 2, 3), Tfn(2, 3, 4)) == Tfn(3, 5, 7)

    def test_root_sums(self):
        got = tfn_add(Tfn(0.5, 0.577, 0.707), Tfn(1.414, 1.732, 2.0))
        assert triple(got) == pytest.approx((1.914, 2.309, 2.707))


class TestMul:
    def test_identity(self):
        assert tfn_mul(Tfn(1, 1, 1), Tfn(2, 3, 4)) == Tfn(2, 3, 4)

    def test_componentwise(self):
        assert tfn_mul(Tfn(1, 2, 3), Tfn(2, 3, 4)) == Tfn(2, 6, 12)

    def test_times_own_inverse(self):
        a = Tfn(2, 3, 4)
        got = tfn_mul(a, tfn_invert(a))
        assert got.m == pytest.approx(1.0)
        assert (got.l, got.u) == pytest.approx((0.5, 2.0))


class TestInvert:
    def test_self_inverse(self):
        assert tfn_invert(Tfn(1, 1, 1)) == Tfn(1, 1, 1)

    def test_definition(self):
        assert triple(tfn_invert(Tfn(2, 3, 4))) == pytest.approx((0.25, 1 / 3, 0.5))

    def test_scale_value(self):
        assert triple(tfn_invert(Tfn(6, 7, 8))) == pytest.approx((0.125, 1 / 7, 1 / 6))

    def test_nonpositive_rejected(self):
        with pytest.raises(DomainError):
            tfn_invert(Tfn(0, 1, 2))


class TestNthRoot:
    def test_identity(self):
        assert tfn_nth_root(Tfn(1, 1, 1), 5) == Tfn(1, 1, 1)

    def test_square_root(self):
        got = tfn_nth_root(Tfn(2, 3, 4), 2)
        assert triple(got) == pytest.approx((math.sqrt(2), math.sqrt(3), 2.0))

    def test_exact_cubes(self):
        assert triple(tfn_nth_root(Tfn(8, 27, 64), 3)) == pytest.approx((2, 3, 4))

    def test_bad_order(self):
        with pytest.raises(DomainError):
            tfn_nth_root(Tfn(1, 2, 3), 0)

    def test_nonpositive_rejected(self):
        with pytest.raises(DomainError):
            tfn_nth_root(Tfn(0, 1, 2), 2)


class TestCentroid:
    def test_symmetric(self):
        assert defuzzify_centroid(Tfn(0.2, 0.3, 0.4)) == pytest.approx(0.3)

    def test_degenerate(self):
        assert defuzzify_centroid(Tfn(1, 1, 1)) == 1.0

    def test_worked_value(self):
        assert defuzzify_centroid(Tfn(0.5224, 0.75, 1.0448)) == pytest.approx(0.7724)


class TestLinguisticScale:
    EXPECTED = {
        "Equally important": (1, 1, 1),
        "Moderate important": (2, 3, 4),
        "Strong important": (4, 5, 6),
        "Very strong important": (6, 7, 8),
        "Extremely important": (9, 9, 9),
        "Equally important to moderately more important": (1, 2, 3),
        "Moderately more important to strongly more important": (3, 4, 5),
        "Strongly to very strongly more important": (5, 6, 7),
        "Very strongly to extremely more important": (7, 8, 9),
    }

    def test_scale_totality(self):
        assert set(LINGUISTIC_SCALE) == set(self.EXPECTED)
        for label, triple in self.EXPECTED.items():
            assert linguistic_to_tfn(label) == Tfn(*triple)

    def test_reciprocal(self):
        assert triple(linguistic_to_tfn("Moderate important", True)) == \
            pytest.approx((0.25, 1 / 3, 0.5))

    def test_unknown_label(self):
        with pytest.raises(InputError):
            linguistic_to_tfn("Kinda important")

    def test_nine_entries(self):
        assert len(LINGUISTIC_LABELS) == 9


class TestProperties:
    @given(positive_tfns(), positive_tfns())
    def test_ordering_closed_under_ops(self, a, b):
        for t in (tfn_add(a, b), tfn_mul(a, b), tfn_invert(a), tfn_nth_root(a, 3)):
            assert t.l <= t.m <= t.u

    @given(positive_tfns())
    def test_inverse_involution(self, a):
        back = tfn_invert(tfn_invert(a))
        assert back.l == pytest.approx(a.l, abs=1e-12, rel=1e-12)
        assert back.m == pytest.approx(a.m, abs=1e-12, rel=1e-12)
        assert back.u == pytest.approx(a.u, abs=1e-12, rel=1e-12)

    @given(positive_tfns(0.1, 10), st.integers(1, 6))
    def test_root_power_consistency(self, a, n):
        root = tfn_nth_root(a, n)
        acc = Tfn(1, 1, 1)
        for _ in range(n):
            acc = tfn_mul(acc, root)
        assert acc.l == pytest.approx(a.l, rel=1e-9)
        assert acc.m == pytest.approx(a.m, rel=1e-9)
        assert acc.u == pytest.approx(a.u, rel=1e-9)

    @given(positive_tfns(), positive_tfns())
    def test_centroid_linearity(self, a, b):
        assert defuzzify_centroid(tfn_add(a, b)) == pytest.approx(
            defuzzify_centroid(a) + defuzzify_centroid(b), rel=1e-12)
