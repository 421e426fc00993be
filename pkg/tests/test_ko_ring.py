import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exotwist.errors import PreconditionError
from exotwist.ko_ring import (
    L,
    ONE,
    EigenDecomposition,
    FramingClass,
    KOElement,
    add,
    exoticness_ledger,
    framing_change,
    mul,
    mul_l,
    pullback_double_cover,
    pullback_framing_class,
)

elements = st.builds(
    KOElement, st.integers(min_value=0, max_value=1), st.integers(-50, 50)
)


class TestRingPresentation:
    def test_l_squared_is_one(self):
        assert mul(L, L) == ONE

    def test_two_torsion(self):
        l_minus_1 = KOElement(1, 0)
        assert add(l_minus_1, l_minus_1) == KOElement(0, 0)

    def test_validation(self):
        with pytest.raises(PreconditionError):
            KOElement(2, 1)
        with pytest.raises(PreconditionError):
            KOElement(0, 1.5)
        with pytest.raises(PreconditionError):
            FramingClass(3)

    @given(elements, elements)
    def test_operators_match_functions(self, x, y):
        assert x + y == add(x, y)
        assert x * y == mul(x, y)

    @given(elements, elements)
    def test_commutative(self, x, y):
        assert add(x, y) == add(y, x)
        assert mul(x, y) == mul(y, x)

    @given(elements, elements, elements)
    def test_associative_and_distributive(self, x, y, z):
        assert add(add(x, y), z) == add(x, add(y, z))
        assert mul(mul(x, y), z) == mul(x, mul(y, z))
        assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))

    @given(elements)
    def test_units(self, x):
        assert mul(x, ONE) == x
        assert add(x, KOElement(0, 0)) == x

    @given(elements)
    def test_mul_l_is_multiplication_by_l(self, x):
        assert mul_l(x) == mul(L, x)

    @given(elements)
    def test_mul_l_involution(self, x):
        assert mul_l(mul_l(x)) == x


class TestPullback:
    @given(elements, elements)
    def test_ring_homomorphism(self, x, y):
        pb = pullback_double_cover
        assert pb(add(x, y)) == add(pb(x), pb(y))
        assert pb(mul(x, y)) == mul(pb(x), pb(y))
        assert pb(ONE) == ONE

    @given(elements)
    def test_kills_torsion(self, x):
        # the double cover untwists l: pullback(l*x) = pullback(x)
        assert pullback_double_cover(mul_l(x)) == pullback_double_cover(x)
        assert pullback_double_cover(x).t == 0


class TestFraming:
    @given(elements)
    def test_trivial_change_is_identity(self, x):
        assert framing_change(x, FramingClass(0)) == x

    @given(elements)
    def test_nontrivial_change_twists_by_l(self, x):
        assert framing_change(x, FramingClass(1)) == mul_l(x)

    @given(elements)
    def test_flip_iff_rank_odd(self, x):
        flipped = framing_change(x, FramingClass(1))
        assert (flipped.t != x.t) == (x.n % 2 == 1)

    def test_pullback_framing_class_is_always_nontrivial(self):
        # 2k+1 is odd for every k, so the two pulled-back framings always
        # differ by the twist
        for b_plus in (2, 6, 10, 46):
            k = (b_plus - 2) // 4
            e = EigenDecomposition(b_plus=b_plus, k=k)
            assert pullback_framing_class(e) == FramingClass(1)

    def test_eigen_decomposition_validation(self):
        EigenDecomposition(b_plus=6, k=1)
        with pytest.raises(PreconditionError):
            EigenDecomposition(b_plus=4, k=1)


class TestLedger:
    def test_dimension_2_certifies(self):
        report = exoticness_ledger(2, psi0_is_unit=True)
        assert report.exotic and bool(report)
        assert report.failed_hypothesis is None
        assert report.pulled_back.t != report.twisted.t

    def test_dimension_4_fails_hypothesis(self):
        report = exoticness_ledger(4, psi0_is_unit=True)
        assert not report.exotic
        assert "divisible by 4" in report.failed_hypothesis

    def test_odd_dimension_fails_hypothesis(self):
        report = exoticness_ledger(3, psi0_is_unit=True)
        assert not report.exotic
        assert "odd" in report.failed_hypothesis

    def test_non_unit_rank_never_flips(self):
        report = exoticness_ledger(2, psi0_is_unit=False)
        assert not report.exotic
        assert report.failed_hypothesis is None

    def test_rejects_bad_dimension(self):
        with pytest.raises(PreconditionError):
            exoticness_ledger(-2, psi0_is_unit=True)
        with pytest.raises(PreconditionError):
            exoticness_ledger(2.0, psi0_is_unit=True)

    def test_all_certifying_dimensions_up_to_100(self):
        for d in range(0, 101):
            report = exoticness_ledger(d, psi0_is_unit=True)
            assert report.exotic == (d % 4 == 2)


def test_ring_laws_bulk_random():
    # high-volume seeded sweep, independent of hypothesis shrinking
    rng = random.Random(160993)
    draw = lambda: KOElement(rng.randint(0, 1), rng.randint(-10**6, 10**6))
    for _ in range(2500):
        x, y, z = draw(), draw(), draw()
        assert mul(x, y) == mul(y, x)
        assert mul(mul(x, y), z) == mul(x, mul(y, z))
        assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
        assert mul_l(mul_l(x)) == x
