import random

import pytest
from hypothesis import given, settings, strategies as st

from ringrigidity import (
    GroupSpec,
    IntegerOverflowError,
    IntegerWindow,
    InvariantViolation,
    RingStructure,
    SearchConfig,
    UsageError,
    all_elements,
    alternate,
    check_scaled_unitality,
    enumerate_multiplications,
    extract_scale,
    find_pm1_violation,
    find_unit_windowed,
    has_pm1_unit_property,
    make_scaled,
    scale_ring,
    scaled_unit_sweep,
    unit_of_scaled,
    usual_cyclic_ring,
    verify_scaled_form,
)
from ringrigidity.scaled import scaled_identity_failure, scaled_identity_suite


class TestMakeScaled:
    def test_usual(self):
        assert make_scaled(1)(3, 4) == 12

    def test_negated(self):
        assert make_scaled(-1)(3, 4) == -12

    def test_zero_scale(self):
        mul = make_scaled(0)
        assert mul(17, -23) == 0

    def test_overflow_checked(self):
        with pytest.raises(IntegerOverflowError):
            make_scaled(10**10)(10**5, 10**5)


class TestAlternate:
    def test_negates_products(self):
        assert alternate()(2, 5) == -10

    def test_absorbs_zero(self):
        assert alternate()(7, 0) == 0

    def test_minus_one_squares_to_itself(self):
        # -((-1)*(-1)) = -1, which is also this multiplication's unit
        assert alternate()(-1, -1) == -1

    def test_is_scale_minus_one(self):
        mul = alternate()
        ref = make_scaled(-1)
        for n in range(-10, 11):
            for m in range(-10, 11):
                assert mul(n, m) == ref(n, m)


class TestUnitOfScaled:
    def test_one(self):
        assert unit_of_scaled(1) == 1

    def test_minus_one(self):
        assert unit_of_scaled(-1) == -1

    @pytest.mark.parametrize("a", [0, 2, -2, 17, -100])
    def test_other_scales_non_unital(self, a):
        assert unit_of_scaled(a) is None

    def test_agrees_with_windowed_scan(self):
        window = IntegerWindow(1000)
        for a in range(-100, 101):
            assert find_unit_windowed(make_scaled(a), window) == unit_of_scaled(a)


class TestExtractScale:
    def test_usual(self):
        assert extract_scale(lambda n, m: n * m) == 1

    def test_round_trip(self):
        for a in range(-1000, 1001):
            assert extract_scale(make_scaled(a)) == a

    def test_alternate(self):
        assert extract_scale(alternate()) == -1


class TestScaledIdentities:
    def test_random_suite(self):
        # 10^4 random quadruples, |a| <= 100, |n|,|m|,|k| <= 10^4
        rng = random.Random(2024)
        for _ in range(10_000):
            a = rng.randint(-100, 100)
            n = rng.randint(-10_000, 10_000)
            m = rng.randint(-10_000, 10_000)
            k = rng.randint(-10_000, 10_000)
            assert scaled_identity_failure(a, n, m, k) is None

    @given(
        st.integers(-100, 100),
        st.integers(-10_000, 10_000),
        st.integers(-10_000, 10_000),
        st.integers(-10_000, 10_000),
    )
    @settings(max_examples=300)
    def test_identities_property(self, a, n, m, k):
        assert scaled_identity_failure(a, n, m, k) is None

    @given(st.integers(-50, 50), st.integers(-10**4, 10**4), st.integers(-10**4, 10**4))
    @settings(max_examples=300)
    def test_commutes(self, a, n, m):
        mul = make_scaled(a)
        assert mul(n, m) == mul(m, n)

    def test_suite_runner_reports_ok(self):
        report = scaled_identity_suite(-7, 1000, samples=2000)
        assert report.ok and report.failure is None

    def test_suite_runner_flags_overflow(self):
        with pytest.raises(IntegerOverflowError, match="a="):
            scaled_identity_suite(10**12, 10**6, samples=100)


class TestVerifyScaledForm:
    def test_usual_multiplication(self):
        report = verify_scaled_form(lambda n, m: n * m, IntegerWindow(100))
        assert report.ok and report.scale == 1 and not report.rejected

    def test_alternate(self):
        report = verify_scaled_form(alternate(), IntegerWindow(100))
        assert report.ok and report.scale == -1

    def test_non_distributive_rejected(self):
        report = verify_scaled_form(lambda n, m: n * m + 1, IntegerWindow(10))
        assert not report.ok
        assert report.rejected
        assert report.scale is None
        assert report.rejection is not None

    def test_distributive_but_unscaled_is_impossible_on_true_bilinear(self):
        # a multiplication that is distributive on the window but not of
        # scaled form cannot exist over the integers; simulate the report
        # path with a dishonest function that breaks far from the origin
        def sneaky(n, m):
            if abs(n) > 40 or abs(m) > 40:
                return 0
            return n * m

        report = verify_scaled_form(sneaky, IntegerWindow(8), samples=64)
        assert report.ok  # looks scaled inside the small window
        wide = verify_scaled_form(sneaky, IntegerWindow(60), samples=64)
        assert not wide.ok

    def test_recovers_every_scale_up_to_50(self):
        window = IntegerWindow(200)
        for a in range(-50, 51):
            report = verify_scaled_form(make_scaled(a), window, samples=32)
            assert report.ok and report.scale == a


class TestSignExtension:
    # distributivity alone forces mul(-n, m) = -mul(n, m) and mul(0, m) = 0;
    # the window verification must therefore hold on all four quadrants,
    # not just positive arguments
    def test_negatives_follow_from_additivity(self):
        for mul in (make_scaled(4), alternate(), lambda n, m: 0):
            for n in range(0, 61):
                for m in range(-30, 31):
                    assert mul(-n, m) == -mul(n, m)
                    assert mul(m, -n) == -mul(m, n)
            assert mul(0, 17) == 0 and mul(17, 0) == 0

    def test_window_verification_covers_all_quadrants(self):
        seen = set()

        def spy(n, m):
            seen.add((n > 0, m > 0))
            return 3 * n * m

        report = verify_scaled_form(spy, IntegerWindow(20), samples=16)
        assert report.ok
        assert seen == {(True, True), (True, False), (False, True), (False, False)}


class TestScaleRing:
    def test_scaling_usual_mod_6(self):
        ring = usual_cyclic_ring(6)
        spec = ring.group
        scaled = scale_ring(ring, spec.element(5))
        assert scaled.eval(spec.element(2), spec.element(3)) == spec.element(0)
        # exhaustive table oracle: the scaled product is 5*x*y mod 6
        for x in range(6):
            for y in range(6):
                expected = spec.element(5 * x * y)
                assert scaled.eval(spec.element(x), spec.element(y)) == expected

    def test_scale_by_unit_returns_same_multiplication(self):
        ring = usual_cyclic_ring(7)
        scaled = scale_ring(ring, ring.unit)
        assert scaled.table == ring.mult.table

    def test_scale_by_zero_gives_zero_multiplication(self):
        ring = usual_cyclic_ring(5)
        spec = ring.group
        scaled = scale_ring(ring, spec.zero())
        for g in all_elements(spec):
            for h in all_elements(spec):
                assert scaled.eval(g, h) == spec.zero()

    def test_result_is_associative(self):
        from ringrigidity import check_associativity

        ring = usual_cyclic_ring(9)
        for a in all_elements(ring.group):
            assert check_associativity(scale_ring(ring, a))

    def test_noncentral_scale_rejected(self):
        # dig a noncommutative associative multiplication out of the census
        spec = GroupSpec((2, 2))
        noncomm = [
            ring
            for ring in enumerate_multiplications(spec, SearchConfig())
            if not ring.commutative
        ]
        assert noncomm, "census should contain noncommutative structures"
        tripped = False
        for ring in noncomm:
            for a in all_elements(spec):
                central = all(
                    ring.mult.eval(a, g) == ring.mult.eval(g, a)
                    for g in all_elements(spec)
                )
                if central:
                    scale_ring(ring, a)  # must be accepted
                else:
                    with pytest.raises(UsageError, match="not central"):
                        scale_ring(ring, a)
                    tripped = True
        assert tripped

    def test_non_associative_base_rejected(self):
        spec = GroupSpec((2, 2))
        candidates = [
            ring
            for ring in enumerate_multiplications(spec, SearchConfig())
            if ring.commutative
        ]
        fake = RingStructure(
            group=spec,
            mult=candidates[0].mult,
            associative=False,
            commutative=True,
            unit=None,
        )
        with pytest.raises(UsageError):
            scale_ring(fake, spec.zero())


class TestPm1UnitProperty:
    @pytest.mark.parametrize("modulus,expected", [
        (2, True), (3, True), (4, True), (6, True),
        (5, False), (7, False), (8, False), (12, False),
    ])
    def test_cyclic_rings(self, modulus, expected):
        assert has_pm1_unit_property(usual_cyclic_ring(modulus)) is expected

    def test_violation_witness_mod_5(self):
        ring = usual_cyclic_ring(5)
        witness = find_pm1_violation(ring)
        assert witness is not None
        a, u = witness
        assert ring.mult.eval(a, u) == ring.unit
        assert a.coords[0] not in (1, 4)

    def test_violation_witness_mod_8(self):
        # 3*3 = 9 = 1 mod 8 with 3 outside {1, 7}
        witness = find_pm1_violation(usual_cyclic_ring(8))
        assert witness is not None

    def test_needs_unit(self):
        spec = GroupSpec((4,))
        zero_ring = RingStructure.from_constants(
            __import__("ringrigidity").cyclic_constants(4, 0)
        )
        assert zero_ring.unit is None
        with pytest.raises(UsageError):
            has_pm1_unit_property(zero_ring)


class TestScaledUnitality:
    @pytest.mark.parametrize("modulus", [2, 3, 4, 6])
    def test_good_base_rings(self, modulus):
        ring = usual_cyclic_ring(modulus)
        entries = check_scaled_unitality(ring)
        assert len(entries) == modulus
        unital = sorted(e.scale.coords[0] for e in entries if e.unit is not None)
        assert unital == sorted({1, modulus - 1})
        # the unit of the scaled ring is the scale itself here
        for e in entries:
            if e.unit is not None:
                assert e.unit == e.scale

    @pytest.mark.parametrize("modulus", [5, 7, 8, 12])
    def test_precondition_rejected(self, modulus):
        with pytest.raises(UsageError, match="precondition"):
            check_scaled_unitality(usual_cyclic_ring(modulus))

    def test_diagnostic_sweep_mod_5(self):
        # without the reciprocal-pair hypothesis, every nonzero scale is
        # invertible mod 5 and so every scaled ring is unital
        entries = scaled_unit_sweep(usual_cyclic_ring(5))
        unital = sorted(e.scale.coords[0] for e in entries if e.unit is not None)
        assert unital == [1, 2, 3, 4]

    def test_diagnostic_sweep_mod_8(self):
        entries = scaled_unit_sweep(usual_cyclic_ring(8))
        unital = sorted(e.scale.coords[0] for e in entries if e.unit is not None)
        assert unital == [1, 3, 5, 7]

    def test_sweep_units_verified(self):
        ring = usual_cyclic_ring(6)
        for entry in scaled_unit_sweep(ring):
            if entry.unit is None:
                continue
            scaled = scale_ring(ring, entry.scale)
            for g in all_elements(ring.group):
                assert scaled.eval(entry.unit, g) == g

    def test_klein_field_fails_rule(self):
        # the four-element field has units {1, w, w^2} but 1 is its own
        # negative, so a*u = 1 admits (w, w^2): property fails
        from test_structures import klein_field_constants

        ring = RingStructure.from_constants(klein_field_constants())
        assert not has_pm1_unit_property(ring)
        entries = scaled_unit_sweep(ring)
        unital = [e.scale for e in entries if e.unit is not None]
        assert len(unital) == 3  # every nonzero element of a field


class TestInvariantGuard:
    def test_violation_raised_if_flags_lie(self):
        # hand-build a ring whose commutative flag is wrong and confirm the
        # checked path refuses to treat it as a valid base
        spec = GroupSpec((2, 2))
        asym = None
        for ring in enumerate_multiplications(spec, SearchConfig()):
            if not ring.commutative:
                asym = ring
                break
        lying = RingStructure(
            group=spec,
            mult=asym.mult,
            associative=True,
            commutative=True,
            unit=asym.unit,
        )
        with pytest.raises((UsageError, InvariantViolation)):
            check_scaled_unitality(lying)
