"""Projective-cone delta invariants, iterated cones over hypersurfaces, and
branched-cover cones."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanodelta import (
    PROOF_FULL,
    PROOF_UPPER_BOUND,
    BranchedConeSpec,
    ConeBoundary,
    DeltaKnowledge,
    DomainError,
    FanoBase,
    HypersurfaceConeSpec,
    branched_cone_delta,
    branched_side_condition_failures,
    branched_slope,
    centroid_phi,
    cone_bundle_consistency,
    cone_delta,
    iterated_hypersurface_chain,
    iterated_hypersurface_delta,
)

dims = st.integers(min_value=1, max_value=6)
slopes = st.fractions(min_value=Fraction(1, 4), max_value=6, max_denominator=8)
cone_coeffs = st.fractions(min_value=0, max_value=Fraction(9, 10), max_denominator=10)
delta_values = st.fractions(min_value=Fraction(1, 10), max_value=3, max_denominator=12)


class TestFrozenConeValues:
    def test_quadric_cone_surface(self):
        b = cone_delta(FanoBase(1, 1, DeltaKnowledge.exact(1)))
        assert b.value == Fraction(3, 4)
        assert b.v0_branch == Fraction(3, 4)
        assert b.vinf_branch == Fraction(3, 2)
        assert b.proof_coverage == PROOF_FULL

    def test_cone_over_cubic_surface(self):
        b = cone_delta(FanoBase(2, 1, DeltaKnowledge.at_least_one()))
        assert b.value == Fraction(2, 3)
        assert b.minimizers == ("V0",)
        assert not b.lower_bound_only

    def test_vertex_weight_shifts_branches(self):
        # n=1, r=1/2, c=3/4: B = r+1-c = 3/4, K = 3*(1/2)/(2*(3/4)) = 1.
        b = cone_delta(
            FanoBase(1, Fraction(1, 2), DeltaKnowledge.at_least_one()),
            ConeBoundary(Fraction(3, 4)),
        )
        assert b.value == 1
        assert b.v0_branch == 1
        assert b.vinf_branch == 1

    def test_vertex_weight_can_flip_the_minimizer(self):
        b = cone_delta(
            FanoBase(1, Fraction(1, 2), DeltaKnowledge.at_least_one()),
            ConeBoundary(Fraction(7, 8)),
        )
        assert b.v0_branch == Fraction(6, 5)
        assert b.vinf_branch == Fraction(3, 5)
        assert b.value == Fraction(3, 5)
        assert b.minimizers == ("Vinf",)

    def test_proof_coverage_flag(self):
        assert (
            cone_delta(FanoBase(2, 3, DeltaKnowledge.exact(1))).proof_coverage
            == PROOF_FULL
        )
        high = cone_delta(FanoBase(2, 4, DeltaKnowledge.exact(1)))
        assert high.proof_coverage == PROOF_UPPER_BOUND

    def test_json_shape_includes_cone_extras(self):
        d = cone_delta(FanoBase(1, 1, DeltaKnowledge.exact(1))).to_json_dict()
        assert d["value"] == "3/4"
        assert d["r_effective"] == "1"
        assert d["proof_coverage"] == "full"


class TestConeStructure:
    @settings(max_examples=200)
    @given(dims, slopes, cone_coeffs, delta_values)
    def test_value_at_most_one_for_semistable_base(self, n, r, c, dv):
        # With delta(V) <= 1 and r <= n+1, the cone can never beat delta = 1;
        # equality needs the extreme corner r = n+1, delta = 1, c = 0.
        if r > n + 1 or dv > 1:
            return
        b = cone_delta(FanoBase(n, r, DeltaKnowledge.exact(dv)), ConeBoundary(c))
        assert b.value <= 1
        if r < n + 1 or dv < 1:
            assert b.value < 1

    @settings(max_examples=200)
    @given(dims, slopes, cone_coeffs)
    def test_infinity_branch_matches_centroid_form(self, n, r, c):
        # The Vinf branch is (1-c)/(B - Phi(0, B, n)) with B = r+1-c.
        b = cone_delta(FanoBase(n, r, DeltaKnowledge.at_least_one()), ConeBoundary(c))
        B = r + 1 - c
        assert b.vinf_branch == (1 - c) / (B - centroid_phi(0, B, n))

    @settings(max_examples=200)
    @given(dims, slopes, cone_coeffs, delta_values)
    def test_base_branch_is_delta_times_the_vertex_branch(self, n, r, c, dv):
        # Scaling delta(V) moves only the base-divisor branch; the vertex
        # branch (log discrepancy over S of the vertex blowup) is fixed.
        unit = cone_delta(FanoBase(n, r, DeltaKnowledge.exact(1)), ConeBoundary(c))
        scaled = cone_delta(FanoBase(n, r, DeltaKnowledge.exact(dv)), ConeBoundary(c))
        assert scaled.base_branch == dv * unit.v0_branch
        assert scaled.v0_branch == unit.v0_branch
        assert scaled.vinf_branch == unit.vinf_branch

    def test_vertex_weight_guard(self):
        with pytest.raises(DomainError, match="0 <= c < 1"):
            cone_delta(FanoBase(1, 1, DeltaKnowledge.exact(1)), ConeBoundary(1))


class TestConeBundleConsistency:
    def test_exact_match_on_a_grid(self):
        for n in (1, 2, 3, 4, 5, 6):
            for r in (Fraction(1, 2), 1, Fraction(3, 2), 2, 3):
                for c in (0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
                    report = cone_bundle_consistency(
                        FanoBase(n, r, DeltaKnowledge.exact(1)), c
                    )
                    assert report.matches, (n, r, c, report.to_json_dict())

    @settings(max_examples=150)
    @given(dims, slopes, cone_coeffs, delta_values)
    def test_exact_match_generically(self, n, r, c, dv):
        report = cone_bundle_consistency(FanoBase(n, r, DeltaKnowledge.exact(dv)), c)
        assert report.matches

    def test_report_shape(self):
        report = cone_bundle_consistency(FanoBase(1, 1, DeltaKnowledge.exact(1)), 0)
        d = report.to_json_dict()
        assert d["matches"] is True
        assert d["bundle_route"] == d["cone_route"] == ["3/4", "3/4", "3/2"]


class TestIteratedHypersurfaceCones:
    def test_single_step_equals_cone_delta(self):
        spec = HypersurfaceConeSpec(2, 3, 1, DeltaKnowledge.at_least_one())
        base = FanoBase(2, spec.r0, DeltaKnowledge.at_least_one())
        assert iterated_hypersurface_delta(spec) == cone_delta(base).value

    def test_cubic_surface_tower(self):
        expected = {
            1: Fraction(2, 3),
            2: Fraction(5, 9),
            3: Fraction(1, 2),
            4: Fraction(7, 15),
        }
        for i, value in expected.items():
            spec = HypersurfaceConeSpec(2, 3, i, DeltaKnowledge.at_least_one())
            assert iterated_hypersurface_delta(spec) == value, i

    def test_quadric_towers(self):
        spec = HypersurfaceConeSpec(2, 2, 1, DeltaKnowledge.at_least_one())
        assert iterated_hypersurface_delta(spec) == Fraction(8, 9)
        spec = HypersurfaceConeSpec(3, 2, 1, DeltaKnowledge.at_least_one())
        assert iterated_hypersurface_delta(spec) == Fraction(15, 16)

    def test_low_starting_delta_propagates(self):
        spec = HypersurfaceConeSpec(2, 3, 1, DeltaKnowledge.exact(Fraction(1, 2)))
        # first factor is min(delta0, 1) * (n+2) r0 / ((n+1)(r0+1)) with r0 = 1
        assert iterated_hypersurface_delta(spec) == Fraction(1, 3)

    def test_chain_records_each_step(self):
        spec = HypersurfaceConeSpec(2, 3, 3, DeltaKnowledge.at_least_one())
        chain = iterated_hypersurface_chain(spec)
        assert [step.value for step in chain] == [
            Fraction(2, 3),
            Fraction(5, 9),
            Fraction(1, 2),
        ]
        assert all(step.proof_coverage == PROOF_FULL for step in chain)

    def test_closed_form_matches_composition_on_the_full_grid(self):
        for n in range(1, 5):
            for d in range(2, n + 2):
                for i in range(1, 5):
                    spec = HypersurfaceConeSpec(n, d, i, DeltaKnowledge.at_least_one())
                    value = iterated_hypersurface_delta(spec)
                    closed = (
                        Fraction((n + 2 - d) * (n + 1 + i), (n + 1) * (n + 2 + i - d))
                    )
                    assert value == closed, (n, d, i)

    def test_degree_window_guard(self):
        with pytest.raises(DomainError):
            HypersurfaceConeSpec(2, 4, 1, DeltaKnowledge.at_least_one())
        with pytest.raises(DomainError):
            HypersurfaceConeSpec(2, 1, 1, DeltaKnowledge.at_least_one())


class TestBranchedCones:
    def test_double_cover_of_the_cubic(self):
        spec = BranchedConeSpec(2, 2, 3, 1)
        assert spec.r == 3
        b = branched_cone_delta(spec)
        assert b.value == 1
        assert set(b.minimizers) == {"V0", "Vinf"}
        assert b.proof_coverage == PROOF_FULL

    def test_curve_case(self):
        spec = BranchedConeSpec(1, 2, 3, 1)
        assert spec.r == 1
        assert branched_cone_delta(spec).value == Fraction(3, 4)

    def test_double_cover_family_in_odd_dimension(self):
        # k=2, d=n+2, l=1 for odd n: slope n and value n(n+2)/(n+1)^2.
        for n in (1, 3, 5):
            spec = BranchedConeSpec(n, 2, n + 2, 1)
            assert spec.r == n
            b = branched_cone_delta(spec)
            assert b.value == Fraction(n * (n + 2), (n + 1) ** 2)
            assert b.value < 1

    def test_explicit_delta_pair_overrides_the_default(self):
        spec = BranchedConeSpec(2, 2, 3, 1)
        b = branched_cone_delta(spec, DeltaKnowledge.exact(Fraction(1, 2)))
        assert b.value == Fraction(1, 2)

    def test_default_requires_the_degree_window(self):
        # d outside [n+1, n+2] has no default semistability guarantee.
        spec = BranchedConeSpec(3, 3, 2, 2)
        assert spec.r == 8
        with pytest.raises(DomainError, match="delta_pair"):
            branched_cone_delta(spec)
        b = branched_cone_delta(spec, DeltaKnowledge.at_least_one())
        assert b.proof_coverage == PROOF_UPPER_BOUND

    def test_side_condition_failures_are_reported_individually(self):
        msgs = branched_side_condition_failures(2, 4, 3, 2)
        assert any("gcd" in m for m in msgs)
        msgs = branched_side_condition_failures(2, 2, 3, 2)
        assert any("l < k" not in m and "l" in m for m in msgs) or msgs

    def test_constructor_rejects_bad_side_conditions(self):
        with pytest.raises(DomainError):
            BranchedConeSpec(2, 4, 3, 2)  # gcd(4,2) = 2
        with pytest.raises(DomainError):
            BranchedConeSpec(2, 2, 3, 3)  # l >= k
        with pytest.raises(DomainError):
            BranchedConeSpec(2, 3, 3, 1)  # k does not divide d*l-1 = 2

    def test_slope_formula(self):
        assert branched_slope(2, 2, 3) == 3
        assert branched_slope(1, 2, 3) == 1
        assert branched_slope(3, 3, 2) == 8

    def test_constructor_agrees_with_the_failure_scan(self):
        # Exhaustive small scan: the constructor accepts exactly the tuples
        # with an empty failure list.
        for n in (1, 2, 3):
            for k in range(2, 13):
                for d in range(1, 15):
                    for l in range(1, k):
                        failures = branched_side_condition_failures(n, k, d, l)
                        if failures:
                            with pytest.raises(DomainError):
                                BranchedConeSpec(n, k, d, l)
                        else:
                            spec = BranchedConeSpec(n, k, d, l)
                            assert spec.r == (n + 1) * k - (k - 1) * d > 0

    def test_side_conditions_surface_in_the_breakdown(self):
        b = branched_cone_delta(BranchedConeSpec(2, 2, 3, 1))
        assert b.side_conditions is not None
        assert any("gcd" in s for s in b.side_conditions)
        d = b.to_json_dict()
        assert "side_conditions" in d
