import math

import pytest

from harmfrac import (
    STANDARD_GRID,
    ClassParams,
    DiskGrid,
    HarmonicFunction,
    NegativeCoefficientForm,
    coefficient_deficiency,
    extreme_point_analytic,
    extreme_point_coanalytic,
    find_necessity_witness,
    min_real_functional,
    radial_deficiency,
    random_member,
    random_violator,
    verify_necessity,
    verify_sufficiency,
)

P0 = ClassParams(beta=0.5)


class TestDiskGrid:
    def test_validation(self):
        with pytest.raises(ValueError):
            DiskGrid(radii=(0.5, 0.3), angles=16)
        with pytest.raises(ValueError):
            DiskGrid(radii=(0.5, 1.0), angles=16)
        with pytest.raises(ValueError):
            DiskGrid(radii=(0.5,), angles=4)

    def test_standard(self):
        assert STANDARD_GRID.angles == 128
        assert max(STANDARD_GRID.radii) == 0.995
        assert len(list(STANDARD_GRID.points())) == len(STANDARD_GRID.radii) * 128


class TestMinRealFunctional:
    def test_identity_constant(self):
        low, pt = min_real_functional(HarmonicFunction(), P0)
        assert low == 1
        first = next(STANDARD_GRID.points())
        assert pt.r == first.r and pt.theta == first.theta

    def test_analytic_closed_form(self):
        # Re = 1 - 0.2 r cos(theta), minimized at theta = 0, largest radius
        low, pt = min_real_functional(HarmonicFunction(a={2: -0.2}), P0)
        assert low == pytest.approx(1 - 0.2 * 0.995)
        assert pt.theta == pytest.approx(0.0)
        assert pt.r == pytest.approx(0.995)

    def test_coanalytic_closed_form(self):
        # Re = 1 + 0.3 cos(2 theta), minimized where conj(z)/z = -1
        low, pt = min_real_functional(HarmonicFunction(b={1: 0.3}), P0)
        assert low == pytest.approx(0.7)
        assert pt.theta == pytest.approx(math.pi / 2)

    def test_monotone_under_refinement(self):
        f = HarmonicFunction(a={2: -0.3, 4: 0.1j}, b={1: 0.2})
        p = ClassParams(beta=0.2, lam=1.1, k=0.4, nu=0.3)
        coarse = DiskGrid(radii=(0.3, 0.6, 0.9), angles=16)
        fine = DiskGrid(radii=(0.2, 0.3, 0.6, 0.8, 0.9, 0.95), angles=64)
        low_c, _ = min_real_functional(f, p, coarse)
        low_f, _ = min_real_functional(f, p, fine)
        assert low_f <= low_c


class TestRandomMember:
    @pytest.mark.parametrize("seed", [0, 7, 12345])
    def test_deterministic(self, seed):
        assert random_member(P0, seed) == random_member(P0, seed)

    @pytest.mark.parametrize("seed", range(50))
    def test_positive_deficiency(self, seed):
        p = ClassParams(beta=0.5, lam=1, k=1)
        f = random_member(p, seed)
        assert coefficient_deficiency(f, p) > 0
        assert not f.univalence_violated

    def test_magnitude_cap(self):
        p = ClassParams(beta=0.0, lam=0.9, k=0.1)
        for seed in range(30):
            f = random_member(p, seed, cap_magnitudes=0.95)
            assert all(m < 1 for m in f.a_abs.values())
            assert all(m < 1 for m in f.b_abs.values())

    def test_skips_degenerate_weights(self):
        # weight of b_1 is zero at lam = 0.5, k = 0
        p = ClassParams(beta=0.5, lam=0.5)
        for seed in range(30):
            f = random_member(p, seed)
            assert 1 not in f.b_abs

    def test_bad_args(self):
        with pytest.raises(ValueError):
            random_member(P0, 0, max_index=1)
        with pytest.raises(ValueError):
            random_member(P0, 0, part_mix=1.5)


class TestRandomViolator:
    @pytest.mark.parametrize("seed", range(30))
    def test_deficiency_below_margin(self, seed):
        f = random_violator(P0, seed, margin=0.01)
        assert coefficient_deficiency(f, P0) < -0.01
        assert f.b_abs.get(1, 0.0) < 1


class TestNecessityWitness:
    def test_closed_form_root(self):
        # Q(r) = 0.5 - 0.8 r crosses zero at r = 0.625
        f = NegativeCoefficientForm(a_abs={2: 0.8})
        r0 = find_necessity_witness(f, P0)
        assert r0 is not None and r0 > 0.625

    def test_boundary_has_no_witness(self):
        f = NegativeCoefficientForm(a_abs={2: 0.5})
        with pytest.raises(ValueError):
            find_necessity_witness(f, P0)
        # Q stays positive all the way up the ladder
        assert radial_deficiency(f, P0, 1 - 1e-8) > 0

    def test_radius_independent_term(self):
        # Q(r) = 0.5 - 0.9 independent of r: first ladder radius witnesses
        f = NegativeCoefficientForm(b_abs={1: 0.9})
        assert find_necessity_witness(f, P0) == pytest.approx(0.9)

    def test_requires_violator(self):
        with pytest.raises(ValueError):
            find_necessity_witness(NegativeCoefficientForm(a_abs={2: 0.1}), P0)


class TestBoundaryRadialBehavior:
    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_analytic_extreme_points(self, n):
        for p in (P0, ClassParams(beta=0.1, lam=1.2, k=0.5, nu=0.4)):
            q = radial_deficiency(extreme_point_analytic(n, p), p, 1 - 1e-8)
            assert 0 < q < 1e-6

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_coanalytic_extreme_points(self, n):
        for p in (P0, ClassParams(beta=0.1, lam=1.2, k=0.5, nu=0.4)):
            q = radial_deficiency(extreme_point_coanalytic(n, p), p, 1 - 1e-8)
            assert 0 < q < 1e-6

    def test_degree_one_is_radius_free(self):
        # conj(z)/z has modulus 1 at every radius: the radial expression is
        # identically the deficiency, here exactly 0
        f = extreme_point_coanalytic(1, P0)
        for r in (0.5, 0.9, 1 - 1e-8):
            assert radial_deficiency(f, P0, r) == pytest.approx(0.0, abs=1e-15)


class TestSuites:
    def test_sufficiency_small_run(self):
        rep = verify_sufficiency(P0, cases=20, seed=3)
        assert rep.all_passed
        assert rep.worst_margin > 0
        assert rep.witness is None

    def test_sufficiency_deterministic(self):
        a = verify_sufficiency(P0, cases=10, seed=42)
        b = verify_sufficiency(P0, cases=10, seed=42)
        assert a == b

    def test_necessity_small_run(self):
        rep = verify_necessity(P0, cases=20, seed=3)
        assert rep.all_passed
        assert rep.witness is None

    def test_report_json_round_trips(self):
        import json

        rep = verify_sufficiency(P0, cases=2, seed=0)
        doc = json.loads(rep.to_json())
        assert doc["suite"] == "sufficiency"
        assert doc["cases_run"] == 2
        assert doc["cases_passed"] == 2
        assert doc["seed"] == 0

    def test_cases_precondition(self):
        with pytest.raises(ValueError):
            verify_sufficiency(P0, cases=0)
        with pytest.raises(ValueError):
            verify_necessity(P0, cases=0)
