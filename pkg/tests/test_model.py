"""Power-law fitting, normalization, evaluation, and the reference table."""

import mpmath
import numpy as np
import pytest

from tricount.model import (SNAP_EXPONENTS, SOA_MODEL, PowerLawFit,
                            ReferenceModel, compare, evaluate_rate,
                            evaluate_time, fit_power_law, normalize,
                            reference_table)


def sample_model(n1, beta, n_values):
    return [(ne, (ne / n1) ** beta) for ne in n_values]


GRID_1E4_TO_1E9 = [10.0 ** k for k in range(4, 10)]


class TestFit:
    def test_recovers_soa_exactly(self):
        fit = fit_power_law(sample_model(1e8, 4.0 / 3.0, GRID_1E4_TO_1E9))
        assert fit.beta == pytest.approx(4.0 / 3.0, abs=1e-9)
        assert fit.n1 == pytest.approx(1e8, rel=1e-6)
        assert fit.residual_rms < 1e-12
        assert fit.num_points == 6
        assert not fit.snapped

    def test_two_point_line(self):
        fit = fit_power_law([(10.0, 10.0), (100.0, 100.0)])
        assert fit.alpha == pytest.approx(1.0, rel=1e-12)
        assert fit.beta == pytest.approx(1.0, abs=1e-12)
        assert fit.n1 == pytest.approx(1.0, rel=1e-12)

    def test_recovers_published_row(self):
        # Pearce-LLNL-2017 coefficients: N_1 = 2e8, beta = 4/3.
        fit = fit_power_law(sample_model(2e8, 4.0 / 3.0, GRID_1E4_TO_1E9))
        assert fit.n1 == pytest.approx(2e8, rel=1e-6)

    def test_underdetermined(self):
        with pytest.raises(ValueError):
            fit_power_law([(10.0, 1.0)])
        with pytest.raises(ValueError):
            fit_power_law([(10.0, 1.0), (10.0, 2.0)])

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            fit_power_law([(10.0, 1.0), (-5.0, 2.0)])
        with pytest.raises(ValueError):
            fit_power_law([(10.0, 0.0), (20.0, 2.0)])

    def test_snap_picks_nearest_exponent(self):
        rng = np.random.default_rng(8)
        pts = [(ne, (ne / 1e7) ** (4.0 / 3.0) * 10 ** rng.normal(0, 0.01))
               for ne in GRID_1E4_TO_1E9]
        fit = fit_power_law(pts, snap=True)
        assert fit.snapped
        assert fit.beta == 4.0 / 3.0
        assert fit.n1 == pytest.approx(1e7, rel=0.1)

    def test_snap_grid(self):
        assert SNAP_EXPONENTS == (1.0, 4.0 / 3.0, 5.0 / 3.0)

    def test_scale_equivariance(self):
        pts = sample_model(1e6, 1.5, GRID_1E4_TO_1E9)
        scaled = [(ne, 7.0 * t) for ne, t in pts]
        base = fit_power_law(pts)
        new = fit_power_law(scaled)
        assert new.beta == pytest.approx(base.beta, rel=1e-12)
        assert new.alpha == pytest.approx(7.0 * base.alpha, rel=1e-9)

    def test_identity_round_trip(self):
        fit = fit_power_law(sample_model(3e7, 4.0 / 3.0, GRID_1E4_TO_1E9))
        assert fit.n1 ** (-fit.beta) == pytest.approx(fit.alpha, rel=1e-12)

    def test_positive_coefficients_enforced(self):
        with pytest.raises(ValueError):
            PowerLawFit(alpha=-1.0, beta=1.0, n1=1.0, residual_rms=0.0,
                        num_points=2)


class TestNormalize:
    def test_alpha_one(self):
        assert normalize(1.0, 2.7) == 1.0

    def test_beta_one(self):
        assert normalize(4.0, 1.0) == pytest.approx(0.25, rel=1e-12)

    def test_published_row_identity(self):
        alpha = (2e8) ** (-4.0 / 3.0)
        assert normalize(alpha, 4.0 / 3.0) == pytest.approx(2e8, rel=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            normalize(1.0, 0.0)
        with pytest.raises(ValueError):
            normalize(0.0, 1.0)


class TestEvaluate:
    def test_soa_at_1e8_is_one_second(self):
        assert evaluate_time(SOA_MODEL, 1e8) == pytest.approx(1.0, rel=1e-12)
        assert evaluate_rate(SOA_MODEL, 1e8) == pytest.approx(1e8, rel=1e-12)

    def test_time_at_n1_is_one_second_any_model(self):
        for ref in reference_table():
            assert evaluate_time(ref, ref.n1) == pytest.approx(1.0, rel=1e-12)
            assert evaluate_rate(ref, ref.n1) == pytest.approx(ref.n1,
                                                               rel=1e-12)

    def test_soa_rate_closed_form(self):
        for ne in np.logspace(4, 11, 20):
            closed = 1e8 / (ne / 1e8) ** (1.0 / 3.0)
            assert evaluate_rate(SOA_MODEL, ne) == pytest.approx(closed,
                                                                 rel=1e-12)

    def test_soa_rate_halves_at_eight_x(self):
        assert evaluate_rate(SOA_MODEL, 8e8) == pytest.approx(0.5e8,
                                                              rel=1e-12)

    def test_steep_row_against_high_precision(self):
        # Hutchison-UWash-2017 at its largest fitted size, recomputed with
        # 50-digit arithmetic.
        ref = next(r for r in reference_table()
                   if r.label == "Hutchison-UWash-2017")
        got = evaluate_time(ref, ref.max_ne)
        with mpmath.workdps(50):
            want = float(mpmath.power(mpmath.mpf("1.6e7") / mpmath.mpf("3e4"),
                                      mpmath.mpf(5) / 3))
        assert got == pytest.approx(want, rel=1e-12)

    def test_rate_times_time_is_ne(self):
        for ref in reference_table():
            for ne in (1e5, 1e7, 1e9):
                product = evaluate_rate(ref, ne) * evaluate_time(ref, ne)
                assert product == pytest.approx(ne, rel=1e-12)

    def test_array_evaluation(self):
        grid = np.array([1e6, 1e8])
        times = evaluate_time(SOA_MODEL, grid)
        assert times.shape == (2,)
        assert times[1] == pytest.approx(1.0, rel=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            evaluate_time(SOA_MODEL, 0.0)


class TestReferenceTable:
    # (label, max_ne, n1, beta) of every published submission row.
    EXPECTED = [
        ("Bisson-Nvidia-2017", 1.5e9, 3e7, 4.0 / 3.0),
        ("Pearce-LLNL-2017", 2.7e11, 2e8, 4.0 / 3.0),
        ("Voegele-UTAustin-2017", 1.8e9, 3e7, 4.0 / 3.0),
        ("Wolf-Sandia-2017", 1.8e9, 3e7, 4.0 / 3.0),
        ("Hu-GWU-2017", 3.4e10, 5e7, 4.0 / 3.0),
        ("Smith-UMN-2017", 1.2e9, 1e6, 1.0),
        ("Tom-UMN-2017", 1.8e9, 5e7, 1.0),
        ("Date-UIUC-2017", 2.6e8, 3e6, 4.0 / 3.0),
        ("Hutchison-UWash-2017", 1.6e7, 3e4, 5.0 / 3.0),
        ("Low-CMU-2017", 1.8e9, 1e8, 1.0),
        ("Mowlaei-UPitt-2017", 1.8e9, 5e7, 1.0),
    ]

    def test_row_count(self):
        refs = reference_table()
        assert len(refs) == 12  # 11 published rows + state of the art

    def test_rows_verbatim(self):
        refs = {r.label: r for r in reference_table()}
        for label, max_ne, n1, beta in self.EXPECTED:
            assert refs[label].max_ne == max_ne
            assert refs[label].n1 == n1
            assert refs[label].beta == beta

    def test_soa_row(self):
        assert SOA_MODEL.n1 == 1e8
        assert SOA_MODEL.beta == 4.0 / 3.0
        assert reference_table()[-1] == SOA_MODEL

    def test_normalize_round_trip_every_row(self):
        for ref in reference_table():
            alpha = ref.n1 ** (-ref.beta)
            assert normalize(alpha, ref.beta) == pytest.approx(ref.n1,
                                                               rel=1e-12)


class TestCompare:
    def test_fit_equal_to_soa_has_unit_ratio(self):
        alpha = 1e8 ** (-4.0 / 3.0)
        fit = PowerLawFit(alpha=alpha, beta=4.0 / 3.0,
                          n1=normalize(alpha, 4.0 / 3.0), residual_rms=0.0,
                          num_points=6)
        curves = compare(fit, [SOA_MODEL], np.logspace(5, 10, 7))
        ratios = curves[0].time_vs_soa
        assert np.allclose(ratios, 1.0, rtol=1e-12)

    def test_fixed_offset_ratio(self):
        # n1 = 1e7 with the same exponent sits at a constant 10^{4/3} above
        # the state-of-the-art time at every grid point.
        alpha = 1e7 ** (-4.0 / 3.0)
        fit = PowerLawFit(alpha=alpha, beta=4.0 / 3.0,
                          n1=normalize(alpha, 4.0 / 3.0), residual_rms=0.0,
                          num_points=2)
        curves = compare(fit, [], np.array([1e6, 1e8, 1e10]))
        assert np.allclose(curves[0].time_vs_soa, 10.0 ** (4.0 / 3.0),
                           rtol=1e-12)

    def test_full_table_grid_shape(self):
        curves = compare(None, reference_table(), np.array([1e6, 1e8]))
        assert len(curves) == 12
        assert all(c.n_e.shape == (2,) for c in curves)

    def test_single_point_grid(self):
        curves = compare(None, [SOA_MODEL], 1e8)
        assert curves[0].time_s.shape == (1,)
        assert curves[0].time_s[0] == pytest.approx(1.0, rel=1e-12)

    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError):
            compare(None, [SOA_MODEL], np.array([]))
