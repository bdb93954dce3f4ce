import math

import numpy as np
import pytest

from dftlab import semiclassics as sc
from dftlab.errors import (
    CoverageError,
    InternalConsistencyError,
    InvalidInputError,
    ResolutionError,
)


def test_potential_validation():
    with pytest.raises(InvalidInputError):
        sc.Potential1D(0.0, np.zeros(10))
    with pytest.raises(InvalidInputError):
        sc.Potential1D(1.0, np.zeros(2))
    with pytest.raises(InvalidInputError):
        sc.Potential1D(1.0, np.array([0.0, np.inf, 0.0]))


def test_analytic_box_levels():
    p = sc.box_potential(1.0, 101)
    s = sc.exact_levels_1d(p, 5, method="analytic")
    expected = np.array([1, 4, 9, 16, 25]) * math.pi**2 / 2.0
    assert np.allclose(s.eigenvalues, expected, rtol=0, atol=1e-12)


def test_finite_difference_levels_match_analytic():
    p = sc.box_potential(1.0, 801)
    fd = sc.exact_levels_1d(p, 10).eigenvalues
    exact = np.arange(1, 11) ** 2 * math.pi**2 / 2.0
    # FD error ~ eps * (k h)^2 / 12
    assert np.all(np.abs(fd - exact) / exact < 2e-4)


def test_finite_difference_second_order_convergence():
    exact = math.pi**2 / 2.0 * 9.0  # third level
    errs = []
    ms = [200, 400, 800]
    for m in ms:
        fd = sc.exact_levels_1d(sc.box_potential(1.0, m), 3).eigenvalues[2]
        errs.append(abs(fd - exact))
    slope = np.polyfit(np.log(ms), np.log(errs), 1)[0]
    assert -slope == pytest.approx(2.0, abs=0.1)


def test_constant_shift_gauge():
    p0 = sc.box_potential(1.0, 401)
    p7 = sc.Potential1D(1.0, np.full(401, 7.0))
    e0 = sc.exact_levels_1d(p0, 5).eigenvalues
    e7 = sc.exact_levels_1d(p7, 5).eigenvalues
    assert np.allclose(e7 - e0, 7.0, atol=1e-10)


def test_harmonic_levels_against_richardson_oracle():
    # independent oracle: FD at two resolutions, Richardson-extrapolated
    def fd_levels(m):
        x = np.linspace(0, 1, m + 2)[1:-1]
        return sc.exact_levels_1d(sc.Potential1D(1.0, 50.0 * (x - 0.5) ** 2), 4).eigenvalues

    coarse, fine = fd_levels(600), fd_levels(1200)
    extrapolated = fine + (fine - coarse) / 3.0  # second-order scheme
    # the residual error of a doubled grid must be ~1/4 of the fine grid's
    finest = fd_levels(2400)
    assert np.all(np.abs(finest - extrapolated) < 0.3 * np.abs(fine - extrapolated))


def test_classical_count_zero_below_potential_floor():
    x = np.linspace(0, 1, 52)[1:-1]
    p = sc.Potential1D(1.0, 5.0 + 10.0 * x)
    assert sc.staircase_classical_1d(p, 5.0) == 0.0


def test_resolution_guard():
    p = sc.box_potential(1.0, 40)
    with pytest.raises(ResolutionError):
        sc.exact_levels_1d(p, 11)


def test_staircase_exact_counts_and_coverage():
    s = sc.exact_levels_1d(sc.box_potential(1.0, 101), 5, method="analytic")
    e1 = math.pi**2 / 2.0
    assert sc.staircase_exact(s, e1 - 1e-9) == 0
    assert sc.staircase_exact(s, e1) == 1  # levels at eps are included
    assert sc.staircase_exact(s, 4 * e1 + 0.1) == 2
    with pytest.raises(CoverageError):
        sc.staircase_exact(s, 26 * e1)


def test_classical_count_exact_for_flat_box():
    p = sc.box_potential(2.0, 301)
    for eps in (1.0, 10.0, 123.4):
        assert sc.staircase_classical_1d(p, eps) == pytest.approx(
            2.0 * math.sqrt(2.0 * eps) / math.pi, rel=1e-13)


def test_classical_count_against_brute_quadrature():
    # independent check: dense trapezoid on the same piecewise-linear potential
    x = np.linspace(0, 1, 31)[1:-1]
    p = sc.Potential1D(1.0, 40.0 * (x - 0.5) ** 2)
    eps = 25.0
    xe = np.concatenate(([0.0], p.x, [1.0]))
    ve = np.concatenate(([p.values[0]], p.values, [p.values[-1]]))
    xf = np.linspace(0, 1, 2_000_001)
    vf = np.interp(xf, xe, ve)
    ref = math.sqrt(2.0) / math.pi * np.trapezoid(np.sqrt(np.maximum(eps - vf, 0.0)), xf)
    assert sc.staircase_classical_1d(p, eps) == pytest.approx(ref, rel=1e-9)


def test_box_interleaving_bound():
    # |N_cl - N_exact| <= 1 for the flat box (step vs smooth interleaving)
    ev = sc.remainder_scan("box1d", np.linspace(0.0, 500.0, 2001))
    assert np.max(np.abs(ev.r_cl)) <= 1.0 + 1e-9
    assert np.max(np.abs(ev.r_w2)) <= 0.5 + 1e-9


def test_square_count_at_50():
    n_ex, n_cl, n_w2 = sc.staircase_square_2d(50.0)
    assert n_ex == 6.0
    assert n_cl == pytest.approx(50.0 / (2.0 * math.pi), rel=1e-14)
    assert n_w2 == pytest.approx(n_cl - 4.0 * math.sqrt(50.0) / (math.sqrt(8.0) * math.pi),
                                 rel=1e-14)


def test_square_brute_force_count():
    # independent double loop over levels pi^2 (l^2 + m^2) / 2
    for eps in (30.0, 200.0, 777.0):
        count = sum(
            1
            for l in range(1, 60)
            for m in range(1, 60)
            if math.pi**2 * (l * l + m * m) / 2.0 <= eps + 1e-9
        )
        assert sc.staircase_square_2d(eps)[0] == count


def test_square_two_term_beats_one_term():
    grid = np.linspace(500.0, 2000.0, 1501)
    ev = sc.remainder_scan("square2d", grid)
    assert np.mean(np.abs(ev.r_w2)) < np.mean(np.abs(ev.r_cl))


def test_square_two_term_beats_one_term_windowed():
    # window-averaged comparison, width 100, over [500, 2000]
    for lo in np.arange(500.0, 2000.0, 100.0):
        grid = np.linspace(lo, lo + 100.0, 401)
        ev = sc.remainder_scan("square2d", grid)
        assert np.mean(np.abs(ev.r_w2)) < np.mean(np.abs(ev.r_cl))


def test_march_plaskett_single_electron_endpoint():
    res = sc.march_plaskett_energy_1d(sc.box_potential(1.0, 401), 1)
    assert res.e_classical == pytest.approx(math.pi**2 / 6.0, rel=1e-9)


def test_remainder_scan_single_point():
    ev = sc.remainder_scan("box1d", np.array([100.0]))
    assert ev.energies.size == 1 and ev.r_cl.size == 1


def test_remainder_scan_validation():
    with pytest.raises(InvalidInputError):
        sc.remainder_scan("box1d", np.array([2.0, 1.0]))
    with pytest.raises(InvalidInputError):
        sc.remainder_scan("disk", np.array([1.0]))


def test_march_plaskett_flat_box_closed_form():
    p = sc.box_potential(1.0, 801)
    for n in (5, 20):
        res = sc.march_plaskett_energy_1d(p, n)
        assert res.eps_f == pytest.approx(n**2 * math.pi**2 / 2.0, rel=1e-10)
        assert res.e_classical == pytest.approx(n**3 * math.pi**2 / 6.0, rel=1e-9)
        assert res.e_classical == pytest.approx(res.e_classical_alt, rel=1e-8)


def test_march_plaskett_error_trend():
    p = sc.box_potential(1.0, 801)
    rels = []
    for n in (5, 10, 20, 40, 80):
        res = sc.march_plaskett_energy_1d(p, n)
        exact = math.pi**2 * n * (n + 1) * (2 * n + 1) / 12.0
        rels.append(abs(res.e_classical - exact) / exact)
    assert all(a > b for a, b in zip(rels, rels[1:]))  # monotone decrease
    for n, rel in zip((20, 40, 80), rels[2:]):
        assert rel == pytest.approx(1.5 / n, rel=0.2)


def test_march_plaskett_harmonic_dual_route():
    x = np.linspace(0, 1, 1203)[1:-1]
    p = sc.Potential1D(1.0, 50.0 * (x - 0.5) ** 2)
    res = sc.march_plaskett_energy_1d(p, 7)
    assert res.e_classical == pytest.approx(res.e_classical_alt, rel=1e-8)
    # Fermi level must reproduce the electron count through the classical staircase
    assert sc.staircase_classical_1d(p, res.eps_f) == pytest.approx(7.0, abs=1e-9)


def test_march_plaskett_validation():
    with pytest.raises(InvalidInputError):
        sc.march_plaskett_energy_1d(sc.box_potential(), 0)
