import dataclasses
import math

import numpy as np
import pytest

from framegap.additive import (
    Branch,
    construct_spectrum,
    default_lambda1_grid,
    finite_local_complexity_audit,
    orthogonality_check,
    parity_audit,
    plus_space_report,
    zero_set_line_scan,
)
from framegap.errors import AuditFailure, DomainError, LemmaViolation, NotSpectralError
from framegap.frames import default_probe_grid, jp_verify_additive, probe_frame_bounds
from framegap.measures import RestrictedLebesgue, in_zero_set, t_functional
from framegap.pointsets import CosetUnion, DiagonalFamily, FiniteList2D, enumerate_window_2d
from framegap.specfun import sinc_pi

QUARTERS = [k / 4 for k in range(-8, 9)]


def spectral_condition(t1, t2):
    d, s = t1 - t2, t1 + t2
    return (d == round(d) and d != 0) or (s == round(s) and s != -1)


def test_construct_examples():
    c = construct_spectrum(0.0, 1.0)
    assert c.branch is Branch.DIFFERENCE_INTEGER and c.shift == -0.5
    assert c.set == DiagonalFamily(1, 0.5)
    c = construct_spectrum(0.5, 0.5)
    assert c.branch is Branch.SUM_INTEGER and c.shift == 0.25
    assert enumerate_window_2d(c.set, 0, 0) == [(0.0, 0.0), (0.25, -0.25)]
    with pytest.raises(NotSpectralError) as info:
        construct_spectrum(-0.5, -0.5)
    err = info.value
    assert not err.difference_condition and not err.sum_condition
    assert spectral_condition(*err.nearest)
    assert err.nearest[0] == -0.5


def test_constructed_set_matches_display():
    # (n, n) and (n - 1/2, n - 1/2) for (0, 1); the stored shift is reduced mod 1
    c = construct_spectrum(0.0, 1.0)
    pts = set(enumerate_window_2d(c.set, -4, 4))
    for n in range(-3, 4):
        assert (float(n), float(n)) in pts
        assert (n - 0.5, n - 0.5) in pts


@pytest.mark.parametrize("t1", QUARTERS)
def test_constructor_decides_condition(t1):
    for t2 in QUARTERS:
        if spectral_condition(t1, t2):
            c = construct_spectrum(t1, t2)
            assert 0 < c.set.shift < 1
            assert parity_audit(c, 20).passed
        else:
            with pytest.raises(NotSpectralError) as info:
                construct_spectrum(t1, t2)
            assert spectral_condition(*info.value.nearest)


@pytest.mark.parametrize("t1, t2", [(0.0, 0.25), (-0.5, -0.5), (0.25, 0.5), (1.0, 0.25), (0.75, 0.0)])
def test_refused_pairs_fail_jp(t1, t2):
    with pytest.raises(NotSpectralError):
        construct_spectrum(t1, t2)
    rng = np.random.default_rng(0)
    grid = [tuple(p) for p in rng.uniform(0, 1, (8, 2))]
    for fam in (DiagonalFamily(1, 0.5), DiagonalFamily(-1, 0.5), DiagonalFamily(1, 0.25)):
        v = jp_verify_additive(t1, t2, fam, grid, 10_000, 1e-3)
        assert not v.passed


@pytest.mark.parametrize("t", [(0, 1), (0.5, 0.5), (0, 2), (-1, 0), (0.75, 0.25), (2.5, -1.5), (-3, 1)])
def test_constructed_spectra_pass_jp(t):
    c = construct_spectrum(*t)
    rng = np.random.default_rng(1)
    grid = [tuple(p) for p in rng.uniform(0, 1, (16, 2))]
    v = jp_verify_additive(c.t1, c.t2, c.set, grid, 10_000, 1e-6)
    assert v.passed
    assert v.notes["max_method_disagreement"] <= 2e-6


def test_parity_examples():
    c = construct_spectrum(0.0, 1.0)
    rep = parity_audit(c, 100)
    assert rep.passed and rep.points_checked == 402
    for n in (-3, 0, 7):
        assert t_functional(0, 1, n, n) == -2 * n
        assert t_functional(0, 1, n + c.shift, n + c.shift) == -2 * n + 1
    c = construct_spectrum(0.5, 0.5)
    assert parity_audit(c, 100).passed
    assert t_functional(0.5, 0.5, 3, -3) == 12
    bad = dataclasses.replace(construct_spectrum(0.0, 1.0), shift=0.3)
    with pytest.raises(AuditFailure) as info:
        parity_audit(bad, 5)
    assert info.value.point is not None
    with pytest.raises(DomainError):
        parity_audit(c, -1)


def test_orthogonality_examples():
    c = construct_spectrum(0.0, 1.0)
    pts = FiniteList2D(tuple(enumerate_window_2d(c.set, -5, 5)))
    assert orthogonality_check(0.0, 1.0, pts, 1e-9).passed
    assert orthogonality_check(0.0, 0.0, FiniteList2D(((0, 0), (0.5, -0.5))), 1e-9).passed
    r = orthogonality_check(0.0, 0.0, FiniteList2D(((0, 0), (0.5, 0.5))), 1e-9)
    assert not r.passed
    assert r.worst_modulus == pytest.approx(2 / math.pi, abs=1e-15)
    with pytest.raises(DomainError):
        orthogonality_check(0, 0, [(0, 0)], 1e-9)


@pytest.mark.parametrize("t1", QUARTERS[::2])
def test_orthogonality_on_every_truncation(t1):
    for t2 in QUARTERS:
        if not spectral_condition(t1, t2):
            continue
        c = construct_spectrum(t1, t2)
        pts = enumerate_window_2d(c.set, -10, 10)
        r = orthogonality_check(t1, t2, pts, 1e-9)
        assert r.passed, (t1, t2, r)
        # differences also satisfy the parity form of the zero set
        p, q = r.worst_pair
        assert in_zero_set(t1, t2, p[0] - q[0], p[1] - q[1])


def test_complexity_examples():
    r = finite_local_complexity_audit(construct_spectrum(0.0, 1.0))
    assert r.passed and r.gaps == pytest.approx((0.5,))
    r = finite_local_complexity_audit(construct_spectrum(0.5, 0.5))
    assert r.passed and r.gaps == pytest.approx((0.25, 0.75))
    r = finite_local_complexity_audit(construct_spectrum(0.0, 2.0))
    assert r.passed and r.distinct_gap_count == 2


def test_projection_is_tight_with_bound_two():
    grid = default_probe_grid(count=16, n_random=4)
    for t in [(0, 1), (0.5, 0.5), (0, 2), (0.75, 0.25)]:
        c = construct_spectrum(*t)
        proj = c.set.projection(0)
        assert proj == CosetUnion.normalized([0.0, c.shift])
        rep = probe_frame_bounds(RestrictedLebesgue(c.t1), proj, grid, 1e3)
        assert abs(rep.a_lower_probe - 2) <= 1e-6 and abs(rep.b_upper_probe - 2) <= 1e-6


# zero-set scan


def test_scan_plus_space():
    scan = zero_set_line_scan(-0.5, -0.5)
    assert scan.passed and not scan.off_line and not scan.tangencies
    assert scan.grid_size == 800
    assert scan.alpha_min == pytest.approx(sinc_pi(0.8))
    assert scan.alpha_min >= 0.23
    assert scan.tangent_slope == pytest.approx(0.2172, abs=1e-4)


def test_scan_finds_line_solutions():
    # t = (0, 1): T(l, l) = -2l, so l = 1/2 gives T = -1 (odd) with sinc(l1) = sinc(l2)
    grid = [0.25, 0.5, 0.75]
    scan = zero_set_line_scan(0.0, 1.0, lambda1_grid=grid)
    found = {(s.lambda1, round(s.lambda2, 12), s.t_value) for s in scan.solutions}
    assert (0.5, 0.5, -1) in found
    for s in scan.solutions:
        assert in_zero_set(0.0, 1.0, s.lambda1, s.lambda2, 1e-9)
        assert s.branch_sign in (1, -1)
        assert min(abs(s.lambda2 - s.lambda1), abs(s.lambda2 + s.lambda1)) <= 1e-9


def test_scan_matches_brute_force_zero_search():
    # oracle: dense direct search of |rho^| on the grid l1 = 1/2, t = (0, 1)
    t1, t2, l1 = 0.0, 1.0, 0.5
    ys = np.linspace(-1.384, 1.384, 277_001)
    from framegap.measures import zero_set_modulus

    mods = np.array([zero_set_modulus(t1, t2, l1, y) for y in ys[::10]])
    near = ys[::10][mods < 1e-3]
    scan = zero_set_line_scan(t1, t2, lambda1_grid=[l1])
    sols = [s.lambda2 for s in scan.solutions]
    for y in near:
        assert min(abs(y - s) for s in sols) < 2e-3


def test_scan_random_parameters():
    rng = np.random.default_rng(12)
    for t1, t2 in rng.uniform(-2, 2, (50, 2)):
        scan = zero_set_line_scan(t1, t2, step=5e-3)
        assert scan.passed


def test_scan_strict_raises(monkeypatch):
    import framegap.additive as mod

    real = mod._roots

    def fake(sign, alpha, xs, vals):
        roots, tang = real(sign, alpha, xs, vals)
        return roots + [1.0], tang

    monkeypatch.setattr(mod, "_roots", fake)
    with pytest.raises(LemmaViolation) as info:
        zero_set_line_scan(0.1, 0.2, lambda1_grid=[0.5])
    assert info.value.solutions
    assert not zero_set_line_scan(0.1, 0.2, lambda1_grid=[0.5], strict=False).passed


def test_scan_domain():
    with pytest.raises(DomainError):
        zero_set_line_scan(0, 0, lambda1_grid=[0.0, 0.5])
    with pytest.raises(DomainError):
        zero_set_line_scan(0, 0, lambda1_grid=[0.9])
    g = default_lambda1_grid()
    assert g[0] > 0 and g[-1] == 0.8 and len(g) == 800


def test_plus_space_report():
    r = plus_space_report()
    assert [l["name"] for l in r["links"]] == ["projection_tight_frame", "min_gap_bound", "zero_set_lines"]
    assert all(l["pass"] for l in r["links"])
    assert r["links"][1]["details"]["bound"] == math.sqrt(0.5)
    m = r["links"][2]["details"]["line_residual_min"]
    assert m == pytest.approx(2 * sinc_pi(0.8), abs=1e-15)
    assert 0.467 <= m <= 0.468
    assert r["conclusion"] == "non-spectrality chain verified"
