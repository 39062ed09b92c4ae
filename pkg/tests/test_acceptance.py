"""The thirteen acceptance criteria at their stated tolerances and budgets.

Each criterion is a function returning (passed, detail, seconds). The pytest
wrappers record one line per criterion, printed in the terminal summary;
running this file directly prints the same lines.
"""

import math
import os
import subprocess
import sys
import tempfile
import time

import numpy as np
import pytest

from framegap.additive import construct_spectrum, parity_audit, plus_space_report, zero_set_line_scan
from framegap.frames import (
    bessel_count_check,
    default_probe_grid,
    jp_verify,
    jp_verify_additive,
    poisson_diagonal_sum,
    probe_frame_bounds,
)
from framegap.measures import RestrictedLebesgue, decay_constant
from framegap.pointsets import CosetUnion, gap_stats
from framegap.specfun import big_f, hurwitz_zeta2, sinc_pi, tangent_fixed_point, verify_big_f_claim
from framegap.theorems import (
    check_gap_chain,
    check_gap_product_bound,
    check_min_gap_bound,
    gap_upper_bound_sharp,
    lattice_family,
    lattice_family_scan,
    min_gap_sharpness,
)

PI2 = math.pi**2
SEED = 0
RESULTS = {}


def timed(fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t0


def crit_1():
    def run():
        z = hurwitz_zeta2(0.5)
        f = big_f(0.5)
        e1, e2 = abs(z - PI2 / 2), abs(f - PI2 / 4)
        return e1 <= 1e-12 and e2 <= 1e-12, f"|zeta(2,1/2) - pi^2/2| = {e1:.1e}, |F(1/2) - pi^2/4| = {e2:.1e}"

    ok, detail, dt = timed(run)
    return ok and dt < 1e-3, detail, dt


def crit_2():
    def run():
        rep = verify_big_f_claim(0.5, 20.0, 1e-3)
        ok = rep.argmax == 0.5 and rep.margin >= -1e-9 and rep.majorant_at_065 < PI2 / 4 and rep.majorant_margin >= 0.29
        return ok, f"argmax {rep.argmax}, min margin {rep.margin:.2e}, f(0.65) margin {rep.majorant_margin:.5f}"

    ok, detail, dt = timed(run)
    return ok and dt < 1.0, detail, dt


def crit_3():
    def run():
        x0 = tangent_fixed_point()
        res = abs(math.tan(x0) - x0)
        s = abs(math.sin(x0) / x0)
        return res <= 1e-10 and 0.2170 <= s <= 0.2200, f"x0 = {x0!r}, |tan x0 - x0| = {res:.1e}, |sin x0 / x0| = {s:.6f}"

    ok, detail, dt = timed(run)
    return ok and dt < 1e-3, detail, dt


def crit_4():
    def run():
        grid = default_probe_grid(count=257, n_random=64, seed=SEED)
        v = jp_verify(RestrictedLebesgue(0.0), CosetUnion((0.0,), 1.0), grid, 1e4, 1e-6)
        return v.passed and len(grid) == 321, f"worst residual {v.worst_residual:.2e} over {len(grid)} points"

    ok, detail, dt = timed(run)
    return ok and dt < 1.0, detail, dt


def crit_5():
    def run():
        rows = lattice_family_scan([1, 2.5, 10, 99.5, 999.5])
        ok = all(r["pass"] for r in rows)
        ok &= all(abs(r["frame_lo"] - r["n"]) <= 1e-6 and abs(r["frame_hi"] - r["n"]) <= 1e-6 for r in rows)
        ok &= all(r["bound_lo"] - 1e-12 <= r["product"] <= r["bound_hi"] + 1e-12 for r in rows)
        sched = min_gap_sharpness([2, 5, 10, 100, 1000], eps=0.5)
        ok &= all(r["deficit"] <= 1 / (2 * r["n"]) + 1e-12 for r in sched["rows"]) and sched["monotone"]
        worst = max(max(abs(r["frame_lo"] - r["n"]), abs(r["frame_hi"] - r["n"])) for r in rows)
        return ok, f"max |probe - n| = {worst:.1e}, products {[round(r['product'], 6) for r in rows]}"

    ok, detail, dt = timed(run)
    return ok and dt < 10.0, detail, dt


def crit_6():
    def run():
        c = 1 / math.pi
        v1 = check_gap_product_bound(0.5, 0.5, c, 2.0)
        v2 = check_min_gap_bound(0.5, c, 2.0)
        ok = v1.passed and v2.passed and v1.lhs == 0.25 and abs(v1.rhs - 0.5) < 1e-15 and abs(v2.rhs - 1 / 3) < 1e-15
        leb = RestrictedLebesgue(0.0)
        grid = default_probe_grid(count=32, n_random=8, seed=SEED)
        for n in range(1, 13):
            s = lattice_family(n - 0.5)
            rep = probe_frame_bounds(leb, s, grid, 50.0)
            a, err = rep.a_lower_probe, rep.b_upper_probe - rep.a_lower_probe
            g = gap_stats(s, (0, 1))
            ok &= abs(a - n) <= 1e-6
            ok &= check_gap_product_bound(g.ess_min_gap, g.ess_max_gap, decay_constant(leb), a, 1e-12 + err).passed
            if a > 1.5:
                ok &= check_min_gap_bound(g.ess_min_gap, decay_constant(leb), a, 1e-12 + err).passed
        return ok, f"half lattice: {v1.lhs} <= {v1.rhs:.6f}, {v2.lhs} <= {v2.rhs:.6f}; family n = 1..12 ok"

    ok, detail, dt = timed(run)
    return ok and dt < 5.0, detail, dt


def crit_7():
    def run():
        leb = RestrictedLebesgue(0.0)
        grid = default_probe_grid(count=64, n_random=16, seed=SEED)
        ok, parts = True, []
        for s, want in ((CosetUnion((0.0,), 1.0), 1.0), (CosetUnion((0.0, 0.5), 1.0), 2.0)):
            rep = probe_frame_bounds(leb, s, grid, 1e3)
            g = gap_stats(s, (-2, 2))
            ok &= abs(rep.a_lower_probe - want) <= 1e-6 and abs(rep.b_upper_probe - want) <= 1e-6
            chain = check_gap_chain(g.ess_max_gap, g.sup_gap, want, want)
            ok &= chain.passed
            parts.append(f"A=B={want:g}: {[round(l.lhs, 4) for l in chain.links]}")
        ub = gap_upper_bound_sharp(2.0, 2.0)
        ok &= ub.closed_form < PI2 + 2
        return ok, "; ".join(parts) + f"; sharp bound {ub.closed_form:.4f} < {PI2 + 2:.4f}"

    ok, detail, dt = timed(run)
    return ok and dt < 1.0, detail, dt


def crit_8():
    def run():
        centers = np.random.default_rng(SEED).uniform(-10, 10, 1000).tolist()
        r = bessel_count_check(CosetUnion((0.0, 0.5), 1.0), 2.0, centers)
        return r.passed and r.max_count == 3 and r.bound == 4, f"max count {r.max_count} <= {r.bound}"

    ok, detail, dt = timed(run)
    return ok and dt < 1.0, detail, dt


def crit_9():
    def run():
        pairs = np.random.default_rng(SEED).uniform(-1, 1, (100, 2))
        ns = (100, 1000, 10000)
        errs = np.array([[abs(np.subtract(*poisson_diagonal_sum(a, b, n))) for n in ns] for a, b in pairs])
        ok = bool(np.all(errs[:, 2] <= 1e-3))
        # O(1/N): N * err stays bounded and the worst error falls like 1/N
        scaled = errs * np.array(ns)
        slope = np.polyfit(np.log10(ns), np.log10(errs.max(axis=0)), 1)[0]
        ok &= bool(scaled.max() <= 1.0) and slope <= -0.9
        return ok, f"max err at N=1e4 {errs[:, 2].max():.2e}, max N*err {scaled.max():.3f}, log-log slope {slope:.3f}"

    ok, detail, dt = timed(run)
    return ok and dt < 5.0, detail, dt


def crit_10():
    def run():
        ok, worst = True, 0.0
        for t in [(0, 1), (0.5, 0.5), (0, 2), (-1, 0), (0.75, 0.25)]:
            c = construct_spectrum(*t)
            grid = [tuple(p) for p in np.random.default_rng(SEED).uniform(0, 1, (64, 2))]
            v = jp_verify_additive(c.t1, c.t2, c.set, grid, 10_000, 1e-6)
            ok &= v.passed and parity_audit(c, 100).passed
            worst = max(worst, v.worst_residual)
        return ok, f"worst residual {worst:.2e} over 5 x 64 points; parity audits pass"

    ok, detail, dt = timed(run)
    return ok and dt < 30.0, detail, dt


def crit_11():
    def run():
        code = subprocess.run(
            [sys.executable, "-m", "framegap.cli", "plus-space", "--out", os.devnull], capture_output=True
        ).returncode
        rep = plus_space_report()
        bound = rep["links"][1]["details"]["bound"]
        m = rep["links"][2]["details"]["line_residual_min"]
        ok = code == 0 and bound == math.sqrt(1 / 2) and 0.467 <= m <= 0.468 and m == 2 * sinc_pi(0.8)
        return ok, f"exit {code}, bound {bound!r}, line minimum {m:.6f}"

    ok, detail, dt = timed(run)
    return ok and dt < 10.0, detail, dt


def crit_12():
    def run():
        params = [(-0.5, -0.5)] + [tuple(p) for p in np.random.default_rng(SEED).uniform(-2, 2, (10, 2))]
        off, sols, roots = 0, 0, 0
        for t1, t2 in params:
            scan = zero_set_line_scan(t1, t2, step=1e-3, strict=False)
            off += len(scan.off_line)
            sols += len(scan.solutions)
            roots += scan.roots_checked
        return off == 0, f"{len(params)} parameter pairs, {roots} sinc-equation roots, {sols} zero-set points, {off} off the lines"

    ok, detail, dt = timed(run)
    return ok and dt < 60.0, detail, dt


def crit_13():
    def run():
        cmds = [
            ["jp-verify", "--set", "coset:0,0.37/1", "--seed", "3"],
            ["prop21"],
            ["plus-space"],
            ["lemma41", "--t1", "0.2", "--t2", "0.7"],
            ["jp-additive", "--t1", "0.5", "--t2", "0.5", "--random", "16"],
            ["theorem", "sharpness", "schedule=10,100,1000", "eps=0.5"],
        ]
        same = 0
        with tempfile.TemporaryDirectory() as d:
            for i, cmd in enumerate(cmds):
                blobs = []
                for rep in range(2):
                    path = os.path.join(d, f"{i}_{rep}")
                    subprocess.run([sys.executable, "-m", "framegap.cli", *cmd, "--out", path], capture_output=True)
                    with open(path, "rb") as fh:
                        blobs.append(fh.read())
                same += blobs[0] == blobs[1] and len(blobs[0]) > 0
        return same == len(cmds), f"{same}/{len(cmds)} commands byte-identical across reruns"

    ok, detail, dt = timed(run)
    return ok, detail, dt


CRITERIA = {
    1: ("special-function exactness", crit_1),
    2: ("F claim grid", crit_2),
    3: ("tangent bound", crit_3),
    4: ("classical spectrum of [0, 1]", crit_4),
    5: ("lattice family sandwich", crit_5),
    6: ("gap product and minimal-gap bounds", crit_6),
    7: ("gap chain", crit_7),
    8: ("unit-interval counting", crit_8),
    9: ("sinc product identity", crit_9),
    10: ("additive spectra", crit_10),
    11: ("plus space chain", crit_11),
    12: ("zero-set line scan", crit_12),
    13: ("CLI determinism", crit_13),
}


def report_line(k, ok, detail, dt):
    name = CRITERIA[k][0]
    return f"criterion {k:2d} {'PASS' if ok else 'FAIL'} [{dt * 1e3:9.2f} ms] {name}: {detail}"


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    ok, detail, dt = CRITERIA[k][1]()
    RESULTS[k] = report_line(k, ok, detail, dt)
    print(RESULTS[k])
    assert ok, RESULTS[k]


if __name__ == "__main__":
    failed = 0
    for k in sorted(CRITERIA):
        ok, detail, dt = CRITERIA[k][1]()
        failed += not ok
        print(report_line(k, ok, detail, dt))
    sys.exit(1 if failed else 0)
