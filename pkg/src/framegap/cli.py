"""Command-line front end: ``framegap <command> [options]``.

Exit status is 0 when the check passes, 1 when it fails (or the parameters
are not spectral) and 2 on a configuration or tolerance error. Output files
are deterministic for a given set of arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import additive, frames, pointsets, specfun, theorems
from .errors import (
    DomainError,
    FramegapError,
    LemmaViolation,
    LinkFailure,
    NotSpectralError,
    ToleranceTooTightError,
)
from .measures import RestrictedLebesgue, measure_from_json
from .pointsets import CosetUnion, DiagonalFamily, FiniteList, pointset_from_json


class ConfigError(Exception):
    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(self.prog, message)


# descriptors


def _floats(text: str, field: str) -> list:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ConfigError(field, f"cannot parse numbers from {text!r}") from None


def parse_measure(text: str):
    """``lebesgue:T`` or a JSON object."""
    try:
        if text.lstrip().startswith("{"):
            return measure_from_json(json.loads(text))
        kind, _, arg = text.partition(":")
        if kind == "lebesgue":
            return RestrictedLebesgue(float(arg))
        raise ConfigError("--measure", f"unknown measure {text!r}")
    except (ValueError, DomainError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError("--measure", str(exc)) from None


def parse_set(text: str):
    """``coset:o1,o2/P``, ``finite:p1,p2,...``, ``diagonal:SIGN,SHIFT`` or JSON."""
    try:
        if text.lstrip().startswith("{"):
            return pointset_from_json(json.loads(text))
        kind, _, arg = text.partition(":")
        if kind == "coset":
            offs, _, period = arg.partition("/")
            return CosetUnion(tuple(_floats(offs, "--set")), float(period) if period else 1.0)
        if kind == "finite":
            return FiniteList(tuple(_floats(arg, "--set")))
        if kind == "diagonal":
            sign, shift = _floats(arg, "--set")
            return DiagonalFamily(int(sign), shift)
        raise ConfigError("--set", f"unknown point set {text!r}")
    except ConfigError:
        raise
    except (ValueError, DomainError) as exc:
        raise ConfigError("--set", str(exc)) from None


def format_measure(m) -> str:
    return f"lebesgue:{m.t!r}"


def format_set(s) -> str:
    if isinstance(s, CosetUnion):
        return "coset:" + ",".join(repr(o) for o in s.offsets) + f"/{s.period!r}"
    if isinstance(s, FiniteList):
        return "finite:" + ",".join(repr(p) for p in s.points)
    if isinstance(s, DiagonalFamily):
        return f"diagonal:{s.sign},{s.shift!r}"
    return json.dumps(s.to_json(), sort_keys=True)


def parse_grid(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError("--grid", f"expected start:stop:count, got {text!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ConfigError("--grid", f"cannot parse {text!r}") from None
    if count < 1:
        raise ConfigError("--grid", "count must be >= 1")
    if not stop > start:
        raise ConfigError("--grid", "stop must exceed start")
    return start, stop, count


def build_grid(grid: tuple, n_random: int, seed: int) -> list:
    """``count`` equispaced points of [start, stop) and then ``n_random`` seeded
    uniform points (numpy PCG64)."""
    start, stop, count = grid
    pts = [start + (stop - start) * k / count for k in range(count)]
    rng = np.random.default_rng(seed)
    pts.extend(float(x) for x in rng.uniform(start, stop, n_random))
    return pts


# output


def _cell(v):
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_csv(rows: list, columns: list, out) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(r[c]) for c in columns])
    _emit(buf.getvalue(), out)


def write_json(obj, out) -> None:
    _emit(json.dumps(obj, indent=2, sort_keys=True, allow_nan=False, default=_json_default) + "\n", out)


def _json_default(o):
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def _emit(text: str, out) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _verdict(ok: bool, text: str) -> int:
    print(("PASS " if ok else "FAIL ") + text, file=sys.stderr)
    return 0 if ok else 1


def _finite(v: float) -> float:
    # JSON has no infinity; encode it as None
    return v if math.isfinite(v) else None


# commands


def cmd_zeta(args) -> int:
    policy = specfun.EvalPolicy(abs_tol=args.tol) if args.tol else specfun.DEFAULT_POLICY
    out = {"x": args.x, "zeta2": specfun.hurwitz_zeta2(args.x, policy), "big_f": specfun.big_f(args.x, policy)}
    write_json(out, args.out)
    return _verdict(True, f"zeta(2, {args.x!r}) = {out['zeta2']!r}")


def cmd_frame_functional(args) -> int:
    m, s = parse_measure(args.measure), parse_set(args.set)
    rows = []
    for xi in build_grid(args.grid, args.random, args.seed):
        fv = frames.frame_functional(m, s, xi, args.radius)
        lo, hi = fv.enclosure()
        rows.append({"xi": fv.xi, "value": fv.value, "tail": fv.tail, "lower": lo, "upper": hi})
    write_csv(rows, ["xi", "value", "tail", "lower", "upper"], args.out)
    return _verdict(True, f"{len(rows)} values for {format_measure(m)} on {format_set(s)}")


def cmd_jp_verify(args) -> int:
    m, s = parse_measure(args.measure), parse_set(args.set)
    v = frames.jp_verify(m, s, build_grid(args.grid, args.random, args.seed), args.radius, args.tol)
    write_csv(v.rows, ["xi", "value", "tail", "residual"], args.out)
    return _verdict(v.passed, f"worst residual {v.worst_residual!r} at xi={v.worst_xi!r}, tol {v.tolerance!r}")


def cmd_jp_additive(args) -> int:
    c = additive.construct_spectrum(args.t1, args.t2)
    rng = np.random.default_rng(args.seed)
    grid = [tuple(p) for p in rng.uniform(0.0, 1.0, (args.random, 2)).tolist()]
    v = frames.jp_verify_additive(args.t1, args.t2, c.set, grid, args.n_terms, args.tol)
    cols = ["xi1", "xi2", "direct", "direct_err", "residual"]
    write_csv(v.rows, cols, args.out)
    return _verdict(v.passed, f"worst residual {v.worst_residual!r}, tol {v.tolerance!r}")


def cmd_gaps(args) -> int:
    s = parse_set(args.set)
    lo, hi = args.window
    st = pointsets.gap_stats(s, (lo, hi))
    write_json({"set": format_set(s), "window": [lo, hi], **st.to_json()}, args.out)
    return _verdict(True, f"g_min {st.ess_min_gap!r}, g_max {st.ess_max_gap!r}")


def cmd_prop21(args) -> int:
    rows = theorems.lattice_family_scan(args.a, radius=args.radius)
    cols = ["A", "n", "g_min", "product", "bound_lo", "bound_hi", "frame_lo", "frame_hi", "pass"]
    write_csv(rows, cols, args.out)
    ok = all(r["pass"] for r in rows)
    return _verdict(ok, f"{sum(r['pass'] for r in rows)}/{len(rows)} rows inside the sandwich")


def cmd_construct_spectrum(args) -> int:
    try:
        c = additive.construct_spectrum(args.t1, args.t2)
    except NotSpectralError as exc:
        write_json(
            {
                "t1": args.t1,
                "t2": args.t2,
                "spectral": False,
                "difference_condition": exc.difference_condition,
                "sum_condition": exc.sum_condition,
                "nearest": list(exc.nearest),
            },
            args.out,
        )
        return _verdict(False, str(exc))
    write_json({"spectral": True, **c.to_json(), "descriptor": format_set(c.set)}, args.out)
    return _verdict(True, f"{c.branch.value} spectrum {format_set(c.set)}")


def cmd_lemma41(args) -> int:
    try:
        scan = additive.zero_set_line_scan(args.t1, args.t2, step=args.step, tol=args.tol, strict=False)
    except DomainError as exc:
        raise ConfigError("--step", str(exc)) from None
    out = {
        "t1": args.t1,
        "t2": args.t2,
        "grid_size": scan.grid_size,
        "roots_checked": scan.roots_checked,
        "m_max": scan.m_max,
        "alpha_min": scan.alpha_min,
        "tangent_slope": scan.tangent_slope,
        "solutions": len(scan.solutions),
        "off_line": [list(p) for p in scan.off_line],
        "tangencies": [list(p) for p in scan.tangencies],
        "pass": scan.passed,
    }
    write_json(out, args.out)
    return _verdict(scan.passed, f"{len(scan.solutions)} zero-set solutions, {len(scan.off_line)} off the lines")


def cmd_plus_space(args) -> int:
    try:
        report = additive.plus_space_report(step=args.step)
    except LinkFailure as exc:
        write_json({"links": [], "failed_link": exc.link, "conclusion": None}, args.out)
        return _verdict(False, str(exc))
    write_json(report, args.out)
    return _verdict(True, report["conclusion"])


_THEOREMS = {
    "gap-product": ("g_min", "g_max", "c", "a"),
    "min-gap": ("g_min", "c", "a"),
    "gap-chain": ("g_max", "sup_gap", "a", "b"),
    "gap-upper": ("a", "b"),
    "bessel-count": ("b",),
    "sharpness": ("schedule", "eps"),
}


def _theorem_params(name: str, items: list) -> dict:
    params = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep:
            raise ConfigError("params", f"expected key=value, got {item!r}")
        if key not in _THEOREMS[name]:
            raise ConfigError(key, f"unknown parameter for {name!r}; expected {', '.join(_THEOREMS[name])}")
        vals = _floats(val, key)
        if not vals or (key != "schedule" and len(vals) != 1):
            raise ConfigError(key, f"bad value {val!r}")
        params[key] = vals if key == "schedule" else vals[0]
    return params


def cmd_theorem(args) -> int:
    p = _theorem_params(args.name, args.params)
    missing = [k for k in _THEOREMS[args.name] if k not in p and k != "eps"]
    if missing:
        raise ConfigError(missing[0], "missing parameter")
    if args.name == "gap-product":
        v = theorems.check_gap_product_bound(p["g_min"], p["g_max"], p["c"], p["a"])
        write_json(v.to_json(), args.out)
        return _verdict(v.passed, f"{v.lhs!r} <= {v.rhs!r}")
    if args.name == "min-gap":
        v = theorems.check_min_gap_bound(p["g_min"], p["c"], p["a"])
        write_json(v.to_json(), args.out)
        return _verdict(v.passed, f"{v.lhs!r} <= {v.rhs!r}")
    if args.name == "gap-chain":
        v = theorems.check_gap_chain(p["g_max"], p["sup_gap"], p["a"], p["b"])
        write_json(v.to_json(), args.out)
        failed = [link.name for link in v.links if not link.passed]
        return _verdict(v.passed, "all links hold" if v.passed else f"failed: {', '.join(failed)}")
    if args.name == "gap-upper":
        g = theorems.gap_upper_bound_sharp(p["a"], p["b"])
        write_json(
            {"closed_form": g.closed_form, "zeta_form": _finite(g.zeta_form), "relaxed": g.relaxed,
             "margin": g.margin, "pass": g.consistent},
            args.out,
        )
        return _verdict(g.consistent, f"{g.closed_form!r} < {g.relaxed!r}")
    if args.name == "bessel-count":
        s = parse_set(args.set)
        centers = np.random.default_rng(args.seed).uniform(-10.0, 10.0, 1000).tolist()
        r = frames.bessel_count_check(s, p["b"], centers)
        write_json(
            {"bound": r.bound, "max_count": r.max_count, "worst_center": r.worst_center, "margin": r.margin, "pass": r.passed},
            args.out,
        )
        return _verdict(r.passed, f"max count {r.max_count} <= {r.bound}")
    res = theorems.min_gap_sharpness(p["schedule"], p.get("eps", 0.0))
    write_csv(res["rows"], ["A", "n", "g_min", "product", "deficit"], args.out)
    return _verdict(res["monotone"], "deficit decreasing" if res["monotone"] else "deficit not monotone")


def _positive_float(field):
    # argparse prefixes the message with the argument name
    def conv(text):
        try:
            v = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
        if not v > 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
        return v

    return conv


def _grid_type(text):
    try:
        return parse_grid(text)
    except ConfigError as exc:
        raise argparse.ArgumentTypeError(str(exc).split(": ", 1)[1]) from None


def _window_type(text):
    try:
        lo, hi = (float(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}") from None
    return lo, hi


def _seed_type(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be unsigned")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="framegap", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, measure=False, pset=False, grid=False, radius=False, tol=False, seed=False):
        if measure:
            sp.add_argument("--measure", default="lebesgue:0", help="lebesgue:T or JSON")
        if pset:
            sp.add_argument("--set", default="coset:0/1", help="coset:o1,o2/P, finite:p1,..., diagonal:S,SHIFT or JSON")
        if grid:
            sp.add_argument("--grid", type=_grid_type, default=(0.0, 1.0, 257), help="start:stop:count")
            sp.add_argument("--random", type=int, default=64, help="seeded random probe points")
        if radius:
            sp.add_argument("--radius", type=_positive_float("--radius"), default=frames.DEFAULT_RADIUS)
        if tol:
            sp.add_argument("--tol", type=_positive_float("--tol"), default=frames.DEFAULT_TOL)
        if seed:
            sp.add_argument("--seed", type=_seed_type, default=0)
        sp.add_argument("--out", default=None, help="output file (default stdout)")

    sp = sub.add_parser("zeta", help="Hurwitz zeta(2, x) and F(x)")
    sp.add_argument("x", type=_positive_float("x"))
    sp.add_argument("--tol", type=_positive_float("--tol"), default=None)
    common(sp)
    sp.set_defaults(func=cmd_zeta)

    sp = sub.add_parser("frame-functional", help="frame functional with certified tails")
    common(sp, measure=True, pset=True, grid=True, radius=True, seed=True)
    sp.set_defaults(func=cmd_frame_functional)

    sp = sub.add_parser("jp-verify", help="spectrum check for Lebesgue measure")
    common(sp, measure=True, pset=True, grid=True, radius=True, tol=True, seed=True)
    sp.set_defaults(func=cmd_jp_verify)

    sp = sub.add_parser("jp-additive", help="spectrum check for the additive measure")
    sp.add_argument("--t1", type=float, required=True)
    sp.add_argument("--t2", type=float, required=True)
    sp.add_argument("--random", type=int, default=64)
    sp.add_argument("--n-terms", type=int, default=10_000)
    common(sp, tol=True, seed=True)
    sp.set_defaults(func=cmd_jp_additive)

    sp = sub.add_parser("gaps", help="gap statistics of a point set")
    sp.add_argument("--window", type=_window_type, default=(-10.0, 10.0))
    common(sp, pset=True)
    sp.set_defaults(func=cmd_gaps)

    sp = sub.add_parser("prop21", help="lattice family sandwich scan")
    sp.add_argument("--a", type=lambda t: _floats(t, "--a"), default=[1.0, 2.5, 10.0, 99.5, 999.5])
    sp.add_argument("--radius", type=_positive_float("--radius"), default=4.0)
    common(sp)
    sp.set_defaults(func=cmd_prop21)

    sp = sub.add_parser("construct-spectrum", help="spectrum of the additive measure")
    sp.add_argument("--t1", type=float, required=True)
    sp.add_argument("--t2", type=float, required=True)
    common(sp)
    sp.set_defaults(func=cmd_construct_spectrum)

    sp = sub.add_parser("lemma41", help="zero-set scan for small first coordinate")
    sp.add_argument("--t1", type=float, required=True)
    sp.add_argument("--t2", type=float, required=True)
    sp.add_argument("--step", type=_positive_float("--step"), default=1e-3)
    sp.add_argument("--tol", type=_positive_float("--tol"), default=1e-9)
    common(sp)
    sp.set_defaults(func=cmd_lemma41)

    sp = sub.add_parser("plus-space", help="non-spectrality chain for the plus space")
    sp.add_argument("--step", type=_positive_float("--step"), default=1e-3)
    common(sp)
    sp.set_defaults(func=cmd_plus_space)

    sp = sub.add_parser("theorem", help="evaluate one inequality: " + ", ".join(_THEOREMS))
    sp.add_argument("name", choices=sorted(_THEOREMS))
    sp.add_argument("params", nargs="*", help="key=value")
    common(sp, pset=True, seed=True)
    sp.set_defaults(func=cmd_theorem)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ToleranceTooTightError as exc:
        print(f"error: --tol: {exc}", file=sys.stderr)
        return 2
    except NotSpectralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except LemmaViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, FramegapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
