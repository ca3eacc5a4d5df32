"""Identity-check registry.

Each registered check runs one identity over a default parameter grid and
returns a :class:`CheckReport`.  Disputed identities are registered with
two variants: ``"corrected"`` (the independently derived form) and
``"paper"`` (the form as printed).  All other checks run as ``"single"``.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
from scipy import integrate

from . import hermite as hm
from . import numeric as nm
from .core import DegenerateParam, ExactPoly, make_param, poly_diff
from .umbral import DHP_VACUUM, umbral_expand, umbral_gf_coefficient

SCHEMA_VERSION = 1
DEFAULT_TOL = 1e-8

LAMBDAS = (-0.5, 0.5, 1.0, 2.0)
XY = (-2.0, -1.0, 0.5, 1.0, 2.0)
EXACT_N = 25
NUMERIC_N = 10

PASS, FAIL, ILL_DEFINED, DIVERGENT = "PASS", "FAIL", "ILL_DEFINED", "DIVERGENT"


class UnknownCheckError(KeyError):
    pass


class StabilityError(ValueError):
    pass


@dataclass
class CheckReport:
    check_name: str
    variant: str
    params: dict
    residual: float
    tolerance: float
    status: str

    @classmethod
    def judge(cls, name, variant, params, residual, tolerance) -> "CheckReport":
        status = PASS if residual <= tolerance else FAIL
        return cls(name, variant, params, float(residual), float(tolerance), status)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        d = {"v": SCHEMA_VERSION}
        d.update(asdict(self))
        d["residual"] = _json_float(self.residual)
        d["params"] = {k: _json_value(v) for k, v in self.params.items()}
        return d


def _json_float(v):
    v = float(v)
    if math.isfinite(v):
        return v
    return "nan" if math.isnan(v) else ("inf" if v > 0 else "-inf")


def _json_value(v):
    if isinstance(v, (list, tuple)):
        return [_json_value(u) for u in v]
    if isinstance(v, float):
        return _json_float(v)
    if isinstance(v, (np.floating, np.integer)):
        return _json_value(v.item())
    return v


def reports_to_json(reports: Iterable[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=1) + "\n"


def write_report(reports: Iterable[CheckReport], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(reports_to_json(reports))


def rel(a, b) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def _lst(v) -> list:
    if isinstance(v, (list, tuple, range)):
        return list(v)
    return [v]


# -- heat equation, finite differences -----------------------------------------

@dataclass(frozen=True)
class HeatGrid:
    """Rectangle for the explicit scheme; ``dy=None`` picks the stable step."""

    x_min: float = -5.0
    x_max: float = 5.0
    dx: float = 0.01
    y_max: float = 0.1
    dy: Optional[float] = None

    def step(self, L: float) -> tuple[float, int]:
        limit = L * self.dx ** 2 / 2.0
        if self.dy is None:
            steps = math.ceil(self.y_max / (0.9 * limit))
            return self.y_max / steps, steps
        if self.dy > limit * (1 + 1e-12):
            raise StabilityError(
                f"dy = {self.dy} exceeds the stability bound L dx^2 / 2 = {limit}")
        steps = max(1, round(self.y_max / self.dy))
        return self.y_max / steps, steps


def heat_fd_check(n: int, param: DegenerateParam, grid: HeatGrid = HeatGrid(),
                  tolerance: float = 1e-3) -> CheckReport:
    """March ``u_y = (1/L) u_xx`` from ``u(x, 0) = (L x)^n`` and compare to ``H_n``.

    Dirichlet data on both ends come from the exact polynomial.  The error
    is the relative sup-norm over the middle third of the x range.
    """
    L = param.L
    dy, steps = grid.step(L)
    npts = int(round((grid.x_max - grid.x_min) / grid.dx)) + 1
    x = np.linspace(grid.x_min, grid.x_max, npts)
    dx = x[1] - x[0]
    u = (L * x) ** n
    coef = dy / (L * dx * dx)
    xl, xr = x[0], x[-1]
    for k in range(1, steps + 1):
        u[1:-1] += coef * (u[2:] - 2.0 * u[1:-1] + u[:-2])
        yk = k * dy
        u[0] = nm.eval_bvdhp(n, xl, yk, param)
        u[-1] = nm.eval_bvdhp(n, xr, yk, param)
    exact = np.array([nm.eval_bvdhp(n, xi, grid.y_max, param) for xi in x])
    third = (grid.x_max - grid.x_min) / 3.0
    mid = (x >= grid.x_min + third) & (x <= grid.x_max - third)
    scale = np.max(np.abs(exact[mid]))
    err = np.max(np.abs(u[mid] - exact[mid]))
    residual = float(err / scale) if scale > 0 else float(err)
    params = {"n": n, "lam": param.lam, "x_min": grid.x_min, "x_max": grid.x_max,
              "dx": grid.dx, "dy": dy, "y_max": grid.y_max}
    return CheckReport.judge("heat_fd", "single", params, residual, tolerance)


# -- registry ---------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    fn: Callable[..., CheckReport]
    variants: tuple[str, ...] = ("single",)


REGISTRY: dict[str, Check] = {}


def register(name: str, variants: Sequence[str] = ("single",)):
    def deco(fn):
        REGISTRY[name] = Check(name, fn, tuple(variants))
        return fn
    return deco


def _exact_report(name, variant, params, ok: bool) -> CheckReport:
    return CheckReport.judge(name, variant, params, 0.0 if ok else 1.0, 0.0)


def _exact_family(name, pred, n=None, lo=0):
    ns = _lst(n) if n is not None else list(range(lo, EXACT_N + 1))
    bad = [k for k in ns if not pred(k)]
    params = {"n": ns}
    if bad:
        params["mismatch_n"] = bad
    return _exact_report(name, "single", params, not bad)


@register("generating_function")
def _gf(variant="single", t=(-0.2, -0.1, 0.1, 0.2), x=XY, y=XY, lam=LAMBDAS, N=40,
        tolerance=1e-10):
    worst = 0.0
    for lv in _lst(lam):
        p = make_param(lv)
        for tv in _lst(t):
            for xv in _lst(x):
                for yv in _lst(y):
                    pt = nm.GFPoint(tv, xv, yv, p)
                    worst = max(worst, abs(nm.gf_series(pt, N) - nm.gf_closed(pt)))
    return CheckReport.judge("generating_function", variant,
                             {"t": _lst(t), "lam": _lst(lam), "N": N}, worst, tolerance)


@register("series_vs_operational")
def _ops(variant="single", n=None):
    return _exact_family("series_vs_operational",
                         lambda k: hm.operational_construct(k) == hm.bvdhp(k), n)


@register("series_vs_monomial")
def _mono(variant="single", n=None):
    return _exact_family("series_vs_monomial",
                         lambda k: hm.monomial_construct(k) == hm.bvdhp(k), n)


@register("series_vs_umbral")
def _umb(variant="single", n=None):
    return _exact_family("series_vs_umbral",
                         lambda k: umbral_expand(k) == hm.bvdhp(k), n)


@register("umbral_gf")
def _umb_gf(variant="single", n=None):
    return _exact_family("umbral_gf",
                         lambda k: umbral_gf_coefficient(k) == umbral_expand(k), n)


@register("dhp_specialization")
def _dhp_spec(variant="single", n=None):
    def ok(k):
        via_bv = hm.bvdhp(k).scale(x=2).specialize(y=-1)
        via_umbral = umbral_expand(k, DHP_VACUUM).scale(x=2)
        return via_bv == hm.dhp(k) == via_umbral
    return _exact_family("dhp_specialization", ok, n)


@register("heat_equation_exact")
def _heat_exact(variant="single", n=None):
    def ok(k):
        h = hm.bvdhp(k)
        return (poly_diff(h, "y") - h.diff("x", 2).div_L()).is_zero()
    return _exact_family("heat_equation_exact", ok, n)


@register("initial_condition")
def _init(variant="single", n=None):
    return _exact_family("initial_condition",
                         lambda k: hm.bvdhp(k).specialize(y=0)
                         == ExactPoly.monomial(ex=k, eL=k), n)


@register("diff_x_closed")
def _dx(variant="single", n=range(21), r=range(6)):
    ns, rs = _lst(n), _lst(r)
    bad = [(k, j) for k in ns for j in rs
           if hm.diff_x_closed(k, j) != hm.bvdhp(k).diff("x", j)]
    return _exact_report("diff_x_closed", variant, {"n": ns, "r": rs}, not bad)


@register("diff_y_closed")
def _dy(variant="single", n=range(21), r=range(6)):
    ns, rs = _lst(n), _lst(r)
    bad = [(k, j) for k in ns for j in rs
           if hm.diff_y_closed(k, j) != hm.bvdhp(k).diff("y", j)]
    return _exact_report("diff_y_closed", variant, {"n": ns, "r": rs}, not bad)


@register("recurrence")
def _rec(variant="single", n=None):
    ns = _lst(n) if n is not None else list(range(1, EXACT_N))
    return _exact_family("recurrence",
                         lambda k: hm.recurrence_next(k) == hm.bvdhp(k + 1), ns)


@register("commutator_PM")
def _comm(variant="single", n=range(21)):
    def ok(k):
        h = hm.bvdhp(k)
        return hm.apply_P(hm.apply_M(h)) - hm.apply_M(hm.apply_P(h)) == h
    return _exact_family("commutator_PM", ok, list(n) if isinstance(n, range) else n)


@register("ode")
def _ode(variant="single", n=None):
    return _exact_family("ode", lambda k: hm.ode_residual(k).is_zero(), n)


@register("inverse_expansion")
def _inv(variant="single", n=None):
    return _exact_family("inverse_expansion",
                         lambda k: hm.inverse_expansion(k) == ExactPoly.monomial(ex=k), n)


@register("rodrigues", variants=("corrected", "paper"))
def _rod(variant="corrected", n=range(11)):
    ns = _lst(n)
    bad, ill = [], []
    for k in ns:
        got = hm.rodrigues(k, variant)
        if got is None:
            ill.append(k)
        elif got != hm.bvdhp(k):
            bad.append(k)
    params = {"n": ns}
    if bad:
        params["mismatch_n"] = bad
    if ill:
        params["ill_defined_n"] = ill
    if ill and not bad and len(ill) == len(ns):
        return CheckReport("rodrigues", variant, params, math.nan, 0.0, ILL_DEFINED)
    return _exact_report("rodrigues", variant, params, not bad and not ill)


@register("integral_x")
def _ix(variant="single", n=range(16)):
    return _exact_family("integral_x",
                         lambda k: _eq_pair(hm.integral_x_identity(k)), _lst(n))


@register("integral_y")
def _iy(variant="single", n=range(16)):
    return _exact_family("integral_y",
                         lambda k: _eq_pair(hm.integral_y_identity(k)), _lst(n))


def _eq_pair(pair):
    return pair[0] == pair[1]


def _quad_oracle(f, a, b) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        return integrate.quad(f, a, b, epsabs=1e-14, epsrel=1e-13, limit=200)[0]


@register("cosine_integral_x", variants=("corrected", "paper"))
def _cix(variant="corrected", n=range(7), x0=(0.5, 1.0, math.pi / 2, 2.0),
         y=(-1.0, 1.0), lam=LAMBDAS, tolerance=DEFAULT_TOL):
    worst = 0.0
    for lv in _lst(lam):
        p = make_param(lv)
        for k in _lst(n):
            for xv in _lst(x0):
                for yv in _lst(y):
                    ref = _quad_oracle(
                        lambda z: nm.eval_bvdhp(k, z, yv, p) * math.cos(z), 0.0, xv)
                    got = hm.cosine_integral_x(k, xv, yv, p, variant)
                    worst = max(worst, rel(got, ref))
    return CheckReport.judge("cosine_integral_x", variant,
                             {"n": _lst(n), "x0": _lst(x0), "y": _lst(y), "lam": _lst(lam)},
                             worst, tolerance)


@register("cosine_integral_y", variants=("corrected", "paper"))
def _ciy(variant="corrected", n=range(7), x=(-1.0, 0.5, 1.0), y0=(0.5, 1.0, 2.0),
         lam=LAMBDAS, tolerance=DEFAULT_TOL):
    worst = 0.0
    for lv in _lst(lam):
        p = make_param(lv)
        for k in _lst(n):
            for xv in _lst(x):
                for yv in _lst(y0):
                    ref = _quad_oracle(
                        lambda e: nm.eval_bvdhp(k, xv, e, p) * math.cos(e), 0.0, yv)
                    got = hm.cosine_integral_y(k, xv, yv, p, variant)
                    worst = max(worst, rel(got, ref))
    return CheckReport.judge("cosine_integral_y", variant,
                             {"n": _lst(n), "x": _lst(x), "y0": _lst(y0), "lam": _lst(lam)},
                             worst, tolerance)


@register("scaling_relations")
def _scal(variant="single", n=range(NUMERIC_N + 1), x=XY, y=XY, lam=LAMBDAS,
          tolerance=DEFAULT_TOL):
    worst = 0.0
    for lv in _lst(lam):
        p = make_param(lv)
        for k in _lst(n):
            for xv in _lst(x):
                for yv in _lst(y):
                    scale = max(1.0, abs(nm.eval_bvdhp(k, xv, yv, p)),
                                abs(nm.eval_dhp(k, xv, p)))
                    worst = max(worst, nm.scaling_checks(k, xv, yv, p) / scale)
    return CheckReport.judge("scaling_relations", variant,
                             {"n": _lst(n), "lam": _lst(lam)}, worst, tolerance)


@register("mellin_gauss", variants=("corrected", "paper"))
def _mg(variant="corrected", mu=(1.0, 2.0, 3.0, 4.0, 5.5), y=(0.5, 1.0, 2.0),
        lam=LAMBDAS, tolerance=1e-9):
    worst, failing = 0.0, []
    for lv in _lst(lam):
        p = make_param(lv)
        for m in _lst(mu):
            for yv in _lst(y):
                q, rhs = nm.mellin_gauss(m, yv, p, variant)
                r = rel(q, rhs)
                if r > tolerance and m not in failing:
                    failing.append(m)
                worst = max(worst, r)
    params = {"mu": _lst(mu), "y": _lst(y), "lam": _lst(lam)}
    if failing:
        params["mismatch_mu"] = failing
    return CheckReport.judge("mellin_gauss", variant, params, worst, tolerance)


@register("even_gf", variants=("corrected", "paper"))
def _egf(variant="corrected", ratio=(-0.3, -0.15, 0.15, 0.3), x=XY, y=XY, lam=LAMBDAS,
         N=30, tolerance=DEFAULT_TOL, t=None):
    if variant == "paper":
        # sample point from the acceptance list; outside the printed radius,
        # so the closed form is taken on the principal complex branch
        pts = [(0.05, 1.0, 1.0, 1.0)] if t is None else [
            (tv, xv, yv, lv) for tv in _lst(t) for xv in _lst(x)
            for yv in _lst(y) for lv in _lst(lam)]
        worst = 0.0
        for tv, xv, yv, lv in pts:
            closed, series = nm.even_gf(nm.GFPoint(tv, xv, yv, make_param(lv)),
                                        "paper", N, check_domain=False)
            worst = max(worst, abs(closed - series) / max(1.0, abs(series)))
        params = {"points": [list(p) for p in pts], "N": N}
        return CheckReport.judge("even_gf", variant, params, worst, tolerance)
    worst = 0.0
    for lv in _lst(lam):
        p = make_param(lv)
        for xv in _lst(x):
            for yv in _lst(y):
                ts = _lst(t) if t is not None else [
                    rv / (4.0 * yv * p.L) for rv in _lst(ratio)]
                for tv in ts:
                    closed, series = nm.even_gf(nm.GFPoint(tv, xv, yv, p), "corrected", N)
                    worst = max(worst, rel(closed, series))
    params = {"ratio": _lst(ratio), "lam": _lst(lam), "N": N}
    return CheckReport.judge("even_gf", variant, params, worst, tolerance)


@register("ortho_dhp_offdiag")
def _odo(variant="single", nmax=8, lam=LAMBDAS, tolerance=DEFAULT_TOL):
    worst = 0.0
    for lv in _lst(lam):
        p = make_param(lv)
        for n in range(nmax + 1):
            for m in range(n + 1, nmax + 1):
                val = nm.ortho_dhp(n, m, p)
                worst = max(worst, abs(val) / math.sqrt(nm.dhp_norm(n, p) * nm.dhp_norm(m, p)))
    return CheckReport.judge("ortho_dhp_offdiag", variant,
                             {"nmax": nmax, "lam": _lst(lam)}, worst, tolerance)


@register("ortho_dhp_norm", variants=("corrected", "paper"))
def _odn(variant="corrected", nmax=8, lam=LAMBDAS, tolerance=DEFAULT_TOL):
    worst = 0.0
    norm = nm.dhp_norm if variant == "corrected" else nm.dhp_norm_printed
    for lv in _lst(lam):
        p = make_param(lv)
        for n in range(nmax + 1):
            val = nm.ortho_dhp(n, n, p)
            try:
                ref = norm(n, p)
            except (OverflowError, ValueError):
                ref = math.nan
            if isinstance(ref, complex) or not math.isfinite(ref) or ref == 0:
                worst = math.inf
                continue
            worst = max(worst, abs(val - ref) / abs(ref))
    return CheckReport.judge("ortho_dhp_norm", variant,
                             {"nmax": nmax, "lam": _lst(lam)}, worst, tolerance)


def _partial_paper(name, pairs, ys, lams, tolerance):
    divergent = []
    for lv in lams:
        p = make_param(lv)
        for yv in ys:
            for n, m in pairs:
                if math.isinf(nm.partial_ortho(n, m, yv, p, "paper")):
                    divergent.append([n, m, yv, lv])
    params = {"pairs": [list(q) for q in pairs], "y": ys, "lam": lams,
              "divergent": len(divergent)}
    if divergent:
        return CheckReport(name, "paper", params, math.inf, tolerance, DIVERGENT)
    return CheckReport.judge(name, "paper", params, 0.0, tolerance)


@register("partial_ortho_offdiag", variants=("corrected", "paper"))
def _poo(variant="corrected", nmax=6, y=(-1.0, -2.0), lam=LAMBDAS, tolerance=DEFAULT_TOL):
    pairs = [(n, m) for n in range(nmax + 1) for m in range(n + 1, nmax + 1)]
    if variant == "paper":
        return _partial_paper("partial_ortho_offdiag", pairs[:3], _lst(y), _lst(lam), tolerance)
    worst = 0.0
    for lv in _lst(lam):
        p = make_param(lv)
        for yv in _lst(y):
            for n, m in pairs:
                val = nm.partial_ortho(n, m, yv, p)
                scale = math.sqrt(nm.partial_norm(n, yv, p) * nm.partial_norm(m, yv, p))
                worst = max(worst, abs(val) / scale)
    return CheckReport.judge("partial_ortho_offdiag", variant,
                             {"nmax": nmax, "y": _lst(y), "lam": _lst(lam)}, worst, tolerance)


@register("partial_ortho_norm", variants=("corrected", "paper"))
def _pon(variant="corrected", nmax=6, y=(-1.0, -2.0), lam=LAMBDAS, tolerance=DEFAULT_TOL):
    if variant == "paper":
        pairs = [(n, n) for n in range(3)]
        return _partial_paper("partial_ortho_norm", pairs, _lst(y), _lst(lam), tolerance)
    worst = 0.0
    for lv in _lst(lam):
        p = make_param(lv)
        for yv in _lst(y):
            for n in range(nmax + 1):
                val = nm.partial_ortho(n, n, yv, p)
                ref = nm.partial_norm(n, yv, p)
                worst = max(worst, abs(val - ref) / ref)
    return CheckReport.judge("partial_ortho_norm", variant,
                             {"nmax": nmax, "y": _lst(y), "lam": _lst(lam)}, worst, tolerance)


@register("nodhf_initial", variants=("corrected", "paper"))
def _ndi(variant="corrected", mu=(0.5, 1.0, 2.0), x=(0.5, 1.0, 2.0), lam=LAMBDAS,
         tolerance=DEFAULT_TOL):
    kernel = "L-consistent" if variant == "corrected" else "paper"
    worst = 0.0
    for lv in _lst(lam):
        p = make_param(lv)
        for m in _lst(mu):
            for xv in _lst(x):
                ref = (xv * p.L) ** (-m)
                got = nm.nodhf(m, xv, 0.0, p, kernel)
                worst = max(worst, abs(got - ref) / ref)
    return CheckReport.judge("nodhf_initial", variant,
                             {"mu": _lst(mu), "x": _lst(x), "lam": _lst(lam), "kernel": kernel},
                             worst, tolerance)


@register("nodhf_derivative")
def _ndd(variant="single", mu=(0.5, 1.0, 1.5), x=1.0, y=1.0, lam=1.0, h=1e-4,
         tolerance=1e-5):
    p = make_param(lam)
    worst = 0.0
    for m in _lst(mu):
        fd = (nm.nodhf(m, x + h, y, p) - nm.nodhf(m, x - h, y, p)) / (2 * h)
        ref = -m * p.L * nm.nodhf(m + 1, x, y, p)
        worst = max(worst, abs(fd - ref) / abs(ref))
    return CheckReport.judge("nodhf_derivative", variant,
                             {"mu": _lst(mu), "x": x, "y": y, "lam": lam, "h": h},
                             worst, tolerance)


@register("gaussian_quartic")
def _gq(variant="single", cases=((1.0, -1.0, 1.0), (2.0, -0.5, 0.5)), tolerance=DEFAULT_TOL):
    worst = 0.0
    for a, b, lv in cases:
        q, via = nm.gaussian_quartic(a, b, make_param(lv))
        worst = max(worst, abs(q - via) / abs(q))
    return CheckReport.judge("gaussian_quartic", variant,
                             {"cases": [list(c) for c in cases]}, worst, tolerance)


@register("heat_fd")
def _hfd(variant="single", n=4, lam=1.0, x_min=-5.0, x_max=5.0, dx=0.01, y_max=0.1,
         dy=None, tolerance=1e-3):
    return heat_fd_check(n, make_param(lam), HeatGrid(x_min, x_max, dx, y_max, dy),
                         tolerance)


@register("classical_limit")
def _cl(variant="single", lam=1e-8, n=range(NUMERIC_N + 1), x=XY, y=XY, tolerance=1e-6):
    p = make_param(lam)
    worst = 0.0
    for k in _lst(n):
        for xv in _lst(x):
            worst = max(worst, rel(nm.eval_dhp(k, xv, p), _classical_h(k, xv)))
            for yv in _lst(y):
                worst = max(worst, rel(nm.eval_bvdhp(k, xv, yv, p),
                                       _classical_bivariate(k, xv, yv)))
    return CheckReport.judge("classical_limit", variant,
                             {"lam": lam, "n": _lst(n)}, worst, tolerance)


def _classical_bivariate(n, x, y) -> float:
    f = math.factorial
    return math.fsum(f(n) / (f(n - 2 * k) * f(k)) * x ** (n - 2 * k) * y ** k
                     for k in range(n // 2 + 1))


def _classical_h(n, x) -> float:
    return float(np.polynomial.hermite.hermval(x, [0] * n + [1]))


# -- runners ------------------------------------------------------------------

def check_names() -> list[str]:
    return list(REGISTRY)


def run_check(name: str, overrides: Optional[dict] = None,
              registry: Optional[dict] = None) -> CheckReport:
    """Run one registered check; ``overrides`` may set ``variant`` and grid values."""
    reg = REGISTRY if registry is None else registry
    try:
        check = reg[name]
    except KeyError:
        raise UnknownCheckError(name) from None
    kw = dict(overrides or {})
    variant = kw.pop("variant", None) or check.variants[0]
    if variant not in check.variants:
        if check.variants == ("single",) and variant in ("corrected", "single"):
            variant = "single"
        else:
            raise ValueError(f"check {name!r} has no variant {variant!r}")
    return check.fn(variant=variant, **kw)


def variants_for(check: Check, policy: str) -> list[str]:
    if check.variants == ("single",):
        return ["single"] if policy in ("corrected", "both") else []
    if policy == "both":
        return list(check.variants)
    return [policy] if policy in check.variants else []


def run_all(variant_policy: str = "corrected",
            registry: Optional[dict] = None) -> list[CheckReport]:
    """Run every registered check in registration order.

    ``variant_policy`` is ``"corrected"`` (single + corrected variants),
    ``"paper"`` (paper variants only) or ``"both"``.
    """
    if variant_policy not in ("paper", "corrected", "both"):
        raise ValueError(f"unknown variant policy {variant_policy!r}")
    reg = REGISTRY if registry is None else registry
    if not reg:
        raise LookupError("no checks registered")
    out = []
    for name, check in reg.items():
        for v in variants_for(check, variant_policy):
            out.append(check.fn(variant=v))
    return out


def aggregate_pass(reports: Iterable[CheckReport]) -> bool:
    """True iff every non-paper report passed."""
    return all(r.passed for r in reports if r.variant != "paper")
