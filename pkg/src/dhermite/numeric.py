"""Floating-point evaluation, generating functions and quadrature.

Integrals over infinite ranges are truncated at the radius where the
decaying weight (times the polynomial growth of the integrand) drops below
``QuadratureConfig.weight_floor`` and are then handed to QUADPACK's
adaptive Gauss-Kronrod driver (``scipy.integrate.quad``).  Semi-infinite
Laplace-type integrals are mapped to ``[0, 1]`` with ``z = u / (1 - u)``.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np
from scipy import integrate

from .core import DegenerateParam, DivergenceError, DomainError, make_param

__all__ = [
    "QuadratureConfig", "GFPoint", "eval_bvdhp", "eval_bvdhp_all", "eval_dhp",
    "eval_classical_bivariate", "eval_classical_hermite", "gf_closed",
    "gf_series", "even_gf", "mellin_gauss", "dhp_norm", "partial_norm",
    "ortho_dhp", "partial_ortho", "nodhf", "gaussian_quartic",
    "scaling_checks", "truncation_radius",
]


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and truncation policy for the quadrature routines.

    Attributes
    ----------
    rel_tol, abs_tol : float
        Passed to QUADPACK as ``epsrel`` / ``epsabs``.  For integrals that
        cancel to (near) zero the absolute target is raised to
        ``rel_tol * int |f|`` so the relative request stays meaningful.
    max_subdivisions : int
        QUADPACK ``limit``.
    weight_floor : float
        Infinite ranges are cut where the integrand envelope falls below this.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_subdivisions: int = 2000
    weight_floor: float = 1e-18

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("rel_tol and abs_tol must be positive")
        if self.max_subdivisions < 10:
            raise ValueError("max_subdivisions must be >= 10")
        if not 0 < self.weight_floor < 1:
            raise ValueError("weight_floor must lie in (0, 1)")


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class GFPoint:
    """Arguments ``(t, x, y)`` of a generating function at parameter ``param``."""

    t: float
    x: float
    y: float
    param: DegenerateParam

    @property
    def radius_ratio(self) -> float:
        """``|4 t y L|``; the even-index series converges when this is < 1."""
        return abs(4.0 * self.t * self.y * self.param.L)


# -- pointwise evaluation -----------------------------------------------------

def eval_bvdhp_all(n: int, x: float, y: float, param: DegenerateParam) -> list[float]:
    """``[H_0, ..., H_n]`` at ``(x, y)`` by the three-term recurrence."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    L = param.L
    lx, ly2 = L * x, 2.0 * L * y
    out = [1.0]
    if n == 0:
        return out
    out.append(lx)
    for k in range(1, n):
        nxt = lx * out[k] + k * ly2 * out[k - 1]
        if not math.isfinite(nxt):
            raise OverflowError(
                f"H_{k + 1}({x}, {y}) overflows double precision")
        out.append(nxt)
    return out


def eval_bvdhp(n: int, x: float, y: float, param: DegenerateParam) -> float:
    """``H_n(x, y|lam)`` via ``H_{k+1} = L x H_k + 2 k L y H_{k-1}``."""
    return eval_bvdhp_all(n, float(x), float(y), param)[-1]


def eval_dhp(n: int, x: float, param: DegenerateParam) -> float:
    """``H_n(x|lam) = H_n(2x, -1|lam)``."""
    return eval_bvdhp(n, 2.0 * x, -1.0, param)


_CLASSICAL = make_param(0.0)


def eval_classical_bivariate(n: int, x: float, y: float) -> float:
    """Classical two-variable Hermite ``sum n!/((n-2k)! k!) x^(n-2k) y^k``."""
    return eval_bvdhp(n, x, y, _CLASSICAL)


def eval_classical_hermite(n: int, x: float) -> float:
    """Physicists' Hermite polynomial ``H_n(x)``."""
    return eval_dhp(n, x, _CLASSICAL)


# -- generating functions -----------------------------------------------------

def gf_closed(point: GFPoint) -> float:
    """``(1 + lam)^((x t + y t^2)/lam) = exp(L (x t + y t^2))``."""
    t = point.t
    return math.exp(point.param.L * (point.x * t + point.y * t * t))


def gf_series(point: GFPoint, N: int) -> float:
    """``sum_{n <= N} H_n(x, y|lam) t^n / n!``."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    H = eval_bvdhp_all(N, point.x, point.y, point.param)
    terms = [H[n] * point.t ** n / math.factorial(n) for n in range(N + 1)]
    return math.fsum(terms)


def even_gf(point: GFPoint, variant: Literal["paper", "corrected"] = "corrected",
            N: int = 30, check_domain: bool = True):
    """Even-index generating function: closed form and truncated series.

    Returns ``(closed, series)`` where ``series = sum_{n<=N} H_{2n} t^n/n!``.
    ``"corrected"``: ``(1 - 4tyL)^(-1/2) exp(t L^2 x^2 / (1 - 4tyL))``.
    ``"paper"``: the printed form built from ``(1+lam)^(4ty/lam)`` and
    ``(1+lam)^(2x/lam)``.

    With ``check_domain=False`` a closed form outside its stated domain is
    returned as a principal-branch complex number instead of raising.
    """
    if variant not in ("paper", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    t, x, y, L = point.t, point.x, point.y, point.param.L
    if variant == "corrected":
        q = 4.0 * t * y * L
        if check_domain and q >= 1.0:
            raise DomainError(f"4 t y L = {q} must be < 1")
        denom = 1.0 - q
        num = t * (L * x) ** 2
    else:
        q = math.exp(4.0 * t * y * L)
        if check_domain and q >= 1.0:
            raise DomainError(f"(1+lam)^(4ty/lam) = {q} must be < 1")
        denom = 1.0 - q
        num = t * math.exp(2.0 * x * L)
    if denom > 0:
        closed = math.exp(num / denom) / math.sqrt(denom)
    elif denom == 0:
        closed = complex(math.inf, math.inf) if not check_domain else math.inf
    else:
        closed = cmath.exp(num / denom) / cmath.sqrt(denom)
    H = eval_bvdhp_all(2 * N, x, y, point.param)
    series = math.fsum(H[2 * n] * t ** n / math.factorial(n) for n in range(N + 1))
    return closed, series


# -- quadrature plumbing ------------------------------------------------------

def truncation_radius(decay: float, degree: float, floor: float) -> float:
    """Smallest ``R >= 1`` with ``R^degree exp(-decay R^2) <= floor``."""
    if decay <= 0:
        raise DivergenceError("weight does not decay")
    target = -math.log(floor)
    R = math.sqrt(target / decay)
    for _ in range(100):
        R_new = math.sqrt((target + max(degree, 0.0) * math.log(max(R, 1.0))) / decay)
        if abs(R_new - R) < 1e-9 * R:
            break
        R = R_new
    return max(R_new, 1.0)


def _quad(f: Callable[[float], float], a: float, b: float, cfg: QuadratureConfig,
          cancelling: bool = False, **kw) -> tuple[float, float]:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        epsabs = cfg.abs_tol
        if cancelling:
            l1, _ = integrate.quad(lambda s: abs(f(s)), a, b, epsrel=1e-4,
                                   epsabs=cfg.abs_tol, limit=cfg.max_subdivisions, **kw)
            epsabs = max(epsabs, cfg.rel_tol * l1)
        val, err = integrate.quad(f, a, b, epsrel=cfg.rel_tol, epsabs=epsabs,
                                  limit=cfg.max_subdivisions, **kw)
    return val, err


def _gauss_line(f, decay: float, degree: float, cfg: QuadratureConfig,
                cancelling: bool) -> tuple[float, float]:
    R = truncation_radius(decay, degree, cfg.weight_floor)
    left = _quad(f, -R, 0.0, cfg, cancelling)
    right = _quad(f, 0.0, R, cfg, cancelling)
    return left[0] + right[0], left[1] + right[1]


# -- integrals ------------------------------------------------------------------

def mellin_gauss(mu: float, y: float, param: DegenerateParam,
                 variant: Literal["paper", "corrected"] = "corrected",
                 cfg: QuadratureConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """``int_0^inf x^(mu-1) exp(-y L x^2) dx`` by quadrature, with a closed form.

    Returns ``(quad, rhs)``.  ``"corrected"``: ``(1/2) (y L)^(-mu/2) Gamma(mu/2)``.
    ``"paper"``: ``(1/2) (y L)^(-floor(mu/2)) Gamma(mu/2)``.
    """
    if not mu > 0:
        raise DivergenceError(f"mu must be > 0, got {mu}")
    if not y > 0:
        raise DivergenceError(f"y must be > 0, got {y}")
    if variant not in ("paper", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    L = param.L
    c = y * L
    R = truncation_radius(c, mu - 1.0, cfg.weight_floor)
    # x^(mu-1) goes into QUADPACK's algebraic weight, which copes with mu < 1
    quad, _ = _quad(lambda s: math.exp(-c * s * s), 0.0, R, cfg,
                    weight="alg", wvar=(mu - 1.0, 0.0))
    if variant == "corrected":
        rhs = 0.5 * c ** (-mu / 2.0) * math.gamma(mu / 2.0)
    else:
        k = math.floor(mu / 2.0)
        rhs = 0.5 * c ** (-k) * math.gamma(mu / 2.0)
    return quad, rhs


def dhp_norm(n: int, param: DegenerateParam) -> float:
    """``int exp(-L x^2) H_n(x|lam)^2 dx = sqrt(pi) 2^n n! L^(n - 1/2)``."""
    return math.sqrt(math.pi) * 2.0 ** n * math.factorial(n) * param.L ** (n - 0.5)


def dhp_norm_printed(n: int, param: DegenerateParam) -> float:
    """Printed norm ``sqrt(pi lam / log(1+lam)) log(1+lam)^(2^n n!/lam)``."""
    lam = param.lam
    if lam == 0:
        raise DomainError("printed norm is undefined at lam = 0")
    lg = math.log1p(lam)
    return math.sqrt(math.pi / param.L) * lg ** (2.0 ** n * math.factorial(n) / lam)


def partial_norm(n: int, y: float, param: DegenerateParam) -> float:
    """``2^(n+1) n! sqrt(pi) (-y)^(n+1/2) L^(n-1/2)`` for ``y < 0``."""
    if not y < 0:
        raise DomainError("partial orthogonality needs y < 0")
    return (2.0 ** (n + 1) * math.factorial(n) * math.sqrt(math.pi)
            * (-y) ** (n + 0.5) * param.L ** (n - 0.5))


def ortho_dhp(n: int, m: int, param: DegenerateParam,
              cfg: QuadratureConfig = DEFAULT_CONFIG, full_output: bool = False):
    """``int_R exp(-L x^2) H_n(x|lam) H_m(x|lam) dx`` by adaptive quadrature.

    Returns the value, or ``(value, abserr)`` when ``full_output`` is set.
    """
    L = param.L

    def f(s):
        h = eval_bvdhp_all(max(n, m), 2.0 * s, -1.0, param)
        return math.exp(-L * s * s) * h[n] * h[m]

    val, err = _gauss_line(f, L, n + m, cfg, cancelling=(n != m))
    return (val, err) if full_output else val


def partial_ortho(n: int, m: int, y: float, param: DegenerateParam,
                  variant: Literal["paper", "corrected"] = "corrected",
                  cfg: QuadratureConfig = DEFAULT_CONFIG, full_output: bool = False):
    """``int_R w(x) H_n(x,y|lam) H_m(x,y|lam) dx`` at fixed ``y < 0``.

    ``"corrected"`` uses ``w = exp(L x^2 / (4y))``, which decays for ``y < 0``.
    ``"paper"`` uses the printed ``(1+lam)^(-x^2/(4 y lam)) = exp(-L x^2/(4y))``;
    this grows for ``y < 0``, and once truncated integrals over widening
    ranges exceed a growth threshold the function returns ``math.inf`` as a
    divergence marker.
    """
    if not y < 0:
        raise DomainError(f"y must be < 0, got {y}")
    if variant not in ("paper", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    L = param.L
    sign = 1.0 if variant == "corrected" else -1.0
    a = sign * L / (4.0 * y)

    def f(s):
        h = eval_bvdhp_all(max(n, m), s, y, param)
        return math.exp(a * s * s) * h[n] * h[m]

    if variant == "paper":
        threshold = 1e12 * max(partial_norm(n, y, param), partial_norm(m, y, param))
        prev = None
        for R in (2.0, 4.0, 8.0, 16.0, 32.0, 64.0):
            try:
                val, err = _quad(f, -R, R, cfg)
            except OverflowError:
                return (math.inf, math.inf) if full_output else math.inf
            if not math.isfinite(val) or abs(val) > threshold:
                return (math.inf, math.inf) if full_output else math.inf
            if prev is not None and abs(val - prev) <= cfg.rel_tol * abs(val):
                return (val, err) if full_output else val
            prev = val
        return (math.inf, math.inf) if full_output else math.inf

    val, err = _gauss_line(f, -a, n + m, cfg, cancelling=(n != m))
    return (val, err) if full_output else val


def nodhf(mu: float, x: float, y: float, param: DegenerateParam,
          variant: Literal["paper", "L-consistent"] = "L-consistent",
          cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Negative-order function ``H_{-mu}(x, y|lam)`` from its Laplace integral.

    ``(1/Gamma(mu)) int_0^inf z^(mu-1) exp(-x c z - y L z^2) dz`` with
    ``c = L`` (``"L-consistent"``, so ``y = 0`` gives ``(x L)^(-mu)``) or
    ``c = 1`` (``"paper"``).
    """
    if variant not in ("paper", "L-consistent"):
        raise ValueError(f"unknown variant {variant!r}")
    if not mu > 0:
        raise DivergenceError(f"mu must be > 0, got {mu}")
    if not (y > 0 or (y == 0 and x > 0)):
        raise DivergenceError("need y > 0, or y = 0 with x > 0")
    L = param.L
    a = x * (L if variant == "L-consistent" else 1.0)
    b = y * L

    def g(u):
        if u >= 1.0:
            return 0.0
        z = u / (1.0 - u)
        expo = -a * z - b * z * z
        if expo < -745.0:
            return 0.0
        return math.exp(expo) * (1.0 - u) ** (-mu - 1.0)

    # z^(mu-1) dz = u^(mu-1) (1-u)^(-mu-1) du; the u^(mu-1) part is QUADPACK's weight
    val, _ = _quad(g, 0.0, 1.0, cfg, weight="alg", wvar=(mu - 1.0, 0.0))
    return val / math.gamma(mu)


def gaussian_quartic(a: float, b: float, param: DegenerateParam,
                     cfg: QuadratureConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """``int_R exp(-a L x^2 + b L x^4) dx`` two ways.

    Returns ``(quad, via_nodhf)`` where ``via_nodhf = sqrt(pi) H_{-1/2}(a, -b|lam)``.
    """
    if not b < 0:
        raise DivergenceError(f"b must be < 0, got {b}")
    L = param.L

    def expo(s):
        s2 = s * s
        return -a * L * s2 + b * L * s2 * s2

    target = math.log(cfg.weight_floor)
    peak = math.sqrt(a / (2.0 * b)) if a < 0 else 0.0
    R = max(1.0, 2.0 * peak)
    while expo(R) > target + expo(peak):
        R *= 1.25
    half, _ = _quad(lambda s: math.exp(expo(s)), 0.0, R, cfg)
    quad = 2.0 * half
    via = math.sqrt(math.pi) * nodhf(0.5, a, -b, param, "L-consistent", cfg)
    return quad, via


def scaling_checks(n: int, x: float, y: float, param: DegenerateParam) -> float:
    """Largest absolute residual of the real scaling relations at ``(x, y)``.

    ``y > 0``: ``H_n(x,y) = y^(n/2) H_n(x/sqrt(y), 1)``.
    ``y < 0``: ``H_n(x,y) = (-y)^(n/2) H_n(x / (2 sqrt(-y)) | lam)``.
    Always: ``L^(n/2) H_n(x sqrt(L)) = H_n(x|lam)`` with the classical ``H_n``.
    """
    if y == 0:
        raise DomainError("scaling relations need y != 0")
    L = param.L
    lhs = eval_bvdhp(n, x, y, param)
    if y > 0:
        rhs = y ** (n / 2.0) * eval_bvdhp(n, x / math.sqrt(y), 1.0, param)
    else:
        rhs = (-y) ** (n / 2.0) * eval_dhp(n, x / (2.0 * math.sqrt(-y)), param)
    r1 = abs(lhs - rhs)
    r2 = abs(L ** (n / 2.0) * eval_classical_hermite(n, x * math.sqrt(L))
             - eval_dhp(n, x, param))
    return max(r1, r2)


def relative_residual(a, b) -> float:
    """``|a - b| / max(1, |a|, |b|)``."""
    return abs(a - b) / max(1.0, abs(a), abs(b))


def grid(*axes) -> np.ndarray:
    """Cartesian product of 1-d axes as rows."""
    mesh = np.meshgrid(*axes, indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=-1)
