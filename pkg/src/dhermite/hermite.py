"""Exact constructions of the bivariate degenerate Hermite polynomials.

``bvdhp(n)`` is the reference series; every other constructor here
(operational, monomiality, recurrence, inverse expansion, Rodrigues) is an
independent route that should land on the same :class:`ExactPoly`.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Optional

from .core import (LL, ONE, X, ZERO, DegenerateParam, ExactPoly,
                   RepresentationError, poly_diff)

MAX_ORDER = 64

Variant = Literal["paper", "corrected"]


def _check_index(n: int) -> int:
    if isinstance(n, bool) or int(n) != n:
        raise TypeError(f"order must be an integer, got {n!r}")
    n = int(n)
    if n < 0:
        raise ValueError(f"order must be nonnegative, got {n}")
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds MAX_ORDER={MAX_ORDER}")
    return n


def _check_variant(variant: str, allowed=("paper", "corrected")) -> str:
    if variant not in allowed:
        raise ValueError(f"variant must be one of {allowed}, got {variant!r}")
    return variant


@lru_cache(maxsize=None)
def bvdhp(n: int) -> ExactPoly:
    """``H_n(x, y|lam) = sum_k n!/((n-2k)! k!) L^(n-k) x^(n-2k) y^k``."""
    n = _check_index(n)
    f = math.factorial
    return ExactPoly({(n - 2 * k, k, n - k): f(n) // (f(n - 2 * k) * f(k))
                      for k in range(n // 2 + 1)})


@lru_cache(maxsize=None)
def dhp(n: int) -> ExactPoly:
    """Single-variable degenerate Hermite ``H_n(x|lam)``, built from its own series."""
    n = _check_index(n)
    f = math.factorial
    return ExactPoly({(n - 2 * k, 0, n - k):
                      (-1) ** k * f(n) // (f(k) * f(n - 2 * k)) * 2 ** (n - 2 * k)
                      for k in range(n // 2 + 1)})


def diff_x_closed(n: int, r: int) -> ExactPoly:
    """Closed form of the ``r``-th x-derivative: ``n!/(n-r)! L^r H_{n-r}``.

    Over-differentiation (``r > n``) yields the zero polynomial.
    """
    n = _check_index(n)
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r > n:
        return ZERO
    return bvdhp(n - r).shift(eL=r) * (math.factorial(n) // math.factorial(n - r))


def diff_y_closed(n: int, r: int) -> ExactPoly:
    """Closed form of the ``r``-th y-derivative: ``n!/(n-2r)! L^r H_{n-2r}``."""
    n = _check_index(n)
    if r < 0:
        raise ValueError("r must be nonnegative")
    if 2 * r > n:
        return ZERO
    return bvdhp(n - 2 * r).shift(eL=r) * (math.factorial(n) // math.factorial(n - 2 * r))


def recurrence_next(n: int) -> ExactPoly:
    """``L x H_n + 2 n L y H_{n-1}``, which should equal ``H_{n+1}``."""
    n = _check_index(n)
    if n < 1:
        raise ValueError("the three-term recurrence needs n >= 1")
    return (LL * X) * bvdhp(n) + bvdhp(n - 1).shift(ey=1, eL=1) * (2 * n)


def apply_M(p: ExactPoly) -> ExactPoly:
    """Raising operator ``L x + 2 y d/dx``."""
    return (LL * X) * p + poly_diff(p, "x").shift(ey=1) * 2


def apply_P(p: ExactPoly) -> ExactPoly:
    """Lowering operator ``(1/L) d/dx``, with the division done on exponents.

    Raises :class:`RepresentationError` when some term of ``dp/dx`` carries
    no factor of ``L``.
    """
    return poly_diff(p, "x").div_L()


def monomial_construct(n: int) -> ExactPoly:
    """``M^n {1}``."""
    n = _check_index(n)
    p = ONE
    for _ in range(n):
        p = apply_M(p)
    return p


def recurrence_construct(n: int) -> ExactPoly:
    """Build ``H_n`` from ``H_0 = 1``, ``H_1 = L x`` by the three-term recurrence."""
    n = _check_index(n)
    prev, cur = ONE, LL * X
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, (LL * X) * cur + prev.shift(ey=1, eL=1) * (2 * k)
    return cur


def ode_residual(n: int) -> ExactPoly:
    """``x H_n' + (2y/L) H_n'' - n H_n``; zero on the whole family."""
    n = _check_index(n)
    h = bvdhp(n)
    hx = poly_diff(h, "x")
    hxx = poly_diff(hx, "x")
    return X * hx + hxx.shift(ey=1).div_L() * 2 - h * n


def operational_construct(n: int) -> ExactPoly:
    """``exp((y/L) d^2/dx^2) (L x)^n``, truncated where the operator goes nilpotent."""
    n = _check_index(n)
    base = ExactPoly.monomial(ex=n, eL=n)
    total = ZERO
    term = base
    for k in range(n // 2 + 1):
        # term = (y/L)^k d^{2k} (Lx)^n, before the 1/k!
        total = total + term * Fraction(1, math.factorial(k))
        term = term.diff("x", 2).shift(ey=1).div_L()
    return total


def inverse_expansion(n: int) -> ExactPoly:
    """``sum_r (-1)^r n!/(r!(n-2r)!) L^(r-n) y^r H_{n-2r}``; equals ``x**n``.

    The sum is formed after multiplying every term by ``L**n`` so that no
    intermediate leaves the ring, and the common factor is removed at the end.
    """
    n = _check_index(n)
    f = math.factorial
    scaled = ZERO
    for r in range(n // 2 + 1):
        c = (-1) ** r * f(n) // (f(r) * f(n - 2 * r))
        scaled = scaled + bvdhp(n - 2 * r).shift(ey=r, eL=r) * c
    if scaled.min_exponent("L") < n:
        raise RepresentationError(
            "combined expansion keeps a negative power of L")
    return scaled.div_L(n)


def rodrigues(n: int, variant: Variant = "corrected") -> Optional[ExactPoly]:
    """Rodrigues-type construction from the weight ``exp(L x^2 / (4y))``.

    With ``q_0 = 1`` and ``q_{k+1} = q_k' + (L x / (2y)) q_k`` one has
    ``d^n/dx^n w = w q_n``.  ``"corrected"`` returns ``(2y)^n q_n``.
    ``"paper"`` returns ``(-1)^(n/2) / 2^n q_n``, which is only real for even
    ``n``; odd ``n`` gives ``None`` (ill-defined).
    """
    n = _check_index(n)
    _check_variant(variant)
    q = ONE
    for _ in range(n):
        q = poly_diff(q, "x") + q.shift(ex=1, ey=-1, eL=1) * Fraction(1, 2)
    if variant == "corrected":
        return q.shift(ey=n) * 2 ** n
    if n % 2:
        return None
    return q * Fraction((-1) ** (n // 2), 2 ** n)


def integral_x_identity(n: int) -> tuple[ExactPoly, ExactPoly]:
    """Both sides of ``int_0^x H_n(z, y) dz = sum_r (-1)^r/(r+1) C(n,r) x^(r+1) L^r H_{n-r}``."""
    n = _check_index(n)
    lhs = bvdhp(n).integrate("x")
    rhs = ZERO
    for r in range(n + 1):
        c = Fraction((-1) ** r * math.comb(n, r), r + 1)
        rhs = rhs + bvdhp(n - r).shift(ex=r + 1, eL=r) * c
    return lhs, rhs


def integral_y_identity(n: int) -> tuple[ExactPoly, ExactPoly]:
    """Both sides of the y-integral identity, ``int_0^y H_n(x, e) de``."""
    n = _check_index(n)
    f = math.factorial
    lhs = bvdhp(n).integrate("y")
    rhs = ZERO
    for r in range(n // 2 + 1):
        c = Fraction((-1) ** r * f(n), f(r + 1) * f(n - 2 * r))
        rhs = rhs + bvdhp(n - 2 * r).shift(ey=r + 1, eL=r) * c
    return lhs, rhs


# -- cosine integrals --------------------------------------------------------

def repeated_cos_integral(k: int, x: float) -> float:
    """k-fold iterated integral of ``cos`` from 0, ``I_k(x)``.

    ``I_k(x) = sum_{j >= 0} (-1)^j x^(k+2j) / (k+2j)!`` (the Taylor tail of
    ``cos(x - k pi/2)``).  For ``|x| > 4`` the closed form ``cos(x - k pi/2)``
    minus its degree ``k-1`` Taylor polynomial is used instead.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    x = float(x)
    if x == 0.0:
        return 0.0
    if abs(x) <= 4.0:
        term = x ** k / math.factorial(k)
        parts = [term]
        peak = abs(term)
        j = 0
        while abs(term) > 1e-18 * peak:
            j += 1
            term = -term * x * x / ((k + 2 * j - 1) * (k + 2 * j))
            parts.append(term)
            peak = max(peak, abs(term))
        return math.fsum(parts)
    taylor = [_cos_shift_deriv(j - k) * x ** j / math.factorial(j) for j in range(k)]
    return math.cos(x - k * math.pi / 2) - math.fsum(taylor)


def _cos_shift_deriv(m: int) -> float:
    # cos(m pi/2) exactly for integer m
    return (1.0, 0.0, -1.0, 0.0)[m % 4]


def _eval_family(n: int, x: float, y: float, param: DegenerateParam) -> list[float]:
    from .numeric import eval_bvdhp_all
    return eval_bvdhp_all(n, x, y, param)


def cosine_integral_x(n: int, x0: float, y: float, param: DegenerateParam,
                      variant: Variant = "corrected") -> float:
    """``int_0^x0 H_n(z, y|lam) cos z dz``.

    ``"corrected"`` sums ``(-1)^r d^r/dx^r H_n(x0) I_{r+1}(x0)``, which
    terminates after ``n + 1`` terms.  ``"paper"`` evaluates the printed
    right side with ``cos(x0 + r pi/2) / (r+1)`` weights.
    """
    n = _check_index(n)
    _check_variant(variant)
    H = _eval_family(n, x0, y, param)
    L = param.L
    terms = []
    for r in range(n + 1):
        if variant == "corrected":
            deriv = math.perm(n, r) * L ** r * H[n - r]
            terms.append((-1) ** r * deriv * repeated_cos_integral(r + 1, x0))
        else:
            terms.append((-1) ** r * math.cos(x0 + r * math.pi / 2) / (r + 1)
                         * math.comb(n, r) * L ** r * H[n - r])
    return math.fsum(terms)


def cosine_integral_y(n: int, x: float, y0: float, param: DegenerateParam,
                      variant: Variant = "corrected") -> float:
    """``int_0^y0 H_n(x, e|lam) cos e de``.

    The printed right side (``"paper"``) carries ``cos(x + r pi/2)`` with
    the x argument, and is evaluated exactly as written.
    """
    n = _check_index(n)
    _check_variant(variant)
    H = _eval_family(n, x, y0, param)
    L = param.L
    f = math.factorial
    terms = []
    for r in range(n // 2 + 1):
        deriv = f(n) // f(n - 2 * r) * L ** r * H[n - 2 * r]
        if variant == "corrected":
            terms.append((-1) ** r * deriv * repeated_cos_integral(r + 1, y0))
        else:
            terms.append((-1) ** r * math.cos(x + r * math.pi / 2) / f(r + 1) * deriv)
    return math.fsum(terms)
