"""Umbral vacuum and moment-functional evaluation.

An umbral expression ``sum_k c_k h^k`` is evaluated by the linear map
``h^k -> phi_k``, where ``phi`` is a :class:`MomentSequence`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import LL, ONE, X, ZERO, ExactPoly, MomentSequence
from .hermite import _check_index


def vacuum_moment(nu: int) -> ExactPoly:
    """``phi_nu``: ``y^s (2s)!/s! L^s`` for ``nu = 2s``, zero for odd ``nu``."""
    if nu < 0:
        raise ValueError("moment index must be nonnegative")
    if nu % 2:
        return ZERO
    s = nu // 2
    return ExactPoly.monomial(ey=s, eL=s,
                              coeff=math.factorial(2 * s) // math.factorial(s))


def dhp_moment(nu: int) -> ExactPoly:
    """The ``y = -1`` vacuum: ``(-1)^s (2s)!/s! L^s`` for ``nu = 2s``."""
    if nu < 0:
        raise ValueError("moment index must be nonnegative")
    if nu % 2:
        return ZERO
    s = nu // 2
    return ExactPoly.monomial(eL=s, coeff=(-1) ** s * math.factorial(2 * s) // math.factorial(s))


HERMITE_VACUUM = MomentSequence(vacuum_moment, "hermite")
DHP_VACUUM = MomentSequence(dhp_moment, "dhp")


@dataclass(frozen=True)
class UmbralExpr:
    """Finite polynomial in the umbral symbol; ``coeffs[k]`` multiplies ``h^k``."""

    coeffs: tuple[ExactPoly, ...]

    def __post_init__(self):
        if not self.coeffs:
            object.__setattr__(self, "coeffs", (ZERO,))

    @classmethod
    def power(cls, k: int, coeff: ExactPoly = ONE) -> "UmbralExpr":
        return cls(tuple([ZERO] * k + [coeff]))

    def __add__(self, other: "UmbralExpr") -> "UmbralExpr":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return UmbralExpr(tuple(p + q for p, q in zip(a, b)))

    def __mul__(self, other) -> "UmbralExpr":
        if isinstance(other, UmbralExpr):
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, p in enumerate(self.coeffs):
                for j, q in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + p * q
            return UmbralExpr(tuple(out))
        return UmbralExpr(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__


def umbral_eval(u: UmbralExpr, moments: MomentSequence = HERMITE_VACUUM) -> ExactPoly:
    """Apply the moment functional: ``sum_k coeffs[k] * moments(k)``."""
    total = ZERO
    for k, c in enumerate(u.coeffs):
        if c:
            total = total + c * moments(k)
    return total


def umbral_expand(n: int, moments: MomentSequence = HERMITE_VACUUM) -> ExactPoly:
    """``(h + L x)^n phi_0`` by the binomial theorem.

    With ``DHP_VACUUM`` followed by ``.scale(x=2)`` this gives the
    single-variable degenerate Hermite polynomial.
    """
    n = _check_index(n)
    total = ZERO
    for k in range(n + 1):
        m = moments(k)
        if m:
            total = total + m.shift(ex=n - k, eL=n - k) * math.comb(n, k)
    return total


def umbral_gf_coefficient(n: int, moments: MomentSequence = HERMITE_VACUUM) -> ExactPoly:
    """``n! [t^n] exp((h + L x) t) phi_0`` from the truncated series product.

    ``exp(h t)`` and ``exp(L x t)`` are expanded to order ``n`` separately,
    multiplied as power series in ``t`` with umbral coefficients, and the
    ``t^n`` coefficient is evaluated against the vacuum.
    """
    n = _check_index(n)
    exp_h = [UmbralExpr.power(k, ExactPoly.const(Fraction(1, math.factorial(k))))
             for k in range(n + 1)]
    lx = LL * X
    exp_lx = [UmbralExpr((lx ** k * Fraction(1, math.factorial(k)),))
              for k in range(n + 1)]
    coeff_n = UmbralExpr((ZERO,))
    for k in range(n + 1):
        coeff_n = coeff_n + exp_h[k] * exp_lx[n - k]
    return umbral_eval(coeff_n, moments) * math.factorial(n)


def binomial_umbral(a: ExactPoly, n: int) -> UmbralExpr:
    """``(h + a)^n`` as an :class:`UmbralExpr`."""
    base = UmbralExpr((a, ONE))
    out = UmbralExpr((ONE,))
    for _ in range(n):
        out = out * base
    return out
