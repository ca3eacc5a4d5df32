"""Parameter handling and exact Laurent-polynomial arithmetic.

Every polynomial identity in the package is decided in the ring of
polynomials in ``x`` and ``L`` with Laurent powers of ``y`` and rational
coefficients.  ``L`` stands for ``log(1 + lam) / lam`` and stays symbolic
until :func:`poly_eval` binds it to a number.
"""
from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

Rational = Union[int, Fraction]
Monomial = tuple[int, int, int]  # (e_x, e_y, e_L)

_SERIES_THRESHOLD = 1e-4


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class RepresentationError(ArithmeticError):
    """A result would leave the ring (negative power of x or L)."""


class DivergenceError(ArithmeticError):
    """An integral does not converge for the given arguments."""


@dataclass(frozen=True)
class DegenerateParam:
    """The degeneracy parameter ``lam`` and ``L = log(1 + lam) / lam``."""

    lam: float
    L: float

    def __repr__(self) -> str:
        return f"DegenerateParam(lam={self.lam!r}, L={self.L!r})"


def make_param(lam: float) -> DegenerateParam:
    """Build a :class:`DegenerateParam`, handling ``lam -> 0`` stably.

    For ``|lam| < 1e-4`` the constant comes from the Taylor series
    ``1 - lam/2 + lam^2/3 - lam^3/4 + lam^4/5``; ``log1p`` is used otherwise.
    """
    lam = float(lam)
    if not lam > -1.0 or math.isnan(lam):
        raise DomainError(f"lambda must be > -1, got {lam}")
    if math.isinf(lam):
        raise DomainError("lambda must be finite")
    if abs(lam) < _SERIES_THRESHOLD:
        L = 1.0 + lam * (-0.5 + lam * (1.0 / 3.0 + lam * (-0.25 + lam * 0.2)))
    else:
        L = math.log1p(lam) / lam
    return DegenerateParam(lam, L)


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("ExactPoly coefficients must be exact (int or Fraction)")
    return Fraction(c)


class ExactPoly:
    """Polynomial in ``x``, ``L`` and Laurent in ``y`` over the rationals.

    Terms are stored canonically as ``{(e_x, e_y, e_L): Fraction}`` with no
    zero coefficients, so ``==`` is exact structural equality.  Instances
    are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Rational] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                ex, ey, eL = (int(e) for e in mono)
                if ex < 0 or eL < 0:
                    raise RepresentationError(
                        f"negative power of x or L in monomial {mono}")
                c = _frac(c)
                if c:
                    key = (ex, ey, eL)
                    clean[key] = clean.get(key, Fraction(0)) + c
                    if not clean[key]:
                        del clean[key]
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: Rational) -> "ExactPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, ex: int = 0, ey: int = 0, eL: int = 0,
                 coeff: Rational = 1) -> "ExactPoly":
        return cls({(ex, ey, eL): coeff})

    @classmethod
    def zero(cls) -> "ExactPoly":
        return cls()

    # -- introspection ----------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, ex: int = 0, ey: int = 0, eL: int = 0) -> Fraction:
        return self._terms.get((ex, ey, eL), Fraction(0))

    def degree(self, var: str = "x") -> int:
        """Largest exponent of ``var``; ``-1`` for the zero polynomial."""
        i = _var_index(var)
        return max((m[i] for m in self._terms), default=-1)

    def min_exponent(self, var: str) -> int:
        i = _var_index(var)
        return min((m[i] for m in self._terms), default=0)

    def has_negative_y(self) -> bool:
        return any(m[1] < 0 for m in self._terms)

    # -- ring operations --------------------------------------------------
    def _combine(self, other, sign: int) -> "ExactPoly":
        other = _coerce(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, Fraction(0)) + sign * c
        return ExactPoly(out)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return _coerce(other)._combine(self, -1)

    def __neg__(self):
        return ExactPoly({m: -c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactPoly({m: c * other for m, c in self._terms.items()})
        other = _coerce(other)
        out: dict[Monomial, Fraction] = defaultdict(Fraction)
        for (a1, b1, c1), k1 in self._terms.items():
            for (a2, b2, c2), k2 in other._terms.items():
                out[(a1 + a2, b1 + b2, c1 + c2)] += k1 * k2
        return ExactPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ExactPoly":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result, base = ExactPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactPoly.const(other)
        if not isinstance(other, ExactPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- exponent shifts --------------------------------------------------
    def shift(self, ex: int = 0, ey: int = 0, eL: int = 0) -> "ExactPoly":
        """Multiply by ``x**ex * y**ey * L**eL``; negative ``ex``/``eL`` must stay legal."""
        out = {}
        for (a, b, c), k in self._terms.items():
            if a + ex < 0 or c + eL < 0:
                raise RepresentationError(
                    f"shift ({ex}, {ey}, {eL}) leaves the ring at term {(a, b, c)}")
            out[(a + ex, b + ey, c + eL)] = k
        return ExactPoly(out)

    def div_L(self, k: int = 1) -> "ExactPoly":
        """Exact division by ``L**k``; raises if any ``e_L`` would go negative."""
        return self.shift(eL=-k)

    # -- calculus ---------------------------------------------------------
    def diff(self, var: str, times: int = 1) -> "ExactPoly":
        p = self
        for _ in range(times):
            p = poly_diff(p, var)
        return p

    def integrate(self, var: str) -> "ExactPoly":
        """Antiderivative in ``x`` or ``y`` vanishing at 0."""
        i = _var_index(var)
        if i == 2:
            raise ValueError("integration is only defined in x or y")
        out = {}
        for mono, c in self._terms.items():
            e = mono[i]
            if e < 0:
                raise RepresentationError(
                    f"cannot integrate {var}^{e} from 0")
            new = list(mono)
            new[i] = e + 1
            out[tuple(new)] = c / (e + 1)
        return ExactPoly(out)

    # -- substitution -----------------------------------------------------
    def scale(self, x: Rational = 1, y: Rational = 1, L: Rational = 1) -> "ExactPoly":
        """Substitute ``x -> x*sx``, ``y -> y*sy``, ``L -> L*sL``."""
        sx, sy, sL = _frac(x), _frac(y), _frac(L)
        if sy == 0 and self.has_negative_y():
            raise ZeroDivisionError("y scaled to 0 under a negative power")
        return ExactPoly({(a, b, c): k * sx ** a * sy ** b * sL ** c
                          for (a, b, c), k in self._terms.items()})

    def specialize(self, x: Rational | None = None, y: Rational | None = None,
                   L: Rational | None = None) -> "ExactPoly":
        """Replace selected indeterminates by rational constants."""
        vals = [None if v is None else _frac(v) for v in (x, y, L)]
        out: dict[Monomial, Fraction] = defaultdict(Fraction)
        for mono, k in self._terms.items():
            new = list(mono)
            for i, v in enumerate(vals):
                if v is None:
                    continue
                e = mono[i]
                if v == 0 and e < 0:
                    raise ZeroDivisionError(
                        "negative power of y evaluated at y = 0")
                k = k * (v ** e if e else 1)
                new[i] = 0
            out[tuple(new)] += k
        return ExactPoly(out)

    # -- serialization ----------------------------------------------------
    def to_records(self) -> list[dict]:
        return [{"ex": a, "ey": b, "eL": c,
                 "num": str(k.numerator), "den": str(k.denominator)}
                for (a, b, c), k in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_records())

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "ExactPoly":
        terms: dict[Monomial, Fraction] = defaultdict(Fraction)
        for r in records:
            terms[(int(r["ex"]), int(r["ey"]), int(r["eL"]))] += Fraction(
                int(r["num"]), int(r["den"]))
        return cls(terms)

    @classmethod
    def from_json(cls, text: str) -> "ExactPoly":
        return cls.from_records(json.loads(text))

    def __repr__(self) -> str:
        if not self._terms:
            return "ExactPoly(0)"
        return f"ExactPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b, c), k in sorted(self._terms.items(), reverse=True):
            factors = []
            for sym, e in (("L", c), ("x", a), ("y", b)):
                if e == 1:
                    factors.append(sym)
                elif e:
                    factors.append(f"{sym}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(k))
            elif k == 1:
                parts.append(mono)
            elif k == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{k}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _var_index(var: str) -> int:
    try:
        return {"x": 0, "y": 1, "L": 2}[var]
    except KeyError:
        raise ValueError(f"unknown variable {var!r}") from None


def _coerce(p) -> ExactPoly:
    if isinstance(p, ExactPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return ExactPoly.const(p)
    raise TypeError(f"cannot use {type(p).__name__} as ExactPoly")


X = ExactPoly.monomial(ex=1)
Y = ExactPoly.monomial(ey=1)
LL = ExactPoly.monomial(eL=1)
ONE = ExactPoly.const(1)
ZERO = ExactPoly.zero()


def poly_diff(p: ExactPoly, var: str) -> ExactPoly:
    """Formal partial derivative in ``x`` or ``y`` (Laurent powers of ``y`` allowed)."""
    i = _var_index(var)
    if i == 2:
        raise ValueError("differentiation is only defined in x or y")
    out = {}
    for mono, c in p._terms.items():
        e = mono[i]
        if e == 0:
            continue
        new = list(mono)
        new[i] = e - 1
        out[tuple(new)] = c * e
    return ExactPoly(out)


def poly_eval(p: ExactPoly, param: DegenerateParam, x: float, y: float) -> float:
    """Evaluate ``p`` at numeric ``x``, ``y`` with ``L = param.L``.

    Terms are summed within each total degree with ``math.fsum`` and the
    per-degree partial sums are then combined the same way.
    """
    x, y, L = float(x), float(y), param.L
    by_degree: dict[int, list[float]] = defaultdict(list)
    for (a, b, c), k in p._terms.items():
        if b < 0 and y == 0.0:
            raise ZeroDivisionError("negative power of y evaluated at y = 0")
        by_degree[a + b + c].append(float(k) * x ** a * y ** b * L ** c)
    return math.fsum(math.fsum(v) for _, v in sorted(by_degree.items()))


class MomentSequence:
    """A sequence ``nu -> ExactPoly`` used as an umbral vacuum."""

    def __init__(self, fn: Callable[[int], ExactPoly], name: str = ""):
        self._fn = fn
        self.name = name or fn.__name__

    def __call__(self, nu: int) -> ExactPoly:
        if nu < 0:
            raise ValueError("moment index must be nonnegative")
        return self._fn(nu)

    moment = __call__

    def __repr__(self) -> str:
        return f"MomentSequence({self.name})"
