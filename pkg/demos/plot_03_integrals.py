"""
Orthogonality, Gaussian moments and negative order
==================================================

Adaptive quadrature confirms the norm constants and the Laplace-integral
definition of the negative-order functions.
"""
# %%
import math

from dhermite import numeric as nm
from dhermite.core import make_param

p = make_param(1.0)
print(" n   quadrature          closed form")
for n in range(5):
    print(f"{n:2d}   {nm.ortho_dhp(n, n, p):.12e}  {nm.dhp_norm(n, p):.12e}")

# %%
# At fixed negative ``y`` the bivariate family is orthogonal in ``x`` under
# the decaying weight ``exp(L x^2 / (4y))``.
for n, m in [(0, 0), (1, 3), (2, 2)]:
    print(f"<{n},{m}> at y=-1: {nm.partial_ortho(n, m, -1.0, p):+.10e}")

# %%
# Gaussian moments: the floor exponent only matches at even ``mu``.
for mu in (1, 2, 3, 4):
    q, good = nm.mellin_gauss(mu, 1.0, p)
    _, alt = nm.mellin_gauss(mu, 1.0, p, "paper")
    print(f"mu={mu}: quad={q:.10f}  half-exponent={good:.10f}  floor={alt:.10f}")

# %%
# Negative order at ``y = 0`` reproduces ``(x L)^-mu``, and the quartic
# Gaussian integral equals ``sqrt(pi) H_{-1/2}``.
print(nm.nodhf(1.0, 2.0, 0.0, p), 1 / (2 * p.L))
print(nm.gaussian_quartic(1.0, -1.0, p))
print(math.sqrt(math.pi / p.L), nm.gaussian_quartic(1.0, -1e-8, p)[0])
