"""
Floating-point evaluation and generating functions
==================================================

Numerical values come from the three-term recurrence. We compare them to
the closed generating function and to the even-index closed form.
"""
# %%
from dhermite import numeric as nm
from dhermite.core import make_param

p = make_param(1.0)
print(f"L(1) = {p.L:.15g}")
for n in range(6):
    print(f"H_{n}(1, 1 | 1) = {nm.eval_bvdhp(n, 1.0, 1.0, p):.15g}")

# %%
# Partial sums of the ordinary generating function converge quickly.
pt = nm.GFPoint(0.2, 2.0, -1.0, make_param(0.5))
for N in (5, 10, 20, 40):
    print(f"N={N:2d}  series - closed = {nm.gf_series(pt, N) - nm.gf_closed(pt):+.3e}")

# %%
# Even-index sum. Inside ``|4 t y L| < 1`` the closed form tracks the series.
closed, series = nm.even_gf(nm.GFPoint(0.05, 1.0, 1.0, p))
print(f"closed={closed:.12f} series={series:.12f}")
