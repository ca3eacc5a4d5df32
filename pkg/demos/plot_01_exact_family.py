"""
Exact polynomials and their many constructions
==============================================

Each ``H_n(x, y|lam)`` is stored as an exact polynomial in ``x``, ``y`` and
``L = log(1+lam)/lam``. Here we build a few members several different ways
and watch them coincide.
"""
# %%
# The first few members, printed with ``L`` kept symbolic.
from dhermite import hermite as hm
from dhermite.umbral import umbral_expand

for n in range(5):
    print(f"H_{n} = {hm.bvdhp(n)}")

# %%
# Four independent routes to ``H_6``: the operator exponential, repeated
# raising operators, the three-term recurrence and the umbral binomial.
n = 6
routes = {
    "operational": hm.operational_construct(n),
    "monomiality": hm.monomial_construct(n),
    "recurrence": hm.recurrence_construct(n),
    "umbral": umbral_expand(n),
}
for name, p in routes.items():
    print(f"{name:12s} equal to series: {p == hm.bvdhp(n)}")

# %%
# The Rodrigues-type form needs the ``(2y)^n`` prefactor. The alternative
# prefactor leaves negative powers of ``y`` behind.
print("corrected:", hm.rodrigues(2))
print("alternative:", hm.rodrigues(2, "paper"))
