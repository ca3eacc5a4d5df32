"""
Running the identity checks
===========================

Every identity has a registered check. Disputed identities run in two
variants, and only the corrected one has to pass.
"""
# %%
from dhermite import verify as vf

reports = vf.run_all("both")
for r in reports:
    print(f"{r.check_name:24s} {r.variant:9s} {r.status:11s} {r.residual:.2e}")
print("overall:", "PASS" if vf.aggregate_pass(reports) else "FAIL")

# %%
# The heat equation solved by explicit finite differences from ``(L x)^n``.
from dhermite.core import make_param

for n in (0, 2, 4, 6):
    rep = vf.heat_fd_check(n, make_param(1.0))
    print(f"n={n}: residual {rep.residual:.2e} ({rep.status})")
