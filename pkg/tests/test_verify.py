import json
import math

import pytest

from dhermite import verify as vf
from dhermite.core import make_param

REQUIRED = """generating_function series_vs_operational series_vs_monomial series_vs_umbral
heat_equation_exact initial_condition diff_x_closed diff_y_closed recurrence commutator_PM
ode inverse_expansion rodrigues integral_x integral_y cosine_integral_x cosine_integral_y
scaling_relations mellin_gauss even_gf ortho_dhp_offdiag ortho_dhp_norm
partial_ortho_offdiag partial_ortho_norm nodhf_initial nodhf_derivative gaussian_quartic
heat_fd classical_limit""".split()

DISPUTED = ["rodrigues", "cosine_integral_x", "cosine_integral_y", "mellin_gauss",
            "even_gf", "partial_ortho_offdiag", "partial_ortho_norm", "nodhf_initial"]


@pytest.fixture(scope="module")
def both():
    return vf.run_all("both")


def test_registry_coverage():
    assert len(REQUIRED) == 29
    assert set(REQUIRED) <= set(vf.check_names())


def test_disputed_have_two_variants():
    for name in DISPUTED:
        assert vf.REGISTRY[name].variants == ("corrected", "paper")


def test_corrected_all_pass():
    reports = vf.run_all("corrected")
    bad = [(r.check_name, r.residual) for r in reports if not r.passed]
    assert not bad
    assert vf.aggregate_pass(reports)
    assert all(r.variant in ("single", "corrected") for r in reports)


def test_paper_variants_not_pass(both):
    paper = {r.check_name: r for r in both if r.variant == "paper"}
    for name in DISPUTED:
        assert paper[name].status in (vf.FAIL, vf.ILL_DEFINED, vf.DIVERGENT), name
    assert paper["partial_ortho_norm"].status == vf.DIVERGENT
    assert vf.aggregate_pass(both)


def test_order_is_registration_order(both):
    seen = []
    for r in both:
        if r.check_name not in seen:
            seen.append(r.check_name)
    assert seen == vf.check_names()


def test_paper_policy():
    reports = vf.run_all("paper")
    assert reports and all(r.variant == "paper" for r in reports)


def test_determinism(both):
    again = vf.run_all("both")
    assert vf.reports_to_json(both) == vf.reports_to_json(again)


def test_json_schema(both, tmp_path):
    path = tmp_path / "r.json"
    vf.write_report(both, path)
    data = json.loads(path.read_text())
    assert isinstance(data, list) and len(data) == len(both)
    for rec in data:
        assert rec["v"] == 1
        assert set(rec) == {"v", "check_name", "variant", "params", "residual",
                            "tolerance", "status"}


def test_nonfinite_serialized():
    r = vf.CheckReport("x", "paper", {"a": math.inf}, math.inf, 1e-8, vf.DIVERGENT)
    d = r.to_dict()
    assert d["residual"] == "inf" and d["params"]["a"] == "inf"
    json.dumps(d, allow_nan=False)


class TestRunCheck:
    def test_examples(self):
        r = vf.run_check("heat_equation_exact")
        assert (r.status, r.residual) == (vf.PASS, 0.0)
        r = vf.run_check("rodrigues", {"variant": "paper", "n": [2]})
        assert r.status == vf.FAIL
        r = vf.run_check("even_gf", {"variant": "corrected"})
        assert r.status == vf.PASS and r.tolerance == 1e-8

    def test_rodrigues_odd_paper_ill_defined(self):
        assert vf.run_check("rodrigues", {"variant": "paper", "n": [3]}).status == vf.ILL_DEFINED

    def test_overrides(self):
        r = vf.run_check("recurrence", {"n": [1, 2, 3]})
        assert r.params["n"] == [1, 2, 3] and r.passed

    def test_unknown(self):
        with pytest.raises(vf.UnknownCheckError):
            vf.run_check("no_such_check")
        with pytest.raises(ValueError):
            vf.run_check("recurrence", {"variant": "paper"})

    def test_exact_residual_is_binary(self, both):
        for r in both:
            if r.tolerance == 0.0:
                assert r.residual in (0.0, 1.0)


def test_report_invariant(both):
    for r in both:
        if r.status in (vf.PASS, vf.FAIL):
            assert (r.status == vf.PASS) == (r.residual <= r.tolerance)


class TestHeat:
    P = make_param(1.0)

    def test_quadratic_exact(self):
        r = vf.heat_fd_check(2, self.P, vf.HeatGrid(dx=0.01, y_max=0.1))
        assert r.residual < 1e-10

    def test_constant(self):
        assert vf.heat_fd_check(0, self.P).residual == 0.0

    def test_quartic(self):
        r = vf.heat_fd_check(4, self.P, vf.HeatGrid(-5, 5, 0.01, 0.1))
        assert r.residual < 1e-3 and r.passed

    def test_unstable(self):
        with pytest.raises(vf.StabilityError):
            vf.heat_fd_check(2, self.P, vf.HeatGrid(dx=0.1, dy=0.1))

    def test_auto_step_is_stable(self):
        for lam in (-0.5, 2.0):
            L = make_param(lam).L
            dy, steps = vf.HeatGrid().step(L)
            assert dy <= L * 0.01 ** 2 / 2 and abs(dy * steps - 0.1) < 1e-12


def test_empty_registry():
    with pytest.raises(LookupError):
        vf.run_all("both", registry={})


def test_bad_policy():
    with pytest.raises(ValueError):
        vf.run_all("neither")
