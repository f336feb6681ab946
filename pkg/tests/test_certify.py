import math

import numpy as np
import pytest

from meancert import scalars as sc
from meancert.certify import (
    CATALOG_ORDER,
    CertReport,
    catalog,
    compare_constants,
    gen_box_instance,
    gen_instance,
    verify,
)
from meancert.eigen import SymPDMatrix
from meancert.errors import DomainError, InputError
from meancert.sandwich import (
    ABOVE,
    A_BELOW_B,
    B_BELOW_A,
    SandwichInterval,
    SpectralBox,
    UniformBox,
    sandwich_of,
    uniform_box_of,
)


def by_name(bounds):
    return {b.name: b for b in bounds}


class TestCatalog:
    def test_stable_order(self):
        sw = SandwichInterval.from_bounds(0.5, 2.0)
        bounds = catalog(sw, 0.5)
        assert [b.name for b in bounds] == list(CATALOG_ORDER)

    def test_above_regime_constants(self):
        sw = SandwichInterval.from_bounds(4.0, 4.0)
        bounds = by_name(catalog(sw, 0.5))
        assert bounds["thm1.lower"].constant == pytest.approx(1.25)
        assert bounds["zuo"].constant == pytest.approx(1.25)
        assert bounds["thm1.lower"].applicable
        assert not bounds["straddle.mult.upper"].applicable

    def test_straddle_additive_upper(self):
        sw = SandwichInterval.from_bounds(0.5, 2.0)
        bounds = by_name(catalog(sw, 0.5))
        assert bounds["thm3.upper"].constant == pytest.approx(
            max(sc.g_v(0.5, 0.5), sc.g_v(2.0, 0.5)))
        assert bounds["thm3.upper"].constant == pytest.approx(1.5 - math.sqrt(2))
        assert not bounds["thm1.lower"].applicable
        assert not bounds["zuo"].applicable

    def test_extended_weight_gating(self):
        sw = SandwichInterval.from_bounds(0.5, 2.0)
        bounds = by_name(catalog(sw, 2.0))
        assert not bounds["young.classical"].applicable
        assert bounds["ext.lower"].applicable
        assert bounds["ext.upper"].constant == 0.0  # straddle peak of the gap at 1

    def test_extended_upper_one_sided(self):
        bounds = by_name(catalog(SandwichInterval.from_bounds(1.5, 3.0), 2.0))
        assert bounds["ext.upper"].constant == pytest.approx(sc.g_v(1.5, 2.0))
        bounds = by_name(catalog(SandwichInterval.from_bounds(0.2, 0.8), 2.0))
        assert bounds["ext.upper"].constant == pytest.approx(sc.g_v(0.8, 2.0))

    def test_literature_flagging(self):
        sw = SandwichInterval.from_bounds(2.0, 3.0)
        bounds = by_name(catalog(sw, 0.3, uniform_box=UniformBox(1.0, 4.0)))
        for name in ("zuo", "specht", "dragomir", "tominaga.upper"):
            assert bounds[name].literature
        assert not bounds["thm1.lower"].literature

    def test_below_uses_inverse_t_for_literature(self):
        sw = SandwichInterval.from_bounds(0.2, 0.5)
        bounds = by_name(catalog(sw, 0.3))
        assert bounds["zuo"].constant == pytest.approx(sc.zuo_constant(2.0, 0.3))

    def test_box_bounds_need_box(self):
        sw = SandwichInterval.from_bounds(1.5, 6.0)
        bounds = by_name(catalog(sw, 1.5))
        assert not bounds["ext.box.lower"].applicable
        bounds = by_name(catalog(sw, 1.5, spectral_box=SpectralBox(1, 2, 3, 6),
                                 box_order=A_BELOW_B))
        assert bounds["ext.box.lower"].applicable
        assert bounds["ext.ibox.upper"].reference_matrix == "I"

    def test_lower_multiplicative_constants_at_least_one(self):
        for s, t in [(0.2, 0.8), (1.5, 6.0), (0.5, 2.0)]:
            for v in (0.1, 0.5, 0.9):
                for b in catalog(SandwichInterval.from_bounds(s, t), v):
                    if (b.applicable and b.form == "multiplicative"
                            and b.side == "lower"
                            and b.relation == "nabla_vs_sharp"):
                        assert b.constant >= 1.0 - 1e-12


class TestVerify:
    def test_scalar_sharpness_witness(self):
        a = SymPDMatrix(4.0 * np.eye(3))
        b = SymPDMatrix(np.eye(3))
        sw = sandwich_of(a, b)
        assert sw.regime == "below"
        report = verify(a, b, 0.5, catalog(sw, 0.5))
        res = {r.statement.name: r for r in report.results}
        assert report.overall_pass
        # B = (1/4)A exactly, so the sharp lower bound is an equality
        assert abs(res["thm1.lower"].verdict.min_eig) <= 1e-12

    def test_equal_matrices_all_residuals_vanish(self):
        rng = np.random.default_rng(0)
        x = rng.standard_normal((4, 4))
        a = SymPDMatrix(x @ x.T + 4 * np.eye(4))
        for v in (0.0, 0.3, 1.0):
            report = verify(a, a, v, catalog(sandwich_of(a, a), v))
            assert report.overall_pass
            for r in report.results:
                if r.verdict is not None:
                    assert abs(r.verdict.min_eig) <= 1e-9

    def test_random_above_regime(self):
        for i in range(10):
            a, b = gen_instance(4, 1.2, 5.0, 100 + i)
            sw = sandwich_of(a, b)
            report = verify(a, b, 0.3, catalog(sw, 0.3, uniform_box=uniform_box_of(a, b)))
            assert report.overall_pass

    def test_literature_violation_is_finding_not_failure(self):
        # wide above-regime spread: the exponential reverse constant keyed to
        # s alone cannot cover the upper end
        a, b = gen_instance(5, 1.05, 50.0, 7)
        sw = sandwich_of(a, b)
        report = verify(a, b, 0.5, catalog(sw, 0.5))
        assert report.overall_pass
        assert any("dragomir" in f for f in report.findings)

    def test_falsified_constant_fails_overall(self):
        from dataclasses import replace

        a, b = gen_instance(3, 1.5, 2.0, 1)
        sw = sandwich_of(a, b)
        tampered = [replace(b_, constant=b_.constant * 2)
                    if b_.name == "thm1.lower" else b_
                    for b_ in catalog(sw, 0.5)]
        report = verify(a, b, 0.5, tampered)
        assert not report.overall_pass

    def test_report_roundtrip(self):
        a, b = gen_instance(3, 0.4, 0.9, 2)
        sw = sandwich_of(a, b)
        report = verify(a, b, 0.25, catalog(sw, 0.25),
                        instance={"dim": 3, "v": 0.25, "s": sw.s, "t": sw.t,
                                  "regime": sw.regime})
        d = report.to_dict()
        assert CertReport.from_dict(d) == report


class TestCompareConstants:
    def test_reference_point(self):
        row = compare_constants(4.0, 0.5)
        assert row["f_v"] == pytest.approx(1.25)
        assert row["zuo"] == pytest.approx(1.25)
        assert row["specht"] == pytest.approx(sc.specht(2.0), rel=1e-14)
        assert row["dragomir"] == pytest.approx(math.exp(9 / 8), rel=1e-14)
        assert row["specht_le_zuo"] and row["zuo_le_f"]

    def test_degenerate_rows(self):
        row = compare_constants(1.0, 0.5)
        assert (row["f_v"], row["zuo"], row["specht"], row["dragomir"]) == (1, 1, 1, 1)
        row = compare_constants(3.0, 0.0)
        assert (row["f_v"], row["zuo"], row["specht"], row["dragomir"]) == (1, 1, 1, 1)

    def test_domain(self):
        with pytest.raises(DomainError):
            compare_constants(0.5, 0.5)
        with pytest.raises(DomainError):
            compare_constants(2.0, 1.5)


class TestGenerators:
    def test_forced_scalar_pair(self):
        a, b = gen_instance(1, 3.0, 3.0, 0)
        assert b.mat[0, 0] == pytest.approx(3.0 * a.mat[0, 0], rel=1e-12)

    def test_prescribed_sandwich(self):
        a, b = gen_instance(4, 0.5, 2.0, 123)
        sw = sandwich_of(a, b)
        assert sw.s == pytest.approx(0.5, rel=1e-8)
        assert sw.t == pytest.approx(2.0, rel=1e-8)

    def test_deterministic(self):
        a1, b1 = gen_instance(5, 0.7, 1.9, 99)
        a2, b2 = gen_instance(5, 0.7, 1.9, 99)
        np.testing.assert_array_equal(a1.mat, a2.mat)
        np.testing.assert_array_equal(b1.mat, b2.mat)

    def test_invalid_ranges(self):
        with pytest.raises(InputError):
            gen_instance(4, 2.0, 1.0, 0)
        with pytest.raises(InputError):
            gen_instance(1, 0.5, 2.0, 0)
        with pytest.raises(InputError):
            gen_instance(0, 0.5, 2.0, 0)

    def test_box_instance_respects_box(self):
        box = SpectralBox(0.5, 1.0, 2.0, 4.0)
        a, b = gen_box_instance(4, box, A_BELOW_B, 3)
        assert a.eigenvalues[0] >= box.m_outer - 1e-12
        assert a.eigenvalues[-1] <= box.m_inner + 1e-12
        assert b.eigenvalues[0] >= box.M_inner - 1e-12
        assert b.eigenvalues[-1] <= box.M_outer + 1e-12
        a, b = gen_box_instance(4, box, B_BELOW_A, 3)
        assert b.eigenvalues[-1] <= box.m_inner + 1e-12
        assert a.eigenvalues[0] >= box.M_inner - 1e-12

    def test_box_instance_regime(self):
        box = SpectralBox(0.5, 1.0, 2.0, 4.0)
        a, b = gen_box_instance(4, box, A_BELOW_B, 5)
        assert sandwich_of(a, b).regime == ABOVE
