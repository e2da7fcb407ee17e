import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wdk.errors import DomainError
from wdk.gauge import (
    GaugeParams,
    beta_local2,
    beta_semi,
    c_admissible_rhs,
    c_quadratic,
    c_rational,
    simple_semilocal_threshold,
    geom_sum,
    h_local2,
    lower_bound_local2,
    phi_local1,
    phi_local2,
    phi_semi,
    psi_local2,
    psi_semi,
    radius_local1,
    radius_local1_h,
    radius_local2,
    radius_semi,
    rational_sigma_cap,
    sigma_feasible,
    varphi_local1,
    varphi_semi,
    wang_zhao_threshold,
)

INF = math.inf
GRID = [(n, p) for n in range(2, 11) for p in (1.0, 2.0, INF)]


def G(n, p):
    return GaugeParams(n, p)


grid = st.sampled_from(GRID)


class TestGeomSum:
    def test_empty(self):
        assert geom_sum(0, 3.7) == 0

    def test_values(self):
        assert geom_sum(3, 2) == 7
        assert geom_sum(5, 1) == 5


class TestLocal1:
    def test_zero(self):
        assert phi_local1(0, G(3, 2)) == 0

    def test_reductions(self):
        assert phi_local1(1 / 3, G(2, INF)) == pytest.approx(1, abs=1e-15)
        assert phi_local1(0.25, G(2, 1)) == pytest.approx(1 / 3, abs=1e-15)

    def test_domain(self):
        with pytest.raises(DomainError):
            phi_local1(0.5, G(2, INF))
        with pytest.raises(DomainError):
            phi_local1(-0.1, G(2, INF))

    def test_radius_values(self):
        assert radius_local1(G(2, INF)).value == pytest.approx(1 / 3, abs=1e-15)
        assert radius_local1(G(2, 1)).value == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("n,p", GRID)
    def test_radius_defining_equation(self, n, p):
        gp = G(n, p)
        assert abs(phi_local1(radius_local1(gp).value, gp) - 1) <= 1e-12

    def test_radius_h(self):
        gp = G(2, INF)
        assert radius_local1_h(gp, 0.5) == pytest.approx(0.25, abs=1e-15)
        assert radius_local1_h(gp, 1 - 1e-12) == pytest.approx(1 / 3, abs=1e-9)

    @pytest.mark.parametrize("n,p", GRID)
    @pytest.mark.parametrize("h", [0.1, 0.5, 0.9])
    def test_radius_h_defining_equation(self, n, p, h):
        gp = G(n, p)
        assert abs(phi_local1(radius_local1_h(gp, h), gp) - h) <= 1e-12

    @pytest.mark.parametrize("h", [0, 1, -0.5, 1.5])
    def test_radius_h_domain(self, h):
        with pytest.raises(DomainError):
            radius_local1_h(G(3, 2), h)


class TestLocal2:
    def test_h_values(self):
        assert h_local2(0, G(4, 2)) == 1
        assert h_local2(0.25, G(2, INF)) == pytest.approx(1.875, abs=1e-15)
        assert h_local2(math.sqrt(2) - 1, G(2, 1)) == pytest.approx(2, abs=1e-15)

    def test_beta_psi_phi(self):
        gp = G(2, INF)
        assert (psi_local2(0, gp), beta_local2(0, gp), phi_local2(0, gp)) == (1, 0, 0)
        assert beta_local2(0.2, gp) == pytest.approx(0.2, abs=1e-15)
        assert psi_local2(0.2, gp) == pytest.approx(0.52, abs=1e-15)
        assert phi_local2(0.2, gp) == pytest.approx(0.2 / 0.52, abs=1e-15)

    def test_phi_needs_positive_psi(self):
        with pytest.raises(DomainError):
            phi_local2(0.6, G(2, INF))

    @given(grid, st.floats(0, 0.5))
    def test_psi_identity(self, np_, t):
        gp = G(*np_)
        assert psi_local2(t, gp) == pytest.approx(1 - gp.b * t * (1 + beta_local2(t, gp)), rel=1e-14, abs=1e-14)

    def test_radius_values(self):
        assert radius_local2(G(2, INF)).value == pytest.approx((-3 + math.sqrt(17)) / 4, abs=1e-13)
        assert radius_local2(G(2, 1)).value == pytest.approx(math.sqrt(2) - 1, abs=1e-13)

    @pytest.mark.parametrize("n,p", GRID)
    def test_radius_defining_equation(self, n, p):
        gp = G(n, p)
        assert abs(h_local2(radius_local2(gp).value, gp) - 2) <= 1e-12

    def test_lower_bound_values(self):
        assert lower_bound_local2(G(2, 1)) == pytest.approx(math.sqrt(2) - 1, abs=1e-15)
        assert lower_bound_local2(G(2, INF)) == pytest.approx(2 * (math.sqrt(2) - 1) / 3, abs=1e-15)
        assert lower_bound_local2(G(3, 2)) < radius_local2(G(3, 2)).value - 1e-6

    @pytest.mark.parametrize("n,p", GRID)
    def test_wang_zhao_below_han(self, n, p):
        gp = G(n, p)
        assert wang_zhao_threshold(gp) <= lower_bound_local2(gp) + 1e-15


class TestCFunctions:
    def test_zero(self):
        gp = G(5, 2)
        assert c_quadratic(0, gp) == 0 == c_rational(0, gp)

    def test_quadratic_value(self):
        assert c_quadratic(0.5, G(2, INF)) == 0.375

    def test_domain(self):
        with pytest.raises(DomainError):
            c_quadratic(1.0, G(2, INF))
        with pytest.raises(DomainError):
            c_rational(-0.1, G(2, INF))

    @pytest.mark.parametrize("n,p", GRID)
    def test_admissible(self, n, p):
        gp = G(n, p)
        for k in range(1, 100):
            t = k / 100
            rhs = c_admissible_rhs(t, gp)
            assert c_quadratic(t, gp) <= rhs + 1e-15
            assert c_rational(t, gp) <= rhs + 1e-15


class TestSigma:
    def test_tiny_sigma_large_n(self):
        # the condition near 0 needs (n-1)**(1/q) >= 2**(1+1/q)
        gp = G(10, INF)
        assert sigma_feasible(1e-3, gp, "quadratic")
        assert sigma_feasible(1e-3, gp, "rational")

    def test_tiny_sigma_n2_infeasible(self):
        assert not sigma_feasible(1e-3, G(2, INF), "quadratic")

    def test_large_sigma(self):
        assert not sigma_feasible(0.99, G(2, INF), "quadratic")

    def test_half_from_nine(self):
        assert sigma_feasible(0.5, G(9, INF), "quadratic")
        assert sigma_feasible(0.5, G(10, INF), "quadratic")

    def test_rational_cap_is_sharp(self):
        gp = G(10, INF)
        cap = rational_sigma_cap(gp)
        assert cap == pytest.approx((9 - 4) / (9 + 4))
        assert sigma_feasible(cap * 0.999, gp, "rational")
        assert not sigma_feasible(min(cap * 1.01, 0.999), gp, "rational")

    def test_domain(self):
        with pytest.raises(DomainError):
            sigma_feasible(1.0, G(10, INF))


class TestSemilocal:
    def test_zero(self):
        gp = G(3, 2)
        assert (phi_semi(0, gp), beta_semi(0, gp), varphi_semi(0, gp), psi_semi(0, gp)) == (0, 0, 0, 1)

    def test_reduction_n2_inf(self):
        gp = G(2, INF)
        t = 0.1875
        assert phi_semi(t, gp) == pytest.approx(0.48, abs=1e-15)
        assert psi_semi(t, gp) == 0.625
        assert beta_semi(t, gp) == pytest.approx(0.3, abs=1e-15)
        assert phi_semi(0.25, gp) == 1.0

    def test_domain(self):
        with pytest.raises(DomainError):
            phi_semi(0.5, G(2, INF))
        with pytest.raises(DomainError):
            beta_semi(1.0, G(2, 1))

    def test_radius_n2_inf(self):
        assert radius_semi(G(2, INF)).value == pytest.approx(0.25, abs=1e-12)

    def test_radius_n3(self):
        gp = G(3, INF)
        r = radius_semi(gp).value
        assert 0 < r < 0.5
        assert abs(phi_semi(r, gp) - 1) <= 1e-12

    @pytest.mark.parametrize("n,p", GRID)
    def test_radius_defining_equation(self, n, p):
        gp = G(n, p)
        assert abs(phi_semi(radius_semi(gp).value, gp) - 1) <= 1e-12

    @pytest.mark.parametrize("n,p", GRID)
    def test_radius_above_simple_threshold(self, n, p):
        gp = G(n, p)
        assert radius_semi(gp).value >= simple_semilocal_threshold(gp) - 1e-15

    def test_simple_threshold_values(self):
        assert simple_semilocal_threshold(G(2, INF)) == 0.25
        assert simple_semilocal_threshold(G(3, INF)) == pytest.approx(1 / 6)
        assert simple_semilocal_threshold(G(2, 1)) == 0.25

    @given(grid, st.floats(0, 1))
    def test_identities(self, np_, s):
        gp = G(*np_)
        t = s * radius_semi(gp).value
        assert beta_semi(t, gp) == pytest.approx(phi_semi(t, gp) * psi_semi(t, gp), rel=1e-14, abs=1e-300)
        assert varphi_semi(t, gp) == pytest.approx(t * phi_semi(t, gp), rel=1e-14, abs=1e-300)


class TestGaugeProperties:
    @settings(max_examples=300)
    @given(grid, st.floats(0, 1), st.floats(0, 1))
    def test_quasi_homogeneity(self, np_, s, lam):
        gp = G(*np_)
        t1 = s * radius_local1(gp).value
        ts = s * radius_semi(gp).value
        tol = 1e-13
        assert varphi_local1(lam * t1, gp) <= lam ** 2 * varphi_local1(t1, gp) * (1 + tol) + 1e-300
        assert phi_local1(lam * t1, gp) <= lam * phi_local1(t1, gp) * (1 + tol) + 1e-300
        assert varphi_semi(lam * ts, gp) <= lam ** 2 * varphi_semi(ts, gp) * (1 + tol) + 1e-300
        assert phi_semi(lam * ts, gp) <= lam * phi_semi(ts, gp) * (1 + tol) + 1e-300

    @settings(max_examples=300)
    @given(grid, st.floats(0, 1, exclude_max=True))
    def test_gauge_property(self, np_, s):
        gp = G(*np_)
        t1 = s * radius_local1(gp).value
        ts = s * radius_semi(gp).value
        # at the radius itself the defining equation only holds to ~1e-13
        assert varphi_local1(t1, gp) <= t1 * (1 + 1e-12)
        assert varphi_semi(ts, gp) <= ts * (1 + 1e-12)
        if 1e-9 <= s <= 0.999:  # interior, away from rounding at the radius
            assert varphi_local1(t1, gp) < t1
            assert varphi_semi(ts, gp) < ts

    @settings(max_examples=300)
    @given(grid, st.floats(0, 1), st.floats(0, 1))
    def test_monotone(self, np_, s1, s2):
        gp = G(*np_)
        lo, hi = sorted((s1, s2))
        r1, r2, rs = radius_local1(gp).value, radius_local2(gp).value, radius_semi(gp).value
        assert phi_local1(lo * r1, gp) <= phi_local1(hi * r1, gp)
        assert h_local2(lo * r2, gp) <= h_local2(hi * r2, gp)
        assert beta_local2(lo * r2, gp) <= beta_local2(hi * r2, gp)
        assert phi_local2(lo * r2, gp) <= phi_local2(hi * r2, gp)
        assert psi_local2(lo * r2, gp) >= psi_local2(hi * r2, gp)
        assert phi_semi(lo * rs, gp) <= phi_semi(hi * rs, gp)
        assert beta_semi(lo * rs, gp) <= beta_semi(hi * rs, gp)
        assert psi_semi(lo * rs, gp) >= psi_semi(hi * rs, gp)

    @settings(max_examples=300)
    @given(grid, st.floats(0, 1, exclude_max=True))
    def test_beta_below_psi(self, np_, s):
        gp = G(*np_)
        t = s * radius_semi(gp).value
        assert beta_semi(t, gp) < psi_semi(t, gp)
