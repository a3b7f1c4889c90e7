import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weilpoly.analysis import (
    count_real_roots,
    exact_modulus_check,
    numeric_roots,
    real_weil_transform,
    reconstruct_symmetric,
    sturm_count_in_interval,
)
from weilpoly.errors import EndpointRoot, NotSquarefree
from weilpoly.intpoly import IntPoly, check_q_symmetry, squarefree_part
from weilpoly.surd import QuadSurd


def P(*coeffs):
    return IntPoly(coeffs)


def symmetric_poly(g, q, upper):
    """Build the degree-2g polynomial with upper coefficients a_1..a_g."""
    coeffs = [0] * (2 * g + 1)
    coeffs[2 * g] = 1
    coeffs[0] = q ** g
    for j in range(1, g):
        coeffs[2 * g - j] = upper[j - 1]
        coeffs[j] = q ** (g - j) * upper[j - 1]
    coeffs[g] = upper[g - 1]
    return check_q_symmetry(IntPoly(coeffs), g, q)


symmetric_inputs = st.tuples(
    st.integers(min_value=1, max_value=8),
    st.sampled_from([2, 3, 4, 5, 8, 9]),
    st.lists(st.integers(min_value=-10, max_value=10), min_size=8, max_size=8),
)


class TestRealWeilTransform:
    def test_fixture_quartic(self):
        f = check_q_symmetry(P(25, 5, 1, 1, 1), 2, 5)
        assert real_weil_transform(f).h == P(-9, 1, 1)

    def test_minimal_shape(self):
        f = check_q_symmetry(P(7, 0, 1), 1, 7)
        assert real_weil_transform(f).h == P(0, 1)

    def test_product_of_conjugate_quadratics(self):
        # (t^2 - t + 2)(t^2 + t + 2) = t^4 + 3t^2 + 4
        f = check_q_symmetry(P(4, 0, 3, 0, 1), 2, 2)
        assert real_weil_transform(f).h == P(-1, 0, 1)

    @given(symmetric_inputs)
    @settings(max_examples=150)
    def test_roundtrip_identity(self, data):
        g, q, upper = data
        f = symmetric_poly(g, q, upper[:g])
        h = real_weil_transform(f).h
        assert reconstruct_symmetric(h, g, q) == f.poly


class TestSturmCounting:
    def test_fixtures(self):
        assert sturm_count_in_interval(P(-2, 0, 1), QuadSurd(2, 0, 0), QuadSurd(2, 2, 0)) == 1
        # roots of x^2 + x - 9 are (-1 +/- sqrt(37))/2 ~ 2.54, -3.54
        assert sturm_count_in_interval(P(-9, 1, 1), QuadSurd(5, 0, -2), QuadSurd(5, 0, 2)) == 2
        # roots +/-3 lie outside +/-2*sqrt(2)
        assert sturm_count_in_interval(P(-9, 0, 1), QuadSurd(2, 0, -2), QuadSurd(2, 0, 2)) == 0

    def test_endpoint_roots_reported(self):
        f = P(-1, 0, 1)
        with pytest.raises(EndpointRoot):
            sturm_count_in_interval(f, QuadSurd(1, -1, 0), QuadSurd(1, 1, 0))

    def test_not_squarefree(self):
        with pytest.raises(NotSquarefree):
            sturm_count_in_interval(P(1, 2, 1), QuadSurd(1, -5, 0), QuadSurd(1, 5, 0))

    def test_count_real_roots_fixture(self):
        assert count_real_roots(P(-9, 1, 1)) == 2
        assert count_real_roots(P(1, 0, 1)) == 0
        assert count_real_roots(P(0, -6, 1, 1)) == 3  # x(x^2+x-6) = x(x+3)(x-2)

    @given(st.lists(st.integers(min_value=-8, max_value=8), min_size=2, max_size=9))
    @settings(max_examples=150)
    def test_real_root_count_matches_numeric_oracle(self, coeffs):
        h = IntPoly(coeffs)
        if h.degree < 1:
            return
        h = squarefree_part(h)
        if h.degree < 1:
            return
        exact = count_real_roots(h)
        with mpmath.workprec(200):
            roots = mpmath.polyroots(list(reversed(h.coeffs)), maxsteps=100, extraprec=100)
            numeric = sum(1 for z in roots if abs(mpmath.im(z)) < mpmath.mpf(2) ** -40)
        assert exact == numeric


class TestExactModulusCheck:
    def test_degree6_rejection_with_real_root_witness(self):
        f = check_q_symmetry(P(8, 4, 2, 5, 1, 1, 1), 3, 2)
        res = exact_modulus_check(f)
        assert not res.passed
        assert res.witness["kind"] == "real_root_outside_band"
        assert res.witness["side"] == "below"

    def test_q8_quartic_accepted(self):
        f = check_q_symmetry(P(64, 16, 2, 2, 1), 2, 8)
        assert exact_modulus_check(f).passed

    def test_constructed_quartic_accepted(self):
        f = check_q_symmetry(P(25, 5, 1, 1, 1), 2, 5)
        assert exact_modulus_check(f).passed

    def test_double_real_root_at_sqrt_q(self):
        # (t^2 - 5)^2: both roots +/-sqrt(5), modulus sqrt(5)
        f = check_q_symmetry(P(25, 0, -10, 0, 1), 2, 5)
        assert exact_modulus_check(f).passed

    def test_endpoint_root_with_square_q(self):
        # (t - 3)^2 (t^2 + 5t + 9) over q = 9: all roots have modulus 3
        f = check_q_symmetry(P(81, -9, -12, -1, 1), 2, 9)
        assert exact_modulus_check(f).passed

    def test_nonreal_transform_witness(self):
        # h = x^2 + 10 has no real roots: f roots form off-circle quadruples
        f = check_q_symmetry(P(25, 0, 20, 0, 1), 2, 5)
        res = exact_modulus_check(f)
        assert not res.passed
        assert res.witness["kind"] == "nonreal_roots"

    def test_real_root_above_band(self):
        # a_1 = -5 pushes a real pair beyond +2*sqrt(q)
        f = symmetric_poly(2, 5, [-5, 1])
        res = exact_modulus_check(f)
        assert not res.passed
        assert res.witness["side"] == "above"
        lo, hi = res.witness["interval"]
        from fractions import Fraction

        lo_f, hi_f = Fraction(lo), Fraction(hi)
        h = real_weil_transform(f).h
        # the isolating interval contains exactly one sign change of h
        assert (h.eval_fraction(lo_f) > 0) != (h.eval_fraction(hi_f) > 0)


class TestNumericRoots:
    def test_sqrt2(self):
        rep = numeric_roots(P(-2, 0, 1), 128, q=2)
        assert rep.max_modulus_deviation < 1e-30

    def test_constructed_quartic(self):
        rep = numeric_roots(P(25, 5, 1, 1, 1), 128, q=5)
        assert rep.max_modulus_deviation < 1e-12

    def test_degree6_counterexample_root_split(self):
        rep = numeric_roots(P(8, 4, 2, 5, 1, 1, 1), 128, q=2)
        on_circle = [d for d in rep.modulus_deviations if d < 1e-9]
        off_circle = [d for d in rep.modulus_deviations if d > 0.1]
        assert len(on_circle) == 4
        assert len(off_circle) == 2
        # the off-circle roots are the real ones
        real = [z for z in rep.roots if z.imag == 0]
        assert len(real) == 2

    def test_precision_floor(self):
        with pytest.raises(ValueError):
            numeric_roots(P(-2, 0, 1), 32)

    @given(symmetric_inputs)
    @settings(max_examples=60)
    def test_exact_and_numeric_agree(self, data):
        g, q, upper = data
        f = symmetric_poly(g, q, upper[:g])
        exact = exact_modulus_check(f).passed
        rep = numeric_roots(f.poly, 128, q=q)
        assert exact == (rep.max_modulus_deviation < 1e-9)

    @given(symmetric_inputs)
    @settings(max_examples=80)
    def test_unit_circle_pass_implies_exact_pass(self, data):
        # the coefficient criterion is sufficient, never contradicts Sturm
        from weilpoly.surd import ll_unit_circle_check, substitute_sqrt_scale

        g, q, upper = data
        f = symmetric_poly(g, q, upper[:g])
        ll = ll_unit_circle_check(
            substitute_sqrt_scale(f.poly.coeffs, q), QuadSurd(q, q ** g, 0)
        )
        if ll.passed:
            assert exact_modulus_check(f).passed
