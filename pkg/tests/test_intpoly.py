from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weilpoly.errors import ShapeMismatch
from weilpoly.intpoly import (
    IntPoly,
    char_poly_of_power,
    check_q_symmetry,
    cyclotomic,
    minimal_poly_of_power,
    poly_gcd,
    power_sums,
    reduce_mod,
    resultant,
    squarefree_part,
)
from weilpoly.numtheory import euler_phi


def P(*coeffs_low_to_high):
    return IntPoly(coeffs_low_to_high)


def from_roots(roots):
    f = IntPoly.one()
    for r in roots:
        f = f * P(-r, 1)
    return f


# -- independent oracle: resultant as the Sylvester determinant over Q ----------


def sylvester_resultant_oracle(f, h):
    """det of the Sylvester matrix of (h, f), i.e. lc(h)^deg f * prod f(beta)."""
    m, n = h.degree, f.degree
    if m == 0:
        return h.lc ** n
    if n == 0:
        return f.lc ** m
    size = m + n
    rows = []
    hc = [Fraction(h.coeff(m - i)) for i in range(m + 1)]  # high-to-low
    fc = [Fraction(f.coeff(n - i)) for i in range(n + 1)]
    for i in range(n):
        rows.append([Fraction(0)] * i + hc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - n - 1 - i))
    # fraction-free-ish Gaussian elimination
    det = Fraction(1)
    for col in range(size):
        piv = None
        for r in range(col, size):
            if rows[r][col] != 0:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col] != 0:
                factor = rows[r][col] / inv
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    assert det.denominator == 1
    return int(det)


small_polys = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=1, max_size=6
).map(IntPoly).filter(lambda p: not p.is_zero())


class TestArithmetic:
    def test_ring_ops(self):
        assert P(1, 1) * P(-1, 1) == P(-1, 0, 1)  # (t+1)(t-1) = t^2 - 1
        assert P(0, 0, 0, 0, 1).derivative() == P(0, 0, 0, 4)
        f = P(3, 0, 2)
        assert IntPoly.zero() + f == f

    def test_eval(self):
        assert P(1, 0, 1)(2) == 5
        assert P(25, 5, 1, 1, 1)(0) == 25
        assert cyclotomic(5)(1) == 5

    def test_normalization(self):
        assert P(1, 2, 0, 0).degree == 1
        assert IntPoly([0, 0]).is_zero()

    def test_string_roundtrip(self):
        f = P(25, 5, 1, 1, 1)
        assert f.to_string() == "25,5,1,1,1"
        assert IntPoly.from_string("25, 5,1,1,1") == f
        with pytest.raises(ValueError):
            IntPoly.from_string("")
        with pytest.raises(ValueError):
            IntPoly.from_string("1,x,3")

    @given(small_polys, small_polys, small_polys)
    def test_distributivity(self, a, b, c):
        assert a * (b + c) == a * b + a * c


class TestCyclotomic:
    def test_fixtures(self):
        assert cyclotomic(5) == P(1, 1, 1, 1, 1)
        assert cyclotomic(1) == P(-1, 1)
        assert cyclotomic(25) == cyclotomic(5).inflate(5)

    def test_degree_is_phi(self):
        for n in range(1, 201):
            assert cyclotomic(n).degree == euler_phi(n), n

    def test_prime_power_inflation(self):
        for rho in (3, 5, 7):
            for b in (2, 3):
                assert cyclotomic(rho ** b) == cyclotomic(rho).inflate(rho ** (b - 1))


class TestQSymmetry:
    def test_accepts_fixture(self):
        qp = check_q_symmetry(P(25, 5, 1, 1, 1), 2, 5)
        assert (qp.g, qp.q) == (2, 5)
        assert qp.a(1) == 1 and qp.middle == 1

    def test_accepts_degree6_shape(self):
        qp = check_q_symmetry(P(8, 4, 2, 5, 1, 1, 1), 3, 2)
        assert qp.middle == 5

    def test_rejects_bad_constant(self):
        with pytest.raises(ShapeMismatch) as exc:
            check_q_symmetry(P(5, 3, 1), 1, 2)
        assert exc.value.index == 0

    def test_rejects_nonmonic_and_bad_degree(self):
        with pytest.raises(ShapeMismatch):
            check_q_symmetry(P(25, 5, 1, 1, 2), 2, 5)
        with pytest.raises(ShapeMismatch):
            check_q_symmetry(P(25, 5, 1, 1, 1), 3, 5)

    def test_functional_identity(self):
        # the pairing is equivalent to t^(2g) * f(q/t) = q^g * f(t)
        f = P(16, 4, 1, 1, 1)
        g, q = 2, 4
        check_q_symmetry(f, g, q)
        lhs = IntPoly([f.coeff(2 * g - j) * q ** (2 * g - j) for j in range(2 * g + 1)])
        assert lhs == f.scale(q ** g)


class TestResultant:
    def test_pinned_convention(self):
        assert resultant(P(-2, 0, 1), P(-3, 0, 1)) == 1
        assert resultant(P(-3, 1), P(-7, 1)) == 4  # res(t-a, t-b) = b-a
        assert resultant(P(-3, 0, 1), P(1)) == 1

    def test_shared_root_vanishes(self):
        f = from_roots([1, 2])
        h = from_roots([2, 5])
        assert resultant(f, h) == 0

    @given(small_polys, small_polys)
    @settings(max_examples=150)
    def test_matches_sylvester_determinant(self, f, h):
        assert resultant(f, h) == sylvester_resultant_oracle(f, h)

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=80)
    def test_multiplicative_in_second_argument(self, f, h, k):
        assert resultant(f, h * k) == resultant(f, h) * resultant(f, k)

    @given(small_polys, small_polys)
    @settings(max_examples=80)
    def test_swap_sign_rule(self, f, h):
        sign = -1 if (f.degree * h.degree) % 2 else 1
        assert resultant(f, h) == sign * resultant(h, f)


class TestPowerSums:
    def test_known_roots(self):
        f = from_roots([1, 2, 3])
        s = power_sums(f, 4)
        assert s == [6, 14, 36, 98]

    @given(st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=5))
    def test_matches_direct_sums(self, roots):
        f = from_roots(roots)
        s = power_sums(f, 7)
        for k in range(1, 8):
            assert s[k - 1] == sum(r ** k for r in roots)


class TestCharPolyOfPower:
    def test_identity_power(self):
        f = P(25, 5, 1, 1, 1)
        assert char_poly_of_power(f, 1) == f

    def test_sqrt2_squared(self):
        assert char_poly_of_power(P(-2, 0, 1), 2) == P(4, -4, 1)  # (t-2)^2

    def test_inflated_quintic(self):
        h = P(9765625, 3125, 1, 1, 1)
        f = h.inflate(5)
        assert char_poly_of_power(f, 5) == h ** 5

    @given(
        st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=6),
        st.integers(min_value=1, max_value=5),
    )
    @settings(max_examples=120)
    def test_matches_root_power_product(self, roots, d):
        # oracle: directly construct prod (x - r^d)
        f = from_roots(roots)
        assert char_poly_of_power(f, d) == from_roots([r ** d for r in roots])


class TestMinimalPolyOfPower:
    def test_fixtures(self):
        f = P(25, 5, 1, 1, 1)
        assert minimal_poly_of_power(f, 1) == f
        assert minimal_poly_of_power(P(-2, 0, 1), 2) == P(-2, 1)
        h = P(9765625, 3125, 1, 1, 1)
        assert minimal_poly_of_power(h.inflate(5), 5) == h

    def test_degree_drop_detects_subfield(self):
        # roots +/- i sqrt(5): squares are both -5
        f = P(5, 0, 1)
        assert minimal_poly_of_power(f, 2) == P(5, 1)


class TestGcdAndRadical:
    def test_radical_of_product(self):
        f = P(-1, 1) ** 2 * P(2, 1)
        assert squarefree_part(f) == P(-1, 1) * P(2, 1)

    def test_radical_of_squarefree_is_self(self):
        f = P(-1, 1) * P(2, 1) * P(0, 1)
        assert squarefree_part(f) == f

    @given(
        st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=3, unique=True),
        st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=3),
    )
    @settings(max_examples=60)
    def test_radical_strips_multiplicities(self, roots, mults):
        pairs = list(zip(roots, mults))
        f = IntPoly.one()
        for r, e in pairs:
            f = f * P(-r, 1) ** e
        assert squarefree_part(f) == from_roots([r for r, _ in pairs])

    @given(small_polys, small_polys)
    @settings(max_examples=80)
    def test_gcd_divides_both(self, a, b):
        from weilpoly.intpoly import pseudo_remainder

        g = poly_gcd(a, b)
        if g.degree >= 1:
            assert pseudo_remainder(a, g).is_zero()
            assert pseudo_remainder(b, g).is_zero()


class TestReduceMod:
    def test_fixtures(self):
        assert reduce_mod(P(25, 5, 1, 1, 1), 2) == [1, 1, 1, 1, 1]
        assert reduce_mod(P(16, 4, 1, 1, 1), 3) == [1, 1, 1, 1, 1]
        assert reduce_mod(P(4, 2, 2), 2) == []
