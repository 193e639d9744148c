from fractions import Fraction

import pytest

from stablecohom.exactpoly import (GradedRing, MultiPoly, NotDivisibleError, RingMismatchError,
                                   arith, collapse_even, degree_info, exact_divide, expand_even,
                                   parse_poly, substitute, sym_pair, to_text)

R = GradedRing.of(("x", 2), ("alpha", 2), ("r", 2))
x, al, r = R.gens()
XAR = GradedRing.of(("x", 2), ("a", 4), ("r", 2))


def P(text, ring=R):
    return parse_poly(text, ring)


class TestRing:
    def test_odd_weight_rejected(self):
        with pytest.raises(ValueError):
            GradedRing.of(("x", 3))

    def test_duplicate_name_rejected(self):
        with pytest.raises(ValueError):
            GradedRing.of(("x", 2), ("x", 4))

    def test_str(self):
        assert str(GradedRing.of(("x", 2), ("a", 4))) == "Q[x:2, a:4]"


class TestArith:
    def test_difference_of_squares(self):
        assert (x + al) * (x - al) == x ** 2 - al ** 2

    def test_pow_zero(self):
        assert (x + 2 * al) ** 0 == R.one()

    def test_cubic_factor(self):
        assert arith(x + al, x + 3 * al, "mul") == x ** 2 + 4 * al * x + 3 * al ** 2

    def test_ring_mismatch(self):
        other = GradedRing.of(("x", 2))
        with pytest.raises(RingMismatchError):
            x + other.gen("x")

    def test_no_stored_zeros(self):
        f = (x + al) - al
        assert f == x and len(f) == 1

    def test_rational_coefficients_exact(self):
        f = x * Fraction(1, 3) + x * Fraction(2, 3)
        assert f == x


class TestText:
    def test_canonical_order(self):
        ring = GradedRing.of(("x", 2), ("a", 4))
        xx, a = ring.gens()
        assert to_text(8 * xx * a + 4 * xx ** 3) == "4*x^3 + 8*x*a"

    def test_fraction_coefficients(self):
        assert to_text(x * Fraction(-1, 4) + al) == "-1/4*x + alpha"

    def test_roundtrip(self):
        f = (x + 2 * al - r * Fraction(3, 7)) ** 3
        assert parse_poly(to_text(f), R) == f

    def test_zero(self):
        assert to_text(R.zero()) == "0"


class TestExactDivide:
    def test_chern_quotient(self):
        f = (r + 2 * al + x) ** 2 - x ** 2
        assert exact_divide(f, r + 2 * al) == r + 2 * al + 2 * x

    def test_unit(self):
        f = x ** 3 + al
        assert exact_divide(f, R.one()) == f

    def test_monomial(self):
        assert exact_divide(8 * al * x, 2 * al) == 4 * x

    def test_remainder_raises(self):
        with pytest.raises(NotDivisibleError):
            exact_divide(x ** 2 + al, x)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_divide(x, R.zero())


class TestSymPair:
    def test_square(self):
        even, odd = sym_pair((x + 2 * al) ** 2, "alpha")
        assert even == x ** 2 + 4 * al ** 2
        assert odd == 4 * x

    def test_var_free(self):
        even, odd = sym_pair(x ** 3, "alpha")
        assert even == x ** 3 and odd == R.zero()

    def test_cubic_factor(self):
        even, odd = sym_pair((x + al) * (x + 3 * al), "alpha")
        assert even == x ** 2 + 3 * al ** 2
        assert odd == 4 * x


class TestCollapse:
    def test_simple(self):
        out = collapse_even(x ** 2 + 4 * al ** 2, "alpha", "a")
        assert to_text(out) == "x^2 + 4*a"
        assert out.ring.names == ("x", "a", "r")
        assert out.ring.weight("a") == 4

    def test_odd_power_raises(self):
        with pytest.raises(ValueError):
            collapse_even(al * x, "alpha", "a")

    def test_degree2_relation_n2(self):
        f = 2 * (r + x) ** 2 + 8 * al ** 2
        out = collapse_even(f, "alpha", "a")
        xx, a, rr = XAR.gens()
        assert out == 2 * (rr + xx) ** 2 + 8 * a

    def test_expand_inverse(self):
        f = (x ** 2 + al ** 2) ** 2 + r ** 4
        assert expand_even(collapse_even(f, "alpha", "a"), "a", "alpha") == f


class TestSubstitute:
    def setup_method(self):
        self.bo = GradedRing.of(("b", 2), ("t", 2), ("k", 4))

    def test_bo_first(self):
        b, t, k = self.bo.gens()
        xx, a, rr = XAR.gens()
        out = substitute(b * (2 * b - t), {"b": xx, "t": 2 * (xx + rr)}, target=XAR)
        assert out == -2 * xx * rr

    def test_identity(self):
        f = (x + al) ** 3 * r
        assert substitute(f, {"x": x, "alpha": al, "r": r}) == f

    def test_k(self):
        b, t, k = self.bo.gens()
        xx, a, rr = XAR.gens()
        img = 4 * a - (xx + rr) ** 2
        assert substitute(k, {"k": img}, target=XAR) == img

    def test_weight_mismatch(self):
        b, t, k = self.bo.gens()
        xx, a, rr = XAR.gens()
        with pytest.raises(ValueError):
            substitute(k, {"k": xx}, target=XAR)


class TestDegreeInfo:
    def test_xn_rho(self):
        assert degree_info(x ** 2 * r) == {"is_homogeneous": True, "weighted_degree": 6}

    def test_inhomogeneous(self):
        ring = GradedRing.of(("x", 2), ("a", 4))
        assert degree_info(ring.gen("x") + ring.gen("a"))["is_homogeneous"] is False

    def test_zero(self):
        assert degree_info(R.zero()) == {"is_homogeneous": True, "weighted_degree": None}


def test_multipoly_immutable_hashable():
    f = x + al
    assert hash(f) == hash(al + x)
    assert isinstance(f, MultiPoly)
