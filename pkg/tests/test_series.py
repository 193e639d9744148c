import pytest

from stablecohom.series import (RationalSeries, TPoly, equals, expand_to, product_series,
                                series_arith, structural_checks)


def S(num: dict, den=()):
    return RationalSeries(TPoly(num), den)


class TestTPoly:
    def test_odd_exponent_rejected(self):
        with pytest.raises(ValueError):
            TPoly({3: 1})

    def test_from_u(self):
        assert TPoly.from_u([1, 0, -1]) == TPoly({0: 1, 4: -1})


class TestCanonical:
    def test_cancel(self):
        s = S({0: 1, 4: -1}, [2])
        assert s.numerator == TPoly({0: 1, 2: 1})
        assert s.denominator == ()

    def test_self_difference(self):
        a = S({0: 1, 6: 3}, [2, 4])
        assert (a - a).is_zero()

    def test_limit_bracket(self):
        got = series_arith(RationalSeries(1, [6]), 2 * S({4: 1}, [4]), "add")
        assert got == S({0: 1, 4: 1, 10: -2}, [6, 4])

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            series_arith(RationalSeries(1), RationalSeries(0), "div")

    def test_division_by_cyclotomic(self):
        got = S({0: 1, 6: -1}) / S({0: 1, 2: 1, 4: 1})
        assert got == RationalSeries.one_minus(2)

    def test_str(self):
        s = S({0: 1, 4: 1, 10: -2}, [4, 6])
        assert str(s) == "(1 + t^4 - 2*t^10)/((1 - t^4)(1 - t^6))"

    def test_json_roundtrip(self):
        s = S({0: 1, 2: 1}, [2, 4])
        data = s.to_json()
        assert RationalSeries.from_json(data) == s
        assert set(data) == {"num", "den"}
        assert all(isinstance(k, str) for k in data["num"])


class TestExpand:
    def test_geometric(self):
        assert expand_to(RationalSeries(1, [2]), 6) == [1, 1, 1, 1]

    def test_p1_degree3(self):
        s = product_series([6, 8], [2, 4])
        assert expand_to(s, 8) == [1, 1, 2, 1, 1]

    def test_degree2_n3(self):
        from stablecohom.pipeline import degree2_closed_form
        assert expand_to(degree2_closed_form(3), 10) == [1, 2, 3, 3, 2, 1]

    def test_negative_order(self):
        with pytest.raises(ValueError):
            expand_to(RationalSeries(1), -2)


class TestEquals:
    def test_cancelled(self):
        assert equals(S({0: 1, 4: -1}, [2]), S({0: 1, 2: 1}))

    def test_different(self):
        assert not equals(RationalSeries(1, [2]), RationalSeries(1, [4]))

    def test_equality_is_not_truncation(self):
        # agree through t^20, differ at t^22
        a = RationalSeries(1, [2])
        b = a + S({22: 1})
        assert expand_to(a, 20) == expand_to(b, 20)
        assert a != b


class TestStructural:
    def test_p2(self):
        assert structural_checks(S({0: 1, 2: 1, 4: 1})) == {
            "is_polynomial": True, "nonnegative": True, "palindromic": True}

    def test_not_polynomial(self):
        assert structural_checks(RationalSeries(1, [2]))["is_polynomial"] is False

    def test_degree3_n3(self):
        from stablecohom.pipeline import degree3_closed_form
        assert structural_checks(degree3_closed_form(3)) == {
            "is_polynomial": True, "nonnegative": True, "palindromic": True}

    def test_negative_coefficient(self):
        out = structural_checks(S({0: 1, 2: -1, 4: 1}))
        assert out["nonnegative"] is False and out["palindromic"] is True
