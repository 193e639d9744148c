import pytest

from stablecohom.exactpoly import GradedRing, degree_info, parse_poly
from stablecohom.groebner import buchberger, hilbert_series
from stablecohom.kirwan import (BASE_RING, chern_classes_from_roots, projective_bundle_relation,
                                quasimap_series, relations_d2, relations_d3,
                                torus_bundle_relation, unstable_correction_d2)
from stablecohom.series import RationalSeries, TPoly, product_series


def X(text):
    return parse_poly(text, BASE_RING)


class TestQuasimap:
    def test_odd(self):
        assert quasimap_series(3, 2) == product_series([6, 8], [2, 4])

    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_even(self, n):
        num = TPoly({0: 1}) - TPoly({4 * n - 2: 1}) - TPoly({4 * n: 1}) + TPoly({6 * n - 2: 1})
        assert quasimap_series(2, n) == RationalSeries(num, [2, 4])

    def test_point(self):
        assert quasimap_series(3, 1) == RationalSeries(1)

    def test_bad_args(self):
        with pytest.raises(ValueError):
            quasimap_series(0, 2)


class TestRelations:
    def test_d2_n2(self):
        assert relations_d2(2).generators == (X("4*x^3"), X("x^4 + 4*x^2*a"))

    def test_d2_n1(self):
        assert relations_d2(1).generators == (X("2*x"), X("x^2"))

    def test_d3_n1(self):
        assert relations_d3(1).generators == (X("4*x"), X("x^2 + 3*a"))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_degrees(self, n):
        assert relations_d2(n).degrees() == [4 * n - 2, 4 * n]
        assert relations_d3(n).degrees() == [4 * n - 2, 4 * n]

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_d3_hilbert(self, n):
        assert hilbert_series(buchberger(relations_d3(n))) == quasimap_series(3, n)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_d2_hilbert_not_complete_intersection(self, n):
        hs = hilbert_series(buchberger(relations_d2(n)))
        assert hs == quasimap_series(2, n)
        if n > 1:
            assert hs != product_series([4 * n - 2, 4 * n], [2, 4])


class TestBundles:
    R = GradedRing.of(("x", 2), ("a", 4), ("rho", 2))

    def test_rank1(self):
        x = self.R.gen("x")
        assert projective_bundle_relation([x], "rho") == self.R.gen("rho") + x

    def test_rank2(self):
        x, a, rho = self.R.gens()
        assert projective_bundle_relation([2 * x, a], "rho") == rho ** 2 + 2 * x * rho + a

    def test_degree_mismatch(self):
        x, a, rho = self.R.gens()
        with pytest.raises(ValueError):
            projective_bundle_relation([a], "rho")

    def test_homogeneous_of_degree_2r(self):
        x, a, rho = self.R.gens()
        f = projective_bundle_relation([x, a, x * a], "rho")
        assert degree_info(f) == {"is_homogeneous": True, "weighted_degree": 6}

    def test_torus_weights(self):
        ring = GradedRing.of(("rho", 2), ("alpha", 2))
        weights = [3, 1, -1, -3]
        cherns = chern_classes_from_roots(weights, ring)
        assert projective_bundle_relation(cherns, "rho") == torus_bundle_relation(weights, ring)


class TestUnstable:
    def test_n2(self):
        assert unstable_correction_d2(2) == RationalSeries(TPoly({2: 1, 4: 1}), [2])

    def test_n3(self):
        expected = RationalSeries(TPoly({4: 1}), [2, 2, 2]) * RationalSeries.one_minus(6) \
            * RationalSeries.one_minus(4)
        assert unstable_correction_d2(3) == expected

    def test_bad_n(self):
        with pytest.raises(ValueError):
            unstable_correction_d2(1)
