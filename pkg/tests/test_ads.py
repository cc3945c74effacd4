"""AdS 점, 대표원, 포함사상, SL(2,R) 차트 테스트"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.ambient import GroupElement, basis_vector, mat_exp, q_form, random_point
from src.algebra.lie import generator, k_theta
from src.errors import DimensionError, HorizonCaseError, NotOnQuadricError
from src.spacetime.ads import (
    AdSPoint,
    SL2Matrix,
    geodesic_point,
    iota,
    is_singular,
    lemma_representative,
    project,
    psi,
    psi_inv,
    random_stabilizer,
    reduce_y,
    representative,
    reproject,
    singular_residual,
    special_representative,
    tangent_class,
)

SQRT2 = np.sqrt(2.0)
seeds = st.integers(min_value=0, max_value=2 ** 31 - 1)


class TestProject:
    """[g] = g·e_u 테스트"""

    def test_identity(self):
        np.testing.assert_array_equal(project(GroupElement.identity(3)).coords, [1, 0, 0, 0])

    def test_boost(self):
        p = project(mat_exp(generator("J2", 3) * 0.5))
        np.testing.assert_allclose(p.coords, [np.cosh(0.5), 0.0, np.sinh(0.5), 0.0], atol=1e-15)

    def test_k_theta(self):
        np.testing.assert_array_equal(project(k_theta(3)).coords, [-1, 0, 0, 0])


class TestRepresentative:
    """대표원 테스트"""

    def test_base_point(self):
        rep = representative(AdSPoint([1.0, 0.0, 0.0, 0.0]))
        np.testing.assert_array_equal(rep.g.matrix, np.eye(4))

    @settings(max_examples=50, deadline=None)
    @given(l=st.sampled_from([3, 4, 5]), seed=seeds)
    def test_seeded_representative(self, l, seed):
        p = random_point(l, seed)
        rep = representative(p, seed=seed)
        assert rep.time_oriented
        np.testing.assert_allclose(rep.g.act(basis_vector(l, 0)), p.coords, atol=1e-9 * max(1.0, np.max(np.abs(p.coords))))

    def test_deterministic(self):
        p = random_point(4, 5)
        a = representative(p, seed=9)
        b = representative(p, seed=9)
        np.testing.assert_array_equal(a.g.matrix, b.g.matrix)

    def test_constraint(self):
        p = AdSPoint([0.0, 1.0, 0.0, 0.0])
        rep = representative(p, constraint="b_neq_pm_bprime")
        b, b_prime = rep.t_row[2], rep.y_row[2]
        assert abs(b - b_prime) >= 1e-6
        assert abs(b + b_prime) >= 1e-6

    def test_unknown_constraint(self):
        with pytest.raises(ValueError):
            representative(AdSPoint([1.0, 0.0, 0.0, 0.0]), constraint="other")

    def test_stabilizer_fixes_base_point(self):
        h = random_stabilizer(4, np.random.default_rng(3))
        np.testing.assert_allclose(h.act(basis_vector(4, 0)), basis_vector(4, 0), atol=1e-12)


class TestReproject:
    """이차곡면 재투영 테스트"""

    def test_nearby(self):
        p = reproject([1.0000001, 0.0, 0.0, 0.0], band=1e-6)
        assert q_form(p.coords, p.coords) == pytest.approx(1.0, abs=1e-15)

    def test_far(self):
        with pytest.raises(NotOnQuadricError):
            reproject([1.0, 1.0, 0.0, 0.0], band=1e-6)

    def test_origin(self):
        with pytest.raises(NotOnQuadricError):
            reproject([0.0, 0.0, 1.0, 0.0])


class TestSpecialRepresentative:
    """AdS_3 특수 대표원 테스트"""

    def test_a_zero(self):
        p = AdSPoint([0.0, SQRT2, 1.0, 0.0])
        rep = special_representative(p, "a_zero")
        assert rep.t_row[1] == 0.0
        assert rep.y_row[1] == 0.0
        assert rep.time_oriented

    def test_c_zero(self):
        p = AdSPoint([SQRT2, 0.0, 1.0, 0.0])
        rep = special_representative(p, "c_zero")
        assert rep.t_row[2] == 0.0
        assert rep.y_row[2] == 0.0

    def test_horizon_case(self):
        with pytest.raises(HorizonCaseError):
            special_representative(AdSPoint([1.0, 1.0, 1.0, 0.0]), "a_zero")

    def test_wrong_mode_for_point(self):
        with pytest.raises(HorizonCaseError):
            special_representative(AdSPoint([SQRT2, 0.0, 1.0, 0.0]), "a_zero")

    def test_ads4_rejected(self):
        with pytest.raises(DimensionError):
            special_representative(AdSPoint([1.0, 0.0, 0.0, 0.0, 0.0]), "c_zero")


class TestIota:
    """포함사상 테스트"""

    def test_point(self):
        np.testing.assert_array_equal(iota(AdSPoint([1.0, 0.0, 0.0, 0.0])).coords, [1, 0, 0, 0, 0])

    def test_commutes_with_projection(self):
        g = representative(random_point(3, 21), seed=4).g
        np.testing.assert_allclose(project(iota(g)).coords, iota(project(g)).coords, atol=1e-15)

    def test_ads5_rejected(self):
        with pytest.raises(DimensionError):
            iota(AdSPoint([1.0, 0.0, 0.0, 0.0, 0.0, 0.0]))


class TestPsi:
    """SL(2,R) 차트 테스트"""

    def test_identity(self):
        np.testing.assert_array_equal(psi(SL2Matrix(np.eye(2))).coords, [1, 0, 0, 0])

    def test_diagonal(self):
        lam = 0.3
        p = psi(SL2Matrix(np.diag([np.exp(lam), np.exp(-lam)])))
        np.testing.assert_allclose(p.coords, [np.cosh(lam), 0.0, np.sinh(lam), 0.0], atol=1e-15)

    @settings(max_examples=100, deadline=None)
    @given(seed=seeds)
    def test_roundtrip(self, seed):
        m = SL2Matrix.random(np.random.default_rng(seed))
        np.testing.assert_allclose(psi_inv(psi(m)).entries, m.entries, atol=1e-12 * max(1.0, np.max(np.abs(m.entries))))

    def test_off_quadric(self):
        with pytest.raises(NotOnQuadricError):
            psi_inv(np.array([1.0, 1.0, 0.0, 0.0]))


class TestSingular:
    """특이점 테스트"""

    def test_base_point(self):
        assert is_singular(AdSPoint([1.0, 0.0, 0.0, 0.0]))
        assert is_singular(AdSPoint([-1.0, 0.0, 0.0, 0.0]))

    def test_horizon_point_not_singular(self):
        p = AdSPoint([0.0, 1.0, 0.0, 0.0])
        assert not is_singular(p)
        assert singular_residual(p) == 1.0


class TestGeodesic:
    """광선 측지선 테스트"""

    def test_base_ray(self):
        rep = representative(AdSPoint([1.0, 0.0, 0.0, 0.0, 0.0]))
        w = np.array([0.6, 0.0, 0.8])
        np.testing.assert_allclose(geodesic_point(rep, w, 2.0).coords, [1.0, -2.0, 1.2, 0.0, 1.6])

    def test_start(self):
        p = random_point(4, 8)
        rep = representative(p, seed=1)
        np.testing.assert_allclose(geodesic_point(rep, [0.0, 1.0, 0.0], 0.0).coords, p.coords, atol=1e-9)

    def test_lemma_ray(self):
        t, z = SQRT2, 1.0
        w = np.array([0.0, 0.6, 0.8])
        s = 0.5
        q = geodesic_point(lemma_representative(t, z), w, s)
        assert q.t == pytest.approx(t - s * z * w[2])
        assert q.y == pytest.approx(s * w[1])

    def test_dimension_mismatch(self):
        rep = representative(AdSPoint([1.0, 0.0, 0.0, 0.0]))
        with pytest.raises(DimensionError):
            geodesic_point(rep, [0.6, 0.0, 0.8], 1.0)


class TestTangentClass:
    """접벡터 분류 테스트"""

    base = AdSPoint([1.0, 0.0, 0.0, 0.0])

    def test_classes(self):
        assert tangent_class(self.base, [0.0, 1.0, 0.0, 0.0]) == "time"
        assert tangent_class(self.base, [0.0, 0.0, 1.0, 0.0]) == "space"
        assert tangent_class(self.base, [0.0, -1.0, 0.6, 0.8]) == "light"

    def test_not_tangent(self):
        with pytest.raises(ValueError):
            tangent_class(self.base, [1.0, 0.0, 0.0, 0.0])


class TestReduceY:
    """y 성분 제거 테스트"""

    def test_remove_y(self):
        p = AdSPoint([0.5, 2.0, 0.3, 1.0, np.sqrt(4.0 + 0.25 - 0.09 - 1.0 - 1.0)])
        boost, q = reduce_y(p)
        assert q.y == 0.0
        assert q.t ** 2 == pytest.approx(p.t ** 2 - p.y ** 2)
        assert q.coords[4] == p.coords[4]
        assert np.tanh(boost) == pytest.approx(-p.y / p.t)

    def test_needs_timelike_ty(self):
        with pytest.raises(NotOnQuadricError):
            reduce_y(AdSPoint([SQRT2, 0.0, 0.0, 1.0]))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
