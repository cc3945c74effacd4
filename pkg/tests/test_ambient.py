"""ℝ^{2,l-1} 선형대수 테스트"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.ambient import (
    AdSPoint,
    GroupElement,
    complete_frame,
    eta,
    eta_complete,
    form_signs,
    mat_exp,
    q_form,
    random_point,
    validate_element,
)
from src.algebra.lie import RootLabel, algebra_basis, cone_generator, generator, root_vector
from src.errors import DimensionError, InvalidElementError, NotOnQuadricError

dims = st.sampled_from([3, 4, 5])
seeds = st.integers(min_value=0, max_value=2 ** 31 - 1)


class TestQForm:
    """이차형식 테스트"""

    def test_signature(self):
        assert q_form([1, 0, 0, 0], [1, 0, 0, 0]) == 1.0
        assert q_form([0, np.sqrt(2), 0, 1], [0, np.sqrt(2), 0, 1]) == pytest.approx(1.0)
        assert q_form([1, 1, 1, 1], [1, 1, 1, 1]) == 0.0

    def test_symmetric(self):
        v = np.array([0.3, -1.2, 0.5, 2.0, 0.7])
        w = np.array([1.1, 0.4, -0.6, 0.2, 1.5])
        assert q_form(v, w) == pytest.approx(q_form(w, v))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            q_form([1, 0, 0, 0], [1, 0, 0, 0, 0])

    def test_eta(self):
        np.testing.assert_array_equal(np.diag(eta(4)), [1, 1, -1, -1, -1])

    def test_signs_cached_read_only(self):
        assert form_signs(4) is form_signs(4)
        assert eta(3) is eta(3)
        with pytest.raises(ValueError):
            form_signs(4)[0] = -1.0
        with pytest.raises(ValueError):
            eta(3)[0, 0] = 2.0


class TestRandomPoint:
    """이차곡면 표본 테스트"""

    def test_deterministic(self):
        a = random_point(4, seed=7, sigma=1.0)
        b = random_point(4, seed=7, sigma=1.0)
        np.testing.assert_array_equal(a.coords, b.coords)

    def test_zero_spread(self):
        p = random_point(3, seed=3, sigma=0.0)
        np.testing.assert_array_equal(p.coords[2:], 0.0)
        assert p.u ** 2 + p.t ** 2 == pytest.approx(1.0)

    def test_negative_spread(self):
        with pytest.raises(ValueError):
            random_point(3, seed=0, sigma=-1.0)

    @settings(max_examples=200, deadline=None)
    @given(l=dims, seed=seeds, sigma=st.floats(min_value=0.0, max_value=3.0))
    def test_on_quadric(self, l, seed, sigma):
        p = random_point(l, seed, sigma)
        assert p.dim == l
        assert abs(q_form(p.coords, p.coords) - 1.0) <= 1e-12

    def test_off_quadric_rejected(self):
        with pytest.raises(NotOnQuadricError):
            AdSPoint([1.0, 1.0, 0.0, 0.0])

    def test_quadric_tolerance_scales_with_size(self):
        with pytest.raises(NotOnQuadricError):
            AdSPoint([np.sqrt(1.0 + 1e-8), 0.0, 0.0, 0.0])
        big = np.array([0.0, np.sqrt(1.0 + 1e6), 1e3, 0.0])
        big[1] += 1e-9
        assert AdSPoint(big).t == big[1]

    def test_unsupported_dimension(self):
        with pytest.raises(DimensionError):
            AdSPoint([1.0, 0.0, 0.0])


class TestValidateElement:
    """군 / 대수 조건 검증 테스트"""

    def test_identity_group(self):
        report = validate_element(np.eye(4), "group")
        assert report.ok
        assert report.residual == 0.0

    def test_boost_algebra(self):
        assert validate_element(generator("J1", 4).matrix, "algebra").ok

    def test_scaled_identity_not_group(self):
        assert not validate_element(np.diag([2.0, 1.0, 1.0, 1.0]), "group").ok

    def test_invalid_construction(self):
        with pytest.raises(InvalidElementError):
            GroupElement(np.diag([2.0, 1.0, 1.0, 1.0]))

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            validate_element(np.eye(4), "ring")


class TestEtaComplete:
    """대표원 완성 테스트"""

    def test_base_point(self):
        np.testing.assert_array_equal(eta_complete([1.0, 0.0, 0.0, 0.0]).matrix, np.eye(4))

    def test_horizon_point(self):
        g = eta_complete([0.0, 1.0, 0.0, 0.0]).matrix
        expected = np.array([
            [0.0, -1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ])
        np.testing.assert_allclose(g, expected, atol=1e-15)
        assert np.max(np.abs(g.T @ eta(3) @ g - eta(3))) <= 1e-12

    def test_first_column_kept(self):
        v = np.array([0.0, np.sqrt(2.0), 0.0, 1.0])
        g = eta_complete(v).matrix
        np.testing.assert_array_equal(g[:, 0], v)
        assert np.linalg.det(g) == pytest.approx(1.0, abs=1e-9)

    def test_not_on_quadric(self):
        with pytest.raises(NotOnQuadricError):
            eta_complete([1.0, 1.0, 1.0, 1.0])

    def test_frame_needs_fixed_column(self):
        with pytest.raises(ValueError):
            complete_frame({}, 3)

    def test_two_fixed_columns(self):
        p = np.array([0.0, np.sqrt(2.0), 1.0, 0.0])
        column = np.array([-1.0, 0.0, 0.0, 0.0])
        g = complete_frame({0: p, 1: column}, 3)
        np.testing.assert_array_equal(g[:, 0], p)
        np.testing.assert_array_equal(g[:, 1], column)
        assert validate_element(g, "group").ok

    @settings(max_examples=100, deadline=None)
    @given(l=dims, seed=seeds)
    def test_identity_component(self, l, seed):
        p = random_point(l, seed)
        g = eta_complete(p.coords).matrix
        np.testing.assert_array_equal(g[:, 0], p.coords)
        assert np.linalg.det(g[:2, :2]) > 0
        assert validate_element(g, "group").ok


class TestMatExp:
    """행렬 지수함수 테스트"""

    def test_zero(self):
        zero = generator("J1", 3) * 0.0
        np.testing.assert_array_equal(mat_exp(zero).matrix, np.eye(4))

    def test_boost_closed_form(self):
        eta_ = 0.7
        g = mat_exp(generator("J1", 4) * eta_).matrix
        expected = np.eye(5)
        expected[1, 1] = expected[3, 3] = np.cosh(eta_)
        expected[1, 3] = expected[3, 1] = np.sinh(eta_)
        np.testing.assert_allclose(g, expected, atol=1e-15)

    def test_cone_ray(self):
        w = np.array([0.6, 0.0, 0.8])
        s = 1.5
        g = mat_exp(cone_generator(w) * s)
        np.testing.assert_allclose(g.act([1, 0, 0, 0, 0]), np.concatenate(([1.0, -s], s * w)), atol=1e-14)

    def test_lateral_action(self):
        u, t, x, y = 1.3, 0.4, -0.9, 0.2
        alpha = 0.8
        g = mat_exp(root_vector(RootLabel(0, 1), 4) * alpha)
        shift = alpha ** 2 * (u - x) / 2
        expected = [u + shift, t, x + shift, y, -alpha * (x - u)]
        np.testing.assert_allclose(g.act([u, t, x, y, 0.0]), expected, atol=1e-14)

    @pytest.mark.parametrize("l", [3, 4, 5])
    def test_inverse(self, l):
        rng = np.random.default_rng(l)
        for x in algebra_basis(l) + [root_vector(RootLabel(1, 1), l), root_vector(RootLabel(-1, 1), l)]:
            param = rng.uniform(-5.0, 5.0)
            product = mat_exp(x * param).matrix @ mat_exp(x * -param).matrix
            assert np.max(np.abs(product - np.eye(l + 1))) <= 1e-11

    def test_general_case_uses_pade(self):
        x = generator("J1", 4) * 0.3 + generator("J2", 4) * 0.5 + root_vector(RootLabel(1, 1), 4) * 0.2
        g = mat_exp(x)
        assert validate_element(g.matrix, "group").ok

    @settings(max_examples=100, deadline=None)
    @given(l=dims, seed=seeds)
    def test_form_preserved(self, l, seed):
        rng = np.random.default_rng(seed)
        g = eta_complete(random_point(l, seed).coords)
        v, w = rng.normal(size=l + 1), rng.normal(size=l + 1)
        before = q_form(v, w)
        assert abs(q_form(g.act(v), g.act(w)) - before) <= 1e-9 * (1 + abs(before)) * max(1.0, np.max(np.abs(g.matrix))) ** 2


class TestGroupElement:
    """군 원소 연산 테스트"""

    def test_inverse(self):
        g = eta_complete(random_point(4, 11).coords)
        np.testing.assert_allclose((g @ g.inverse()).matrix, np.eye(5), atol=1e-10)

    def test_identity(self):
        np.testing.assert_array_equal(GroupElement.identity(5).matrix, np.eye(6))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
