"""so(2,l-1) 생성원, 제한근, 대합 테스트"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from src.algebra.ambient import basis_vector, validate_element
from src.algebra.lie import (
    RootLabel,
    all_labels,
    cone_generator,
    eigen_residual,
    generator,
    involution,
    iwasawa_basis,
    k_theta,
    root_vector,
)
from src.errors import InvalidRootLabelError


class TestGenerators:
    """A 의 기저 테스트"""

    @pytest.mark.parametrize("l", [3, 4, 5])
    def test_base_point_action(self, l):
        e_u = basis_vector(l, 0)
        np.testing.assert_array_equal(generator("J1", l).matrix @ e_u, 0.0)
        np.testing.assert_array_equal(generator("J2", l).matrix @ e_u, basis_vector(l, 2))

    @pytest.mark.parametrize("l", [3, 4, 5])
    def test_commute(self, l):
        assert not generator("J1", l).bracket(generator("J2", l)).matrix.any()

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            generator("J3", 3)


class TestRootLabel:
    """제한근 라벨 테스트"""

    def test_zero_label(self):
        with pytest.raises(InvalidRootLabelError):
            RootLabel(0, 0)

    @pytest.mark.parametrize("alpha, beta", [(2, 1), (2, 0), (0, -2), (1, 5)])
    def test_out_of_range(self, alpha, beta):
        with pytest.raises(InvalidRootLabelError, match=rf"\({alpha}, {beta}\)"):
            RootLabel(alpha, beta)

    def test_zero_component_needs_z(self):
        with pytest.raises(InvalidRootLabelError):
            root_vector(RootLabel(0, 1), 3)

    def test_positivity(self):
        assert RootLabel(1, -1).is_positive
        assert RootLabel(0, 1).is_positive
        assert not RootLabel(0, -1).is_positive
        assert not RootLabel(-1, 1).is_positive

    def test_name(self):
        assert RootLabel(1, 1).name == "X++"
        assert RootLabel(0, -1).name == "X0-"

    def test_labels_per_dimension(self):
        assert len(all_labels(3)) == 4
        assert len(all_labels(4)) == 8


class TestRootVectors:
    """제한근 고유값 테스트"""

    @pytest.mark.parametrize("l", [3, 4, 5])
    def test_eigenvalues(self, l):
        for label in all_labels(l):
            x = root_vector(label, l)
            assert validate_element(x.matrix, "algebra").ok
            assert eigen_residual(label, x, l) <= 1e-12

    def test_lateral_eigenvalues(self):
        j1, j2 = generator("J1", 4), generator("J2", 4)
        x = root_vector(RootLabel(0, 1), 4)
        assert not j1.bracket(x).matrix.any()
        np.testing.assert_array_equal(j2.bracket(x).matrix, x.matrix)

    def test_z_index(self):
        x = root_vector(RootLabel(0, 1), 5, z_index=1)
        assert x.matrix[0, 5] != 0.0
        assert x.matrix[0, 4] == 0.0
        with pytest.raises(InvalidRootLabelError):
            root_vector(RootLabel(0, 1), 5, z_index=2)


class TestIwasawa:
    """Iwasawa 기저 테스트"""

    @pytest.mark.parametrize("l, size", [(3, 2), (4, 4), (5, 6)])
    def test_sizes(self, l, size):
        basis = iwasawa_basis(l)
        assert len(basis.n) == size
        assert len(basis.nbar) == size
        assert len(basis.a) == 2

    def test_ads3_labels(self):
        labels = {label.name for label in iwasawa_basis(3).n_labels}
        assert labels == {"X++", "X+-"}

    def test_lateral_in_n(self):
        basis = iwasawa_basis(4)
        assert RootLabel(0, 1) in basis.n_labels
        assert RootLabel(0, -1) in basis.nbar_labels

    @pytest.mark.parametrize("l", [3, 4, 5])
    def test_theta_maps_n_to_nbar(self, l):
        basis = iwasawa_basis(l)
        for x in basis.n:
            assert basis.span_residual(involution("theta", x), "nbar") <= 1e-10


class TestInvolutions:
    """σ, θ 테스트"""

    def test_sigma_fixes_j1(self):
        j1 = generator("J1", 4)
        np.testing.assert_array_equal(involution("sigma", j1).matrix, j1.matrix)

    def test_theta_negates_j1(self):
        j1 = generator("J1", 4)
        np.testing.assert_array_equal(involution("theta", j1).matrix, -j1.matrix)

    @pytest.mark.parametrize("kind", ["sigma", "theta"])
    def test_square_is_identity(self, kind):
        for label in all_labels(4):
            x = root_vector(label, 4)
            np.testing.assert_allclose(involution(kind, involution(kind, x)).matrix, x.matrix, atol=1e-15)

    def test_k_theta_base_point(self):
        np.testing.assert_array_equal(k_theta(4).act(basis_vector(4, 0)), -basis_vector(4, 0))

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            involution("tau", generator("J1", 3))


class TestConeGenerator:
    """광추 방향 멱영원 테스트"""

    @settings(max_examples=100, deadline=None)
    @given(arrays(np.float64, 3, elements=st.floats(min_value=-1.0, max_value=1.0)))
    def test_cube_vanishes(self, v):
        norm = np.linalg.norm(v)
        if norm < 1e-3:
            return
        e = cone_generator(v / norm).matrix
        assert np.max(np.abs(e @ e @ e)) <= 1e-12

    def test_not_unit(self):
        with pytest.raises(ValueError):
            cone_generator([1.0, 1.0])


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
