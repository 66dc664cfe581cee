"""Tests for the finite-difference gradient oracle."""

import math

import numpy as np
import pytest

from api.exceptions import NumericalError, ValidationError
from services.numerics.gradcheck import finite_diff_grad, relative_error


class TestFiniteDiffGrad:
    """Test central differences on functions with known gradients."""

    def test_square(self):
        """Test f = x0^2 at 3."""
        grad = finite_diff_grad(lambda t: t[0] ** 2, np.array([3.0]))
        assert grad[0] == pytest.approx(6.0, abs=1e-6)

    def test_sin_plus_linear(self):
        """Test f = sin(x0) + x1 at (0, 5)."""
        grad = finite_diff_grad(lambda t: math.sin(t[0]) + t[1], np.array([0.0, 5.0]))
        assert np.allclose(grad, [1.0, 1.0], atol=1e-8)

    def test_matrix_shaped_theta(self):
        """Test that the gradient keeps the shape of theta."""
        theta = np.arange(6, dtype=np.float64).reshape(2, 3)
        grad = finite_diff_grad(lambda t: float(np.sum(t**2)), theta)

        assert grad.shape == (2, 3)
        assert np.allclose(grad, 2 * theta, atol=1e-6)

    def test_theta_is_not_modified(self):
        """Test that the input array is left untouched."""
        theta = np.array([1.0, 2.0])
        finite_diff_grad(lambda t: float(t @ t), theta)
        assert np.array_equal(theta, [1.0, 2.0])

    def test_non_positive_eps(self):
        """Test that eps must be positive."""
        with pytest.raises(ValidationError):
            finite_diff_grad(lambda t: 0.0, np.zeros(1), eps=0.0)

    def test_non_finite_objective(self):
        """Test that an infinite objective value is reported with its coordinate."""
        with pytest.raises(NumericalError) as exc_info:
            finite_diff_grad(
                lambda t: math.inf if t[1] > 0 else 0.0, np.array([0.0, 0.0])
            )
        assert exc_info.value.details == {"coordinate": 1}


class TestRelativeError:
    """Test the relative error with an absolute floor."""

    def test_relative(self):
        """Test the relative branch."""
        assert relative_error(1.0, 1.1) == pytest.approx(0.1 / 1.1)

    def test_absolute_below_floor(self):
        """Test that tiny magnitudes are compared absolutely."""
        assert relative_error(1e-9, -1e-9) == pytest.approx(2e-9)

    def test_symmetric(self):
        """Test that argument order does not matter."""
        assert relative_error(2.0, 3.0) == relative_error(3.0, 2.0)
