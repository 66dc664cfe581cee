"""Finite-difference gradient oracle."""

import math
from typing import Callable

import numpy as np

from api.exceptions import NumericalError, ValidationError
from services.numerics.matrix import Vector


def finite_diff_grad(
    f: Callable[[Vector], float], theta: Vector, eps: float = 1e-5
) -> Vector:
    """Central-difference gradient of ``f`` at ``theta``.

    Each coordinate is ``(f(theta + eps e_i) - f(theta - eps e_i)) / (2 eps)``.
    ``theta`` is not modified.
    """
    if eps <= 0:
        raise ValidationError(f"eps must be positive, got {eps}")
    point = np.array(theta, dtype=np.float64, copy=True).reshape(-1)
    grad = np.zeros_like(point)
    for i in range(point.size):
        original = point[i]
        point[i] = original + eps
        upper = _checked(f, point, i)
        point[i] = original - eps
        lower = _checked(f, point, i)
        point[i] = original
        grad[i] = (upper - lower) / (2.0 * eps)
    return grad.reshape(np.shape(theta))


def relative_error(analytic: float, numeric: float, floor: float = 1e-6) -> float:
    """Relative error, or absolute error when both magnitudes are below ``floor``."""
    scale = max(abs(analytic), abs(numeric))
    if scale < floor:
        return abs(analytic - numeric)
    return abs(analytic - numeric) / scale


def _checked(f: Callable[[Vector], float], point: Vector, index: int) -> float:
    value = float(f(point))
    if not math.isfinite(value):
        raise NumericalError(
            f"Objective is not finite while perturbing coordinate {index}",
            details={"coordinate": index},
        )
    return value
