"""Dense matrix and vector arithmetic.

Matrices are two-dimensional ``float64`` numpy arrays in row-major order. The
helpers here add the shape checks and error messages the rest of the pipeline
relies on; the arithmetic itself is numpy's.
"""

from typing import Tuple

import numpy as np
import numpy.typing as npt

from api.exceptions import ValidationError

Matrix = npt.NDArray[np.float64]
Vector = npt.NDArray[np.float64]


class ShapeMismatchError(ValidationError):
    """Raised when operands have incompatible shapes."""

    def __init__(self, operation: str, left: Tuple[int, ...], right: Tuple[int, ...]):
        super().__init__(
            f"{operation}: incompatible shapes {left} and {right}",
            details={"left": list(left), "right": list(right)},
        )
        self.left = left
        self.right = right


def as_matrix(values) -> Matrix:
    """Return ``values`` as a 2-D float64 array."""
    array = np.asarray(values, dtype=np.float64)
    if array.ndim != 2:
        raise ValidationError(f"Expected a 2-D matrix, got shape {array.shape}")
    return array


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Standard matrix product ``a @ b``."""
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ShapeMismatchError("matmul", a.shape, b.shape)
    return a @ b


def hadamard(a: Matrix, b: Matrix) -> Matrix:
    """Elementwise product of two equal-shape matrices."""
    if a.shape != b.shape:
        raise ShapeMismatchError("hadamard", a.shape, b.shape)
    return a * b


def frobenius_inner(a: Matrix, b: Matrix) -> float:
    """Frobenius inner product ``sum_ij a_ij * b_ij``.

    A k x k kernel validly convolved over a k x k matrix produces a single value,
    which is exactly this inner product.
    """
    if a.shape != b.shape:
        raise ShapeMismatchError("frobenius_inner", a.shape, b.shape)
    return float(np.sum(a * b))


def softmax(logits: Vector) -> Vector:
    """Numerically stable softmax of a 1-D vector."""
    values = np.asarray(logits, dtype=np.float64)
    if values.size == 0:
        raise ValidationError("softmax of an empty vector is undefined")
    shifted = np.exp(values - np.max(values))
    return shifted / np.sum(shifted)
