from services.numerics.activations import Activation
from services.numerics.gradcheck import finite_diff_grad, relative_error
from services.numerics.matrix import (
    Matrix,
    ShapeMismatchError,
    Vector,
    as_matrix,
    frobenius_inner,
    hadamard,
    matmul,
    softmax,
)
from services.numerics.rng import Rng

__all__ = [
    "Activation",
    "Matrix",
    "Rng",
    "ShapeMismatchError",
    "Vector",
    "as_matrix",
    "finite_diff_grad",
    "frobenius_inner",
    "hadamard",
    "matmul",
    "relative_error",
    "softmax",
]
