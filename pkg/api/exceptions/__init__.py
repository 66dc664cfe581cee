"""API exceptions module.

Provides user-facing exception classes, exit codes and error handling utilities.
"""

from api.exceptions.user_facing_exceptions import (
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VALIDATION,
    ContentNotFoundError,
    ErrorSanitizer,
    NumericalError,
    ProcessingError,
    UsageError,
    UserFacingError,
    ValidationError,
)

__all__ = [
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_VALIDATION",
    "EXIT_NUMERICAL",
    "UserFacingError",
    "UsageError",
    "ValidationError",
    "ContentNotFoundError",
    "ProcessingError",
    "NumericalError",
    "ErrorSanitizer",
]
