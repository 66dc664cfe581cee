"""User-facing exception classes and error handling utilities.

This module provides a structured approach to error handling that separates
internal technical errors from the messages and exit codes the command line
reports. Domain packages subclass these errors so the CLI can map any failure to
one of four exit codes without knowing where it was raised.
"""

import logging
from typing import Any, Dict, Optional

import orjson
import pydantic

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3


class UserFacingError(Exception):
    """Base class for user-facing errors with safe error messages."""

    def __init__(
        self,
        user_message: str,
        exit_code: int = EXIT_VALIDATION,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.user_message = user_message
        self.exit_code = exit_code
        self.error_code = error_code or self.__class__.__name__
        self.details = details or {}
        super().__init__(user_message)


class UsageError(UserFacingError):
    """Command-line usage errors (bad flag combinations, missing arguments)."""

    def __init__(self, user_message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            user_message=user_message,
            exit_code=EXIT_USAGE,
            error_code="USAGE_ERROR",
            details=details,
        )


class ValidationError(UserFacingError):
    """Input validation errors: malformed files, schemas, graphs or arguments."""

    def __init__(self, user_message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(
            user_message=user_message,
            exit_code=EXIT_VALIDATION,
            error_code="VALIDATION_ERROR",
            details=details,
        )


class ContentNotFoundError(UserFacingError):
    """A referenced product, label or file does not exist."""

    def __init__(
        self,
        user_message: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        message = user_message or "The requested content could not be found."
        super().__init__(
            user_message=message,
            exit_code=EXIT_VALIDATION,
            error_code="CONTENT_NOT_FOUND",
            details=details,
        )


class ProcessingError(UserFacingError):
    """File system and other processing errors, reported with the offending path."""

    def __init__(
        self,
        user_message: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        message = user_message or "Unable to process the input."
        super().__init__(
            user_message=message,
            exit_code=EXIT_VALIDATION,
            error_code="PROCESSING_ERROR",
            details=details,
        )


class NumericalError(UserFacingError):
    """Non-finite values encountered during numerical work."""

    def __init__(
        self,
        user_message: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        message = user_message or "A numerical failure occurred."
        super().__init__(
            user_message=message,
            exit_code=EXIT_NUMERICAL,
            error_code="NUMERICAL_ERROR",
            details=details,
        )


class ErrorSanitizer:
    """Utility class to categorize foreign exceptions into user-facing errors.

    Library exceptions (pydantic, orjson, the OS) carry useful detail but no exit
    code. The sanitizer keeps the detail that helps a user fix their input and
    assigns the category.
    """

    @classmethod
    def sanitize_exception(cls, exception: BaseException) -> UserFacingError:
        """Convert any exception into a user-facing error.

        Args:
            exception: The original exception to sanitize

        Returns:
            UserFacingError: The categorized error
        """
        if isinstance(exception, UserFacingError):
            return exception

        if isinstance(exception, pydantic.ValidationError):
            return cls._create_validation_error(exception)

        if isinstance(exception, orjson.JSONDecodeError):
            return ValidationError(
                f"Malformed JSON at byte offset {exception.pos}: {exception.msg}",
                details={"offset": exception.pos},
            )

        if isinstance(exception, FileNotFoundError):
            return ContentNotFoundError(
                f"File not found: {exception.filename}",
                details={"path": str(exception.filename)},
            )

        if isinstance(exception, OSError):
            return ProcessingError(
                f"I/O error on {exception.filename}: {exception.strerror}",
                details={"path": str(exception.filename)},
            )

        if isinstance(exception, (FloatingPointError, OverflowError)):
            return NumericalError(f"Numerical failure: {exception}")

        if isinstance(exception, (ValueError, KeyError)):
            return ValidationError(f"Invalid input: {exception}")

        logger.error(f"Uncategorized exception: {type(exception).__name__}: {exception}")
        return ProcessingError("An unexpected error occurred.")

    @classmethod
    def _create_validation_error(
        cls, exception: pydantic.ValidationError
    ) -> ValidationError:
        """Summarize a pydantic error by field location."""
        problems = []
        for error in exception.errors():
            field = ".".join(str(part) for part in error["loc"]) or "<root>"
            problems.append(f"{field}: {error['msg']}")
        return ValidationError(
            "; ".join(problems),
            details={"fields": [p.split(":")[0] for p in problems]},
        )
