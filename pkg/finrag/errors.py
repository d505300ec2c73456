"""
Custom exceptions for Finrag.
"""

from typing import Optional

class FinragError(Exception):
    """
    Base exception for all Finrag errors.
    """

    CODE = "FRG001"
    EXIT_CODE = 1
    default_message = "An unexpected error occurred in Finrag."

    def __init__(
        self,
        message: Optional[str] = None,
    ):
        """
        Initialize the FinragError instance.

        Args:
            message (str, optional): The error message. Defaults to None.
        """

        self.message = message

        if self.message:
            formatted_message = f"[{self.CODE}] {self.message}"
        else:
            default_msg = getattr(
                self,
                "default_message",
                "An unexpected error occurred.",
            )
            formatted_message = f"[{self.CODE}] {default_msg}"

        super().__init__(formatted_message)

class UsageError(FinragError):
    """
    Raised when a command is invoked with invalid arguments.
    """

    CODE = "FRG100"
    EXIT_CODE = 1
    default_message = "Invalid command usage."

class ConfigurationError(FinragError):
    """
    Raised when a configuration value or file is invalid.
    """

    CODE = "FRG200"
    EXIT_CODE = 2
    default_message = "Invalid configuration."

class ValidationError(FinragError):
    """
    Raised when input validation fails.
    """

    CODE = "FRG201"
    EXIT_CODE = 2
    default_message = "Input validation failed."

class CorpusIOError(FinragError):
    """
    Raised when an input file or a persisted artifact cannot be read or written.
    """

    CODE = "FRG300"
    EXIT_CODE = 3
    default_message = "File operation failed."

class RecordFormatError(CorpusIOError):
    """
    Raised when a line-delimited record is malformed.
    """

    CODE = "FRG301"
    default_message = "Malformed record."

    def __init__(
        self,
        message: Optional[str] = None,
        line_number: Optional[int] = None
    ):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message or self.default_message}"
        super().__init__(message)

class IndexFormatError(CorpusIOError):
    """
    Raised when a persisted index has an unknown layout or version.
    """

    CODE = "FRG303"
    default_message = "Unrecognized index file."

class TransportError(FinragError):
    """
    Raised when a remote model endpoint keeps failing after the retry budget.
    """

    CODE = "FRG400"
    EXIT_CODE = 4
    default_message = "Remote request failed."

class IntegrityError(FinragError):
    """
    Raised when a component returns data that violates its contract.
    """

    CODE = "FRG500"
    EXIT_CODE = 5
    default_message = "Integrity check failed."

class DuplicateIdError(IntegrityError):
    """
    Raised when an identifier that must be unique is seen twice.
    """

    CODE = "FRG302"
    default_message = "Duplicate identifier."

class DimensionMismatchError(IntegrityError):
    """
    Raised when a vector does not have the expected dimension.
    """

    CODE = "FRG501"
    default_message = "Vector dimension mismatch."

class InsufficientDataError(FinragError):
    """
    Raised when an evaluation step does not receive enough records.
    """

    CODE = "FRG600"
    EXIT_CODE = 2
    default_message = "Not enough data for this operation."

class StageError(FinragError):
    """
    Raised by the query pipeline to attribute a failure to one stage.
    """

    CODE = "FRG700"
    default_message = "Pipeline stage failed."

    def __init__(
        self,
        stage: str,
        cause: Exception
    ):
        self.stage = stage
        self.cause = cause
        self.EXIT_CODE = getattr(cause, "EXIT_CODE", 1)
        super().__init__(f"stage '{stage}' failed: {cause}")
