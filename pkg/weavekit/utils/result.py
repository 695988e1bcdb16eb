"""Result tracking for verification checks."""

from enum import Enum
from dataclasses import dataclass
from typing import Optional


class ResultType(Enum):
    """Outcome of a single check."""
    PASS = "PASS"
    FAIL = "FAIL"
    SKIP = "SKIP"
    ERROR = "ERROR"


class ErrorCategory(Enum):
    """Standard error categories for consistent error handling."""
    INPUT_ERROR = "input_error"  # Bad type names, malformed matrices, invalid graphs
    VERIFICATION_FAILURE = "verification_failure"  # A computed value disagrees with the expected one
    UNSUPPORTED = "unsupported"  # Local pattern outside the implemented rules
    CAP_EXCEEDED = "cap_exceeded"  # Enumeration or search bound reached
    DEGENERATE = "degenerate"  # Non-generic values after all retries
    INTERNAL_ERROR = "internal_error"  # Broken invariant, signals a bug


EXIT_CODES = {
    None: 0,
    ErrorCategory.INPUT_ERROR: 1,
    ErrorCategory.DEGENERATE: 1,
    ErrorCategory.INTERNAL_ERROR: 1,
    ErrorCategory.VERIFICATION_FAILURE: 2,
    ErrorCategory.UNSUPPORTED: 3,
    ErrorCategory.CAP_EXCEEDED: 4,
}


@dataclass
class CheckResult:
    """Result of a single verification check."""
    result_type: ResultType
    suite: str
    name: str
    expected: Optional[str] = None
    actual: Optional[str] = None
    reason: Optional[str] = None
    error: Optional[str] = None
    error_category: Optional[ErrorCategory] = None
    fix_hint: Optional[str] = None

    @property
    def exit_code(self) -> int:
        """Exit code this result alone would produce."""
        if self.result_type == ResultType.FAIL:
            return EXIT_CODES[ErrorCategory.VERIFICATION_FAILURE]
        if self.result_type == ResultType.ERROR:
            return EXIT_CODES[self.error_category or ErrorCategory.INTERNAL_ERROR]
        return 0

    def format_line(self) -> str:
        """Format result as a single line for output."""
        label = f"{self.suite}/{self.name}"
        if self.result_type == ResultType.PASS:
            return f"PASS | {label} | {self.actual or 'ok'}"
        elif self.result_type == ResultType.SKIP:
            return f"SKIP | {label} | {self.reason or 'skipped'}"
        elif self.result_type == ResultType.FAIL:
            return f"FAIL | {label} | expected {self.expected}, got {self.actual}"
        else:  # ERROR
            error_msg = f"ERROR | {label} | {self.error or 'unknown error'}"
            if self.fix_hint:
                error_msg += f"\n  Fix: {self.fix_hint}"
            return error_msg
