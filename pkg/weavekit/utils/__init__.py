"""Utility modules."""

from .file_utils import OutputManager, atomic_write
from .result import CheckResult, ErrorCategory, ResultType

__all__ = ["OutputManager", "atomic_write", "CheckResult", "ErrorCategory", "ResultType"]
