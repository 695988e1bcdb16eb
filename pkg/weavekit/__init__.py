"""weavekit - seed patterns, N-graphs and flag monodromies of Legendrian weaves."""

from .core import RunConfig, Verifier, VerifyCallbacks, VerifySummary, run_suite

__version__ = "1.0.0"
__all__ = [
	"RunConfig",
	"Verifier",
	"VerifyCallbacks",
	"VerifySummary",
	"run_suite",
]
