"""Exception hierarchy shared by all weavekit modules.

Every error carries an :class:`ErrorCategory` and a fix hint so that the
core orchestrator can turn it into a :class:`CheckResult` and the CLI can
pick an exit code without inspecting messages.
"""

from typing import Optional

from .result import EXIT_CODES, ErrorCategory


class WeaveError(Exception):
    """Base class for all weavekit errors."""

    category = ErrorCategory.INTERNAL_ERROR
    fix_hint = "This looks like a bug; please report the input that triggered it"

    def __init__(self, message: str, fix_hint: Optional[str] = None) -> None:
        super().__init__(message)
        if fix_hint is not None:
            self.fix_hint = fix_hint

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.category]


class InputError(WeaveError):
    category = ErrorCategory.INPUT_ERROR
    fix_hint = "Check the arguments against the documented preconditions"


class UnsupportedError(WeaveError):
    category = ErrorCategory.UNSUPPORTED
    fix_hint = "The local configuration is outside the implemented rules"


class DegenerateError(WeaveError):
    category = ErrorCategory.DEGENERATE
    fix_hint = "Retry with a different --seed"


class ConfigurationError(InputError):
    """Invalid run configuration."""


class InvalidDynkinType(InputError):
    """Family/rank combination outside the finite classification."""


class NotCartanMatrix(InputError):
    """Diagonal entry different from 2, positive off-diagonal entry, or not symmetrizable."""


class RootClosureDiverged(WeaveError):
    """Reflecting the simple roots kept producing new positive roots."""
    fix_hint = "Positive roots are finite for Cartan matrices of finite type; report the type that looped"


class NotSkewSymmetrizable(InputError):
    """Principal part admits no positive skew-symmetrizer."""


class FrozenDirection(InputError):
    """Mutation requested at a frozen or out-of-range index."""


class NonLaurentDivision(WeaveError):
    """Exchange polynomial not divisible by the outgoing variable."""


class DegenerateValue(DegenerateError):
    """Numeric mutation hit 1 + y_k = 0."""


class NotBipartite(InputError):
    """Quiver admits no source/sink bipartition."""


class CapExceeded(WeaveError):
    category = ErrorCategory.CAP_EXCEEDED
    fix_hint = "Raise --cap, or expect this for infinite type"


class OddCoxeterNumber(InputError):
    """Facet orbit table requested for a type with odd Coxeter number."""


class NotAdmissible(InputError):
    """Quiver is not admissible for the given vertex action."""


class NonCommuting(WeaveError):
    """Mutations inside one orbit gave different results in different orders."""


class InvalidNGraph(InputError):
    """Half-edge map violates an N-graph invariant."""


class BoundaryMismatch(InputError):
    """Boundary words do not agree under the requested alignment."""


class BoundaryNotRotationInvariant(InputError):
    """Boundary word changes under the requested rotation."""


class NotRaySymmetric(InputError):
    """Graph cannot be cut along the three rays."""


class SiteMismatch(InputError):
    """Move site does not match the move's local pattern."""


class UnsupportedConfiguration(UnsupportedError):
    """Cycle pattern outside the implemented local rules."""


class InteriorFace(UnsupportedError):
    """A face flag is not determined by the boundary data."""

    fix_hint = "Only free N-graphs with boundary-determined flags are supported"


class ConstraintViolated(WeaveError):
    """Flag assignment violates an edge condition."""

    category = ErrorCategory.VERIFICATION_FAILURE
    fix_hint = "Check that the boundary flags belong to this N-graph"

    def __init__(self, message: str, edge: Optional[int] = None, fix_hint: Optional[str] = None) -> None:
        super().__init__(message, fix_hint)
        self.edge = edge


class InconsistentClosure(InputError):
    """Braid word does not admit boundary flags of the supported shape."""


class DegenerateDraw(DegenerateError):
    """Random draws kept producing coincident subspaces."""


class ZeroWedge(DegenerateError):
    """Cross ratio requested for lines with a vanishing consecutive wedge."""


class ZeroPairing(DegenerateError):
    """Triple ratio requested with a vanishing line/plane pairing."""
