"""Exception types shared across the library."""


class SemiringMismatchError(ValueError):
    """Operands or containers belong to different semirings/parameters."""


class StructureError(ValueError):
    """A matrix or automaton violates a structural precondition."""


class CyclicAutomatonError(ValueError):
    """The automaton contains a cycle (self-loops included)."""

    def __init__(self, state, message=None):
        self.state = state
        super().__init__(message or f"automaton is cyclic: state {state} lies on a cycle")


class FormatError(ValueError):
    """A text record could not be parsed."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class PathExplosionError(RuntimeError):
    """Path enumeration exceeded the configured budget."""


class TieWarning(UserWarning):
    """Finite differences requested at (or too near) a min/max tie point."""
