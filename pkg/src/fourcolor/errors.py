"""Exception types shared across the package."""


class FourColorError(Exception):
    """Base class for all package-specific errors."""


class InconsistentRotation(FourColorError):
    """Rotation input references an edge-end zero or more than two times."""


class EulerViolation(FourColorError):
    """Face tracing does not satisfy V - E + F = 2 (not a sphere embedding)."""


class NotCubic(FourColorError):
    """A vertex has degree different from 3."""


class HasBridge(FourColorError):
    """An edge has the same face on both sides."""


class Disconnected(FourColorError):
    """The embedding is not connected."""


class ImproperInput(FourColorError):
    """A coloring argument violates adjacency-properness."""


class Stuck(FourColorError):
    """Greedy dichromatic coloring cannot remove the remaining spots."""


class BlockingFailed(FourColorError):
    """No admissible Kempe-switch sequence blocked the odd ring in budget."""


class NotBipartite(FourColorError):
    """An odd cycle of uncolored faces survived into the final 2-coloring."""


class HeuristicFailed(FourColorError):
    """Strict-mode pipeline failure (no oracle fallback allowed)."""


class NoSurroundingRing(FourColorError):
    """The given colored sub-map has no surrounding ring of white faces."""


class MalformedInstance(FourColorError):
    """An impasse/instance check received structurally invalid input."""


class OddCycleRing(FourColorError):
    """Triangulated-ring cycles must have even length to be 2-colored."""


class NotBeta(FourColorError):
    """The triangulated ring is not a beta-triangulation."""


class SearchExhausted(FourColorError):
    """Bounded impasse-resolution search hit its switch budget."""


class ImproperColoring(FourColorError):
    """A claimed proper coloring fails verification."""


class BudgetExhausted(FourColorError):
    """A time-boxed search ran out of budget before reaching a verdict."""


class TooLarge(FourColorError):
    """Instance exceeds the configured exact-search bound."""


class ParseError(FourColorError):
    """Map/graph file syntax error, carrying line information."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(FourColorError):
    """A corpus instance failed one of its declared property checks."""


class LayoutFailure(FourColorError):
    """No usable straight-line layout could be computed."""
