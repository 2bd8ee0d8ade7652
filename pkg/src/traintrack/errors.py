"""Exception types shared across the package.

The split matters for the command line tool, which maps these onto distinct
exit codes: bad input data, iteration caps, numerical non-convergence, and
internal invariant violations are different failure modes.
"""


class GraphStructureError(ValueError):
    """Edge/boundary data does not describe a once-punctured surface spine."""


class MapCompatibilityError(ValueError):
    """Vertex and edge images do not assemble into a graph self-map."""


class CurveNotRealizable(ValueError):
    """The given curve word is not a simple closed curve on this spine."""


class IterationLimitExceeded(RuntimeError):
    """An iterative routine hit its step cap before finishing."""


class PackingDidNotConverge(RuntimeError):
    """The circle packing did not reach the requested tolerance."""


class InternalInvariantError(RuntimeError):
    """A consistency check that should never fail did fail; report as a bug."""
