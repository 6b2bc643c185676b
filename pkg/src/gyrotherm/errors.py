"""Exception types raised across the package."""


class GyrothermError(Exception):
    """Base class for all package-specific errors."""


# --- geometry ---

class GapNonPositive(GyrothermError):
    pass


class RegionOverflow(GyrothermError):
    """Structures do not fit inside the cavity with positive clearance."""


class ResolutionTooCoarse(GyrothermError):
    """A layout region is thinner than one grid cell."""


# --- materials ---

class NonPositiveVolume(GyrothermError):
    pass


class NonPositiveResistance(GyrothermError):
    pass


# --- numerics ---

class ZeroDiagonal(GyrothermError):
    """Matrix has a zero diagonal entry; iterative splitting undefined."""


class BreakdownDetected(GyrothermError):
    """CG hit nonpositive curvature: the operator is not SPD."""


class NotConverged(GyrothermError):
    """Iteration cap reached. Carries the best-effort solution.

    Attributes:
        x: last iterate.
        stats: SolveStats for the attempt.
    """

    def __init__(self, message, x=None, stats=None):
        super().__init__(message)
        self.x = x
        self.stats = stats


# --- analysis ---

class UnknownProbe(GyrothermError):
    pass


class UnresolvedProofMass(GyrothermError):
    """Proof mass covered by fewer than 4 cells along a side."""


class EmptyCaseList(GyrothermError):
    pass


# --- sweep ---

class AllCasesFailed(GyrothermError):
    pass


# --- cli / config ---

class ConfigError(GyrothermError):
    """Base for configuration-file problems (exit code 3)."""


class ParseError(ConfigError):
    pass


class UnknownKey(ConfigError):
    pass


class OutOfRangeValue(ConfigError):
    pass
