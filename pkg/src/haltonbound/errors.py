"""Exception hierarchy shared by all haltonbound modules."""


class HaltonBoundError(Exception):
    """Base class for every error raised by this package."""


class InvalidModulus(HaltonBoundError, ValueError):
    """Modulus smaller than 2 where a proper modulus is required."""


class NotInvertible(HaltonBoundError, ValueError):
    """Element has no inverse modulo the given modulus."""


class NotCoprime(HaltonBoundError, ValueError):
    """gcd(a, m) != 1 where coprimality is required."""


class NotCoprimeModuli(HaltonBoundError, ValueError):
    """Two moduli (or bases) share a common factor."""


class InvalidBase(HaltonBoundError, ValueError):
    """Digit base smaller than 2."""


class DimensionMismatch(HaltonBoundError, ValueError):
    """Point, box, or point-set dimensions disagree."""


class EmptyPointSet(HaltonBoundError, ValueError):
    """An operation that needs at least one point got an empty set."""


class ResidueOutOfRange(HaltonBoundError, ValueError):
    """A residue is not reduced with respect to its modulus."""


class RangeError(HaltonBoundError, ValueError):
    """A partial-period length lies outside [0, period]."""


class BetaDegenerate(HaltonBoundError):
    """Computed base-reciprocal sum sits exactly on the half-integer line.

    Impossible for pairwise-coprime bases with s >= 2; reaching this
    means invalid input slipped past validation.
    """


class IdentityViolation(HaltonBoundError):
    """Two independent computations of the same quantity disagree.

    Signals an implementation bug, never bad input.
    """


class VerificationFailed(HaltonBoundError):
    """An inequality that the construction guarantees did not hold."""

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        super().__init__(f"{check}: {detail}" if detail else check)


class BudgetExceeded(HaltonBoundError):
    """Requested computation exceeds the configured operation budget."""

    def __init__(self, estimated_cost: int, budget: int, what: str = "operation"):
        self.estimated_cost = estimated_cost
        self.budget = budget
        self.what = what
        super().__init__(
            f"{what} needs an estimated {estimated_cost} elementary operations, "
            f"budget is {budget}"
        )
