"""Exception hierarchy shared by the library and the CLI."""


class NonsplitError(Exception):
    """Base class for all library errors."""


class ConsistencyError(NonsplitError):
    """An internal cross-check failed; the CLI maps these to exit code 2."""


class SingularSystemError(NonsplitError):
    def __init__(self, d):
        super().__init__(f"constraint system for degree {d} is singular")
        self.d = d


class UnboundedLPError(ConsistencyError):
    pass


class SolverMismatchError(ConsistencyError):
    pass


class PeakAtBoundaryError(ConsistencyError):
    pass


class DegeneratePolynomialError(NonsplitError):
    pass


class PolynomialParseError(NonsplitError):
    pass


class PrimeNotFoundError(NonsplitError):
    def __init__(self, cap):
        super().__init__(f"no qualifying prime <= {cap}")
        self.cap = cap
