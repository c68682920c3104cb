"""Exception hierarchy shared by every module."""


class WeightbenchError(Exception):
    """Base class for all library errors."""


class CapExceeded(WeightbenchError):
    """A configured size cap (elements, chains) was passed."""


class InvalidPrime(WeightbenchError, ValueError):
    pass


class NotASubgroup(WeightbenchError, ValueError):
    pass


class NotNormal(WeightbenchError, ValueError):
    pass


class NotAnAutomorphism(WeightbenchError, ValueError):
    pass


class InnernessUndecidable(CapExceeded):
    pass


class PlaceSelectionFailure(WeightbenchError):
    """No residue field embedding for the p'-part of the conductor was found."""


class PairingFailure(WeightbenchError):
    """A cancellation partner chain was not found among the enumerated classes."""


class PreconditionViolated(WeightbenchError, ValueError):
    pass


class ParseError(WeightbenchError, ValueError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
