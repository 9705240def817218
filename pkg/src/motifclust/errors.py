"""Exception hierarchy. CLI exit codes key off these classes."""


class MotifClustError(Exception):
    pass


class GraphError(MotifClustError, ValueError):
    """Malformed graph, mark, partition or assignment."""


class ParseError(MotifClustError, ValueError):
    """Bad input text; carries the offending position and what was expected."""

    def __init__(self, message: str, position: int = 0, expected: tuple = ()):
        self.position = position
        self.expected = tuple(expected)
        detail = f" at position {position}"
        if self.expected:
            detail += f" (expected {' or '.join(self.expected)})"
        super().__init__(message + detail)


class PreconditionError(MotifClustError, ValueError):
    """An operation was called outside its domain.

    ``definition`` names the mathematical definition whose hypothesis failed.
    """

    def __init__(self, message: str, definition: str = ""):
        self.definition = definition
        super().__init__(f"{message} [{definition}]" if definition else message)


class BlowupError(PreconditionError):
    """A combinatorial construction would exceed its configured cap."""

    def __init__(self, what: str, bound: int, cap: int):
        self.bound = bound
        self.cap = cap
        super().__init__(f"{what}: size bound {bound} exceeds cap {cap}", "blowup cap (MOTIFCLUST_CAP)")
