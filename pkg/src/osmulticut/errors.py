"""Exception hierarchy.

Every error raised by the package derives from :class:`OSMulticutError`.
The three direct subclasses map onto CLI exit codes: validation problems
(1), oracle budget overruns (2) and broken internal invariants (3).
"""


class OSMulticutError(Exception):
    """Base class for all package errors."""


class ValidationError(OSMulticutError):
    """Input does not describe a usable instance."""


class BudgetExceeded(OSMulticutError):
    """An exact oracle was asked to solve something beyond its budget."""


class InvariantViolation(OSMulticutError):
    """A property the construction guarantees turned out false."""


# planar_core

class MalformedRotation(ValidationError):
    pass


class SelfLoop(ValidationError):
    pass


class ParallelEdge(ValidationError):
    pass


class Disconnected(ValidationError):
    pass


class EulerViolation(ValidationError):
    """Face count contradicts Euler's formula: the rotation is not planar."""


class InvalidMarker(ValidationError):
    pass


# os_instance

class NotBiconnected(ValidationError):
    pass


class TerminalNotOnBoundary(ValidationError):
    def __init__(self, index: int, vertex: int):
        super().__init__(f"pair {index}: terminal {vertex} is not on the outer boundary")
        self.index = index
        self.vertex = vertex


class DegeneratePair(ValidationError):
    def __init__(self, index: int):
        super().__init__(f"pair {index}: s and t coincide")
        self.index = index


class DuplicatePair(ValidationError):
    def __init__(self, index: int, first: int):
        super().__init__(f"pair {index} repeats pair {first}")
        self.index = index
        self.first = first


# dual_builder

class BridgeDetected(ValidationError):
    pass


# steiner_forest / multicut

class UnsatisfiableDemand(ValidationError):
    pass


class NotAMulticut(ValidationError):
    pass


class ExtractionNotSeparating(InvariantViolation):
    def __init__(self, pairs: list[int]):
        super().__init__(
            "primal image of the Steiner forest leaves pair(s) "
            + ", ".join(str(i) for i in pairs) + " connected")
        self.pairs = pairs


# cli

class ParseError(ValidationError):
    def __init__(self, where: str, message: str):
        super().__init__(f"{where}: {message}")
        self.where = where


class BadParams(ValidationError):
    pass


class MissingArtifact(OSMulticutError):
    pass
