from __future__ import annotations
from logging import getLogger


class UsageError(ValueError):
    """
    Raised when the user used drgdist incorrectly (ex. CLI args)
    """

    def __init__(self, msg: str):
        # Likely printed anyway, so log it as info
        getLogger("UsageError").info("%s", msg)
        super().__init__(msg)


class ParseError(UsageError):
    """
    Raised when an intersection array string does not match the braces grammar
    """

    def __init__(self, msg: str, text: str, position: int):
        self.text = text
        self.position = position
        self.reason = msg
        super().__init__(f"{msg} at position {position}\n  {text}\n  {' ' * position}^")


class InvalidArray(ValueError):
    """
    Raised when a parsed intersection array violates an invariant (ex. c_1 != 1 or a_i < 0)
    """


class DegenerateSpectrum(RuntimeError):
    """
    Raised when the eigenvalues of an intersection array collide
    or its cosine sequences are not those of a distance-regular graph
    """


class EigenvalueMismatch(ValueError):
    """
    Raised when a value is not within tolerance of any eigenvalue of the array
    """


class NotAntipodal(ValueError):
    """
    Raised when an antipodal-only operation is given a non-antipodal array
    """


class NotDistanceRegular(ValueError):
    """
    Raised when an explicit graph is not distance-regular
    """

    def __init__(self, msg: str, pair: tuple[int, int] | None = None):
        self.pair = pair
        super().__init__(msg if pair is None else f"{msg}; violating pair: {pair}")


class GraphTooLarge(UsageError):
    """
    Raised when an explicit graph would exceed the vertex cap
    """


class UnknownFamily(UsageError):
    """
    Raised when a family or graph kind id is not registered
    """


class FamilyParameterError(UsageError):
    """
    Raised when family parameters are outside the family's validity range
    """


class CertificateError(RuntimeError):
    """
    Raised when a Q_alpha certificate cannot be built or is not positive semidefinite
    """


class ReportThis(RuntimeError):
    """
    A RuntimeError that should be reported
    """

    def __init__(self, msg: str):
        super().__init__(f"{msg}\nPlease report this.")
