"""
Exception hierarchy shared by every engine module.

All errors derive from CubicBridgeError, which the CLI maps to exit code 2.
"""


class CubicBridgeError(ValueError):
    """Base class for all engine errors"""


# exact fields

class DivisionByZero(CubicBridgeError, ZeroDivisionError):
    pass


class FieldMismatch(CubicBridgeError):
    pass


class InvalidField(CubicBridgeError):
    pass


class NoSquareRoot(CubicBridgeError):
    pass


class ExtensionDepthExceeded(NoSquareRoot):
    """A square root would need a second quadratic layer"""


# projective geometry

class ZeroVector(CubicBridgeError):
    """All homogeneous coordinates vanish"""


class NotUnique(CubicBridgeError):
    pass


class NotIrreducible(CubicBridgeError):
    """The unique conic through the points is degenerate; it is kept on the error"""

    def __init__(self, message: str, conic=None):
        super().__init__(message)
        self.conic = conic


class DegenerateConic(CubicBridgeError):
    pass


class PointOnConic(CubicBridgeError):
    pass


class PointNotOnConic(CubicBridgeError):
    pass


class CenterEqualsPoint(CubicBridgeError):
    pass


class DegenerateTriple(CubicBridgeError):
    pass


class DegenerateFrame(CubicBridgeError):
    pass


# cremona

class IndeterminatePoint(CubicBridgeError):
    pass


class ZeroForm(CubicBridgeError):
    pass


class CollinearBase(CubicBridgeError):
    pass


class DegenerateFourthPoint(CubicBridgeError):
    pass


class NotGeneric(CubicBridgeError):
    pass


class WordApplicationError(CubicBridgeError):
    """A token of a Cremona word failed; token_index counts from the right"""

    def __init__(self, message: str, token_index: int, cause: Exception = None):
        super().__init__(f"token {token_index}: {message}")
        self.token_index = token_index
        self.cause = cause


class InvalidConfiguration(CubicBridgeError):
    """A plane configuration is not six pairwise distinct points"""


# moduli on the line

class TooFewDistinctPoints(CubicBridgeError):
    pass


# bridge

class NotInDomain(CubicBridgeError):
    pass


class NotOnConic(CubicBridgeError):
    pass


class NoFrame(CubicBridgeError):
    pass


class UnliftableOverField(CubicBridgeError):
    pass


class NotInStratum(CubicBridgeError):
    pass


class WrongStratum(CubicBridgeError):
    pass


class WrongDegeneracy(CubicBridgeError):
    pass


# files, sampling, suites

class ParseError(CubicBridgeError):
    """Malformed input; path names the offending field, line the JSON line"""

    def __init__(self, message: str, path: str = None, line: int = None):
        where = []
        if path:
            where.append(f"at {path}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.path = path
        self.line = line


class ExhaustedRetries(CubicBridgeError):
    pass


class UnknownSuite(CubicBridgeError):
    pass
