"""Exception hierarchy shared by every module.

Each exception carries an ``exit_code`` used by the command-line front end:
2 for format problems, 3 for size guards, 4 for parse errors and 5 for
internal-consistency failures.
"""


class HyperdetError(Exception):
    exit_code = 5


# arithmetic / consistency
class NotDivisible(HyperdetError):
    exit_code = 5


class MissingVariable(HyperdetError):
    exit_code = 5


class BothConstant(HyperdetError):
    exit_code = 5


class NotSymmetric(HyperdetError):
    exit_code = 5


class CalibrationFailure(HyperdetError):
    exit_code = 5


class DegenerateSample(HyperdetError):
    exit_code = 5


# shape and format problems
class FormatError(HyperdetError):
    exit_code = 2


class IndexOutOfRange(FormatError):
    pass


class EmptySelection(FormatError):
    pass


class SizeMismatch(FormatError):
    pass


class NotInjective(FormatError):
    pass


class RangeViolation(FormatError):
    pass


class WrongFormat(FormatError):
    pass


class WrongShape(FormatError):
    pass


class NotSquare(FormatError):
    pass


class Singular(FormatError):
    pass


class GrassmanFormat(FormatError):
    """The format has no determinant; its boundary minors are the hyperplucker coordinates."""


class Unsupported(FormatError):
    pass


class SizeGuard(HyperdetError):
    exit_code = 3


class ParseError(HyperdetError):
    exit_code = 4
