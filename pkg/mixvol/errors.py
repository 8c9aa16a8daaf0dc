class MixvolError(Exception):
    """Base class for every error raised by the library"""


class ParameterError(MixvolError, ValueError):
    """A precondition on the arguments does not hold"""


class DimensionMismatchError(ParameterError):
    """Arguments live in different ambient dimensions"""


class CapacityError(MixvolError):
    """An enumeration bound or an unsupported body combination was hit"""


class UndefinedValueError(MixvolError, ArithmeticError):
    """The requested quantity does not exist for this input"""
