"""Exception hierarchy shared by all modules."""


class ThreshspecError(Exception):
    """Base class for every error raised by this package."""


class SequenceError(ThreshspecError, ValueError):
    pass


class EmptyInput(SequenceError):
    pass


class IllegalCharacter(SequenceError):
    def __init__(self, position, char):
        self.position = position
        self.char = char
        super().__init__(f"illegal character {char!r} at position {position}")


class FirstBitNotZero(SequenceError):
    pass


class NotConnected(SequenceError):
    pass


class OrderTooSmall(SequenceError):
    pass


class CapExceeded(SequenceError):
    pass


class PoleAtInput(ThreshspecError, ZeroDivisionError):
    pass


class SingularityEncountered(ThreshspecError, ArithmeticError):
    def __init__(self, step, case):
        self.step = step
        self.case = case
        super().__init__(f"singular subcase {case} fired at m={step}")


class ToleranceTooSmall(ThreshspecError, ArithmeticError):
    pass


class OrderTooLarge(ThreshspecError, ValueError):
    pass


class DidNotConverge(ThreshspecError, ArithmeticError):
    def __init__(self, sweeps):
        self.sweeps = sweeps
        super().__init__(f"Jacobi iteration did not converge after {sweeps} sweeps")


class AmbiguousProbe(ThreshspecError, ValueError):
    pass


class InertiaMismatch(ThreshspecError, AssertionError):
    pass
