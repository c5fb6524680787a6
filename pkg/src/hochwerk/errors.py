"""Exception hierarchy shared by every hochwerk module."""


class HochwerkError(Exception):
    """Base class for all library errors."""


# group construction

class GroupTableError(HochwerkError):
    pass


class NotAssociative(GroupTableError):
    pass


class NotLatinSquare(GroupTableError):
    pass


class NoIdentity(GroupTableError):
    pass


class NoInverse(GroupTableError):
    pass


class TooLarge(HochwerkError):
    pass


# coefficients

class RingMismatch(HochwerkError):
    pass


class DivisionByZero(HochwerkError, ZeroDivisionError):
    pass


class NotAField(HochwerkError):
    pass


class UnknownRing(HochwerkError, ValueError):
    pass


# cochains and operations

class Mismatch(HochwerkError):
    """Operands live over different groups, rings, kinds or degrees."""


class DegreeMismatch(Mismatch):
    pass


class IndexOutOfRange(HochwerkError, IndexError):
    pass


class EmptyKeep(HochwerkError, ValueError):
    pass


class BasisTooLarge(HochwerkError):
    def __init__(self, size, cap):
        super().__init__(f"basis of size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class BadIndex(HochwerkError, ValueError):
    pass


class BadDegree(HochwerkError, ValueError):
    pass


class NegativeDegree(HochwerkError, ValueError):
    pass


class NotGF2(HochwerkError):
    pass


class NotACocycle(HochwerkError):
    pass


class NotACoboundary(HochwerkError):
    pass


class UnknownOp(HochwerkError):
    pass
