"""Exception hierarchy shared by all kernels."""


class CongruenceError(Exception):
    """Base class; ``kind`` is the name surfaced in reports."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class ModulusTooLarge(CongruenceError, ValueError):
    pass


class NotInvertible(CongruenceError, ValueError):
    def __init__(self, x: int, modulus: int, gcd: int):
        super().__init__(f"{x} is not invertible mod {modulus} (gcd = {gcd})")
        self.x = x
        self.modulus = modulus
        self.gcd = gcd


class EvenModulus(CongruenceError, ValueError):
    pass


class ZeroInput(CongruenceError, ValueError):
    pass


class NotPrime(CongruenceError, ValueError):
    pass


class PrimeMismatch(CongruenceError, ValueError):
    pass


class PrecisionExhausted(CongruenceError, ArithmeticError):
    pass


class InsufficientPrecision(CongruenceError, ArithmeticError):
    pass


class NegativeValuation(CongruenceError, ArithmeticError):
    pass


class DivisionByZero(CongruenceError, ZeroDivisionError):
    pass


class IndexOutOfDomain(CongruenceError, ValueError):
    pass


class NotDivisible(CongruenceError, ArithmeticError):
    pass


class BadParameter(CongruenceError, ValueError):
    pass


class NonIntegralSum(CongruenceError, ArithmeticError):
    pass


class DenominatorDivisible(CongruenceError, ValueError):
    pass


class BaseDivisible(CongruenceError, ValueError):
    pass


class UnknownId(CongruenceError, KeyError):
    pass


class DomainViolation(CongruenceError, ValueError):
    pass
