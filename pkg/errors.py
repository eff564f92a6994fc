"""
Exceptions raised by the elliptic-curve factoring engine
"""


class FactoringError(Exception):
    """Base class for all engine errors."""
    pass


class NotPrimeError(FactoringError):
    """The modulus failed the primality check."""
    pass


class NoRepresentative(FactoringError):
    """No integer in the requested window satisfies the congruences."""
    pass


class DivisionByZeroPoly(FactoringError, ZeroDivisionError):
    """Polynomial division by the zero polynomial."""
    pass


class PolynomialParseError(FactoringError, ValueError):
    """Malformed canonical coefficient text."""
    pass


class MixedRings(FactoringError):
    """Arithmetic between elements of different quotient rings."""
    pass


class NotADivisor(FactoringError):
    """Rebase target does not divide the ring modulus."""
    pass


class InvalidWitness(FactoringError):
    """A claimed factor is not a proper divisor of f."""
    pass


class SmallCharacteristic(FactoringError):
    """Short Weierstrass arithmetic needs p > 3."""
    pass


class DegenerateCurve(FactoringError):
    """The discriminant vanishes."""
    pass


class TooLarge(FactoringError):
    """Input exceeds the brute-force guard."""
    pass


class NoResidueFound(FactoringError):
    """No candidate trace residue satisfied the Frobenius identity."""
    pass


class NotFrobeniusFixed(FactoringError):
    """Element is not fixed by the p-th power map."""
    pass


class IncompleteRoots(FactoringError):
    """Supplied roots do not account for the whole polynomial."""
    pass


class AttemptBudgetExhausted(FactoringError):
    """Every scheduled curve/shift attempt ran without finding a factor."""

    def __init__(self, message, trace_log=None):
        super().__init__(message)
        self.trace_log = list(trace_log or [])


class SplitFound(Exception):
    """Early exit: a query produced a nontrivial factor of f."""

    def __init__(self, witness):
        super().__init__(f"split: {witness}")
        self.witness = witness


class ModulusRefined(Exception):
    """Early exit: a torsion denominator was a zerodivisor modulo the algebra modulus."""

    def __init__(self, modulus):
        super().__init__("torsion modulus refined")
        self.modulus = modulus
