"""
Exception hierarchy for the permutation polynomial toolkit.
All library failures derive from PermSysError so the CLI can report them uniformly.
"""

from typing import Optional


class PermSysError(Exception):
    """Base class for every error raised by permsys."""


# Field construction and arithmetic

class FieldError(PermSysError):
    """Problems building or using a finite field."""


class NotPrime(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class InvalidModulus(FieldError):
    """Modulus vector has the wrong length, is not monic or has out-of-range entries."""


class FieldTooLarge(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class CubingNotBijective(FieldError):
    pass


class FieldMismatch(FieldError):
    """Elements or polynomials from two different fields were combined."""


class CharacteristicError(FieldError):
    """Operation is not defined for the field's characteristic."""


class EvenCharacteristic(CharacteristicError):
    pass


class OddCharacteristic(CharacteristicError):
    pass


class CharThree(CharacteristicError):
    pass


class EvenDegreeEvenChar(CharacteristicError):
    pass


class WrongCharacteristic(CharacteristicError):
    pass


class WrongResidueClass(FieldError):
    pass


# Polynomials

class PolyError(PermSysError):
    pass


class ArityMismatch(PolyError):
    pass


class PolyParseError(PolyError):
    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class BudgetExceeded(PermSysError):
    def __init__(self, what: str, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what} needs {needed} evaluations, budget is {budget}")


# Equivalence transforms

class EquivError(PermSysError):
    pass


class SingularMatrix(EquivError):
    pass


class IllegalShiftDependency(EquivError):
    pass


class WitnessFormatError(EquivError):
    pass


# Classifiers

class ClassifierError(PermSysError):
    pass


class NotNormalized(ClassifierError):
    pass


class ClassificationGap(ClassifierError):
    """No case matched although the oracle reports a permutation."""


class ClassifierDisagreement(ClassifierError):
    """A closed-form predicate and the oracle returned different answers."""


class ZeroDenominator(ClassifierError):
    pass


class ZeroForm(ClassifierError):
    pass


class PreconditionViolated(ClassifierError):
    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        text = f"precondition '{hypothesis}' violated"
        if detail:
            text = f"{text}: {detail}"
        super().__init__(text)
