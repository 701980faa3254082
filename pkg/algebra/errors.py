"""Типизированные ошибки qflop."""


class QflopError(Exception):
    """Базовая ошибка всех вычислений"""

    exit_code = 1


class PolynomialParseError(QflopError):
    def __init__(self, text: str, position: int, message: str):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class VariableMismatchError(QflopError):
    pass


class ExponentOverflowError(QflopError):
    pass


class SpecValidationError(QflopError):
    pass


class InhomogeneousRelationError(QflopError):
    def __init__(self, relation: str, degrees: list):
        self.relation = relation
        self.degrees = degrees
        super().__init__(f"relation {relation} is not homogeneous, term degrees: {degrees}")


class BudgetExceededError(QflopError):
    exit_code = 2

    def __init__(self, what: str, used: int, limit: int):
        self.what = what
        self.used = used
        self.limit = limit
        super().__init__(f"budget exceeded: {what} {used} > {limit}")


class HilbertBasisCapError(QflopError):
    pass


class RegularityError(QflopError):
    pass


class ConsistencyError(QflopError):
    exit_code = 3
