class TidyKoszulError(Exception):
    ...


class InvalidArgumentError(TidyKoszulError):
    ...


class ParseError(InvalidArgumentError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class FieldError(TidyKoszulError):
    ...


class CharacteristicError(FieldError):
    ...


class NonHomogeneousError(TidyKoszulError):
    ...


class DependentGeneratorsError(TidyKoszulError):
    ...


class CapExceededError(TidyKoszulError):
    ...


class ZeroPolynomialError(TidyKoszulError):
    ...


class ComputationError(TidyKoszulError):
    ...
