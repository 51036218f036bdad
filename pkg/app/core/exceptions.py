class BlaschkeError(Exception):
    exit_code = 2


class InvalidInputError(BlaschkeError, ValueError):
    exit_code = 1


class DomainError(InvalidInputError):
    pass


class PreconditionError(InvalidInputError):
    pass


class NotAFactorizationError(InvalidInputError):
    pass


class NumericalError(BlaschkeError):
    exit_code = 2


class RootFindingError(NumericalError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class IllConditionedError(NumericalError):
    pass


class FiberError(NumericalError):
    pass


class CompositionError(NumericalError):
    pass


class ContinuationError(NumericalError):
    def __init__(self, message, location=None):
        if location is not None:
            message = f'{message} (at w={location:.6g})'
        super().__init__(message)
        self.location = location


class DegenerateConfigurationError(NumericalError):
    pass


class MonodromyError(NumericalError):
    pass


class SynthesisError(NumericalError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DeclinedError(BlaschkeError):
    exit_code = 3
