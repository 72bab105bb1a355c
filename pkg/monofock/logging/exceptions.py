class AppException(Exception):
    status_code: int = 500
    exit_code: int = 1

    def __init__(self, message: str, details: dict = None):
        self.message = message
        self.details = details or {}
        super().__init__(message)


class TruncationError(AppException):
    status_code = 400
    exit_code = 2


class CapExceededError(AppException):
    status_code = 400
    exit_code = 2


class InvalidInputError(AppException):
    status_code = 400
    exit_code = 2


class PoleError(AppException):
    status_code = 400


class VanishingTransformError(AppException):
    status_code = 400


class NumericalResolutionError(AppException):
    status_code = 500


class PrecisionExhaustedError(AppException):
    status_code = 500


class StructuralViolationError(AppException):
    status_code = 500


class NonSymmetricMatrixError(AppException):
    status_code = 400


def check_cap(name: str, value: int, cap: int) -> None:
    """Raise CapExceededError when value exceeds its configured cap."""
    if value > cap:
        raise CapExceededError(
            f"{name}={value} exceeds the configured cap {cap}",
            details={"name": name, "value": value, "cap": cap},
        )
