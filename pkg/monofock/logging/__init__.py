from monofock.logging.logging_config import logger, setup_logging
from monofock.logging.exceptions import (
    AppException,
    TruncationError,
    CapExceededError,
    InvalidInputError,
    PoleError,
    VanishingTransformError,
    NumericalResolutionError,
    PrecisionExhaustedError,
    StructuralViolationError,
    NonSymmetricMatrixError,
    check_cap,
)

__all__ = [
    "logger",
    "setup_logging",
    "AppException",
    "TruncationError",
    "CapExceededError",
    "InvalidInputError",
    "PoleError",
    "VanishingTransformError",
    "NumericalResolutionError",
    "PrecisionExhaustedError",
    "StructuralViolationError",
    "NonSymmetricMatrixError",
    "check_cap",
]
