from monofock.core.config import settings, get_settings

__all__ = ["settings", "get_settings", "logger", "AppException"]


def __getattr__(name):
    # Resolved lazily: monofock.logging imports monofock.core.config, so an
    # eager import here would be circular.
    if name == "logger":
        from monofock.logging.logging_config import logger
        return logger
    if name == "AppException":
        from monofock.logging.exceptions import AppException
        return AppException
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
