from typing import Any, Optional
import traceback

from .schema import ErrorReport


class CommandError(Exception):
    """An error the CLI reports on stderr and turns into an exit code."""

    def __init__(self, code: int, message: str, data: Optional[Any] = None):
        self.code = code
        self.message = message
        self.data = data
        super().__init__(message)

    def get_report(self) -> ErrorReport:
        return ErrorReport(code=self.code, message=self.message, data=self.data)

    def _build_error_data(self, error: Exception) -> dict:
        if error.__traceback__ is not None:
            traceback_lines = traceback.format_exception(
                type(error), error, error.__traceback__
            )
            traceback_str = "".join(traceback_lines)
        else:
            traceback_str = f"{type(error).__name__}: {str(error)}"

        return {
            "error": str(error),
            "error_type": type(error).__name__,
            "python_exception_traceback": traceback_str,
        }


class EngineMismatch(CommandError):
    def __init__(self, differences: list, message: str = "Formula and oracle disagree"):
        super().__init__(1, message, {"differences": differences})
        self.differences = differences


class InvalidJob(CommandError):
    def __init__(self, message: str = "Invalid job", data: Optional[Any] = None):
        super().__init__(2, message, data)


class ResourceBudgetExceeded(CommandError):
    def __init__(self, cells: int, budget: int, data: Optional[Any] = None):
        data = dict(data or {}, cells=cells, budget=budget)
        super().__init__(3, "Resource budget exceeded", data)


class InternalError(CommandError):
    def __init__(self, error: Exception, message: str = "Internal error"):
        data = self._build_error_data(error)
        super().__init__(4, message, data)
