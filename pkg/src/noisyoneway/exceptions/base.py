from abc import ABC
from typing import Any, Dict, Optional

from .error_code_registry import ErrorCodeRegistry


class _Unset(dict):
    """Leaves template fields the raiser did not fill visible instead of failing."""

    def __missing__(self, key):
        return f"<{key}?>"


class NoisyOneWayException(Exception, ABC):
    """
    Root of every coded error. The message comes from the template registered for ``error_code``;
    subclasses only decide which context fields they pass.

    Args:
        error_code (str): Registered code, e.g. ``"CHN001"``.
        method (str): The class or function that raised it.
        context (Optional[Dict[str, Any]]): Values substituted into the message template.
        suggestion (Optional[str]): Custom suggestion.
    """
    default_error_code = "NE000"
    default_suggestion = "Please check the inputs of the simulation."

    def __init__(self, *,
                 error_code: str,
                 method: str,
                 context: Optional[Dict[str, Any]] = None,
                 suggestion: Optional[str] = None
                 ):

        self.error_code = error_code
        self.method = method
        self.context = {k: v for k, v in (context or {}).items() if v is not None}
        self.suggestion = suggestion or self.default_suggestion

        super().__init__(self._build_message())

    @property
    def family(self) -> str:
        """Three-letter prefix of the code (``CON``, ``LIN`` ...)."""
        return self.error_code[:3]

    def details(self) -> Dict[str, Any]:
        return {
            "error_code": self.error_code,
            "family": self.family,
            "method": self.method,
            "context": dict(self.context),
            "suggestion": self.suggestion
        }

    def _build_message(self) -> str:
        template = ErrorCodeRegistry.get(self.error_code)

        if template is None:
            return (
                f"[{self.method}] - {self.default_error_code}\n"
                f"Context: Unknown noisyoneway error ({self.error_code}).\n"
                f"Suggestion: Please report the error"
            )

        fields = _Unset(self.context)
        fields.update(error_code = self.error_code, method = self.method, suggestion = self.suggestion)
        return template.format_map(fields)
