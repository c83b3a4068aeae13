from .base import NoisyOneWayException
from typing import Optional
from .error_code_registry import ErrorCodeRegistry


# ----------------------------------------------------------------
#                Correlation Exception Error Codes
# ----------------------------------------------------------------

# COR001 – Wrong number of qubits for the measure

ErrorCodeRegistry.register(
    "COR001",
    "[{method}] - {error_code}\n\n"
    "The measure needs {expected} qubits, got {detail}\n\n"
    "Suggestion: {suggestion}"
)

# COR002 – Closed form and optimizer disagree

ErrorCodeRegistry.register(
    "COR002",
    "[{method}] - {error_code}\n\n"
    "Optimizer and closed form differ by {detail}\n\n"
    "Suggestion: {suggestion}"
)

# COR003 – MEP size guard

ErrorCodeRegistry.register(
    "COR003",
    "[{method}] - {error_code}\n\n"
    "MEP is limited to {expected} qubits, got {detail}\n\n"
    "Suggestion: {suggestion}"
)




# ----------------------------------------------------------------
#                     Correlation Exception
# ----------------------------------------------------------------

class CorrelationException(NoisyOneWayException):
    """
    Raised by the correlation measures.
    """
    def __init__(
            self,
            *,
            error_code: str,
            method: str,
            expected: Optional[object] = None,
            detail: Optional[object] = None,
            suggestion: Optional[str] = None
    ):

        context_data = {
            "expected": expected,
            "detail": detail
        }

        super().__init__(
            error_code = error_code,
            method = method,
            context = context_data,
            suggestion = suggestion or "Please check the state passed to the measure."
        )
