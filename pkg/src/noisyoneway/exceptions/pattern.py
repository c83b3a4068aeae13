from .base import NoisyOneWayException
from typing import Optional
from .error_code_registry import ErrorCodeRegistry


# ----------------------------------------------------------------
#                   Pattern Exception Error Codes
# ----------------------------------------------------------------

# PAT001 – Adaptation depends on a qubit not measured earlier

ErrorCodeRegistry.register(
    "PAT001",
    "[{method}] - {error_code}\n\n"
    "Adaptation of qubit {qubit} depends on outcomes {detail} not yet available\n\n"
    "Suggestion: {suggestion}"
)

# PAT002 – Adapted z-measurement

ErrorCodeRegistry.register(
    "PAT002",
    "[{method}] - {error_code}\n\n"
    "Qubit {qubit} is measured along z but carries an adaptation\n\n"
    "Suggestion: {suggestion}"
)

# PAT003 – Monomial degree above two

ErrorCodeRegistry.register(
    "PAT003",
    "[{method}] - {error_code}\n\n"
    "Monomial {detail} has degree above two\n\n"
    "Suggestion: {suggestion}"
)

# PAT004 – Pattern does not fit the resource

ErrorCodeRegistry.register(
    "PAT004",
    "[{method}] - {error_code}\n\n"
    "Pattern does not fit the resource: {detail}\n\n"
    "Suggestion: {suggestion}"
)

# PAT005 – Basis pair not orthonormal

ErrorCodeRegistry.register(
    "PAT005",
    "[{method}] - {error_code}\n\n"
    "Measurement basis is not orthonormal (deviation {detail})\n\n"
    "Suggestion: {suggestion}"
)

# PAT006 – Malformed expression or pattern document

ErrorCodeRegistry.register(
    "PAT006",
    "[{method}] - {error_code}\n\n"
    "Malformed pattern document: {detail}\n\n"
    "Suggestion: {suggestion}"
)




# ----------------------------------------------------------------
#                       Pattern Exception
# ----------------------------------------------------------------

class PatternException(NoisyOneWayException):
    """
    Raised when a measurement pattern or boolean expression is invalid.
    """
    def __init__(
            self,
            *,
            error_code: str,
            method: str,
            qubit: Optional[int] = None,
            detail: Optional[object] = None,
            suggestion: Optional[str] = None
    ):

        context_data = {
            "qubit": qubit,
            "detail": detail
        }

        super().__init__(
            error_code = error_code,
            method = method,
            context = context_data,
            suggestion = suggestion or "Please check the measurement pattern."
        )
