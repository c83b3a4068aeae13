from .base import NoisyOneWayException
from typing import Optional
from .error_code_registry import ErrorCodeRegistry


# ----------------------------------------------------------------
#                  Protocol Exception Error Codes
# ----------------------------------------------------------------

# PRO001 – Oracle function outside the implemented family

ErrorCodeRegistry.register(
    "PRO001",
    "[{method}] - {error_code}\n\n"
    "Unsupported oracle function {detail}\n\n"
    "Suggestion: {suggestion}"
)

# PRO002 – Classical replacement asked for an adaptive pattern

ErrorCodeRegistry.register(
    "PRO002",
    "[{method}] - {error_code}\n\n"
    "Protocol {protocol} adapts qubits {detail}; a classically correlated resource cannot replace it\n\n"
    "Suggestion: {suggestion}"
)

# PRO003 – Register too large

ErrorCodeRegistry.register(
    "PRO003",
    "[{method}] - {error_code}\n\n"
    "Register of {detail} qubits is too large\n\n"
    "Suggestion: {suggestion}"
)

# PRO004 – Simulation disagrees with the closed form

ErrorCodeRegistry.register(
    "PRO004",
    "[{method}] - {error_code}\n\n"
    "Protocol {protocol}: simulated value differs from the closed form by {detail}\n\n"
    "Suggestion: {suggestion}"
)

# PRO005 – Two-qubit step addressed one qubit twice

ErrorCodeRegistry.register(
    "PRO005",
    "[{method}] - {error_code}\n\n"
    "Protocol {protocol} needs two different qubits, got {detail}\n\n"
    "Suggestion: {suggestion}"
)




# ----------------------------------------------------------------
#                       Protocol Exception
# ----------------------------------------------------------------

class ProtocolException(NoisyOneWayException):
    """
    Raised by the protocol catalog.
    """
    def __init__(
            self,
            *,
            error_code: str,
            method: str,
            protocol: Optional[str] = None,
            detail: Optional[object] = None,
            suggestion: Optional[str] = None
    ):

        context_data = {
            "protocol": protocol,
            "detail": detail
        }

        super().__init__(
            error_code = error_code,
            method = method,
            context = context_data,
            suggestion = suggestion or "Please check the protocol arguments."
        )
