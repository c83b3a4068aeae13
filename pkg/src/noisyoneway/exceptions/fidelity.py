from .base import NoisyOneWayException
from typing import Optional
from .error_code_registry import ErrorCodeRegistry


# ----------------------------------------------------------------
#                  Fidelity Exception Error Codes
# ----------------------------------------------------------------

# FID001 – Too many measured qubits for the engine

ErrorCodeRegistry.register(
    "FID001",
    "[{method}] - {error_code}\n\n"
    "{measured} measured qubits exceed the limit of {limit}\n\n"
    "Suggestion: {suggestion}"
)

# FID002 – Adaptive pattern passed to the non-adaptive engine

ErrorCodeRegistry.register(
    "FID002",
    "[{method}] - {error_code}\n\n"
    "Pattern adapts qubits {detail}\n\n"
    "Suggestion: {suggestion}"
)

# FID003 – Outcome probabilities drifted away from a distribution

ErrorCodeRegistry.register(
    "FID003",
    "[{method}] - {error_code}\n\n"
    "Outcome probabilities sum to {detail}\n\n"
    "Suggestion: {suggestion}"
)

# FID004 – Measurement plane not handled by the closed form

ErrorCodeRegistry.register(
    "FID004",
    "[{method}] - {error_code}\n\n"
    "Qubit {detail} is measured with alpha outside {{0, pi/2}}\n\n"
    "Suggestion: {suggestion}"
)




# ----------------------------------------------------------------
#                       Fidelity Exception
# ----------------------------------------------------------------

class FidelityException(NoisyOneWayException):
    """
    Raised by the closed-form fidelity engines.
    """
    def __init__(
            self,
            *,
            error_code: str,
            method: str,
            measured: Optional[int] = None,
            limit: Optional[int] = None,
            detail: Optional[object] = None,
            suggestion: Optional[str] = None
    ):

        context_data = {
            "measured": measured,
            "limit": limit,
            "detail": detail
        }

        super().__init__(
            error_code = error_code,
            method = method,
            context = context_data,
            suggestion = suggestion or "Please check the pattern and channels."
        )
