from .base import NoisyOneWayException
from typing import Optional
from .error_code_registry import ErrorCodeRegistry


# ----------------------------------------------------------------
#                   Channel Exception Error Codes
# ----------------------------------------------------------------

# CHN001 – Parameters do not define a completely positive map

ErrorCodeRegistry.register(
    "CHN001",
    "[{method}] - {error_code}\n\n"
    "Channel parameters are not completely positive: {detail}\n\n"
    "Suggestion: {suggestion}"
)

# CHN002 – Choi matrix has a negative eigenvalue

ErrorCodeRegistry.register(
    "CHN002",
    "[{method}] - {error_code}\n\n"
    "Choi matrix eigenvalue {value} below tolerance\n\n"
    "Suggestion: {suggestion}"
)

# CHN003 – Rotation axis is not a unit vector

ErrorCodeRegistry.register(
    "CHN003",
    "[{method}] - {error_code}\n\n"
    "Rotation axis {detail} is not a unit 3-vector\n\n"
    "Suggestion: {suggestion}"
)




# ----------------------------------------------------------------
#                       Channel Exception
# ----------------------------------------------------------------

class ChannelException(NoisyOneWayException):
    """
    Raised when a noise map is not a valid quantum channel.
    """
    def __init__(
            self,
            *,
            error_code: str,
            method: str,
            value: Optional[float] = None,
            detail: Optional[object] = None,
            suggestion: Optional[str] = None
    ):

        context_data = {
            "value": value,
            "detail": detail
        }

        super().__init__(
            error_code = error_code,
            method = method,
            context = context_data,
            suggestion = suggestion or "Please check the channel parameters."
        )
