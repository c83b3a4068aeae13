from .base import NoisyOneWayException
from typing import Optional
from .error_code_registry import ErrorCodeRegistry


# ----------------------------------------------------------------
#                    State Exception Error Codes
# ----------------------------------------------------------------

# LIN001 – Dimension is not a power of two

ErrorCodeRegistry.register(
    "LIN001",
    "[{method}] - {error_code}\n\n"
    "Dimension {dimension} is not a power of two\n\n"
    "Suggestion: {suggestion}"
)

# LIN002 – State vector not normalized

ErrorCodeRegistry.register(
    "LIN002",
    "[{method}] - {error_code}\n\n"
    "Squared norm {value} differs from 1\n\n"
    "Suggestion: {suggestion}"
)

# LIN003 – Mixed kinds in a binary operation

ErrorCodeRegistry.register(
    "LIN003",
    "[{method}] - {error_code}\n\n"
    "Operands of different kinds: {detail}\n\n"
    "Suggestion: {suggestion}"
)

# LIN004 – Empty set of kept qubits

ErrorCodeRegistry.register(
    "LIN004",
    "[{method}] - {error_code}\n\n"
    "No qubit left after the partial trace\n\n"
    "Suggestion: {suggestion}"
)

# LIN005 – Qubit index out of range

ErrorCodeRegistry.register(
    "LIN005",
    "[{method}] - {error_code}\n\n"
    "Qubit index {detail} is out of range for {dimension} qubits\n\n"
    "Suggestion: {suggestion}"
)

# LIN006 – Matrix is not Hermitian

ErrorCodeRegistry.register(
    "LIN006",
    "[{method}] - {error_code}\n\n"
    "Matrix is not Hermitian (max deviation {value})\n\n"
    "Suggestion: {suggestion}"
)

# LIN007 – Not a valid density matrix

ErrorCodeRegistry.register(
    "LIN007",
    "[{method}] - {error_code}\n\n"
    "Invalid density matrix: {detail} ({value})\n\n"
    "Suggestion: {suggestion}"
)

# LIN008 – Eigen decomposition did not reconstruct the input

ErrorCodeRegistry.register(
    "LIN008",
    "[{method}] - {error_code}\n\n"
    "Eigen decomposition reconstruction error {value}\n\n"
    "Suggestion: {suggestion}"
)

# LIN009 – Operator is not unitary

ErrorCodeRegistry.register(
    "LIN009",
    "[{method}] - {error_code}\n\n"
    "Operator is not unitary (max deviation of U^dagger U from identity {value})\n\n"
    "Suggestion: {suggestion}"
)




# ----------------------------------------------------------------
#                        State Exception
# ----------------------------------------------------------------

class StateException(NoisyOneWayException):
    """
    Raised when a state vector, density matrix or qubit index is malformed.
    """
    def __init__(
            self,
            *,
            error_code: str,
            method: str,
            dimension: Optional[int] = None,
            value: Optional[float] = None,
            detail: Optional[object] = None,
            suggestion: Optional[str] = None
    ):

        context_data = {
            "dimension": dimension,
            "value": value,
            "detail": detail
        }

        super().__init__(
            error_code = error_code,
            method = method,
            context = context_data,
            suggestion = suggestion or "Please check the amplitudes or matrix entries."
        )
