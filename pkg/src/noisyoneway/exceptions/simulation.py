from .base import NoisyOneWayException
from typing import Optional
from .error_code_registry import ErrorCodeRegistry


# ----------------------------------------------------------------
#                 Simulation Exception Error Codes
# ----------------------------------------------------------------

# SIM001 – Density matrix too large

ErrorCodeRegistry.register(
    "SIM001",
    "[{method}] - {error_code}\n\n"
    "{n_qubits} qubits exceed the simulator limit of {limit}\n\n"
    "Suggestion: {suggestion}"
)

# SIM002 – No target state for fidelities

ErrorCodeRegistry.register(
    "SIM002",
    "[{method}] - {error_code}\n\n"
    "A mixed resource needs an explicit target state\n\n"
    "Suggestion: {suggestion}"
)




# ----------------------------------------------------------------
#                      Simulation Exception
# ----------------------------------------------------------------

class SimulationException(NoisyOneWayException):
    """
    Raised by the brute-force density-matrix simulator.
    """
    def __init__(
            self,
            *,
            error_code: str,
            method: str,
            n_qubits: Optional[int] = None,
            limit: Optional[int] = None,
            suggestion: Optional[str] = None
    ):

        context_data = {
            "n_qubits": n_qubits,
            "limit": limit
        }

        super().__init__(
            error_code = error_code,
            method = method,
            context = context_data,
            suggestion = suggestion or "Please reduce the resource size."
        )
