from .base import NoisyOneWayException
from typing import Optional
from .error_code_registry import ErrorCodeRegistry


# ----------------------------------------------------------------
#                    Graph Exception Error Codes
# ----------------------------------------------------------------

# GRA001 – Self-loop

ErrorCodeRegistry.register(
    "GRA001",
    "[{method}] - {error_code}\n\n"
    "Self-loop on vertex {vertex}\n\n"
    "Suggestion: {suggestion}"
)

# GRA002 – Vertex out of range

ErrorCodeRegistry.register(
    "GRA002",
    "[{method}] - {error_code}\n\n"
    "Vertex {vertex} is out of range for a graph with {n_vertices} vertices\n\n"
    "Suggestion: {suggestion}"
)

# GRA003 – Stabilizer condition violated

ErrorCodeRegistry.register(
    "GRA003",
    "[{method}] - {error_code}\n\n"
    "State is not stabilized by K_{vertex}\n\n"
    "Suggestion: {suggestion}"
)




# ----------------------------------------------------------------
#                        Graph Exception
# ----------------------------------------------------------------

class GraphException(NoisyOneWayException):
    """
    Raised when a graph description is invalid.
    """
    def __init__(
            self,
            *,
            error_code: str,
            method: str,
            vertex: Optional[object] = None,
            n_vertices: Optional[int] = None,
            suggestion: Optional[str] = None
    ):

        context_data = {
            "vertex": vertex,
            "n_vertices": n_vertices
        }

        super().__init__(
            error_code = error_code,
            method = method,
            context = context_data,
            suggestion = suggestion or "Please check the vertex count and edge list."
        )
