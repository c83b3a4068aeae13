from .linalg import (PureState, DensityMatrix, State, tensor, partial_trace, partial_trace_array,
                     partial_transpose, hermitian_eig, apply_operator, apply_left, conjugate,
                     apply_kraus, apply_cz, project_qubit, project_matrix, embed, place_state,
                     state_fidelity)
from .gates import (I2, X, Y, Z, H, PAULIS, rotation, rx, ry, rz, euler_unitary, bloch_vector,
                    operator_on, cz_matrix, cnot_matrix)
from .graphstate import (Graph, GraphState, build_graph_state, prepare_resource, apply_local,
                         neighbor_z_equivalence, stabilizer_image)



__all__ = [
    "PureState",
    "DensityMatrix",
    "State",
    "tensor",
    "partial_trace",
    "partial_trace_array",
    "partial_transpose",
    "hermitian_eig",
    "apply_operator",
    "apply_left",
    "conjugate",
    "apply_kraus",
    "apply_cz",
    "project_qubit",
    "project_matrix",
    "embed",
    "place_state",
    "state_fidelity",
    "I2",
    "X",
    "Y",
    "Z",
    "H",
    "PAULIS",
    "rotation",
    "rx",
    "ry",
    "rz",
    "euler_unitary",
    "bloch_vector",
    "operator_on",
    "cz_matrix",
    "cnot_matrix",
    "Graph",
    "GraphState",
    "build_graph_state",
    "prepare_resource",
    "apply_local",
    "neighbor_z_equivalence",
    "stabilizer_image"
]
