"""
Graphs, graph-state construction and local operations on graph states.
"""

import json
import logging
import networkx as nx
import numpy as np

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple, Union

from ..exceptions import GraphException, PatternException, StateException
from ..utils import validate_qubit
from .gates import X, Z, resolve
from .linalg import PureState, apply_cz, apply_operator, place_state

logger = logging.getLogger(__name__)

STABILIZER_TOL = 1e-10
UNITARY_TOL = 1e-10


class Graph:
    """
    Simple undirected graph on vertices ``0..n_vertices-1``.

    Edges are kept in lexicographic order so that every construction trace is reproducible.
    """

    def __init__(self, n_vertices: int, edges: Iterable[Sequence[int]] = ()):
        if isinstance(n_vertices, bool) or not isinstance(n_vertices, (int, np.integer)) or n_vertices < 1:
            raise GraphException(
                error_code = "GRA002",
                method = "Graph",
                vertex = None,
                n_vertices = n_vertices,
                suggestion = "A graph needs at least one vertex."
            )

        self._graph = nx.Graph()
        self._graph.add_nodes_from(range(int(n_vertices)))

        for edge in edges:
            i, j = (int(v) for v in edge)
            for v in (i, j):
                if not (0 <= v < n_vertices):
                    raise GraphException(
                        error_code = "GRA002",
                        method = "Graph",
                        vertex = v,
                        n_vertices = n_vertices
                    )
            if i == j:
                raise GraphException(
                    error_code = "GRA001",
                    method = "Graph",
                    vertex = i,
                    suggestion = "Graph states have no self-loops; drop the edge."
                )
            self._graph.add_edge(i, j)

    @property
    def n_vertices(self) -> int:
        return self._graph.number_of_nodes()

    @property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted((min(e), max(e)) for e in self._graph.edges))

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        validate_qubit(vertex, self.n_vertices, "Graph.neighbors")
        return tuple(sorted(self._graph.neighbors(vertex)))

    @classmethod
    def linear(cls, n: int) -> "Graph":
        """Chain ``0 - 1 - ... - (n-1)``."""
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    def to_dict(self) -> dict:
        return {"n": self.n_vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, document: dict) -> "Graph":
        if not isinstance(document, dict) or "n" not in document:
            raise PatternException(
                error_code = "PAT006",
                method = "Graph.from_dict",
                detail = "missing 'n'",
                suggestion = 'Use {"n": int, "edges": [[i, j], ...]}.'
            )
        return cls(document["n"], document.get("edges", []))

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n_vertices == other.n_vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.n_vertices, self.edges))

    def __repr__(self):
        return f"Graph(n_vertices={self.n_vertices}, edges={list(self.edges)})"


# ------------------------------------
#             Graph states
# ------------------------------------

def stabilizer_image(vector: np.ndarray, graph: Graph, vertex: int) -> np.ndarray:
    """``K_v |psi>`` with ``K_v = X_v prod_{j in N(v)} Z_j``."""
    image = apply_operator(vector, X, vertex)
    for j in graph.neighbors(vertex):
        image = apply_operator(image, Z, j)
    return image


@dataclass(frozen = True, eq = False)
class GraphState:
    """
    Resource state of a graph.

    Attributes:
        graph (Graph): The entanglement graph.
        state (PureState): Amplitudes over all vertices.
        inputs (Tuple[int, ...]): Vertices that carried an input state before entangling.
            A plain graph state has none and must satisfy every stabilizer condition.
    """
    graph: Graph
    state: PureState
    inputs: Tuple[int, ...] = field(default = ())

    def __post_init__(self):
        if self.state.n != self.graph.n_vertices:
            raise PatternException(
                error_code = "PAT004",
                method = "GraphState",
                detail = f"{self.state.n} qubits for {self.graph.n_vertices} vertices"
            )
        object.__setattr__(self, "inputs", tuple(int(v) for v in self.inputs))

        if not self.inputs:
            violated = self.violated_stabilizers()
            if violated:
                raise GraphException(
                    error_code = "GRA003",
                    method = "GraphState",
                    vertex = violated[0],
                    suggestion = "Build the state with build_graph_state()."
                )

    @property
    def n(self) -> int:
        return self.graph.n_vertices

    def violated_stabilizers(self, tol: float = STABILIZER_TOL):
        vector = self.state.amplitudes
        return [
            v for v in range(self.n)
            if np.max(np.abs(stabilizer_image(vector, self.graph, v) - vector)) > tol
        ]


def _entangle(vector: np.ndarray, graph: Graph) -> np.ndarray:
    for i, j in graph.edges:
        vector = apply_cz(vector, i, j)
    return vector


def build_graph_state(g: Graph) -> GraphState:
    """
    ``prod_{(i,j)} CZ_ij |+>^n`` for the graph ``g``.
    """
    n = g.n_vertices
    logger.debug("building graph state on %d vertices, %d edges", n, len(g.edges))

    vector = np.full(2 ** n, 2 ** (-n / 2), dtype = complex)
    return GraphState(g, PureState(_entangle(vector, g)))


def prepare_resource(
        g: Graph,
        input_state: Optional[PureState] = None,
        inputs: Sequence[int] = ()
) -> GraphState:
    """
    Entangle ``g`` with ``input_state`` placed on the ``inputs`` vertices and |+> elsewhere.

    Without inputs this is :func:`build_graph_state`.
    """
    inputs = list(inputs)
    if input_state is None or not inputs:
        return build_graph_state(g)

    if input_state.n != len(inputs):
        raise PatternException(
            error_code = "PAT004",
            method = "prepare_resource",
            detail = f"{input_state.n}-qubit input for {len(inputs)} input vertices"
        )

    vector = place_state(input_state.amplitudes, inputs, g.n_vertices)
    return GraphState(g, PureState.normalized(_entangle(vector, g)), tuple(inputs))


def apply_local(state: PureState, op: Union[str, np.ndarray], qubit: int) -> PureState:
    """
    Apply a single-qubit unitary (a name such as ``"H"`` or a 2x2 matrix) to one qubit.

    Raises:
        StateException (LIN009): If the matrix is not unitary.
    """
    validate_qubit(qubit, state.n, "apply_local")
    unitary = resolve(op)
    deviation = np.inf
    if unitary.shape == (2, 2):
        deviation = float(np.max(np.abs(unitary.conj().T @ unitary - np.eye(2))))
    if deviation > UNITARY_TOL:
        raise StateException(
            error_code = "LIN009",
            method = "apply_local",
            dimension = unitary.size,
            value = deviation,
            suggestion = "Pass a 2x2 unitary; non-unitary maps belong in a channel."
        )
    return PureState.normalized(apply_operator(state.amplitudes, unitary, qubit))


def neighbor_z_equivalence(gs: GraphState, i: int) -> bool:
    """
    Whether ``X_i |G> = prod_{j in N(i)} Z_j |G>``.
    """
    validate_qubit(i, gs.n, "neighbor_z_equivalence")
    vector = gs.state.amplitudes

    flipped = apply_operator(vector, X, i)
    phased = vector
    for j in gs.graph.neighbors(i):
        phased = apply_operator(phased, Z, j)

    return bool(np.max(np.abs(flipped - phased)) <= STABILIZER_TOL)
