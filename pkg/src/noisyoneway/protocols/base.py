import logging
import numpy as np

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from ..channels import ChannelLike
from ..core import Graph, GraphState, PureState, prepare_resource, state_fidelity
from ..fidelity import AdaptiveFidelity, FidelityReport, NonAdaptiveFidelity
from ..oracle import OracleRun, simulate
from ..pattern import AnswerSet, MeasurementPattern, byproduct_unitary, ideal_answers

logger = logging.getLogger(__name__)

ZERO_NOISE_TOL = 1e-9


@dataclass(frozen = True, eq = False)
class Protocol:
    """
    A one-way computation ready to run: graph, pattern and what it should compute.

    Attributes:
        name (str): Catalog name.
        graph (Graph): Resource graph.
        pattern (MeasurementPattern): Measurements and by-products.
        inputs (Tuple[int, ...]): Vertices that hold ``input_state`` before entangling.
        input_state (PureState, optional): Input over ``inputs``; |+> on every vertex if None.
        reference (np.ndarray, optional): Either a unitary from the inputs to the outputs or a
            target state over the outputs. Without it the target is taken from the first
            reachable ideal branch.
        params (Dict[str, Any]): Construction arguments, echoed by ``to_dict``.
    """
    name: str
    graph: Graph
    pattern: MeasurementPattern
    inputs: Tuple[int, ...] = ()
    input_state: Optional[PureState] = None
    reference: Optional[np.ndarray] = None
    params: Dict[str, Any] = field(default_factory = dict)

    def __post_init__(self):
        self.pattern.check_graph(self.graph)
        object.__setattr__(self, "inputs", tuple(int(q) for q in self.inputs))

    def __repr__(self):
        return f"Protocol({self.name!r}, vertices={self.graph.n_vertices}, M={self.pattern.M})"

    @property
    def readout(self):
        return self.pattern.readout

    def with_input(self, input_state: PureState) -> "Protocol":
        return Protocol(self.name, self.graph, self.pattern, self.inputs, input_state, self.reference, self.params)

    # ------------------------------------
    #          Ideal behaviour
    # ------------------------------------

    @property
    def target(self) -> Optional[np.ndarray]:
        """Ideal answer over the outputs with no by-product, when the reference fixes it."""
        if self.reference is None:
            return None
        reference = np.asarray(self.reference, dtype = complex)
        if reference.ndim == 1:
            return reference
        if self.input_state is None:
            vector = np.full(reference.shape[1], reference.shape[1] ** -0.5, dtype = complex)
        else:
            vector = self.input_state.amplitudes
        return reference @ vector

    def resource(self) -> GraphState:
        return prepare_resource(self.graph, self.input_state, self.inputs)

    def answers(self) -> AnswerSet:
        return ideal_answers(self.resource(), self.pattern)

    def zero_noise_fidelities(self) -> Dict[tuple, float]:
        """Fidelity of every reachable ideal branch against ``BP_k |target>``."""
        answers = self.answers()
        target = self.target
        if target is None:
            return {k: 1.0 for k, b in answers.items() if b.reachable}
        return {
            k: state_fidelity(byproduct_unitary(self.pattern, k) @ target, b.amplitudes)
            for k, b in answers.items() if b.reachable
        }

    def zero_noise_check(self, tol: float = ZERO_NOISE_TOL) -> bool:
        fidelities = self.zero_noise_fidelities()
        worst = min(fidelities.values())
        logger.debug("%s: worst zero-noise fidelity %.12g over %d branches", self.name, worst, len(fidelities))
        return bool(worst >= 1 - tol)

    # ------------------------------------
    #             Noisy runs
    # ------------------------------------

    def fidelity(self, measured_channels: ChannelLike = None, answer_channels: ChannelLike = None) -> FidelityReport:
        """
        Closed-form report, through the non-adaptive engine whenever the pattern allows.
        """
        engine = AdaptiveFidelity if self.pattern.is_adaptive else NonAdaptiveFidelity
        return engine(self.pattern, self.resource(), measured_channels, answer_channels, self.target).prepare().evaluate()

    def simulate(self, channels: ChannelLike = None) -> OracleRun:
        return simulate(self.resource(), self.pattern, channels, self.target)

    def split_channels(self, channels: ChannelLike) -> Tuple[dict, dict]:
        """A channel map over all vertices split into its measured and output parts."""
        if channels is None or not isinstance(channels, dict):
            return (
                {q: channels for q in self.pattern.measured},
                {q: channels for q in self.pattern.outputs}
            )
        return (
            {q: channels.get(q) for q in self.pattern.measured},
            {q: channels.get(q) for q in self.pattern.outputs}
        )

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "graph": self.graph.to_dict(),
            "pattern": self.pattern.to_dict(),
            "inputs": list(self.inputs)
        }
