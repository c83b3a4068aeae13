import logging
import numpy as np

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Union

from ..core import GraphState, PureState, project_qubit
from ..exceptions import PatternException
from .pattern import MeasurementPattern, Outcome, basis_array, byproduct_unitary

logger = logging.getLogger(__name__)

REACHABLE_TOL = 1e-14


@dataclass(frozen = True, eq = False)
class Branch:
    """
    One outcome of the ideal (noiseless) measurement sequence.

    Attributes:
        probability (float): Born probability of the outcome vector.
        amplitudes (np.ndarray): Normalized answer state over the outputs. For an unreachable
            branch this is an arbitrary basis state.
        reachable (bool): False when the probability is below ``REACHABLE_TOL``.
    """
    probability: float
    amplitudes: np.ndarray
    reachable: bool = True

    @property
    def state(self) -> Optional[PureState]:
        return PureState(self.amplitudes) if self.reachable else None


class AnswerSet(Mapping):
    """
    Read-only map from outcome vectors to branches, in integer-label order.
    """

    def __init__(self, pattern: MeasurementPattern, branches: Dict[Outcome, Branch]):
        self.pattern = pattern
        self._branches = dict(sorted(branches.items(), key = lambda kv: pattern.outcome_index(kv[0])))

    def __getitem__(self, outcome) -> Branch:
        return self._branches[tuple(outcome)]

    def __iter__(self) -> Iterator[Outcome]:
        return iter(self._branches)

    def __len__(self) -> int:
        return len(self._branches)

    def __repr__(self):
        return f"AnswerSet(M={self.pattern.M}, outputs={list(self.pattern.outputs)})"

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([b.probability for b in self._branches.values()])

    @property
    def states(self) -> np.ndarray:
        """Answer vectors stacked row-wise, one row per outcome label."""
        return np.array([b.amplitudes for b in self._branches.values()])

    @property
    def unreachable(self) -> List[Outcome]:
        return [k for k, b in self._branches.items() if not b.reachable]


def _reorder(vector: np.ndarray, remaining: List[int], order: List[int]) -> np.ndarray:
    if remaining == order or len(order) <= 1:
        return vector
    axes = [remaining.index(q) for q in order]
    return vector.reshape([2] * len(order)).transpose(axes).reshape(-1)


def ideal_answers(resource: Union[GraphState, PureState], pat: MeasurementPattern) -> AnswerSet:
    """
    Every outcome branch of the pattern on a pure resource, by sequential projection.

    Each qubit is projected onto its basis state, adapted to the outcomes already fixed on
    that branch; the result lists all ``2**M`` branches with their probabilities and
    normalized answer states over ``pat.outputs``.
    """
    if isinstance(resource, GraphState):
        pat.check_graph(resource.graph)
        vector = resource.state.amplitudes
    else:
        vector = resource.amplitudes

    n = int(np.log2(vector.size))
    if sorted(pat.measured + pat.outputs) != list(range(n)):
        raise PatternException(
            error_code = "PAT004",
            method = "ideal_answers",
            detail = f"pattern covers {sorted(pat.measured + pat.outputs)}, state has {n} qubits"
        )

    logger.debug("enumerating %d branches over %d outputs", 2 ** pat.M, len(pat.outputs))

    branches: Dict[Outcome, Branch] = {}
    outputs = list(pat.outputs)
    dim = 2 ** len(outputs)

    def descend(current: np.ndarray, remaining: List[int], bits: Dict[int, int], prefix: Outcome):
        depth = len(prefix)
        if depth == pat.M:
            amplitudes = _reorder(current, remaining, outputs)
            probability = float(np.vdot(amplitudes, amplitudes).real)
            if probability < REACHABLE_TOL:
                placeholder = np.zeros(dim, dtype = complex)
                placeholder[0] = 1.0
                branches[prefix] = Branch(0.0, placeholder, reachable = False)
            else:
                branches[prefix] = Branch(probability, amplitudes / np.sqrt(probability))
            return

        m = pat.measurements[depth]
        s = m.adapt.evaluate(bits)
        position = remaining.index(m.qubit)
        rest = remaining[:position] + remaining[position + 1:]

        for k in (0, 1):
            bra = basis_array(m.theta, m.alpha, s, k).conj()
            projected = project_qubit(current, bra, position)
            descend(projected, rest, {**bits, m.qubit: k}, prefix + (k,))

    descend(np.asarray(vector), list(range(n)), {}, ())

    answers = AnswerSet(pat, branches)
    if answers.unreachable:
        logger.warning("%d of %d branches are unreachable", len(answers.unreachable), len(answers))
    return answers


def reference_answer(answers: AnswerSet, pat: Optional[MeasurementPattern] = None) -> np.ndarray:
    """
    ``BP_k^dagger |A_k>`` for the first reachable outcome ``k``: the answer with the
    by-product undone, equal to ``|A_0>`` whenever the all-zero branch is reachable.
    """
    pat = pat or answers.pattern
    for outcome, branch in answers.items():
        if branch.reachable:
            return byproduct_unitary(pat, outcome).conj().T @ branch.amplitudes
    raise RuntimeError("No reachable branch in the answer set")
