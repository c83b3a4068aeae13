"""
Brute-force noisy simulation on full density matrices.

The channels act on the resource first, then the measurements run one by one along the
adaptive tree. Everything the closed-form engines drop is kept here, which makes this module
the ground truth they are tested against.
"""

import logging
import numpy as np

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..channels import ChannelLike, apply_channels, channel_map
from ..core import DensityMatrix, GraphState, PureState, project_matrix, state_fidelity
from ..exceptions import SimulationException
from ..fidelity import FidelityReport
from ..pattern import MeasurementPattern, Outcome, basis_array, byproduct_unitary, check_orthonormal, ideal_answers, reference_answer
from ..utils import validate_qubit

logger = logging.getLogger(__name__)

MAX_QUBITS = 6
PRUNE_TOL = 1e-14

Resource = Union[GraphState, PureState, DensityMatrix]


@dataclass(frozen = True, eq = False)
class OracleRun:
    """
    Outcome tree of a noisy run.

    Attributes:
        branches (Dict[Outcome, Tuple[float, Optional[DensityMatrix]]]): Probability and
            normalized answer state per outcome; the state is None for pruned outcomes.
        fidelities (Dict[Outcome, float]): Fidelity against ``BP_r |A_ref>``, NaN when pruned.
    """
    branches: Dict[Outcome, Tuple[float, Optional[DensityMatrix]]]
    fidelities: Dict[Outcome, float]

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([p for p, _ in self.branches.values()])

    @property
    def average(self) -> float:
        return float(sum(
            p * self.fidelities[o] for o, (p, _) in self.branches.items() if not np.isnan(self.fidelities[o])
        ))

    def to_report(self) -> FidelityReport:
        outcomes = list(self.branches)
        return FidelityReport(
            outcomes = outcomes,
            Z = self.probabilities,
            F = np.array([self.fidelities[o] for o in outcomes])
        )


def _permute(matrix: np.ndarray, order: List[int], remaining: List[int]) -> np.ndarray:
    if order == remaining or len(order) <= 1:
        return matrix
    n = len(order)
    axes = [remaining.index(q) for q in order]
    return matrix.reshape([2] * (2 * n)).transpose(axes + [a + n for a in axes]).reshape(matrix.shape)


def measure_distribution(
        state: DensityMatrix,
        qubit: int,
        basis: Sequence[np.ndarray]
) -> Tuple[float, float, List[Optional[DensityMatrix]]]:
    """
    Born probabilities of a two-outcome projective measurement and the post-measurement states
    over the remaining qubits (None below ``PRUNE_TOL``).
    """
    validate_qubit(qubit, state.n, "measure_distribution")
    basis = [np.asarray(b, dtype = complex) for b in basis]
    check_orthonormal(basis, "measure_distribution")

    probabilities, posts = [], []
    for ket in basis:
        reduced = project_matrix(state.entries, ket, qubit)
        p = float(np.real(np.trace(reduced)))
        probabilities.append(max(p, 0.0))
        if p < PRUNE_TOL:
            posts.append(None)
        elif reduced.shape == (1, 1):
            posts.append(DensityMatrix(np.ones((1, 1), dtype = complex)))
        else:
            posts.append(DensityMatrix.from_unnormalized(reduced))

    return probabilities[0], probabilities[1], posts


def simulate(
        resource: Resource,
        pat: MeasurementPattern,
        channels: ChannelLike = None,
        target: Optional[np.ndarray] = None
) -> OracleRun:
    """
    Run ``pat`` on the noisy resource ``L(|G><G|)`` and score every branch.

    Args:
        resource (GraphState | PureState | DensityMatrix): Noiseless resource. A density
            matrix resource needs ``target``.
        pat (MeasurementPattern): The pattern.
        channels (QubitChannel | Mapping[int, QubitChannel], optional): Per-qubit noise.
        target (np.ndarray, optional): Reference answer over the outputs.
    """
    if isinstance(resource, DensityMatrix):
        rho = resource.entries
        if target is None:
            raise SimulationException(
                error_code = "SIM002",
                method = "simulate",
                suggestion = "Pass the reference answer as target."
            )
    else:
        vector = resource.state.amplitudes if isinstance(resource, GraphState) else resource.amplitudes
        rho = np.outer(vector, vector.conj())
        if target is None:
            target = reference_answer(ideal_answers(resource, pat))

    n = int(np.log2(rho.shape[0]))
    if n > MAX_QUBITS:
        raise SimulationException(
            error_code = "SIM001",
            method = "simulate",
            n_qubits = n,
            limit = MAX_QUBITS
        )

    rho = apply_channels(np.asarray(rho, dtype = complex), channel_map(channels, range(n)))
    target = np.asarray(target, dtype = complex)
    outputs = list(pat.outputs)
    M = pat.M

    leaves: Dict[Outcome, Tuple[float, Optional[np.ndarray]]] = {}

    def descend(current: np.ndarray, remaining: List[int], bits: Dict[int, int], prefix: Outcome):
        depth = len(prefix)
        if depth == M:
            sigma = _permute(current, outputs, remaining)
            leaves[prefix] = (float(np.real(np.trace(sigma))), sigma)
            return

        m = pat.measurements[depth]
        s = m.adapt.evaluate(bits)
        position = remaining.index(m.qubit)
        rest = remaining[:position] + remaining[position + 1:]

        for k in (0, 1):
            reduced = project_matrix(current, basis_array(m.theta, m.alpha, s, k), position)
            if np.real(np.trace(reduced)) < PRUNE_TOL:
                continue
            descend(reduced, rest, {**bits, m.qubit: k}, prefix + (k,))

    descend(rho, list(range(n)), {}, ())
    logger.debug("oracle: %d of %d branches above the pruning threshold", len(leaves), 2 ** M)

    branches, fidelities = {}, {}
    for index in range(2 ** M):
        outcome = pat.outcome_bits(index)
        if outcome not in leaves:
            branches[outcome] = (0.0, None)
            fidelities[outcome] = float("nan")
            continue

        p, sigma = leaves[outcome]
        answer = DensityMatrix.from_unnormalized(sigma)
        branches[outcome] = (p, answer)
        fidelities[outcome] = state_fidelity(byproduct_unitary(pat, outcome) @ target, answer.entries)

    return OracleRun(branches, fidelities)
