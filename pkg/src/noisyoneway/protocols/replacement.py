"""
Classically correlated stand-ins for non-adaptive resources.

Mixing every measured vertex with its image under a pi rotation about its measurement axis
(the fixed-pole map with ``p = 1/2``) removes every coherence across the measurement basis
and therefore all entanglement between that vertex and the rest. On a graph state the
rotation of an X-measured vertex is the same as Z on all its neighbours. Outcome statistics
of the pattern are untouched.
"""

import itertools
import logging
import numpy as np

from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union

from ..channels import FixedPoleMap, apply_channels, measurement_axis
from ..core import DensityMatrix
from ..correlations import negativity
from ..exceptions import ProtocolException
from ..oracle import MAX_QUBITS, simulate
from ..pattern import AnswerSet, basis_array, reference_answer
from .base import Protocol

logger = logging.getLogger(__name__)

DISTRIBUTION_TOL = 1e-10
NEGATIVITY_TOL = 1e-9
MARGINAL_SIZE = 3


@dataclass(frozen = True, eq = False)
class EnsembleResource:
    """
    Replacement of a resource too large for a dense matrix: the measured vertices sit in
    basis state ``|b_k>`` and the outputs in ``|A_k>`` with probability ``P_k``.
    """
    answers: AnswerSet

    @property
    def probabilities(self) -> np.ndarray:
        return self.answers.probabilities

    def marginal(self, positions: Tuple[int, ...]) -> np.ndarray:
        """Distribution of the outcomes at the given measurement positions."""
        table = self.probabilities.reshape([2] * self.answers.pattern.M)
        kept = sorted(positions)
        others = tuple(i for i in range(table.ndim) if i not in kept)
        marginal = table.sum(axis = others) if others else table
        return marginal.transpose([kept.index(p) for p in positions]).reshape(-1)


@dataclass(frozen = True)
class ReplacementReport:
    """
    Attributes:
        protocol (str): Protocol name.
        dense (bool): Whether the replacement was built as a density matrix.
        distribution_gap (float): Largest absolute difference between the outcome
            probabilities on the graph state and on the replacement (over the checked marginals
            for an ensemble).
        negativities (Dict[int, float]): Negativity of each replaced vertex against the rest;
            empty for an ensemble, which is separable by construction.
        marginals (List[Tuple[int, ...]]): Measurement positions whose marginals were compared.
    """
    protocol: str
    dense: bool
    distribution_gap: float
    negativities: Dict[int, float] = field(default_factory = dict)
    marginals: List[Tuple[int, ...]] = field(default_factory = list)

    @property
    def passed(self) -> bool:
        return (
            self.distribution_gap <= DISTRIBUTION_TOL
            and all(v < NEGATIVITY_TOL for v in self.negativities.values())
        )


def replacement_maps(protocol: Protocol) -> Dict[int, FixedPoleMap]:
    """The fixed-pole map that protects each measured vertex's basis."""
    return {
        m.qubit: FixedPoleMap(p = 0.5, axis = measurement_axis(m.theta, m.alpha), phi = np.pi)
        for m in protocol.pattern.measurements
    }


def _require_nonadaptive(protocol: Protocol):
    if protocol.pattern.is_adaptive:
        raise ProtocolException(
            error_code = "PRO002",
            method = "classical_replacement",
            protocol = protocol.name,
            detail = list(protocol.pattern.adapted_qubits),
            suggestion = "Only non-adaptive patterns run on classically correlated resources."
        )


def _dense_replacement(protocol: Protocol) -> Tuple[DensityMatrix, ReplacementReport]:
    vector = protocol.resource().state.amplitudes
    pure = np.outer(vector, vector.conj())
    mixed = apply_channels(pure, replacement_maps(protocol))
    replacement = DensityMatrix(mixed)

    target = protocol.target if protocol.target is not None else reference_answer(protocol.answers())
    original = simulate(DensityMatrix(pure), protocol.pattern, target = target)
    replaced = simulate(replacement, protocol.pattern, target = target)
    gap = float(np.max(np.abs(original.probabilities - replaced.probabilities)))

    negativities = {q: negativity(mixed, (q,)) for q in protocol.pattern.measured}
    logger.info("%s: dense replacement, gap %.3g, max negativity %.3g", protocol.name, gap, max(negativities.values()))
    return replacement, ReplacementReport(protocol.name, True, gap, negativities)


def _graph_marginal(vector: np.ndarray, protocol: Protocol, positions: Tuple[int, ...]) -> np.ndarray:
    """Born distribution of a few measured vertices, from the reduced state of the resource."""
    measurements = [protocol.pattern.measurements[i] for i in positions]
    qubits = [m.qubit for m in measurements]
    order = np.argsort(qubits)
    reduced = _reduced(vector, qubits)

    distribution = []
    for bits in itertools.product((0, 1), repeat = len(positions)):
        ket = np.ones(1, dtype = complex)
        for j in order:
            m = measurements[j]
            ket = np.kron(ket, basis_array(m.theta, m.alpha, 0, bits[j]))
        distribution.append(float(np.real(np.vdot(ket, reduced @ ket))))
    return np.array(distribution)


def _reduced(vector: np.ndarray, qubits: List[int]) -> np.ndarray:
    n = int(np.log2(vector.size))
    keep = sorted(qubits)
    rest = [q for q in range(n) if q not in keep]
    tensor = vector.reshape([2] * n).transpose(keep + rest).reshape(2 ** len(keep), -1)
    return tensor @ tensor.conj().T


def _ensemble_replacement(protocol: Protocol, samples: int, seed: int) -> Tuple[EnsembleResource, ReplacementReport]:
    answers = protocol.answers()
    ensemble = EnsembleResource(answers)
    vector = protocol.resource().state.amplitudes

    M = protocol.pattern.M
    rng = np.random.default_rng(seed)
    size = min(MARGINAL_SIZE, M)
    subsets = [tuple(int(i) for i in rng.choice(M, size = size, replace = False)) for _ in range(samples)]

    gap = 0.0
    for positions in subsets:
        gap = max(gap, float(np.max(np.abs(_graph_marginal(vector, protocol, positions) - ensemble.marginal(positions)))))

    logger.info("%s: ensemble replacement, %d marginals, gap %.3g", protocol.name, len(subsets), gap)
    return ensemble, ReplacementReport(protocol.name, False, gap, {}, subsets)


def classical_replacement(
        protocol: Protocol,
        samples: int = 20,
        seed: int = 0
) -> Tuple[Union[DensityMatrix, EnsembleResource], ReplacementReport]:
    """
    Separable resource with the same outcome statistics as ``protocol``'s graph state.

    Up to six vertices the result is a density matrix; larger resources are returned as an
    ensemble and compared on ``samples`` random marginals of up to three measurements.

    Raises:
        ProtocolException (PRO002): If the pattern has adaptations.
    """
    _require_nonadaptive(protocol)
    if protocol.graph.n_vertices <= MAX_QUBITS:
        return _dense_replacement(protocol)
    return _ensemble_replacement(protocol, samples, seed)
