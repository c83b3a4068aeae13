import logging
import numpy as np

from abc import ABC, abstractmethod
from functools import cached_property
from typing import Iterable, List, Mapping, Optional, Union

from ..core import DensityMatrix, PAULIS, apply_kraus, hermitian_eig
from ..exceptions import ChannelException
from ..utils import validate_qubit

logger = logging.getLogger(__name__)

CHOI_CLAMP = 1e-9
KRAUS_CUTOFF = 1e-13

_UNITS = [np.outer(np.eye(2)[a], np.eye(2)[b]).astype(complex) for a in range(2) for b in range(2)]


class QubitChannel(ABC):
    """
    Abstract base class for all single-qubit noise maps.

    Subclasses define the action on a 2x2 operator; the Choi matrix, the Kraus set and the
    Pauli transfer matrix are derived from it.
    """

    @abstractmethod
    def act(self, operator: np.ndarray) -> np.ndarray:
        """
        Image of a single-qubit operator (not necessarily a state) under the map.
        """
        pass

    def choi(self) -> np.ndarray:
        """``J = sum_ab |a><b| (x) L(|a><b|)``, input factor first."""
        blocks = [np.kron(unit, self.act(unit)) for unit in _UNITS]
        return np.sum(blocks, axis = 0)

    @cached_property
    def _kraus(self) -> List[np.ndarray]:
        values, vectors = hermitian_eig(self.choi())

        smallest = float(values[-1])
        if smallest < -CHOI_CLAMP:
            raise ChannelException(
                error_code = "CHN002",
                method = self.__class__.__name__,
                value = smallest,
                suggestion = "The map is not completely positive; check its parameters."
            )

        ops = [
            np.sqrt(value) * vectors[:, m].reshape(2, 2).T
            for m, value in enumerate(values)
            if value > KRAUS_CUTOFF
        ]
        logger.debug("%r: %d Kraus operators", self, len(ops))
        return ops

    def kraus(self) -> List[np.ndarray]:
        """Operator-sum form ``{K_m}`` with ``sum K_m^dagger K_m = I``."""
        return [k.copy() for k in self._kraus]

    def pauli_transfer_matrix(self) -> np.ndarray:
        """``T_ij = Tr(sigma_i L(sigma_j)) / 2`` in the basis I, X, Y, Z."""
        return np.real(np.array([
            [np.trace(p_i @ self.act(p_j)) / 2 for p_j in PAULIS]
            for p_i in PAULIS
        ]))

    @property
    def is_pauli(self) -> bool:
        """Whether the map is a Pauli channel (diagonal transfer matrix)."""
        ptm = self.pauli_transfer_matrix()
        return bool(np.max(np.abs(ptm - np.diag(np.diag(ptm)))) < 1e-12)

    @property
    def is_identity(self) -> bool:
        return bool(np.max(np.abs(self.pauli_transfer_matrix() - np.eye(4))) < 1e-12)

    def apply(
            self,
            rho: Union[DensityMatrix, np.ndarray],
            qubit: int = 0
    ) -> Union[DensityMatrix, np.ndarray]:
        """
        Apply the map to one qubit of a density matrix, identity elsewhere.

        Args:
            rho (DensityMatrix | np.ndarray): State, or a raw operator which is returned raw.
            qubit (int): Target qubit.
        """
        if isinstance(rho, DensityMatrix):
            validate_qubit(qubit, rho.n, f"{self.__class__.__name__}.apply")
            return DensityMatrix(apply_kraus(rho.entries, self._kraus, qubit))

        return apply_kraus(np.asarray(rho, dtype = complex), self._kraus, qubit)


ChannelLike = Optional[Union[QubitChannel, Mapping[int, QubitChannel]]]


def channel_map(channels: ChannelLike, qubits: Iterable[int]) -> dict:
    """
    Per-qubit channels for ``qubits``: a single channel is shared, a mapping is looked up and
    missing qubits get ``None`` (identity).
    """
    qubits = list(qubits)
    if channels is None:
        return {q: None for q in qubits}
    if isinstance(channels, QubitChannel):
        return {q: channels for q in qubits}
    return {q: channels.get(q) for q in qubits}


def apply_channels(matrix: np.ndarray, channels: Mapping[int, Optional[QubitChannel]]) -> np.ndarray:
    """Apply per-qubit channels in ascending qubit order to a raw density operator."""
    for qubit in sorted(channels):
        channel = channels[qubit]
        if channel is not None:
            matrix = channel.apply(matrix, qubit)
    return matrix


def kraus(ch: QubitChannel) -> List[np.ndarray]:
    return ch.kraus()


def apply_channel(ch: QubitChannel, rho: DensityMatrix, qubit: int) -> DensityMatrix:
    return ch.apply(rho, qubit)
