"""
Minimum entanglement potential.

Each system qubit is copied onto a fresh |0> ancilla by a CNOT after a local unitary, and the
entanglement generated between system and ancillas is minimized over the local unitaries.
"""

import logging
import numpy as np

from dataclasses import dataclass
from functools import reduce
from scipy.optimize import minimize

from ..core import cnot_matrix, euler_unitary, partial_transpose
from ..exceptions import CorrelationException
from .entanglement import StateLike, entries, trace_norm

logger = logging.getLogger(__name__)

MEP_MAX_QUBITS = 3
MEP_STARTS = 32
MEP_TOL = 1e-6


@dataclass(frozen = True)
class MepResult:
    """
    Attributes:
        value (float): Smallest ``||rho_act^{T_A'}||_1 - 1`` found.
        converged (bool): Whether the start that produced ``value`` converged.
        starts (int): Number of optimizer starts.
    """
    value: float
    converged: bool
    starts: int

    def __float__(self):
        return self.value


def local_unitary(angles: np.ndarray) -> np.ndarray:
    """Tensor product of ``Rz Ry Rz`` rotations, three angles per qubit."""
    angles = np.asarray(angles, dtype = float).reshape(-1, 3)
    return reduce(np.kron, [euler_unitary(*row) for row in angles])


def activate(rho: StateLike) -> np.ndarray:
    """
    ``rho (x) |0..0><0..0|`` with a CNOT from every system qubit ``i`` onto ancilla ``n + i``.
    """
    matrix = entries(rho)
    n = int(np.log2(matrix.shape[0]))
    ancillas = np.zeros((2 ** n, 2 ** n), dtype = complex)
    ancillas[0, 0] = 1.0
    joint = np.kron(matrix, ancillas)

    copy = reduce(np.matmul, [cnot_matrix(2 * n, i, n + i) for i in range(n)])
    return copy @ joint @ copy.conj().T


def entanglement_potential(rho: StateLike) -> float:
    """``||rho_act^{T_A'}||_1 - 1`` across the system : ancilla cut."""
    activated = activate(rho)
    n = int(np.log2(activated.shape[0])) // 2
    return trace_norm(partial_transpose(activated, range(n, 2 * n))) - 1.0


def mep(
        rho: StateLike,
        starts: int = MEP_STARTS,
        seed: int = 0,
        tol: float = MEP_TOL
) -> MepResult:
    """
    Minimum of the entanglement potential over one local unitary per qubit.

    Nelder-Mead runs from ``starts`` points, the first at the identity and the rest drawn from
    ``numpy.random.default_rng(seed)``.

    Raises:
        CorrelationException (COR003): For more than three qubits.
    """
    matrix = entries(rho)
    n = int(np.log2(matrix.shape[0]))
    if n > MEP_MAX_QUBITS:
        raise CorrelationException(
            error_code = "COR003",
            method = "mep",
            expected = MEP_MAX_QUBITS,
            detail = n,
            suggestion = "Reduce the state to at most three qubits."
        )

    def objective(angles: np.ndarray) -> float:
        u = local_unitary(angles)
        return entanglement_potential(u @ matrix @ u.conj().T)

    rng = np.random.default_rng(seed)
    points = [np.zeros(3 * n)] + [rng.uniform(0, 2 * np.pi, 3 * n) for _ in range(starts - 1)]

    best_value, best_converged = np.inf, False
    for point in points:
        result = minimize(
            objective,
            point,
            method = "Nelder-Mead",
            options = {"xatol": tol, "fatol": tol * 1e-2, "maxiter": 4000 * n}
        )
        if result.fun < best_value:
            best_value, best_converged = float(result.fun), bool(result.success)

    if not best_converged:
        logger.warning("mep: best of %d starts did not converge (value %.6g)", starts, best_value)
    logger.debug("mep over %d qubits: %.12g after %d starts", n, best_value, len(points))

    return MepResult(value = max(0.0, best_value), converged = best_converged, starts = len(points))
