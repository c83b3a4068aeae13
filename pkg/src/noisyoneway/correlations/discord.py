"""
Quantum mutual information, classical correlation and discord of two-qubit states.

The classical correlation is maximized over orthogonal projective measurements on one side,
parameterized by the Bloch direction ``(theta, phi)`` of the first projector.
"""

import logging
import numpy as np

from scipy.optimize import minimize
from typing import Literal, Tuple, Union

from ..core import PAULIS, bloch_vector, partial_trace_array
from ..exceptions import CorrelationException
from .entanglement import StateLike, entries, require_qubits, von_neumann_entropy

logger = logging.getLogger(__name__)

DISCORD_STARTS = 16
DISCORD_TOL = 1e-8
CLOSED_FORM_TOL = 1e-6
LOCAL_BLOCH_TOL = 1e-10

Side = Union[int, Literal["A", "B"]]


def _side(measured_side: Side) -> int:
    if measured_side in ("A", 0):
        return 0
    if measured_side in ("B", 1):
        return 1
    raise CorrelationException(
        error_code = "COR001",
        method = "discord",
        expected = 2,
        detail = f"measured side {measured_side!r}",
        suggestion = "Measure side 'A' (qubit 0) or 'B' (qubit 1)."
    )


def _binary_entropy(x: float) -> float:
    x = float(np.clip(x, 0.0, 1.0))
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1 - x) * np.log2(1 - x))


def fibonacci_directions(count: int) -> np.ndarray:
    """``count`` nearly uniform points on the sphere as ``(theta, phi)`` pairs."""
    golden = np.pi * (3.0 - np.sqrt(5.0))
    i = np.arange(count)
    z = 1.0 - 2.0 * (i + 0.5) / count
    return np.column_stack([np.arccos(z), (golden * i) % (2 * np.pi)])


def _projector(theta: float, phi: float) -> np.ndarray:
    n = (np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta))
    return (PAULIS[0] + n[0] * PAULIS[1] + n[1] * PAULIS[2] + n[2] * PAULIS[3]) / 2


def mutual_information(rho: StateLike) -> float:
    """``S(A) + S(B) - S(AB)`` in bits."""
    matrix = entries(rho)
    require_qubits(matrix, 2, "mutual_information")
    return (
        von_neumann_entropy(partial_trace_array(matrix, [0]))
        + von_neumann_entropy(partial_trace_array(matrix, [1]))
        - von_neumann_entropy(matrix)
    )


def conditional_entropy(matrix: np.ndarray, side: int, angles: Tuple[float, float]) -> float:
    """
    Average entropy of the unmeasured qubit after measuring ``side`` along ``angles``.
    """
    projector = _projector(*angles)
    other = 1 - side
    total = 0.0
    for p_op in (projector, PAULIS[0] - projector):
        lift = np.kron(p_op, PAULIS[0]) if side == 0 else np.kron(PAULIS[0], p_op)
        reduced = partial_trace_array(lift @ matrix @ lift, [other])
        p = float(np.real(np.trace(reduced)))
        if p > 1e-12:
            total += p * von_neumann_entropy(reduced / p)
    return total


def classical_correlation(
        rho: StateLike,
        measured_side: Side = "A",
        starts: int = DISCORD_STARTS,
        tol: float = DISCORD_TOL
) -> float:
    """
    ``S(unmeasured) - min sum_k p_k S(unmeasured | k)`` over projective measurements.

    Powell's direction-set search runs from ``starts`` Fibonacci-sphere directions and the best
    value wins.
    """
    matrix = entries(rho)
    require_qubits(matrix, 2, "classical_correlation")
    side = _side(measured_side)

    best = np.inf
    for start in fibonacci_directions(max(starts, 1)):
        result = minimize(
            lambda x: conditional_entropy(matrix, side, (x[0], x[1])),
            start,
            method = "Powell",
            options = {"xtol": tol, "ftol": tol * 1e-2}
        )
        best = min(best, float(result.fun))

    logger.debug("classical correlation: %d starts, min conditional entropy %.12g", starts, best)
    return von_neumann_entropy(partial_trace_array(matrix, [1 - side])) - best


def has_maximally_mixed_marginals(rho: StateLike, tol: float = LOCAL_BLOCH_TOL) -> bool:
    matrix = entries(rho)
    return all(
        np.linalg.norm(bloch_vector(partial_trace_array(matrix, [q]))) < tol for q in (0, 1)
    )


def correlation_tensor(rho: StateLike) -> np.ndarray:
    """``T_ij = Tr(rho sigma_i x sigma_j)`` for ``i, j`` in x, y, z."""
    matrix = entries(rho)
    require_qubits(matrix, 2, "correlation_tensor")
    return np.real(np.array([
        [np.trace(matrix @ np.kron(a, b)) for b in PAULIS[1:]] for a in PAULIS[1:]
    ]))


def bell_diagonal_discord(rho: StateLike) -> Tuple[float, float, float]:
    """
    Closed form for states whose single-qubit marginals are maximally mixed.

    The measured-side outcome leaves the other qubit with Bloch vector ``T^T n``, so the best
    measurement follows the largest singular value ``c`` of the correlation tensor and
    ``C = 1 - H((1 + c) / 2)``.

    Returns:
        Tuple[float, float, float]: (discord, mutual information, classical correlation).
    """
    matrix = entries(rho)
    require_qubits(matrix, 2, "bell_diagonal_discord")
    if not has_maximally_mixed_marginals(matrix):
        raise CorrelationException(
            error_code = "COR001",
            method = "bell_diagonal_discord",
            expected = 2,
            detail = "a state with non-vanishing local Bloch vectors",
            suggestion = "Use discord(), which optimizes numerically."
        )

    c = float(np.max(np.linalg.svd(correlation_tensor(matrix), compute_uv = False)))
    information = mutual_information(matrix)
    classical = 1.0 - _binary_entropy((1 + min(c, 1.0)) / 2)
    return max(0.0, information - classical), information, classical


def discord(
        rho: StateLike,
        measured_side: Side = "A",
        starts: int = DISCORD_STARTS,
        tol: float = DISCORD_TOL
) -> float:
    """
    Quantum discord ``I - C`` with ``C`` maximized over projective measurements on
    ``measured_side``.

    For states with maximally mixed marginals the optimizer is cross-checked against the closed
    form and the closed-form value is returned.

    Raises:
        CorrelationException (COR002): If optimizer and closed form differ by more than 1e-6.
    """
    matrix = entries(rho)
    require_qubits(matrix, 2, "discord")

    information = mutual_information(matrix)
    classical = classical_correlation(matrix, measured_side, starts, tol)
    value = max(0.0, information - classical)

    if has_maximally_mixed_marginals(matrix):
        closed, _, _ = bell_diagonal_discord(matrix)
        gap = abs(closed - value)
        if gap > CLOSED_FORM_TOL:
            raise CorrelationException(
                error_code = "COR002",
                method = "discord",
                detail = gap,
                suggestion = "Increase the number of optimizer starts."
            )
        return closed

    return value
