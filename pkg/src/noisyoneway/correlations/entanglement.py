import numpy as np

from typing import Iterable, Union

from ..core import DensityMatrix, Y, hermitian_eig, partial_transpose
from ..exceptions import CorrelationException

StateLike = Union[DensityMatrix, np.ndarray]

_YY = np.kron(Y, Y)

ZERO_EIGENVALUE = 1e-14


def entries(rho: StateLike) -> np.ndarray:
    return rho.entries if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype = complex)


def require_qubits(matrix: np.ndarray, n: int, method: str) -> None:
    if matrix.shape != (2 ** n, 2 ** n):
        raise CorrelationException(
            error_code = "COR001",
            method = method,
            expected = n,
            detail = f"a {matrix.shape[0]}x{matrix.shape[1]} matrix"
        )


def trace_norm(matrix: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    values, _ = hermitian_eig(matrix)
    return float(np.sum(np.abs(values)))


def psd_sqrt(matrix: np.ndarray, floor: float = ZERO_EIGENVALUE) -> np.ndarray:
    """Square root of a positive semidefinite matrix; eigenvalues below ``floor`` count as zero."""
    values, vectors = hermitian_eig(matrix)
    roots = np.sqrt(np.where(values > floor, values, 0.0))
    return (vectors * roots) @ vectors.conj().T


def concurrence(rho: StateLike) -> float:
    """
    Wootters concurrence ``max(0, l1 - l2 - l3 - l4)``.

    The ``l_i`` are the singular values of ``sqrt(rho) sqrt(rho~)`` with ``rho~ = (Y x Y) rho* (Y x Y)``,
    in decreasing order; they equal the square roots of the eigenvalues of ``rho rho~`` without
    taking a square root of rounding noise.
    """
    matrix = entries(rho)
    require_qubits(matrix, 2, "concurrence")

    root = psd_sqrt(matrix)
    flipped_root = _YY @ root.conj() @ _YY
    values = np.linalg.svd(root @ flipped_root, compute_uv = False)
    return float(max(0.0, values[0] - values[1] - values[2] - values[3]))


def negativity(rho: StateLike, partition: Iterable[int] = (0,)) -> float:
    """
    ``(||rho^{T_A}||_1 - 1) / 2`` with ``A`` the qubits listed in ``partition``.
    """
    matrix = entries(rho)
    return max(0.0, (trace_norm(partial_transpose(matrix, list(partition))) - 1.0) / 2)


def von_neumann_entropy(rho: StateLike) -> float:
    """Entropy in bits."""
    values, _ = hermitian_eig(entries(rho))
    values = values[values > 1e-15]
    return float(-np.sum(values * np.log2(values)))


def linear_entropy(rho: StateLike) -> float:
    """Normalized linear entropy ``2 (1 - Tr rho^2)`` of a single qubit."""
    matrix = entries(rho)
    require_qubits(matrix, 1, "linear_entropy")
    return float(np.clip(2 * (1 - np.real(np.trace(matrix @ matrix))), 0.0, 1.0))
