"""
Dense state containers and the linear algebra every other module builds on.

Qubit 0 is the most significant bit of a basis label, so ``|q0 q1 ... q_{n-1}>``
maps to the integer ``q0 * 2**(n-1) + ... + q_{n-1}``.
"""

import logging
import numpy as np

from dataclasses import dataclass
from scipy import linalg as sla
from typing import Iterable, Tuple, Union

from ..exceptions import StateException
from ..utils import validate_qubits

logger = logging.getLogger(__name__)

STRUCTURE_TOL = 1e-10
EIGEN_TOL = 1e-9
NEGATIVE_EIGEN_TOL = 1e-9


def _qubit_count(dimension: int, method: str) -> int:
    n = int(round(np.log2(dimension))) if dimension > 0 else -1
    if n < 0 or 2 ** n != dimension:
        raise StateException(
            error_code = "LIN001",
            method = method,
            dimension = dimension,
            suggestion = "State vectors and matrices must have dimension 2**n."
        )
    return n


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype = complex, copy = True)
    array.setflags(write = False)
    return array


# ------------------------------------
#            State containers
# ------------------------------------

@dataclass(frozen = True, eq = False)
class PureState:
    """
    Normalized state vector of ``n`` qubits.

    Attributes:
        amplitudes (np.ndarray): Complex vector of length 2**n, read-only.
    """
    amplitudes: np.ndarray

    def __post_init__(self):
        vector = np.asarray(self.amplitudes, dtype = complex).reshape(-1)
        _qubit_count(vector.size, self.__class__.__name__)

        norm = float(np.vdot(vector, vector).real)
        if abs(norm - 1.0) > STRUCTURE_TOL:
            raise StateException(
                error_code = "LIN002",
                method = self.__class__.__name__,
                value = norm,
                suggestion = "Normalize the amplitudes or use PureState.normalized()."
            )

        object.__setattr__(self, "amplitudes", _frozen(vector))

    @classmethod
    def normalized(cls, amplitudes) -> "PureState":
        vector = np.asarray(amplitudes, dtype = complex).reshape(-1)
        norm = np.linalg.norm(vector)
        if norm == 0:
            raise StateException(
                error_code = "LIN002",
                method = cls.__name__,
                value = 0.0,
                suggestion = "The zero vector cannot be normalized."
            )
        return cls(vector / norm)

    @classmethod
    def basis(cls, bits: Union[str, Iterable[int]]) -> "PureState":
        """Computational basis state, e.g. ``PureState.basis("01")``."""
        bits = [int(b) for b in bits]
        vector = np.zeros(2 ** len(bits), dtype = complex)
        vector[int("".join(map(str, bits)), 2) if bits else 0] = 1.0
        return cls(vector)

    @classmethod
    def plus(cls, n: int = 1) -> "PureState":
        return cls(np.full(2 ** n, 2 ** (-n / 2), dtype = complex))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "PureState":
        """Haar-random state from normalized complex Gaussian amplitudes."""
        return cls.normalized(rng.normal(size = 2 ** n) + 1j * rng.normal(size = 2 ** n))

    @property
    def n(self) -> int:
        return _qubit_count(self.amplitudes.size, self.__class__.__name__)

    def to_density(self) -> "DensityMatrix":
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))

    def __repr__(self):
        return f"PureState(n={self.n})"


@dataclass(frozen = True, eq = False)
class DensityMatrix:
    """
    Density matrix of ``n`` qubits: Hermitian, unit trace, positive semidefinite.

    Attributes:
        entries (np.ndarray): Complex 2**n x 2**n matrix, read-only.
    """
    entries: np.ndarray

    def __post_init__(self):
        method = self.__class__.__name__
        matrix = np.asarray(self.entries, dtype = complex)

        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise StateException(
                error_code = "LIN007",
                method = method,
                detail = "matrix is not square",
                value = None
            )
        _qubit_count(matrix.shape[0], method)

        deviation = float(np.max(np.abs(matrix - matrix.conj().T)))
        if deviation > STRUCTURE_TOL:
            raise StateException(
                error_code = "LIN006",
                method = method,
                value = deviation
            )

        trace = complex(np.trace(matrix))
        if abs(trace - 1.0) > STRUCTURE_TOL:
            raise StateException(
                error_code = "LIN007",
                method = method,
                detail = "trace differs from 1",
                value = trace.real
            )

        smallest = float(np.linalg.eigvalsh(matrix)[0])
        if smallest < -NEGATIVE_EIGEN_TOL:
            raise StateException(
                error_code = "LIN007",
                method = method,
                detail = "negative eigenvalue",
                value = smallest
            )

        object.__setattr__(self, "entries", _frozen(matrix))

    @classmethod
    def from_unnormalized(cls, matrix: np.ndarray) -> "DensityMatrix":
        matrix = np.asarray(matrix, dtype = complex)
        matrix = (matrix + matrix.conj().T) / 2
        return cls(matrix / np.trace(matrix).real)

    @classmethod
    def maximally_mixed(cls, n: int = 1) -> "DensityMatrix":
        return cls(np.eye(2 ** n, dtype = complex) / 2 ** n)

    @property
    def n(self) -> int:
        return _qubit_count(self.entries.shape[0], self.__class__.__name__)

    def purity(self) -> float:
        return float(np.real(np.trace(self.entries @ self.entries)))

    def expectation(self, operator: np.ndarray) -> complex:
        return complex(np.trace(self.entries @ operator))

    def __repr__(self):
        return f"DensityMatrix(n={self.n})"


State = Union[PureState, DensityMatrix]


# ------------------------------------
#              Operations
# ------------------------------------

def tensor(a: State, b: State) -> State:
    """
    Kronecker product with ``a`` on the high-order qubits.

    Args:
        a (PureState | DensityMatrix): Left factor (qubits 0..n_a-1).
        b (PureState | DensityMatrix): Right factor, same kind as ``a``.
    """

    if isinstance(a, PureState) and isinstance(b, PureState):
        return PureState(np.kron(a.amplitudes, b.amplitudes))

    if isinstance(a, DensityMatrix) and isinstance(b, DensityMatrix):
        return DensityMatrix(np.kron(a.entries, b.entries))

    raise StateException(
        error_code = "LIN003",
        method = "tensor",
        detail = f"{type(a).__name__} and {type(b).__name__}",
        suggestion = "Convert the pure state with to_density() first."
    )


def partial_trace_array(matrix: np.ndarray, keep: Iterable[int]) -> np.ndarray:
    """
    Partial trace on a raw (possibly unnormalized) operator. ``keep`` is assumed valid.
    """
    n = _qubit_count(matrix.shape[0], "partial_trace")
    keep = sorted(set(keep))
    traced = [q for q in range(n) if q not in keep]

    reshaped = np.asarray(matrix).reshape([2] * (2 * n))

    # Trace from the highest index down so lower axis numbers stay valid
    for q in reversed(traced):
        half = reshaped.ndim // 2
        reshaped = np.trace(reshaped, axis1 = q, axis2 = q + half)

    dim = 2 ** len(keep)
    return reshaped.reshape(dim, dim)


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """
    Reduced density matrix over the qubits in ``keep``, in their original order.
    """
    keep = list(keep)
    if not keep:
        raise StateException(
            error_code = "LIN004",
            method = "partial_trace",
            suggestion = "Keep at least one qubit."
        )
    validate_qubits(keep, rho.n, "partial_trace")

    return DensityMatrix(partial_trace_array(rho.entries, keep))


def partial_transpose(matrix: np.ndarray, qubits: Iterable[int]) -> np.ndarray:
    """
    Transpose the row and column indices of the listed qubits.
    """
    n = _qubit_count(matrix.shape[0], "partial_transpose")
    reshaped = np.asarray(matrix).reshape([2] * (2 * n))

    axes = list(range(2 * n))
    for q in qubits:
        axes[q], axes[q + n] = axes[q + n], axes[q]

    return reshaped.transpose(axes).reshape(matrix.shape)


def hermitian_eig(m: Union[np.ndarray, DensityMatrix]) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigen decomposition of a Hermitian matrix.

    Returns:
        Tuple[np.ndarray, np.ndarray]: Eigenvalues in descending order and the matching
        eigenvectors as columns.
    """
    matrix = m.entries if isinstance(m, DensityMatrix) else np.asarray(m, dtype = complex)

    deviation = float(np.max(np.abs(matrix - matrix.conj().T))) if matrix.size else 0.0
    if deviation > 1e-8:
        raise StateException(
            error_code = "LIN006",
            method = "hermitian_eig",
            value = deviation,
            suggestion = "Symmetrize the matrix or use a general eigensolver."
        )

    hermitian = (matrix + matrix.conj().T) / 2
    values, vectors = sla.eigh(hermitian)
    values, vectors = values[::-1], vectors[:, ::-1]

    error = float(np.max(np.abs(hermitian - (vectors * values) @ vectors.conj().T)))
    if error > EIGEN_TOL:
        raise StateException(
            error_code = "LIN008",
            method = "hermitian_eig",
            value = error
        )

    return values, vectors


# ------------------------------------
#        Local operator kernels
# ------------------------------------

def apply_operator(vector: np.ndarray, operator: np.ndarray, qubit: int) -> np.ndarray:
    """
    Apply a 2x2 operator to one qubit of a state vector (no validation, no normalization).
    """
    n = _qubit_count(vector.size, "apply_operator")
    reshaped = np.asarray(vector).reshape(2 ** qubit, 2, 2 ** (n - qubit - 1))
    return np.einsum("ab,ibj->iaj", operator, reshaped).reshape(-1)


def apply_left(matrix: np.ndarray, operator: np.ndarray, qubit: int) -> np.ndarray:
    """Left-multiply an operator by a single-qubit operator on ``qubit``."""
    n = _qubit_count(matrix.shape[0], "apply_left")
    reshaped = np.asarray(matrix).reshape(2 ** qubit, 2, 2 ** (n - qubit - 1), matrix.shape[1])
    return np.einsum("ab,ibjc->iajc", operator, reshaped).reshape(matrix.shape)


def conjugate(matrix: np.ndarray, operator: np.ndarray, qubit: int) -> np.ndarray:
    """``O M O^dagger`` with ``O`` acting on ``qubit``."""
    left = apply_left(matrix, operator, qubit)
    return apply_left(left.conj().T, operator, qubit).conj().T


def apply_kraus(matrix: np.ndarray, kraus_ops, qubit: int) -> np.ndarray:
    """Sum over ``K M K^dagger`` for a Kraus set acting on ``qubit``."""
    result = np.zeros_like(np.asarray(matrix, dtype = complex))
    for k in kraus_ops:
        result = result + conjugate(matrix, k, qubit)
    return result


def apply_cz(vector: np.ndarray, i: int, j: int) -> np.ndarray:
    """Controlled-Z as a diagonal phase update."""
    n = _qubit_count(vector.size, "apply_cz")
    index = np.arange(vector.size)
    both = ((index >> (n - 1 - i)) & 1) & ((index >> (n - 1 - j)) & 1)
    return np.where(both == 1, -vector, vector)


def project_qubit(vector: np.ndarray, bra: np.ndarray, qubit: int) -> np.ndarray:
    """
    Contract ``qubit`` with the bra ``<b|``; the result lives on the remaining qubits.
    """
    n = _qubit_count(vector.size, "project_qubit")
    reshaped = np.asarray(vector).reshape(2 ** qubit, 2, 2 ** (n - qubit - 1))
    return np.einsum("b,ibj->ij", bra, reshaped).reshape(-1)


def project_matrix(matrix: np.ndarray, ket: np.ndarray, qubit: int) -> np.ndarray:
    """
    ``<b|_q M |b>_q`` over the remaining qubits, ``ket`` being ``|b>``.
    """
    n = _qubit_count(matrix.shape[0], "project_matrix")
    low, high = 2 ** qubit, 2 ** (n - qubit - 1)
    reshaped = np.asarray(matrix).reshape(low, 2, high, low, 2, high)
    reduced = np.einsum("a,iajkbl,b->ijkl", ket.conj(), reshaped, ket)
    dim = low * high
    return reduced.reshape(dim, dim)


def embed(vectors_by_qubit: dict, n: int) -> np.ndarray:
    """
    Product state over ``n`` qubits from a mapping qubit -> 2-vector; unlisted qubits are |+>.
    """
    plus = np.array([1, 1], dtype = complex) / np.sqrt(2)
    vector = np.ones(1, dtype = complex)
    for q in range(n):
        vector = np.kron(vector, vectors_by_qubit.get(q, plus))
    return vector


def place_state(block: np.ndarray, positions, n: int) -> np.ndarray:
    """
    Put a (possibly entangled) state of ``len(positions)`` qubits on ``positions`` and |+>
    on every other qubit of an ``n``-qubit register.
    """
    positions = list(positions)
    validate_qubits(positions, n, "place_state")
    others = [q for q in range(n) if q not in positions]

    rest = np.full(2 ** len(others), 2 ** (-len(others) / 2), dtype = complex)
    full = np.kron(np.asarray(block, dtype = complex).reshape(-1), rest)

    # Axes are ordered positions + others; move them back to natural order
    order = positions + others
    return full.reshape([2] * n).transpose(np.argsort(order)).reshape(-1)


def state_fidelity(target: np.ndarray, rho: np.ndarray) -> float:
    """``<t| rho |t>`` for a normalized target vector (or |<t|psi>|^2 for a vector)."""
    rho = np.asarray(rho)
    if rho.ndim == 1:
        return float(abs(np.vdot(target, rho)) ** 2)
    return float(np.real(np.vdot(target, rho @ target)))


