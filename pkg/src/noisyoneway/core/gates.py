import numpy as np

from typing import Sequence, Union

I2 = np.eye(2, dtype = complex)
X = np.array([[0, 1], [1, 0]], dtype = complex)
Y = np.array([[0, -1j], [1j, 0]], dtype = complex)
Z = np.array([[1, 0], [0, -1]], dtype = complex)
H = np.array([[1, 1], [1, -1]], dtype = complex) / np.sqrt(2)

PAULIS = (I2, X, Y, Z)
NAMED = {"I": I2, "X": X, "Y": Y, "Z": Z, "H": H}


def rotation(axis: Sequence[float], phi: float) -> np.ndarray:
    """R_n(phi) = exp(-i phi n.sigma / 2) = cos(phi/2) I - i sin(phi/2) n.sigma."""
    nx, ny, nz = axis
    generator = nx * X + ny * Y + nz * Z
    return np.cos(phi / 2) * I2 - 1j * np.sin(phi / 2) * generator


def rx(phi: float) -> np.ndarray:
    return rotation((1.0, 0.0, 0.0), phi)


def ry(phi: float) -> np.ndarray:
    return rotation((0.0, 1.0, 0.0), phi)


def rz(phi: float) -> np.ndarray:
    return rotation((0.0, 0.0, 1.0), phi)


def euler_unitary(a: float, b: float, c: float) -> np.ndarray:
    """Rz(a) Ry(b) Rz(c): every single-qubit unitary up to a global phase."""
    return rz(a) @ ry(b) @ rz(c)


def bloch_vector(rho: np.ndarray) -> np.ndarray:
    rho = np.asarray(rho)
    return np.real(np.array([np.trace(rho @ p) for p in (X, Y, Z)]))


def operator_on(operator: np.ndarray, qubit: int, n: int) -> np.ndarray:
    """Dense ``n``-qubit matrix of a single-qubit operator."""
    return np.kron(np.kron(np.eye(2 ** qubit), operator), np.eye(2 ** (n - qubit - 1)))


def cz_matrix(n: int, i: int, j: int) -> np.ndarray:
    index = np.arange(2 ** n)
    both = ((index >> (n - 1 - i)) & 1) & ((index >> (n - 1 - j)) & 1)
    return np.diag(np.where(both == 1, -1.0, 1.0)).astype(complex)


def cnot_matrix(n: int, control: int, target: int) -> np.ndarray:
    """Permutation matrix of CNOT on ``n`` qubits."""
    index = np.arange(2 ** n)
    flip = (index >> (n - 1 - control)) & 1
    image = index ^ (flip << (n - 1 - target))
    matrix = np.zeros((2 ** n, 2 ** n), dtype = complex)
    matrix[image, index] = 1.0
    return matrix


def resolve(op: Union[str, np.ndarray]) -> np.ndarray:
    """Named gate (``"X"``, ``"H"``...) or an explicit 2x2 matrix."""
    if isinstance(op, str):
        return NAMED[op.upper()]
    return np.asarray(op, dtype = complex)
