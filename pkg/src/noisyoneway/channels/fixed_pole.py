import math
import numpy as np

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..core import X, Y, Z, hermitian_eig, rotation
from ..utils import validate_probability, validate_unit_axis
from .base import QubitChannel


@dataclass(frozen = True)
class FixedPoleMap(QubitChannel):
    """
    Mixture of the identity and a Bloch rotation, ``(1-p) rho + p R rho R^dagger``.

    The eigenstates of the rotation axis are left untouched, so a qubit measured along the
    axis sees no noise at all.

    Attributes:
        p (float): Weight of the rotation.
        axis (Tuple[float, float, float]): Unit rotation axis.
        phi (float): Rotation angle in radians.
    """
    p: float
    axis: Tuple[float, float, float] = (0.0, 0.0, 1.0)
    phi: float = math.pi

    def __post_init__(self):
        method = self.__class__.__name__
        object.__setattr__(self, "p", validate_probability(self.p, method, "p"))
        object.__setattr__(self, "axis", tuple(float(a) for a in validate_unit_axis(self.axis, method)))
        object.__setattr__(self, "phi", float(self.phi))

    def rotation(self) -> np.ndarray:
        return rotation(self.axis, self.phi)

    def act(self, operator: np.ndarray) -> np.ndarray:
        rho = np.asarray(operator, dtype = complex)
        r = self.rotation()
        return (1 - self.p) * rho + self.p * r @ rho @ r.conj().T

    @property
    def _kraus(self) -> List[np.ndarray]:
        return [np.sqrt(1 - self.p) * np.eye(2, dtype = complex), np.sqrt(self.p) * self.rotation()]

    def protected_basis(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        The two states the map leaves invariant: Bloch vectors ``+axis`` then ``-axis``.

        A rotation by a multiple of 2*pi leaves every state invariant; the z basis is returned.
        """
        if math.isclose(math.remainder(self.phi, 2 * math.pi), 0.0, abs_tol = 1e-12):
            return np.array([1, 0], dtype = complex), np.array([0, 1], dtype = complex)

        nx, ny, nz = self.axis
        _, vectors = hermitian_eig(nx * X + ny * Y + nz * Z)
        return vectors[:, 0], vectors[:, 1]


def protected_basis(m: FixedPoleMap) -> Tuple[np.ndarray, np.ndarray]:
    return m.protected_basis()


def measurement_axis(theta: float, alpha: float, s: int = 0) -> Sequence[float]:
    """
    Bloch vector of the outcome-0 state of a measurement at ``(theta, alpha, s)``.
    """
    delta = (-1) ** s * theta
    return (math.sin(alpha) * math.cos(delta), -math.sin(alpha) * math.sin(delta), math.cos(alpha))
