"""
Time-homogeneous single-qubit open dynamics with an inversion rate ``B``, a polarization rate
``C`` and a bath parameter ``S``:

    L(rho) = sum_j lambda_j sigma_j rho sigma_j
             + mu [sigma_3 rho + rho sigma_3 - i sigma_1 rho sigma_2 + i sigma_2 rho sigma_1]

In Bloch form the transverse components decay as ``exp(-C t)``, the longitudinal one as
``exp(-B t)``, and the sphere is pulled towards ``(2S - 1) z``.
"""

import math
import numpy as np

from dataclasses import dataclass
from typing import Literal, Tuple

from ..core import X, Y, Z
from ..exceptions import ChannelException, ConfigurationException
from ..utils import validate_bit, validate_nonnegative, validate_probability
from .base import QubitChannel


def _decay(rate: float, t: float) -> float:
    # exp(-inf * 0) must stay 1
    if t == 0 or rate == 0:
        return 1.0
    return math.exp(-rate * t)


@dataclass(frozen = True)
class MixingProbability:
    """
    Probabilities with which the noise swaps the two outcomes of a measured qubit.

    Attributes:
        p_xy (float): For a measurement in the x-y plane.
        p_z (Tuple[float, float]): For a z measurement, indexed by the outcome bit.
    """
    p_xy: float
    p_z: Tuple[float, float]

    def for_measurement(self, alpha: float, k: int = 0) -> float:
        """Weight for a qubit measured at polar angle ``alpha`` with outcome ``k``."""
        if abs(alpha) < 1e-12:
            return self.p_z[validate_bit(k, "MixingProbability", "k")]
        return self.p_xy


@dataclass(frozen = True)
class NoiseChannel(QubitChannel):
    """
    The general single-qubit dynamics evaluated at time ``t``.

    Attributes:
        B (float): Inversion decay rate.
        C (float): Polarization decay rate, at least ``B / 2``.
        S (float): Bath parameter in [0, 1].
        t (float): Exposure time.
    """
    B: float = 0.0
    C: float = 0.0
    S: float = 0.5
    t: float = 0.0

    def __post_init__(self):
        method = self.__class__.__name__
        B = validate_nonnegative(self.B, method, "B")
        C = validate_nonnegative(self.C, method, "C")
        S = validate_probability(self.S, method, "S")
        t = validate_nonnegative(self.t, method, "t")

        if C < B / 2:
            raise ChannelException(
                error_code = "CHN001",
                method = method,
                detail = f"C={C} < B/2={B / 2}",
                suggestion = "The polarization rate must be at least half the inversion rate."
            )

        for name, value in (("B", B), ("C", C), ("S", S), ("t", t)):
            object.__setattr__(self, name, value)

    # ------------------------------------
    #            Constructors
    # ------------------------------------

    @classmethod
    def identity(cls) -> "NoiseChannel":
        return cls()

    @classmethod
    def phase_flip(cls, gamma: float, t: float) -> "NoiseChannel":
        """Dephasing at rate ``gamma``: ``B = 0``, ``C = 2 gamma``."""
        gamma = validate_nonnegative(gamma, "NoiseChannel.phase_flip", "gamma")
        return cls(B = 0.0, C = 2 * gamma, S = 0.5, t = t)

    @classmethod
    def white(cls, gamma: float, t: float) -> "NoiseChannel":
        """Depolarization at rate ``gamma``: ``S = 1/2``, ``B = C = 4 gamma``."""
        gamma = validate_nonnegative(gamma, "NoiseChannel.white", "gamma")
        return cls(B = 4 * gamma, C = 4 * gamma, S = 0.5, t = t)

    @classmethod
    def from_mixing(cls, p_xy: float, kind: Literal["pf", "white"] = "white") -> "NoiseChannel":
        """
        Channel at ``t = 1`` whose x-y mixing probability is ``p_xy`` (at most 1/2).
        """
        p_xy = validate_probability(p_xy, "NoiseChannel.from_mixing", "p_xy")
        if p_xy > 0.5:
            raise ConfigurationException(
                error_code = "CON002",
                method = "NoiseChannel.from_mixing",
                parameter_context = "p_xy",
                suggestion = f"Mixing probabilities of this family are at most 1/2, got {p_xy}."
            )

        rate = math.inf if p_xy == 0.5 else -math.log1p(-2 * p_xy)
        if kind == "pf":
            return cls(B = 0.0, C = rate, S = 0.5, t = 1.0)
        if kind == "white":
            return cls(B = rate, C = rate, S = 0.5, t = 1.0)

        raise ConfigurationException(
            error_code = "CON003",
            method = "NoiseChannel.from_mixing",
            typed_method = f"mixing kind {kind!r}",
            suggestion = "Use kind 'pf' or 'white'."
        )

    def with_time(self, t: float) -> "NoiseChannel":
        return NoiseChannel(B = self.B, C = self.C, S = self.S, t = t)

    # ------------------------------------
    #              Coefficients
    # ------------------------------------

    @property
    def transverse(self) -> float:
        return _decay(self.C, self.t)

    @property
    def longitudinal(self) -> float:
        return _decay(self.B, self.t)

    @property
    def p(self) -> float:
        """Decay probability ``1 - exp(-C t)``; twice the x-y mixing probability."""
        return 1.0 - self.transverse

    def lambdas(self) -> Tuple[float, float, float, float, float]:
        """``(lambda_0, lambda_1, lambda_2, lambda_3, mu)``."""
        ec, eb = self.transverse, self.longitudinal
        l0 = (1 + 2 * ec + eb) / 4
        l1 = (1 - eb) / 4
        l3 = (1 - 2 * ec + eb) / 4
        mu = (2 * self.S - 1) * (1 - eb) / 4
        return l0, l1, l1, l3, mu

    def mixing_probabilities(self) -> MixingProbability:
        _, l1, _, l3, mu = self.lambdas()
        return MixingProbability(
            p_xy = l1 + l3,
            p_z = (2 * l1 - 2 * mu, 2 * l1 + 2 * mu)
        )

    def act(self, operator: np.ndarray) -> np.ndarray:
        l0, l1, l2, l3, mu = self.lambdas()
        rho = np.asarray(operator, dtype = complex)
        result = l0 * rho + l1 * X @ rho @ X + l2 * Y @ rho @ Y + l3 * Z @ rho @ Z
        result = result + mu * (Z @ rho + rho @ Z - 1j * X @ rho @ Y + 1j * Y @ rho @ X)
        return result


def lambdas(ch: NoiseChannel) -> Tuple[float, float, float, float, float]:
    return ch.lambdas()


def mixing_probabilities(ch: NoiseChannel) -> MixingProbability:
    return ch.mixing_probabilities()
