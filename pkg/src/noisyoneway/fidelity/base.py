import logging
import numpy as np
import pandas as pd

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, List, Optional, Union

from ..channels import ChannelLike, NoiseChannel, QubitChannel, channel_map
from ..core import GraphState, PureState
from ..exceptions import ConfigurationException, FidelityException
from ..pattern import AnswerSet, MeasurementPattern, Outcome, ideal_answers

logger = logging.getLogger(__name__)

UNREACHABLE_TOL = 1e-12
RENORMALIZATION_TOL = 1e-6


@dataclass(frozen = True, eq = False)
class FidelityReport:
    """
    Per-outcome probabilities and fidelities of a noisy computation.

    Attributes:
        outcomes (List[Outcome]): Outcome vectors in label order.
        Z (np.ndarray): Probability of each outcome; sums to 1.
        F (np.ndarray): Fidelity of each outcome, NaN where the outcome is unreachable.
    """
    outcomes: List[Outcome]
    Z: np.ndarray
    F: np.ndarray

    @property
    def reachable(self) -> np.ndarray:
        return ~np.isnan(self.F)

    def __getitem__(self, outcome) -> tuple:
        index = self.outcomes.index(tuple(outcome))
        return float(self.Z[index]), float(self.F[index])

    def __len__(self):
        return len(self.outcomes)

    def average(self) -> float:
        """``sum_r Z_r F(r)`` over reachable outcomes."""
        mask = self.reachable
        return float(np.sum(self.Z[mask] * self.F[mask]))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "outcome": ["".join(map(str, o)) for o in self.outcomes],
            "Z": self.Z,
            "F": self.F
        })

    def summary(self) -> Dict[str, float]:
        return {"F_bar": self.average()}

    def __repr__(self):
        return f"FidelityReport(outcomes={len(self.outcomes)}, F_bar={self.average():.6g})"


def average(report: FidelityReport) -> float:
    return report.average()


class FidelityEngine(ABC):
    """
    Abstract base class for the closed-form fidelity engines.

    Attributes:
        pattern (MeasurementPattern): The measurement pattern.
        resource (GraphState | PureState): Noiseless resource the pattern runs on.
        measured_channels (dict): Channel per measured vertex (``None`` is the identity).
        answer_channels (dict): Channel per output vertex.
        target (np.ndarray, optional): Reference answer; defaults to the by-product corrected
            answer of the first reachable branch.
    """

    max_measured: int = 0

    def __init__(
            self,
            pattern: MeasurementPattern,
            resource: Union[GraphState, PureState],
            measured_channels: ChannelLike = None,
            answer_channels: ChannelLike = None,
            target: Optional[np.ndarray] = None
    ):
        self.pattern = pattern
        self.resource = resource
        self.measured_channels = channel_map(measured_channels, pattern.measured)
        self.answer_channels = channel_map(answer_channels, pattern.outputs)
        self.target = target
        self._answers: Optional[AnswerSet] = None

    def __repr__(self):
        return f"{self.__class__.__name__}(M={self.pattern.M}, outputs={list(self.pattern.outputs)})"

    def _validate(self):
        name = self.__class__.__name__

        if self.pattern.M > self.max_measured:
            raise FidelityException(
                error_code = "FID001",
                method = name,
                measured = self.pattern.M,
                limit = self.max_measured
            )

        for m in self.pattern.measurements:
            if not (m.is_xy or m.is_z):
                raise FidelityException(
                    error_code = "FID004",
                    method = name,
                    detail = m.qubit
                )
            channel = self.measured_channels[m.qubit]
            if channel is not None and not isinstance(channel, NoiseChannel):
                raise ConfigurationException(
                    error_code = "CON004",
                    method = name,
                    parameter = f"measured_channels[{m.qubit}]",
                    suggestion = "Measured vertices take channels of the B/C/S family."
                )

    def mixing_table(self) -> np.ndarray:
        """
        ``p[i, k]``: probability that the noise flips outcome ``k`` of the i-th measurement.
        """
        table = np.zeros((self.pattern.M, 2))
        for i, m in enumerate(self.pattern.measurements):
            channel: Optional[QubitChannel] = self.measured_channels[m.qubit]
            if channel is None:
                continue
            mixing = channel.mixing_probabilities()
            table[i] = [mixing.for_measurement(m.alpha, k) for k in (0, 1)]
        return table

    def prepare(self):
        """
        Validate the inputs and enumerate the ideal branches.
        """
        self._validate()
        self._answers = ideal_answers(self.resource, self.pattern)
        return self

    @property
    def answers(self) -> AnswerSet:
        if self._answers is None:
            self.prepare()
        return self._answers

    @abstractmethod
    def evaluate(self) -> FidelityReport:
        """
        Probability and fidelity of every outcome.
        """
        pass

    def _report(self, z_raw: np.ndarray, numerators: np.ndarray) -> FidelityReport:
        """
        Renormalize the outcome probabilities and turn numerators into fidelities.
        """
        total = float(np.sum(z_raw))
        if abs(total - 1.0) > RENORMALIZATION_TOL:
            raise FidelityException(
                error_code = "FID003",
                method = self.__class__.__name__,
                detail = total
            )
        if abs(total - 1.0) > 1e-9:
            logger.warning("outcome probabilities sum to %.12g; renormalizing", total)

        with np.errstate(divide = "ignore", invalid = "ignore"):
            fidelity = np.where(z_raw > UNREACHABLE_TOL, numerators / z_raw, np.nan)

        unreachable = int(np.sum(z_raw <= UNREACHABLE_TOL))
        if unreachable:
            logger.warning("%d outcomes are unreachable; their fidelity is undefined", unreachable)

        return FidelityReport(
            outcomes = list(self.answers),
            Z = z_raw / total,
            F = np.clip(np.real(fidelity), 0.0, None)
        )
