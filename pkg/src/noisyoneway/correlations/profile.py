import pandas as pd

from dataclasses import asdict, dataclass
from typing import Dict

from ..core import partial_trace_array
from .discord import Side, _side, discord, mutual_information
from .entanglement import StateLike, concurrence, entries, linear_entropy, negativity, require_qubits
from .mep import mep


@dataclass(frozen = True)
class CorrelationProfile:
    """
    Correlation measures of one two-qubit state. ``linear_entropy`` is that of the measured
    side's reduced state; ``mep`` is NaN when it was not requested.
    """
    concurrence: float
    negativity: float
    discord: float
    mutual_info: float
    classical_corr: float
    linear_entropy: float
    mep: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)

    def to_series(self) -> pd.Series:
        return pd.Series(self.to_dict())


def correlation_profile(
        rho: StateLike,
        measured_side: Side = "A",
        with_mep: bool = True,
        seed: int = 0
) -> CorrelationProfile:
    matrix = entries(rho)
    require_qubits(matrix, 2, "correlation_profile")
    side = _side(measured_side)

    information = mutual_information(matrix)
    quantum = discord(matrix, side)

    return CorrelationProfile(
        concurrence = concurrence(matrix),
        negativity = negativity(matrix, (0,)),
        discord = quantum,
        mutual_info = information,
        # consistent with the returned discord, closed form included
        classical_corr = information - quantum,
        linear_entropy = linear_entropy(partial_trace_array(matrix, [side])),
        mep = mep(matrix, seed = seed).value if with_mep else float("nan")
    )
