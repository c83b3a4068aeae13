from typing import Optional

from ..exceptions import ConfigurationException
from .base import QubitChannel
from .fixed_pole import FixedPoleMap
from .general import NoiseChannel

KINDS = ("general", "pf", "white", "fixed_pole", "identity")

_REQUIRED = {
    "general": ("B", "C", "S"),
    "pf": ("gamma",),
    "white": ("gamma",),
    "fixed_pole": ("p",),
    "identity": (),
}


def channel_from_dict(document: dict, t: Optional[float] = None, path: str = "channel") -> QubitChannel:
    """
    Build a channel from its JSON description.

    ``t`` overrides the document's time, which is how sweeps evaluate one description at many
    times. Fixed-pole maps have no time dependence and ignore it.

    Args:
        document (dict): ``{"kind": ..., ...}``.
        t (float, optional): Exposure time.
        path (str): Location of the document inside a config, for error messages.
    """
    if not isinstance(document, dict):
        raise ConfigurationException(
            error_code = "CON004",
            method = "channel_from_dict",
            parameter = path,
            suggestion = "A channel is described by a JSON object."
        )

    kind = document.get("kind")
    if kind not in KINDS:
        raise ConfigurationException(
            error_code = "CON003",
            method = "channel_from_dict",
            typed_method = f"channel kind {kind!r} at {path}.kind",
            suggestion = f"Use one of {', '.join(KINDS)}."
        )

    missing = [key for key in _REQUIRED[kind] if key not in document]
    if missing:
        raise ConfigurationException(
            error_code = "CON001",
            method = "channel_from_dict",
            parameter = [f"{path}.{key}" for key in missing]
        )

    time = document.get("t", 0.0) if t is None else t

    if kind == "general":
        return NoiseChannel(B = document["B"], C = document["C"], S = document["S"], t = time)
    if kind == "pf":
        return NoiseChannel.phase_flip(document["gamma"], time)
    if kind == "white":
        return NoiseChannel.white(document["gamma"], time)
    if kind == "identity":
        return NoiseChannel.identity()

    return FixedPoleMap(
        p = document["p"],
        axis = tuple(document.get("axis", (0.0, 0.0, 1.0))),
        phi = document.get("phi", 3.141592653589793)
    )


def channel_to_dict(channel: QubitChannel) -> dict:
    if isinstance(channel, FixedPoleMap):
        return {"kind": "fixed_pole", "p": channel.p, "axis": list(channel.axis), "phi": channel.phi}
    return {"kind": "general", "B": channel.B, "C": channel.C, "S": channel.S, "t": channel.t}
