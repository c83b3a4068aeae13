import json
import math
import numpy as np

from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from ..channels import KINDS
from ..exceptions import ConfigurationException

PROTOCOL_NAMES = ("rsp", "rotation", "cnot15", "dj", "ancilla")
MEASURES = ("fidelity", "concurrence", "negativity", "discord", "mep", "bound")

# measures each protocol can produce
AVAILABLE = {
    "rsp": {"fidelity", "concurrence", "negativity", "discord", "mep"},
    "rotation": {"fidelity", "negativity"},
    "cnot15": {"fidelity"},
    "dj": {"fidelity", "negativity"},
    "ancilla": {"fidelity", "bound"}
}

NOISE_TARGETS = ("measured", "all")


# ------------------------------------
#              Helpers
# ------------------------------------

def _require(document: dict, key: str, path: str):
    if key not in document:
        raise ConfigurationException(
            error_code = "CON001",
            method = "ExperimentConfig",
            parameter = f"{path}.{key}" if path else key
        )
    return document[key]


def _number(value, path: str, minimum: Optional[float] = None) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigurationException(
            error_code = "CON004",
            method = "ExperimentConfig",
            parameter = path,
            suggestion = f"Expected a number, got {type(value).__name__}."
        )
    if not math.isfinite(value) or (minimum is not None and value < minimum):
        raise ConfigurationException(
            error_code = "CON002",
            method = "ExperimentConfig",
            parameter_context = path,
            suggestion = f"Expected a finite number >= {minimum}, got {value}."
        )
    return float(value)


def _integer(value, path: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigurationException(
            error_code = "CON004",
            method = "ExperimentConfig",
            parameter = path,
            suggestion = f"Expected an integer, got {type(value).__name__}."
        )
    if value < minimum:
        raise ConfigurationException(
            error_code = "CON002",
            method = "ExperimentConfig",
            parameter_context = path,
            suggestion = f"Expected at least {minimum}, got {value}."
        )
    return value


# ------------------------------------
#             The config
# ------------------------------------

@dataclass(frozen = True)
class ExperimentConfig:
    """
    A sweep over the dimensionless time ``Gamma t``.

    Attributes:
        protocol (str): One of ``PROTOCOL_NAMES``.
        channels (List[dict]): Channel documents, each with a ``label``; ``t`` is set per point.
            A document may narrow the measures evaluated for it with its own ``measures`` list.
        times (Tuple[float, ...]): Sweep points in output order.
        measures (Tuple[str, ...]): Requested measures.
        params (dict): Protocol keyword arguments.
        seed (int): Seed for random inputs and optimizer starts.
        output (str, optional): CSV path; the JSON sidecar goes next to it.
        workers (int): Threads evaluating sweep points.
        outcomes (bool): Also write the per-outcome fidelity table.
        noise_on (str): ``"measured"`` vertices only, or ``"all"`` vertices.
    """
    protocol: str
    channels: List[dict]
    times: Tuple[float, ...]
    measures: Tuple[str, ...] = ("fidelity",)
    params: Dict[str, Any] = field(default_factory = dict)
    seed: int = 0
    output: Optional[str] = None
    workers: int = 1
    outcomes: bool = False
    noise_on: str = "measured"
    sweep: Dict[str, Any] = field(default_factory = dict)

    @classmethod
    def from_dict(cls, document: dict) -> "ExperimentConfig":
        if not isinstance(document, dict):
            raise ConfigurationException(
                error_code = "CON004",
                method = "ExperimentConfig",
                parameter = "<root>",
                suggestion = "The config must be a JSON object."
            )

        protocol = _require(document, "protocol", "")
        if protocol not in PROTOCOL_NAMES:
            raise ConfigurationException(
                error_code = "CON003",
                method = "ExperimentConfig",
                typed_method = f"protocol {protocol!r}",
                suggestion = f"Use one of {', '.join(PROTOCOL_NAMES)}."
            )

        channels = cls._channels(_require(document, "channels", ""))
        if protocol == "ancilla":
            for i, channel in enumerate(channels):
                if channel["kind"] == "fixed_pole":
                    raise ConfigurationException(
                        error_code = "CON006",
                        method = "ExperimentConfig",
                        typed_method = f"channel kind 'fixed_pole' at channels[{i}]",
                        parameter = protocol,
                        suggestion = "Ancilla steps need a channel with mixing probabilities."
                    )
        sweep = _require(document, "sweep", "")
        times = cls._times(sweep)

        measures = document.get("measures", ["fidelity"])
        if not isinstance(measures, list) or not measures:
            raise ConfigurationException(
                error_code = "CON004",
                method = "ExperimentConfig",
                parameter = "measures",
                suggestion = "Give a non-empty list of measures."
            )
        for i, measure in enumerate(measures):
            if measure not in MEASURES:
                raise ConfigurationException(
                    error_code = "CON003",
                    method = "ExperimentConfig",
                    typed_method = f"measure {measure!r} at measures[{i}]",
                    suggestion = f"Use one of {', '.join(MEASURES)}."
                )
            if measure not in AVAILABLE[protocol]:
                raise ConfigurationException(
                    error_code = "CON006",
                    method = "ExperimentConfig",
                    typed_method = measure,
                    parameter = protocol,
                    suggestion = f"{protocol} supports {', '.join(sorted(AVAILABLE[protocol]))}."
                )

        for i, channel in enumerate(channels):
            narrowed = channel.get("measures")
            if narrowed is None:
                continue
            if not isinstance(narrowed, list) or not narrowed or not set(narrowed) <= set(measures):
                raise ConfigurationException(
                    error_code = "CON002",
                    method = "ExperimentConfig",
                    parameter_context = f"channels[{i}].measures",
                    suggestion = f"Give a non-empty subset of {measures}."
                )

        params = document.get("params", {})
        if not isinstance(params, dict):
            raise ConfigurationException(
                error_code = "CON004",
                method = "ExperimentConfig",
                parameter = "params",
                suggestion = "params must be an object of protocol arguments."
            )

        noise_on = document.get("noise_on", "measured")
        if noise_on not in NOISE_TARGETS:
            raise ConfigurationException(
                error_code = "CON002",
                method = "ExperimentConfig",
                parameter_context = "noise_on",
                suggestion = f"Use one of {', '.join(NOISE_TARGETS)}."
            )

        output = document.get("output")
        if output is not None and not isinstance(output, str):
            raise ConfigurationException(
                error_code = "CON004",
                method = "ExperimentConfig",
                parameter = "output"
            )

        return cls(
            protocol = protocol,
            channels = channels,
            times = times,
            measures = tuple(dict.fromkeys(measures)),
            params = dict(params),
            seed = _integer(document.get("seed", 0), "seed", 0),
            output = output,
            workers = _integer(document.get("workers", 1), "workers", 1),
            outcomes = bool(document.get("outcomes", False)),
            noise_on = noise_on,
            sweep = dict(sweep)
        )

    @classmethod
    def from_json(cls, path: Union[str, Path]) -> "ExperimentConfig":
        try:
            text = Path(path).read_text()
        except OSError as error:
            raise ConfigurationException(
                error_code = "CON007",
                method = "ExperimentConfig.from_json",
                parameter = str(path),
                suggestion = str(error)
            ) from error
        try:
            document = json.loads(text)
        except json.JSONDecodeError as error:
            raise ConfigurationException(
                error_code = "CON002",
                method = "ExperimentConfig.from_json",
                parameter_context = f"{path} line {error.lineno} column {error.colno}",
                suggestion = error.msg
            ) from error
        return cls.from_dict(document)

    @staticmethod
    def _channels(channels) -> List[dict]:
        if not isinstance(channels, list) or not channels:
            raise ConfigurationException(
                error_code = "CON004",
                method = "ExperimentConfig",
                parameter = "channels",
                suggestion = "Give a non-empty list of channel documents."
            )
        labels = set()
        parsed = []
        for i, channel in enumerate(channels):
            path = f"channels[{i}]"
            if not isinstance(channel, dict):
                raise ConfigurationException(
                    error_code = "CON004",
                    method = "ExperimentConfig",
                    parameter = path
                )
            kind = _require(channel, "kind", path)
            if kind not in KINDS:
                raise ConfigurationException(
                    error_code = "CON003",
                    method = "ExperimentConfig",
                    typed_method = f"channel kind {kind!r} at {path}.kind",
                    suggestion = f"Use one of {', '.join(KINDS)}."
                )
            label = str(channel.get("label", kind.replace("_", "-")))
            if label in labels or "_" in label:
                raise ConfigurationException(
                    error_code = "CON002",
                    method = "ExperimentConfig",
                    parameter_context = f"{path}.label",
                    suggestion = f"Labels must be unique and free of '_', got {label!r}."
                )
            labels.add(label)
            parsed.append({**channel, "label": label})
        return parsed

    @staticmethod
    def _times(sweep) -> Tuple[float, ...]:
        if not isinstance(sweep, dict):
            raise ConfigurationException(
                error_code = "CON004",
                method = "ExperimentConfig",
                parameter = "sweep"
            )
        if "values" in sweep:
            values = sweep["values"]
            if not isinstance(values, list):
                raise ConfigurationException(
                    error_code = "CON004",
                    method = "ExperimentConfig",
                    parameter = "sweep.values"
                )
            times = tuple(_number(v, f"sweep.values[{i}]", 0.0) for i, v in enumerate(values))
        else:
            t_min = _number(_require(sweep, "t_min", "sweep"), "sweep.t_min", 0.0)
            t_max = _number(_require(sweep, "t_max", "sweep"), "sweep.t_max", t_min)
            steps = _integer(_require(sweep, "steps", "sweep"), "sweep.steps", 0)
            times = tuple(float(t) for t in np.linspace(t_min, t_max, steps))

        if len(times) < 2:
            raise ConfigurationException(
                error_code = "CON005",
                method = "ExperimentConfig",
                parameter_context = "sweep",
                suggestion = "Use at least two sweep points."
            )
        return times

    def to_dict(self) -> dict:
        document = asdict(self)
        document["times"] = list(self.times)
        document["measures"] = list(self.measures)
        return document
