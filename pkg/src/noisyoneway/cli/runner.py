"""
Sweep execution: one row per point of the ``Gamma t`` axis, one column per measure and channel.
"""

import json
import logging
import time
import networkx
import numpy as np
import pandas as pd
import scipy

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .. import __version__
from ..accessors import SweepAccessor  # noqa: F401  (registers df.sweep)
from ..channels import QubitChannel, apply_channels, channel_from_dict
from ..core import PureState
from ..correlations import concurrence, discord, mep, negativity
from ..exceptions import ConfigurationException
from ..protocols import Protocol, ancilla_entangling_step, ancilla_step, build_protocol, success_probability
from .config import ExperimentConfig

logger = logging.getLogger(__name__)

PREFIXES = {
    "fidelity": "F",
    "concurrence": "C",
    "negativity": "N",
    "discord": "Q",
    "mep": "MEP",
    "bound": "bound"
}

ANCILLA_DEFAULTS = {"register_qubits": 2, "qubit": 0, "phi": 0.4, "step": "single", "partner": 1}


@dataclass(frozen = True, eq = False)
class SweepResult:
    """
    Attributes:
        frame (pd.DataFrame): One row per sweep point, in sweep order.
        outcomes (pd.DataFrame, optional): Per-outcome ``Z`` and ``F`` when requested.
        sidecar (dict): Config echo, versions, wall time, column schema and per-point ``F_bar``.
        paths (List[Path]): Files written, empty when the config has no output.
    """
    frame: pd.DataFrame
    outcomes: Optional[pd.DataFrame]
    sidecar: dict
    paths: List[Path] = field(default_factory = list)


# ------------------------------------
#           Protocol set-up
# ------------------------------------

def _input_state(value) -> PureState:
    if isinstance(value, str):
        return PureState.plus(len(value)) if set(value) == {"+"} else PureState.basis(value)
    return PureState.normalized(np.asarray(value, dtype = complex))


def protocol_for(config: ExperimentConfig) -> Optional[Protocol]:
    """The catalog protocol of a config; None for the ancilla-driven analysis."""
    if config.protocol == "ancilla":
        return None
    params = dict(config.params)
    if "input_state" in params:
        params["input_state"] = _input_state(params["input_state"])
    return build_protocol(config.protocol, **params)


def ancilla_register(config: ExperimentConfig) -> Tuple[PureState, dict]:
    unknown = set(config.params) - set(ANCILLA_DEFAULTS)
    if unknown:
        raise ConfigurationException(
            error_code = "CON002",
            method = "ancilla_register",
            parameter_context = "params of ancilla",
            suggestion = f"Unknown keys {sorted(unknown)}; use {', '.join(ANCILLA_DEFAULTS)}."
        )
    params = {**ANCILLA_DEFAULTS, **config.params}
    register = PureState.random(int(params["register_qubits"]), np.random.default_rng(config.seed))
    return register, params


# ------------------------------------
#          Point evaluation
# ------------------------------------

def _noise(config: ExperimentConfig, protocol: Protocol, channel: QubitChannel) -> Tuple[dict, Optional[dict]]:
    measured = {q: channel for q in protocol.pattern.measured}
    if config.noise_on == "all":
        return measured, {q: channel for q in protocol.pattern.outputs}
    return measured, None


def _measures_for(config: ExperimentConfig, document: dict) -> Tuple[str, ...]:
    return tuple(document.get("measures", config.measures))


def _protocol_point(config: ExperimentConfig, protocol: Protocol, t: float):
    row: Dict[str, float] = {"t": t}
    outcome_frames = []
    summary = []
    pure = None

    for i, document in enumerate(config.channels):
        label = document["label"]
        measures = _measures_for(config, document)
        channel = channel_from_dict(document, t = t, path = f"channels[{i}]")
        measured, answers = _noise(config, protocol, channel)

        if "fidelity" in measures or config.outcomes:
            report = protocol.fidelity(measured, answers)
            summary.append({"t": t, "channel": label, **report.summary()})
            if config.outcomes:
                outcome_frames.append(report.to_frame().assign(t = t, channel = label))
            if "fidelity" in measures:
                if protocol.name == "dj":
                    row[f"F_{label}"] = success_probability(protocol, measured)
                else:
                    row[f"F_{label}"] = report.average()

        dense = [m for m in measures if m in ("concurrence", "negativity", "discord", "mep")]
        if dense:
            if pure is None:
                vector = protocol.resource().state.amplitudes
                pure = np.outer(vector, vector.conj())
            rho = apply_channels(pure, {**measured, **(answers or {})})
            if "concurrence" in dense:
                row[f"C_{label}"] = concurrence(rho)
            if "negativity" in dense:
                row[f"N_{label}"] = negativity(rho, protocol.pattern.outputs)
            if "discord" in dense:
                row[f"Q_{label}"] = discord(rho)
            if "mep" in dense:
                row[f"MEP_{label}"] = mep(rho, seed = config.seed).value

    outcomes = pd.concat(outcome_frames, ignore_index = True) if outcome_frames else None
    return row, outcomes, summary


def _ancilla_point(config: ExperimentConfig, register: PureState, params: dict, t: float):
    row: Dict[str, float] = {"t": t}
    summary = []
    for i, document in enumerate(config.channels):
        label = document["label"]
        measures = _measures_for(config, document)
        channel = channel_from_dict(document, t = t, path = f"channels[{i}]")
        if params["step"] == "entangling":
            report = ancilla_entangling_step(register, int(params["qubit"]), int(params["partner"]), channel)
        else:
            report = ancilla_step(register, int(params["qubit"]), float(params["phi"]), channel)
        summary.append({"t": t, "channel": label, "F_bar": float(report.mean_fidelity)})
        if "fidelity" in measures:
            row[f"F_{label}"] = report.mean_fidelity
        if "bound" in measures:
            row[f"bound_{label}"] = report.bound
            row[f"closed_{label}"] = report.closed_form
    return row, None, summary


def _column_order(config: ExperimentConfig) -> List[str]:
    columns = ["t"]
    for measure in config.measures:
        for document in config.channels:
            if measure not in _measures_for(config, document):
                continue
            columns.append(f"{PREFIXES[measure]}_{document['label']}")
            if measure == "bound":
                columns.append(f"closed_{document['label']}")
    return columns


# ------------------------------------
#                Run
# ------------------------------------

def versions() -> Dict[str, str]:
    return {
        "noisyoneway": __version__,
        "numpy": np.__version__,
        "pandas": pd.__version__,
        "scipy": scipy.__version__,
        "networkx": networkx.__version__
    }


def _output_paths(output: Union[str, Path]) -> Tuple[Path, Path, Path]:
    csv = Path(output)
    return csv, csv.with_suffix(".json"), csv.with_name(f"{csv.stem}_outcomes.csv")


def _write(result_frame: pd.DataFrame, outcomes: Optional[pd.DataFrame], sidecar: dict, output) -> List[Path]:
    csv, sidecar_path, outcomes_path = _output_paths(output)
    try:
        csv.parent.mkdir(parents = True, exist_ok = True)
    except OSError as error:
        raise ConfigurationException(
            error_code = "CON007",
            method = "run",
            parameter = str(csv.parent),
            suggestion = str(error)
        ) from error

    paths = [result_frame.sweep.write(csv)]
    if outcomes is not None:
        paths.append(outcomes.sweep.write(outcomes_path))
    try:
        sidecar_path.write_text(json.dumps(sidecar, indent = 2, sort_keys = True) + "\n")
    except OSError as error:
        raise ConfigurationException(
            error_code = "CON007",
            method = "run",
            parameter = str(sidecar_path),
            suggestion = str(error)
        ) from error
    paths.append(sidecar_path)

    for path in paths:
        logger.info("wrote %s", path)
    return paths


def run(config: ExperimentConfig, output: Optional[Union[str, Path]] = None) -> SweepResult:
    """
    Evaluate every sweep point of ``config`` and write the CSV, the optional outcome table and
    the JSON sidecar to ``output`` (or ``config.output``).

    Rows keep sweep order whatever the worker count; identical configs produce identical CSVs.
    """
    started = time.perf_counter()
    output = output if output is not None else config.output

    if config.protocol == "ancilla":
        register, params = ancilla_register(config)

        def evaluate(t):
            return _ancilla_point(config, register, params, t)
    else:
        protocol = protocol_for(config)
        logger.info("%r: %d sweep points, %d channels", protocol, len(config.times), len(config.channels))

        def evaluate(t):
            return _protocol_point(config, protocol, t)

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers = config.workers) as pool:
            points = list(pool.map(evaluate, config.times))
    else:
        points = []
        for i, t in enumerate(config.times):
            points.append(evaluate(t))
            logger.debug("point %d/%d (t=%.6g) done", i + 1, len(config.times), t)

    frame = pd.DataFrame([row for row, _, _ in points], columns = _column_order(config))
    outcome_frames = [o for _, o, _ in points if o is not None]
    outcomes = None
    if outcome_frames:
        outcomes = pd.concat(outcome_frames, ignore_index = True)
        outcomes = outcomes[["t", "channel", "outcome", "Z", "F"]]
    elif config.outcomes:
        logger.warning("per-outcome table not available for %s", config.protocol)

    sidecar = {
        "config": config.to_dict(),
        "versions": versions(),
        "wall_time_s": time.perf_counter() - started,
        "schema": frame.sweep.schema(),
        "rows": len(frame),
        "summary": [entry for _, _, summary in points for entry in summary]
    }

    paths = _write(frame, outcomes, sidecar, output) if output is not None else []
    logger.info("sweep of %d points finished in %.3f s", len(frame), sidecar["wall_time_s"])
    return SweepResult(frame, outcomes, sidecar, paths)
