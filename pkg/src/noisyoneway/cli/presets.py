"""
Ready-made sweeps for the standard figures. The reference rate is ``Gamma = 1``, so the ``t``
column is ``Gamma t`` directly.
"""

import math

from typing import Dict

from ..exceptions import ConfigurationException
from .config import ExperimentConfig

PRESETS: Dict[str, dict] = {
    # Gamma_w = 0.375 Gamma_pf = Gamma
    "fig1": {
        "protocol": "rsp",
        "channels": [
            {"kind": "pf", "gamma": 1 / 0.375, "label": "pf"},
            {"kind": "white", "gamma": 1.0, "label": "w"}
        ],
        "sweep": {"t_min": 0.0, "t_max": 3.0, "steps": 61},
        "measures": ["fidelity", "concurrence"]
    },
    # Gamma_w = 0.57 Gamma_pf = Gamma
    "fig2": {
        "protocol": "rsp",
        "channels": [
            {"kind": "pf", "gamma": 1 / 0.57, "label": "pf"},
            {"kind": "white", "gamma": 1.0, "label": "w"}
        ],
        "sweep": {"t_min": 0.0, "t_max": 3.0, "steps": 61},
        "measures": ["fidelity", "discord"]
    },
    # Gamma_pf = 2 Gamma_w = Gamma matches the mixing probabilities, so both channels share one
    # fidelity curve (checked by verify rotation_matched_noise); only the negativities differ
    "fig4": {
        "protocol": "rotation",
        "params": {"phi1": math.pi / 4, "phi2": math.pi / 4, "phi3": math.pi / 4, "input_state": "0"},
        "channels": [
            {"kind": "pf", "gamma": 1.0, "label": "pf"},
            {"kind": "white", "gamma": 0.5, "label": "w", "measures": ["negativity"]}
        ],
        "sweep": {"t_min": 0.0, "t_max": 3.0, "steps": 31},
        "measures": ["fidelity", "negativity"]
    },
    "dj": {
        "protocol": "dj",
        "params": {"n": 3, "f": "balanced"},
        "channels": [
            {"kind": "pf", "gamma": 1.0, "label": "pf"},
            {"kind": "white", "gamma": 0.5, "label": "w"}
        ],
        "sweep": {"t_min": 0.0, "t_max": 3.0, "steps": 31},
        "measures": ["fidelity"]
    },
    "ancilla": {
        "protocol": "ancilla",
        "params": {"register_qubits": 2, "qubit": 0, "phi": 0.4},
        "channels": [
            {"kind": "white", "gamma": 1.0, "label": "w"},
            {"kind": "pf", "gamma": 1.0, "label": "pf"}
        ],
        "sweep": {"t_min": 0.0, "t_max": 3.0, "steps": 31},
        "measures": ["fidelity", "bound"]
    }
}


def preset_names():
    return list(PRESETS)


def preset(name: str, **overrides) -> ExperimentConfig:
    """
    Config of a named preset; keyword arguments replace top-level keys (``seed``, ``output`` ...).
    """
    if name not in PRESETS:
        raise ConfigurationException(
            error_code = "CON003",
            method = "preset",
            typed_method = f"preset {name!r}",
            suggestion = f"Available presets: {', '.join(PRESETS)}."
        )
    document = {**PRESETS[name], **{k: v for k, v in overrides.items() if v is not None}}
    return ExperimentConfig.from_dict(document)
