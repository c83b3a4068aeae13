__version__ = "0.1.0"

from .accessors import SweepAccessor
from .channels import NoiseChannel, FixedPoleMap, channel_from_dict
from .core import Graph, GraphState, PureState, DensityMatrix, build_graph_state
from .pattern import BooleanExpr, Measurement, Byproduct, MeasurementPattern, OneWayBuilder
from .fidelity import fidelity_adaptive, fidelity_nonadaptive
from .oracle import simulate
from .correlations import concurrence, negativity, discord, mep, correlation_profile
from .protocols import build_protocol, ancilla_step, classical_replacement


__all__ = [
    "__version__",
    "SweepAccessor",
    "NoiseChannel",
    "FixedPoleMap",
    "channel_from_dict",
    "Graph",
    "GraphState",
    "PureState",
    "DensityMatrix",
    "build_graph_state",
    "BooleanExpr",
    "Measurement",
    "Byproduct",
    "MeasurementPattern",
    "OneWayBuilder",
    "fidelity_adaptive",
    "fidelity_nonadaptive",
    "simulate",
    "concurrence",
    "negativity",
    "discord",
    "mep",
    "correlation_profile",
    "build_protocol",
    "ancilla_step",
    "classical_replacement"
]
