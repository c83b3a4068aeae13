from .base import NoisyOneWayException
from .error_code_registry import ErrorCodeRegistry
from .configuration import ConfigurationException
from .state import StateException
from .graph import GraphException
from .channel import ChannelException
from .pattern import PatternException
from .fidelity import FidelityException
from .simulation import SimulationException
from .protocol import ProtocolException
from .correlation import CorrelationException

__all__ = [
    "NoisyOneWayException",
    "ErrorCodeRegistry",
    "ConfigurationException",
    "StateException",
    "GraphException",
    "ChannelException",
    "PatternException",
    "FidelityException",
    "SimulationException",
    "ProtocolException",
    "CorrelationException",
]
