from .entanglement import concurrence, negativity, von_neumann_entropy, linear_entropy, trace_norm
from .discord import (mutual_information, classical_correlation, conditional_entropy, correlation_tensor,
                      bell_diagonal_discord, discord, fibonacci_directions)
from .mep import MepResult, mep, activate, entanglement_potential, local_unitary
from .profile import CorrelationProfile, correlation_profile



__all__ = [
    "concurrence",
    "negativity",
    "von_neumann_entropy",
    "linear_entropy",
    "trace_norm",
    "mutual_information",
    "classical_correlation",
    "conditional_entropy",
    "correlation_tensor",
    "bell_diagonal_discord",
    "discord",
    "fibonacci_directions",
    "MepResult",
    "mep",
    "activate",
    "entanglement_potential",
    "local_unitary",
    "CorrelationProfile",
    "correlation_profile"
]
