from .base import Protocol
from .rsp import rsp, rsp_target
from .rotation import rotation, rotation_unitary
from .cnot import cnot15
from .dj import (dj, truth_table, is_constant, outcome_distribution, zero_readout_probability,
                 success_probability)
from .replacement import (classical_replacement, replacement_maps, EnsembleResource,
                          ReplacementReport)
from .ancilla import AncillaReport, ancilla_step, ancilla_entangling_step
from .catalog import PROTOCOLS, build_protocol



__all__ = [
    "Protocol",
    "rsp",
    "rsp_target",
    "rotation",
    "rotation_unitary",
    "cnot15",
    "dj",
    "truth_table",
    "is_constant",
    "outcome_distribution",
    "zero_readout_probability",
    "success_probability",
    "classical_replacement",
    "replacement_maps",
    "EnsembleResource",
    "ReplacementReport",
    "AncillaReport",
    "ancilla_step",
    "ancilla_entangling_step",
    "PROTOCOLS",
    "build_protocol"
]
