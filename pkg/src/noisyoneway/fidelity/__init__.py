from .base import FidelityReport, FidelityEngine, average
from .kernel import AnswerKernel, answer_kernel, kraus_images
from .adaptive import AdaptiveFidelity, fidelity_adaptive
from .nonadaptive import NonAdaptiveFidelity, fidelity_nonadaptive



__all__ = [
    "FidelityReport",
    "FidelityEngine",
    "average",
    "AnswerKernel",
    "answer_kernel",
    "kraus_images",
    "AdaptiveFidelity",
    "fidelity_adaptive",
    "NonAdaptiveFidelity",
    "fidelity_nonadaptive"
]
