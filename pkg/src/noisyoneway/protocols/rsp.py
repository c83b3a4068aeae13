import math
import numpy as np

from ..core import Graph
from ..pattern import BooleanExpr, Byproduct, Measurement, MeasurementPattern
from .base import Protocol


def rsp_target(phi: float) -> np.ndarray:
    """``cos(phi/2)|0> - i sin(phi/2)|1>``."""
    return np.array([math.cos(phi / 2), -1j * math.sin(phi / 2)], dtype = complex)


def rsp(phi: float = 0.0) -> Protocol:
    """
    Remote state preparation on the two-vertex graph state.

    Vertex 0 is measured in the x-y plane at ``theta = phi``; vertex 1 is left in
    ``X^k (cos(phi/2)|0> - i sin(phi/2)|1>)``.
    """
    pattern = MeasurementPattern(
        measurements = (Measurement(qubit = 0, theta = float(phi)),),
        outputs = (1,),
        byproducts = {1: Byproduct(qubit = 1, fx = BooleanExpr.of(0))}
    )
    return Protocol(
        name = "rsp",
        graph = Graph(2, [(0, 1)]),
        pattern = pattern,
        reference = rsp_target(phi),
        params = {"phi": float(phi)}
    )
