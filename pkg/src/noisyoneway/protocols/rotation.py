import numpy as np

from typing import Optional

from ..core import Graph, PureState, rx, rz
from ..pattern import BooleanExpr, Byproduct, Measurement, MeasurementPattern
from .base import Protocol


def rotation_unitary(phi1: float, phi2: float, phi3: float) -> np.ndarray:
    """``Rx(phi3) Rz(phi2) Rx(phi1)``."""
    return rx(phi3) @ rz(phi2) @ rx(phi1)


def rotation(phi1: float, phi2: float, phi3: float, input_state: Optional[PureState] = None) -> Protocol:
    """
    General single-qubit rotation on a five-vertex chain.

    The input sits on vertex 0, which is measured in the X basis; vertices 1 to 3 carry the
    three angles and vertex 4 holds the answer. Measuring a vertex at ``delta`` applies
    ``X^k H P(delta)`` to the next one, so the sign of each angle follows the X part of the
    frame accumulated so far.
    """
    k0, k1, k2, k3 = (BooleanExpr.of(v) for v in range(4))

    measurements = (
        Measurement(qubit = 0, theta = 0.0),
        Measurement(qubit = 1, theta = float(phi1), adapt = k0),
        Measurement(qubit = 2, theta = float(phi2), adapt = k1),
        Measurement(qubit = 3, theta = float(phi3), adapt = k0 ^ k2)
    )
    byproduct = Byproduct(
        qubit = 4,
        fx = k3 ^ k1,
        fz = k2 ^ k0,
        fsig = BooleanExpr.product(2, 1)
    )
    pattern = MeasurementPattern(measurements, (4,), {4: byproduct})

    return Protocol(
        name = "rotation",
        graph = Graph.linear(5),
        pattern = pattern,
        inputs = (0,),
        input_state = input_state or PureState.basis("0"),
        reference = rotation_unitary(phi1, phi2, phi3),
        params = {"phi1": float(phi1), "phi2": float(phi2), "phi3": float(phi3)}
    )
