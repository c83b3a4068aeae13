"""
Fifteen-vertex CNOT.

Control wire: chain 0-6, target wire: chain 8-14, bridged by vertex 7 (edges 3-7 and 7-11).
The inputs sit on 0 (control) and 8 (target) and the answers on 6 and 14. Every measurement
is fixed: X on 0, 8, 9, 10, 12, 13 and Y on 1 to 5, 7 and 11.
"""

import math

from typing import Optional

from ..core import Graph, PureState, cnot_matrix
from ..pattern import BooleanExpr, Byproduct, Measurement, MeasurementPattern
from .base import Protocol

X_MEASURED = (0, 8, 9, 10, 12, 13)
Y_MEASURED = (1, 2, 3, 4, 5, 7, 11)
CONTROL_OUT, TARGET_OUT = 6, 14

EDGES = [(i, i + 1) for i in range(6)] + [(i, i + 1) for i in range(8, 14)] + [(3, 7), (7, 11)]


def cnot15(input_state: Optional[PureState] = None) -> Protocol:
    measurements = tuple(
        Measurement(qubit = q, theta = -math.pi / 2 if q in Y_MEASURED else 0.0)
        for q in range(15) if q not in (CONTROL_OUT, TARGET_OUT)
    )
    byproducts = {
        CONTROL_OUT: Byproduct(
            qubit = CONTROL_OUT,
            fx = BooleanExpr.of(1, 2, 4, 5),
            fz = BooleanExpr.of(0, 2, 3, 4, 7, 8, 10, const = 1)
        ),
        TARGET_OUT: Byproduct(
            qubit = TARGET_OUT,
            fx = BooleanExpr.of(1, 2, 7, 9, 11, 13),
            fz = BooleanExpr.of(8, 10, 12)
        )
    }
    pattern = MeasurementPattern(measurements, (CONTROL_OUT, TARGET_OUT), byproducts)

    return Protocol(
        name = "cnot15",
        graph = Graph(15, EDGES),
        pattern = pattern,
        inputs = (0, 8),
        input_state = input_state or PureState.basis("00"),
        reference = cnot_matrix(2, 0, 1)
    )
