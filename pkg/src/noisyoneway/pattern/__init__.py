from .expression import BooleanExpr
from .pattern import (Measurement, Byproduct, MeasurementPattern, Outcome, XY_PLANE, Z_AXIS,
                      basis_array, basis_vector, check_orthonormal, byproduct_unitary)
from .answers import Branch, AnswerSet, ideal_answers, reference_answer
from .compose import OneWayBuilder



__all__ = [
    "BooleanExpr",
    "Measurement",
    "Byproduct",
    "MeasurementPattern",
    "Outcome",
    "XY_PLANE",
    "Z_AXIS",
    "basis_array",
    "basis_vector",
    "check_orthonormal",
    "byproduct_unitary",
    "Branch",
    "AnswerSet",
    "ideal_answers",
    "reference_answer",
    "OneWayBuilder"
]
