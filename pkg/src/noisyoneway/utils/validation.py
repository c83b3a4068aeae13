import math
import numpy as np
from typing import Iterable, Sequence
from ..exceptions import ConfigurationException, StateException, ChannelException



# -----------------------------------------------------------
#                     scalar parameters
# -----------------------------------------------------------

def validate_probability(value: float, method: str, parameter: str) -> float:
    """
    Check that a value is a probability.

    Args:
        value (float): The value to check.
        method (str): The caller, used in the error message.
        parameter (str): Name of the parameter being checked.
    """

    if isinstance(value, bool) or not isinstance(value, (int, float, np.floating)):
        raise ConfigurationException(
            error_code = "CON004",
            method = method,
            parameter = parameter,
            suggestion = "Pass a real number between 0 and 1."
        )

    if not (0.0 <= float(value) <= 1.0):
        raise ConfigurationException(
            error_code = "CON002",
            method = method,
            parameter_context = parameter,
            suggestion = f"{parameter} must lie in [0, 1], got {value}."
        )

    return float(value)


def validate_nonnegative(value: float, method: str, parameter: str) -> float:
    """
    Check that a rate or a time is a non-negative real number. Infinity is allowed.
    """

    if isinstance(value, bool) or not isinstance(value, (int, float, np.floating)):
        raise ConfigurationException(
            error_code = "CON004",
            method = method,
            parameter = parameter,
            suggestion = "Pass a real number."
        )

    if math.isnan(value) or value < 0:
        raise ConfigurationException(
            error_code = "CON002",
            method = method,
            parameter_context = parameter,
            suggestion = f"{parameter} must be non-negative, got {value}."
        )

    return float(value)


def validate_bit(value: int, method: str, parameter: str) -> int:
    if value not in (0, 1):
        raise ConfigurationException(
            error_code = "CON002",
            method = method,
            parameter_context = parameter,
            suggestion = f"{parameter} must be 0 or 1, got {value}."
        )
    return int(value)



# -----------------------------------------------------------
#                        qubit indices
# -----------------------------------------------------------

def validate_qubit(index: int, n_qubits: int, method: str) -> int:
    """
    Check that a qubit index addresses one of n_qubits qubits.
    """

    if isinstance(index, bool) or not isinstance(index, (int, np.integer)) or not (0 <= index < n_qubits):
        raise StateException(
            error_code = "LIN005",
            method = method,
            dimension = n_qubits,
            detail = index,
            suggestion = f"Use an index in 0..{n_qubits - 1}."
        )
    return int(index)


def validate_qubits(indices: Iterable[int], n_qubits: int, method: str) -> list:
    checked = [validate_qubit(q, n_qubits, method) for q in indices]

    # Reject repeated indices
    if len(checked) != len(set(checked)):
        seen = set()
        dupes = [q for q in checked if q in seen or seen.add(q)]
        raise StateException(
            error_code = "LIN005",
            method = method,
            dimension = n_qubits,
            detail = dupes,
            suggestion = "Remove repeated qubit indices."
        )
    return checked



# -----------------------------------------------------------
#                         geometry
# -----------------------------------------------------------

def validate_unit_axis(axis: Sequence[float], method: str) -> np.ndarray:
    """
    Check that an axis is a real unit 3-vector and return it as an array.
    """

    vector = np.asarray(axis, dtype = float)

    if vector.shape != (3,) or abs(np.linalg.norm(vector) - 1.0) > 1e-10:
        raise ChannelException(
            error_code = "CHN003",
            method = method,
            detail = list(np.atleast_1d(vector)),
            suggestion = "Normalize the axis to length 1."
        )

    return vector
