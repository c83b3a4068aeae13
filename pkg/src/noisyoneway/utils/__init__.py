from .validation import (validate_probability, validate_nonnegative, validate_bit,
                         validate_qubit, validate_qubits, validate_unit_axis)



__all__ = [
    "validate_probability",
    "validate_nonnegative",
    "validate_bit",
    "validate_qubit",
    "validate_qubits",
    "validate_unit_axis"
]
