from .simulate import OracleRun, simulate, measure_distribution, MAX_QUBITS



__all__ = [
    "OracleRun",
    "simulate",
    "measure_distribution",
    "MAX_QUBITS"
]
