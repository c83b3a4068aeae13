"""
Ancilla-driven computation.

A fresh |+> ancilla is coupled to register qubits with ``E = H_a H_r CZ_{a,r}`` and measured;
only the ancilla decoheres. For a single register qubit the measurement at ``phi`` leaves
``X^k H P(phi)`` on it. Coupling to two register qubits in turn and measuring the ancilla
in the Z basis leaves ``(X^k H (x) H) CZ``.

A flipped ancilla outcome leaves the by-product correction off by ``X`` on the register
qubit, whose overlap with the ideal result is ``xi = Tr(Z rho_r)`` of that qubit before the
step. Hence ``F = 1 - p (1 - xi^2) <= 1 - p S_L``.
"""

import logging
import numpy as np

from dataclasses import dataclass

from ..channels import NoiseChannel
from ..core import H, PureState, apply_cz, apply_operator, partial_trace_array, rz
from ..correlations import linear_entropy
from ..exceptions import ProtocolException
from ..oracle import simulate
from ..pattern import BooleanExpr, Byproduct, Measurement, MeasurementPattern, Z_AXIS
from ..utils import validate_qubit

logger = logging.getLogger(__name__)

MAX_REGISTER = 4
CLOSED_FORM_TOL = 1e-9


@dataclass(frozen = True)
class AncillaReport:
    """
    Attributes:
        mean_fidelity (float): Outcome-averaged fidelity from the density-matrix simulation.
        xi (float): ``Tr(Z rho_r)`` of the addressed register qubit before the step.
        linear_entropy (float): ``S_L`` of the same reduced state.
        p (float): Probability that the noise flips the ancilla outcome.
        closed_form (float): ``1 - p (1 - xi^2)``.
        bound (float): ``1 - p S_L``.
    """
    mean_fidelity: float
    xi: float
    linear_entropy: float
    p: float
    closed_form: float
    bound: float

    @property
    def bound_slack(self) -> float:
        return self.bound - self.mean_fidelity

    @property
    def holds(self) -> bool:
        return abs(self.mean_fidelity - self.closed_form) <= CLOSED_FORM_TOL and self.bound_slack >= -CLOSED_FORM_TOL


def _check_register(register: PureState, method: str):
    if register.n > MAX_REGISTER:
        raise ProtocolException(
            error_code = "PRO003",
            method = method,
            protocol = "ancilla",
            detail = register.n,
            suggestion = f"Use at most {MAX_REGISTER} register qubits."
        )


def _couple(vector: np.ndarray, ancilla: int, qubit: int) -> np.ndarray:
    """``E = H_a H_r CZ_{a,r}``."""
    vector = apply_cz(vector, ancilla, qubit)
    vector = apply_operator(vector, H, ancilla)
    return apply_operator(vector, H, qubit)


def _local_state(register: PureState, qubit: int):
    vector = register.amplitudes
    reduced = partial_trace_array(np.outer(vector, vector.conj()), [qubit])
    xi = float(np.real(reduced[0, 0] - reduced[1, 1]))
    return xi, linear_entropy(reduced)


def _report(run, xi: float, s_l: float, p: float, method: str) -> AncillaReport:
    closed = 1 - p * (1 - xi ** 2)
    report = AncillaReport(
        mean_fidelity = run.average,
        xi = xi,
        linear_entropy = s_l,
        p = p,
        closed_form = closed,
        bound = 1 - p * s_l
    )
    if not report.holds:
        raise ProtocolException(
            error_code = "PRO004",
            method = method,
            protocol = "ancilla",
            detail = f"{report.mean_fidelity - closed:.3g} (bound slack {report.bound_slack:.3g})"
        )
    logger.debug("%s: F=%.12g xi=%.6g S_L=%.6g p=%.6g", method, report.mean_fidelity, xi, s_l, p)
    return report


def ancilla_step(register: PureState, qubit: int, phi: float, ancilla_channel: NoiseChannel) -> AncillaReport:
    """
    One single-qubit step on ``qubit`` of ``register`` through a noisy ancilla measured in the
    x-y plane at ``phi``; the ideal result is ``X^k H Rz(phi)`` on that qubit.

    Raises:
        ProtocolException (PRO003): For more than four register qubits.
        ProtocolException (PRO004): If the simulated fidelity misses ``1 - p (1 - xi^2)`` or the
            bound ``1 - p S_L``.
    """
    _check_register(register, "ancilla_step")
    validate_qubit(qubit, register.n, "ancilla_step")
    n = register.n
    ancilla = n

    joint = _couple(np.kron(register.amplitudes, PureState.plus().amplitudes), ancilla, qubit)
    pattern = MeasurementPattern(
        measurements = (Measurement(qubit = ancilla, theta = float(phi)),),
        outputs = tuple(range(n)),
        byproducts = {qubit: Byproduct(qubit = qubit, fx = BooleanExpr.of(ancilla))}
    )
    target = apply_operator(register.amplitudes, H @ rz(phi), qubit)

    run = simulate(PureState.normalized(joint), pattern, {ancilla: ancilla_channel}, target)
    xi, s_l = _local_state(register, qubit)
    return _report(run, xi, s_l, ancilla_channel.mixing_probabilities().p_xy, "ancilla_step")


def ancilla_entangling_step(register: PureState, i: int, j: int, ancilla_channel: NoiseChannel) -> AncillaReport:
    """
    Two-qubit step: the ancilla couples to ``i`` then ``j`` and is measured in the Z basis,
    ideally leaving ``(X^k H)_i H_j CZ_ij``. The flip probability is the outcome average
    ``2 lambda_1`` of the z mixing probabilities.

    Raises:
        ProtocolException (PRO005): If ``i == j``.
    """
    _check_register(register, "ancilla_entangling_step")
    validate_qubit(i, register.n, "ancilla_entangling_step")
    validate_qubit(j, register.n, "ancilla_entangling_step")
    if i == j:
        raise ProtocolException(
            error_code = "PRO005",
            method = "ancilla_entangling_step",
            protocol = "ancilla",
            detail = f"i = j = {i}",
            suggestion = "Address two different register qubits."
        )
    n = register.n
    ancilla = n

    joint = np.kron(register.amplitudes, PureState.plus().amplitudes)
    joint = _couple(_couple(joint, ancilla, i), ancilla, j)
    pattern = MeasurementPattern(
        measurements = (Measurement(qubit = ancilla, alpha = Z_AXIS),),
        outputs = tuple(range(n)),
        byproducts = {i: Byproduct(qubit = i, fx = BooleanExpr.of(ancilla))}
    )
    target = apply_cz(register.amplitudes, i, j)
    target = apply_operator(apply_operator(target, H, i), H, j)

    run = simulate(PureState.normalized(joint), pattern, {ancilla: ancilla_channel}, target)
    xi, s_l = _local_state(register, i)
    _, lambda1, _, _, _ = ancilla_channel.lambdas()
    return _report(run, xi, s_l, 2 * lambda1, "ancilla_entangling_step")
