"""
Acceptance checks with a pass/fail table.

Each check returns the largest deviation it saw and the tolerance it was held to. ``perturb``
adds a fixed error to every deviation, which must make the suite fail.
"""

import logging
import math
import numpy as np
import pandas as pd

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Optional

from ..accessors import SweepAccessor  # noqa: F401  (registers df.sweep)
from ..channels import NoiseChannel, apply_channels
from ..core import I2, PureState, hermitian_eig, tensor
from ..correlations import concurrence, discord, mep, negativity
from ..exceptions import ProtocolException
from ..fidelity import NonAdaptiveFidelity
from ..protocols import (ancilla_step, classical_replacement, cnot15, dj, rotation, rsp, success_probability,
                         zero_readout_probability)

logger = logging.getLogger(__name__)


@dataclass(frozen = True)
class CheckResult:
    name: str
    passed: bool
    error: float
    tolerance: float
    detail: str = ""


def _result(name: str, error: float, tolerance: float, perturb: float, detail: str = "",
            extra: bool = True) -> CheckResult:
    error = float(error) + perturb
    return CheckResult(name, bool(extra and error <= tolerance), error, tolerance, detail)


def _rsp_state(channel: NoiseChannel) -> np.ndarray:
    protocol = rsp()
    vector = protocol.resource().state.amplitudes
    return apply_channels(np.outer(vector, vector.conj()), {0: channel})


def _rsp_point(channel: NoiseChannel):
    protocol = rsp()
    return protocol.fidelity(channel).average(), protocol.simulate({0: channel}).average


# ------------------------------------
#          Remote preparation
# ------------------------------------

def check_rsp_phase_flip(perturb: float, rng) -> CheckResult:
    worst = 0.0
    for t in np.linspace(0.0, 3.0, 50):
        channel = NoiseChannel.phase_flip(1.0, t)
        engine, oracle = _rsp_point(channel)
        decay = math.exp(-2 * t)
        worst = max(
            worst,
            abs(engine - (1 + decay) / 2),
            abs(engine - oracle),
            abs(concurrence(_rsp_state(channel)) - decay)
        )
    return _result("rsp_phase_flip", worst, 1e-9, perturb, "50 points, F and C against closed forms and oracle")


def check_rsp_white(perturb: float, rng) -> CheckResult:
    worst = 0.0
    for t in np.linspace(0.0, 3.0, 50):
        channel = NoiseChannel.white(1.0, t)
        engine, oracle = _rsp_point(channel)
        decay = math.exp(-4 * t)
        worst = max(
            worst,
            abs(engine - (1 + decay) / 2),
            abs(engine - oracle),
            abs(concurrence(_rsp_state(channel)) - max(0.0, (3 * decay - 1) / 2))
        )

    sudden = math.log(3) / 4
    at_death, _ = _rsp_point(NoiseChannel.white(1.0, sudden))
    return _result(
        "rsp_white", worst, 1e-9, perturb,
        f"F at sudden death {at_death:.12f}", abs(at_death - 2 / 3) <= 1e-10
    )


def check_rsp_fig1_ordering(perturb: float, rng) -> CheckResult:
    gamma_pf = 1 / 0.375
    rows = []
    for t in np.union1d(np.linspace(0.0, 3.0, 61), [0.375]):
        pf, white = NoiseChannel.phase_flip(gamma_pf, t), NoiseChannel.white(1.0, t)
        rows.append({
            "t": t,
            "F_pf": rsp().fidelity(pf).average(),
            "F_w": rsp().fidelity(white).average(),
            "C_pf": concurrence(_rsp_state(pf)),
            "C_w": concurrence(_rsp_state(white))
        })
    table = pd.DataFrame(rows)
    later = table[table["t"] > 0]
    violation = max((later["F_pf"] - later["F_w"]).max(), (later["C_w"] - later["C_pf"]).max(), 0.0)

    # Gamma_pf t = 1
    at = 0.375
    strict = (
        table.sweep.dominates("F_w", "F_pf") and table.sweep.dominates("C_pf", "C_w")
        and table.sweep.value_at("F_w", at) > table.sweep.value_at("F_pf", at)
        and table.sweep.value_at("C_w", at) < table.sweep.value_at("C_pf", at)
    )
    return _result(
        "rsp_fig1_ordering", violation, 0.0, perturb,
        "F_w >= F_pf and C_w <= C_pf; strict at Gamma_pf t = 1", strict
    )


def check_rsp_fig2_discord(perturb: float, rng) -> CheckResult:
    gamma_pf = 1 / 0.57
    pf, white = NoiseChannel.phase_flip(gamma_pf, 0.57), NoiseChannel.white(1.0, 0.57)
    q_pf, q_w = discord(_rsp_state(pf)), discord(_rsp_state(white))
    f_pf, f_w = rsp().fidelity(pf).average(), rsp().fidelity(white).average()

    smallest = min(discord(_rsp_state(NoiseChannel.white(1.0, t))) for t in np.linspace(0.0, 2.0, 21)[1:])
    ordered = q_pf < q_w and f_pf > f_w and smallest > 0
    return _result(
        "rsp_fig2_discord", 0.0, 0.0, perturb,
        f"Q_pf={q_pf:.6g} Q_w={q_w:.6g} F_pf={f_pf:.6g} F_w={f_w:.6g} min Q_w={smallest:.3g}", ordered
    )


def check_rsp_mep(perturb: float, rng) -> CheckResult:
    worst = 0.0
    for factory in (NoiseChannel.phase_flip, NoiseChannel.white):
        for t in np.linspace(0.0, 1.5, 10):
            channel = factory(1.0, t)
            p = channel.p
            fidelity = rsp().fidelity(channel).average()
            value = mep(_rsp_state(channel)).value
            worst = max(worst, abs(value - (1 - p)), abs(value - (2 * fidelity - 1)))
    return _result("rsp_mep", worst, 1e-4, perturb, "MEP = 1 - p = 2F - 1, both channels")


# ------------------------------------
#              Rotation
# ------------------------------------

def check_rotation_matched_noise(perturb: float, rng) -> CheckResult:
    protocol = rotation(math.pi / 4, math.pi / 4, math.pi / 4, PureState.basis("0"))
    vector = protocol.resource().state.amplitudes
    pure = np.outer(vector, vector.conj())
    measured = protocol.pattern.measured

    worst, spread = 0.0, 0.0
    for t in np.linspace(0.0, 3.0, 20):
        pf, white = NoiseChannel.phase_flip(1.0, t), NoiseChannel.white(0.5, t)
        worst = max(worst, abs(protocol.fidelity(pf).average() - protocol.fidelity(white).average()))
        n_pf = negativity(apply_channels(pure, {q: pf for q in measured}), protocol.pattern.outputs)
        n_w = negativity(apply_channels(pure, {q: white for q in measured}), protocol.pattern.outputs)
        spread = max(spread, abs(n_pf - n_w))
    return _result(
        "rotation_matched_noise", worst, 1e-10, perturb,
        f"largest negativity gap {spread:.3g}", spread >= 1e-3
    )


def _random_channel(rng) -> NoiseChannel:
    B = rng.uniform(0.0, 3.0)
    return NoiseChannel(B = B, C = B / 2 + rng.uniform(0.0, 3.0), S = rng.uniform(), t = rng.uniform(0.0, 2.0))


def check_rotation_oracle(perturb: float, rng) -> CheckResult:
    worst = 0.0
    for _ in range(20):
        angles = rng.uniform(0.0, 2 * math.pi, 3)
        protocol = rotation(*angles, PureState.random(1, rng))
        channel = _random_channel(rng)
        report = protocol.fidelity(channel, channel)
        run = protocol.simulate(channel)
        for outcome, (z, _) in run.branches.items():
            z_engine, f_engine = report[outcome]
            worst = max(worst, abs(z - z_engine))
            f_oracle = run.fidelities[outcome]
            if np.isnan(f_oracle) != np.isnan(f_engine):
                worst = max(worst, 1.0)
            elif not np.isnan(f_oracle):
                worst = max(worst, abs(f_oracle - f_engine))
    return _result("rotation_oracle", worst, 1e-9, perturb, "20 random angles, inputs and channels")


# ------------------------------------
#           CNOT and Deutsch-Jozsa
# ------------------------------------

def check_cnot15(perturb: float, rng) -> CheckResult:
    worst = 0.0
    protocol = cnot15()
    for _ in range(5):
        shifted = protocol.with_input(tensor(PureState.random(1, rng), PureState.random(1, rng)))
        worst = max(worst, 1 - min(shifted.zero_noise_fidelities().values()))

    t = 0.7
    f_pf = protocol.fidelity(NoiseChannel.phase_flip(1.0, t)).average()
    f_w = protocol.fidelity(NoiseChannel.white(0.5, t)).average()
    worst = max(worst, abs(f_pf - f_w))

    engine = NonAdaptiveFidelity(protocol.pattern, protocol.resource(), NoiseChannel.white(0.5, t),
                                 target = protocol.target).prepare()
    f0 = engine.fidelity_at([0] * protocol.pattern.M)
    for _ in range(50):
        r = rng.integers(0, 2, protocol.pattern.M)
        worst = max(worst, abs(engine.fidelity_at(r) - f0))
    return _result("cnot15", worst, 1e-9, perturb, "zero noise, matched channels, shift invariance")


def check_dj(perturb: float, rng) -> CheckResult:
    worst = 0.0
    details = []
    for f in ("constant0", "constant1", "balanced"):
        protocol = dj(3, f)
        expected = 0.0 if f == "balanced" else 1.0
        worst = max(worst, abs(zero_readout_probability(protocol) - expected))

        replacement, report = classical_replacement(protocol)
        worst = max(worst, abs(success_probability(protocol, resource = replacement) - 1.0))
        worst = max(worst, report.distribution_gap)
        largest = max(report.negativities.values()) if report.negativities else 0.0
        details.append(f"{f}: max N {largest:.2g}")
        if largest >= 1e-9:
            worst = max(worst, largest)
    return _result("dj", worst, 1e-10, perturb, "; ".join(details))


# ------------------------------------
#       Ancilla-driven and channels
# ------------------------------------

def check_ancilla(perturb: float, rng) -> CheckResult:
    worst = 0.0
    for p in (0.05, 0.2, 0.5):
        channel = NoiseChannel.from_mixing(p, "white")
        for _ in range(100):
            n = int(rng.integers(1, 4))
            register = PureState.random(n, rng)
            try:
                report = ancilla_step(register, int(rng.integers(0, n)), rng.uniform(0.0, 2 * math.pi), channel)
            except ProtocolException as error:
                logger.error("%s", error)
                return _result("ancilla", 1.0, 1e-9, perturb, f"p={p}: closed form violated")
            worst = max(worst, abs(report.mean_fidelity - report.closed_form), -report.bound_slack)

        bell = PureState.normalized([1, 0, 0, 1])
        report = ancilla_step(bell, 0, 0.3, channel)
        worst = max(worst, abs(report.mean_fidelity - report.bound))
    return _result("ancilla", worst, 1e-9, perturb, "300 random registers plus the saturating Bell register")


def check_channels(perturb: float, rng) -> CheckResult:
    worst = 0.0
    for _ in range(200):
        channel = _random_channel(rng)
        values, _ = hermitian_eig(channel.choi())
        worst = max(worst, -float(np.min(values)))
        completeness = sum(k.conj().T @ k for k in channel.kraus())
        worst = max(worst, float(np.max(np.abs(completeness - I2))))
        worst = max(worst, abs(sum(channel.lambdas()[:4]) - 1))

        split = rng.uniform(0.0, channel.t)
        first = NoiseChannel(channel.B, channel.C, channel.S, split).pauli_transfer_matrix()
        second = NoiseChannel(channel.B, channel.C, channel.S, channel.t - split).pauli_transfer_matrix()
        worst = max(worst, float(np.max(np.abs(second @ first - channel.pauli_transfer_matrix()))))
    return _result("channels", worst, 1e-9, perturb, "200 random channels: Choi, completeness, lambdas, semigroup")


CHECKS: Dict[str, Callable] = {
    "rsp_phase_flip": check_rsp_phase_flip,
    "rsp_white": check_rsp_white,
    "rsp_fig1_ordering": check_rsp_fig1_ordering,
    "rsp_fig2_discord": check_rsp_fig2_discord,
    "rsp_mep": check_rsp_mep,
    "rotation_matched_noise": check_rotation_matched_noise,
    "rotation_oracle": check_rotation_oracle,
    "cnot15": check_cnot15,
    "dj": check_dj,
    "ancilla": check_ancilla,
    "channels": check_channels
}


def select(filter: Optional[str] = None) -> Iterable[str]:
    return [name for name in CHECKS if filter is None or filter in name]


def run_checks(filter: Optional[str] = None, perturb: float = 0.0, seed: int = 0) -> pd.DataFrame:
    """
    Run the checks whose name contains ``filter`` and return one row per check.
    """
    rows = []
    for name in select(filter):
        logger.info("running %s", name)
        result = CHECKS[name](perturb, np.random.default_rng(seed))
        rows.append(result.__dict__)
        if not result.passed:
            logger.warning("%s failed: error %.3g > %.3g (%s)", name, result.error, result.tolerance, result.detail)
    return pd.DataFrame(rows, columns = ["name", "passed", "error", "tolerance", "detail"])
