"""
Deutsch-Jozsa on a one-way resource.

The principal wires start in |+>, the auxiliary wire in |-> and the oracle

    U_f = CNOT_{1,A} prod_{i=2}^{N-1} CZ_{i,i+1}

computes ``f(x) = x_1 + sum_i x_i x_{i+1}`` (mod 2), which is balanced for every ``N``. The
constant functions leave the auxiliary wire alone (``f = 0``) or flip it (``f = 1``). Each
principal wire is finally measured in the X basis and its frame-corrected bit is read out.
"""

import itertools
import logging
import numpy as np

from typing import Dict, Optional, Sequence, Union

from ..channels import ChannelLike
from ..core import DensityMatrix, GraphState
from ..exceptions import ProtocolException
from ..fidelity import NonAdaptiveFidelity
from ..oracle import simulate
from ..pattern import OneWayBuilder
from ..utils import validate_nonnegative
from .base import Protocol

logger = logging.getLogger(__name__)

MINUS = np.array([1, -1], dtype = complex) / np.sqrt(2)

FUNCTIONS = ("balanced", "constant0", "constant1")
_ALIASES = {"constant": "constant0", "zero": "constant0", "one": "constant1", 0: "constant0", 1: "constant1"}

FunctionSpec = Union[str, int]


def _function(f: FunctionSpec) -> str:
    name = _ALIASES.get(f, f)
    if name not in FUNCTIONS:
        raise ProtocolException(
            error_code = "PRO001",
            method = "dj",
            protocol = "dj",
            detail = repr(f),
            suggestion = f"Use one of {', '.join(FUNCTIONS)}."
        )
    return name


def truth_table(n: int, f: FunctionSpec = "balanced") -> Dict[str, int]:
    """``f`` on every input string, ``x_1`` being the leftmost bit."""
    name = _function(f)
    table = {}
    for bits in itertools.product((0, 1), repeat = n):
        if name == "constant0":
            value = 0
        elif name == "constant1":
            value = 1
        else:
            value = bits[0]
            for i in range(1, n - 1):
                value ^= bits[i] & bits[i + 1]
        table["".join(map(str, bits))] = value
    return table


def is_constant(table: Dict[str, int]) -> bool:
    return len(set(table.values())) == 1


def dj(n: int = 3, f: FunctionSpec = "balanced") -> Protocol:
    """
    Non-adaptive DJ pattern for ``n`` input bits. The readout labels are ``x1 .. xn``.
    """
    if int(validate_nonnegative(n, "dj", "n")) < 1:
        raise ProtocolException(
            error_code = "PRO001",
            method = "dj",
            protocol = "dj",
            detail = f"n = {n}",
            suggestion = "Use at least one input bit."
        )
    n = int(n)
    name = _function(f)

    builder = OneWayBuilder()
    wires = [f"x{i + 1}" for i in range(n)]
    for w in wires:
        builder.wire(w)
    builder.wire("aux", minus = True)

    if name == "balanced":
        builder.cnot(wires[0], "aux")
        for i in range(1, n - 1):
            builder.cz(wires[i], wires[i + 1])
    elif name == "constant1":
        builder.x("aux")

    for w in wires:
        builder.readout_x(w)

    graph, pattern = builder.build()
    logger.debug("dj(n=%d, f=%s): %d vertices", n, name, graph.n_vertices)

    return Protocol(
        name = "dj",
        graph = graph,
        pattern = pattern,
        reference = MINUS,
        params = {"n": n, "f": name}
    )


def readout_zero(protocol: Protocol, outcome: Sequence[int]) -> bool:
    return not any(protocol.pattern.evaluate_readout(outcome).values())


def outcome_distribution(
        protocol: Protocol,
        measured_channels: ChannelLike = None,
        resource: Optional[Union[GraphState, DensityMatrix]] = None
) -> Dict[tuple, float]:
    """
    Outcome probabilities of the pattern. A density-matrix ``resource`` (such as a classical
    replacement) goes through the oracle; otherwise the non-adaptive engine is used.
    """
    if isinstance(resource, DensityMatrix):
        run = simulate(resource, protocol.pattern, measured_channels, target = MINUS)
        return {k: p for k, (p, _) in run.branches.items()}

    engine = NonAdaptiveFidelity(protocol.pattern, resource or protocol.resource(), measured_channels).prepare()
    probabilities = engine.outcome_probabilities()
    return dict(zip(engine.answers, probabilities))


def zero_readout_probability(protocol: Protocol, measured_channels: ChannelLike = None, resource = None) -> float:
    distribution = outcome_distribution(protocol, measured_channels, resource)
    return float(sum(p for k, p in distribution.items() if readout_zero(protocol, k)))


def success_probability(protocol: Protocol, measured_channels: ChannelLike = None, resource = None) -> float:
    """
    Probability that the readout classifies the function correctly: all zeros for a constant
    function, anything else for a balanced one.
    """
    zero = zero_readout_probability(protocol, measured_channels, resource)
    constant = protocol.params.get("f") != "balanced"
    return zero if constant else 1.0 - zero
