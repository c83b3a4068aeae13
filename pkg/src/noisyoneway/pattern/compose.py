"""
Composition of non-adaptive one-way circuits out of Hadamard steps and CZ gates.

Each logical wire lives on one current vertex at a time. The physical state of a wire is its
logical state up to a Pauli frame ``X^x Z^z``, with ``x`` and ``z`` kept as boolean functions of
the outcomes, so no measurement ever has to be adapted.
"""

import logging

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..core import Graph
from ..exceptions import PatternException
from .expression import BooleanExpr
from .pattern import Byproduct, Measurement, MeasurementPattern

logger = logging.getLogger(__name__)


@dataclass
class _Wire:
    vertex: int
    x: BooleanExpr
    z: BooleanExpr
    open: bool = True


class OneWayBuilder:
    """
    Builds a graph and a non-adaptive pattern gate by gate.

    Example:
        >>> b = OneWayBuilder()
        >>> b.wire("a"); b.wire("b", minus = True)
        >>> b.cnot("a", "b")
        >>> b.readout_x("a")
        >>> graph, pattern = b.build()
    """

    def __init__(self):
        self._n = 0
        self._edges = set()
        self._wires: Dict[str, _Wire] = {}
        self._measurements: List[Measurement] = []
        self._readout: Dict[str, BooleanExpr] = {}

    def __repr__(self):
        return f"OneWayBuilder(vertices={self._n}, wires={list(self._wires)})"

    def _new_vertex(self) -> int:
        self._n += 1
        return self._n - 1

    def _get(self, name: str) -> _Wire:
        wire = self._wires.get(name)
        if wire is None or not wire.open:
            raise PatternException(
                error_code = "PAT004",
                method = "OneWayBuilder",
                detail = f"no open wire named {name!r}"
            )
        return wire

    def _toggle_edge(self, i: int, j: int):
        self._edges ^= {(min(i, j), max(i, j))}

    # ------------------------------------
    #             Gates
    # ------------------------------------

    def wire(self, name: str, minus: bool = False) -> int:
        """Open a wire in |+>, or in |-> through its frame when ``minus`` is set."""
        if name in self._wires:
            raise PatternException(
                error_code = "PAT004",
                method = "OneWayBuilder.wire",
                detail = f"wire {name!r} already exists"
            )
        vertex = self._new_vertex()
        self._wires[name] = _Wire(vertex, BooleanExpr.zero(), BooleanExpr(const = int(minus)))
        return vertex

    def h(self, name: str) -> int:
        """
        Hadamard by teleporting the wire one vertex along: the old vertex is measured in the X
        basis and with outcome ``k`` the frame becomes ``x' = k + z``, ``z' = x``.
        """
        wire = self._get(name)
        old = wire.vertex
        new = self._new_vertex()
        self._toggle_edge(old, new)
        self._measurements.append(Measurement(qubit = old, theta = 0.0))

        wire.x, wire.z = BooleanExpr.of(old) ^ wire.z, wire.x
        wire.vertex = new
        return new

    def cz(self, a: str, b: str):
        wa, wb = self._get(a), self._get(b)
        if wa is wb:
            raise PatternException(
                error_code = "PAT004",
                method = "OneWayBuilder.cz",
                detail = f"CZ needs two different wires, got {a!r} twice"
            )
        self._toggle_edge(wa.vertex, wb.vertex)
        # CZ maps X_a to X_a Z_b
        wa.z, wb.z = wa.z ^ wb.x, wb.z ^ wa.x

    def cnot(self, control: str, target: str):
        self.h(target)
        self.cz(control, target)
        self.h(target)

    def x(self, name: str):
        """Logical X, absorbed in the frame."""
        wire = self._get(name)
        wire.x = wire.x ^ 1

    def z(self, name: str):
        wire = self._get(name)
        wire.z = wire.z ^ 1

    def readout_x(self, name: str, label: Optional[str] = None) -> BooleanExpr:
        """
        Measure the wire's logical X: the vertex outcome corrected by the frame's Z part.
        """
        wire = self._get(name)
        self._measurements.append(Measurement(qubit = wire.vertex, theta = 0.0))
        result = BooleanExpr.of(wire.vertex) ^ wire.z
        self._readout[label or name] = result
        wire.open = False
        return result

    # ------------------------------------
    #              Output
    # ------------------------------------

    def vertex(self, name: str) -> int:
        return self._wires[name].vertex

    def build(self) -> Tuple[Graph, MeasurementPattern]:
        """
        Graph and pattern; open wires become outputs, in the order they were opened.
        """
        outputs = [w.vertex for w in self._wires.values() if w.open]
        byproducts = {
            w.vertex: Byproduct(qubit = w.vertex, fx = w.x, fz = w.z)
            for w in self._wires.values() if w.open
        }
        graph = Graph(self._n, sorted(self._edges))
        pattern = MeasurementPattern(tuple(self._measurements), tuple(outputs), byproducts, dict(self._readout))
        logger.debug("built one-way circuit with %d vertices, %d measurements", self._n, pattern.M)
        return graph, pattern

