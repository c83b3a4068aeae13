"""
Measurement patterns: which vertices are measured, in which order and basis, how bases adapt
to earlier outcomes and which Pauli by-products the outcomes leave on the output vertices.
"""

import math
import numpy as np

from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Sequence, Tuple

from ..core import PureState, Graph, X, Z
from ..exceptions import PatternException
from ..utils import validate_bit
from .expression import BooleanExpr

XY_PLANE = math.pi / 2
Z_AXIS = 0.0

Outcome = Tuple[int, ...]


# ------------------------------------
#          Measurement bases
# ------------------------------------

def basis_array(theta: float, alpha: float, s: int, k: int) -> np.ndarray:
    """
    ``|M_k^s(theta, alpha)>`` as a 2-vector.

    ``M_0 = cos(a/2)|0> + sin(a/2) e^{-i(-1)^s theta}|1>`` and
    ``M_1 = sin(a/2)|0> - cos(a/2) e^{-i(-1)^s theta}|1>``.
    """
    phase = np.exp(-1j * (-1) ** s * theta)
    c, s_ = math.cos(alpha / 2), math.sin(alpha / 2)
    if k == 0:
        return np.array([c, s_ * phase], dtype = complex)
    return np.array([s_, -c * phase], dtype = complex)


def basis_vector(theta: float, alpha: float, s: int, k: int) -> PureState:
    validate_bit(s, "basis_vector", "s")
    validate_bit(k, "basis_vector", "k")
    return PureState(basis_array(theta, alpha, s, k))


def check_orthonormal(pair: Sequence[np.ndarray], method: str, tol: float = 1e-10) -> None:
    gram = np.array([[np.vdot(a, b) for b in pair] for a in pair])
    deviation = float(np.max(np.abs(gram - np.eye(2))))
    if deviation > tol:
        raise PatternException(
            error_code = "PAT005",
            method = method,
            detail = deviation
        )


# ------------------------------------
#        Pattern building blocks
# ------------------------------------

@dataclass(frozen = True)
class Measurement:
    """
    One measured vertex.

    Attributes:
        qubit (int): Measured vertex.
        theta (float): Measurement phase.
        alpha (float): Polar angle, ``pi/2`` (x-y plane) or ``0`` (z axis).
        adapt (BooleanExpr): Sign adaptation ``s_i`` of ``theta``.
    """
    qubit: int
    theta: float = 0.0
    alpha: float = XY_PLANE
    adapt: BooleanExpr = field(default_factory = BooleanExpr)

    @property
    def is_z(self) -> bool:
        return abs(self.alpha) < 1e-12

    @property
    def is_xy(self) -> bool:
        return abs(self.alpha - XY_PLANE) < 1e-12

    def basis(self, s: int) -> Tuple[np.ndarray, np.ndarray]:
        return basis_array(self.theta, self.alpha, s, 0), basis_array(self.theta, self.alpha, s, 1)


@dataclass(frozen = True)
class Byproduct:
    """``(-1)^{fsig} X^{fx} Z^{fz}`` on an output vertex."""
    qubit: int
    fx: BooleanExpr = field(default_factory = BooleanExpr)
    fz: BooleanExpr = field(default_factory = BooleanExpr)
    fsig: BooleanExpr = field(default_factory = BooleanExpr)

    def exprs(self) -> Tuple[BooleanExpr, BooleanExpr, BooleanExpr]:
        return self.fx, self.fz, self.fsig


@dataclass(frozen = True, eq = False)
class MeasurementPattern:
    """
    Ordered measurements plus by-products.

    Attributes:
        measurements (Tuple[Measurement, ...]): In temporal order.
        outputs (Tuple[int, ...]): Unmeasured vertices carrying the answer, in answer order.
        byproducts (Dict[int, Byproduct]): Per output vertex; missing ones are the identity.
        readout (Dict[str, BooleanExpr]): Named classical results computed from the outcomes.
    """
    measurements: Tuple[Measurement, ...]
    outputs: Tuple[int, ...]
    byproducts: Dict[int, Byproduct] = field(default_factory = dict)
    readout: Dict[str, BooleanExpr] = field(default_factory = dict)

    def __post_init__(self):
        method = "MeasurementPattern"
        measurements = tuple(self.measurements)
        outputs = tuple(int(q) for q in self.outputs)
        byproducts = dict(self.byproducts) if isinstance(self.byproducts, Mapping) else {b.qubit: b for b in self.byproducts}

        measured = [m.qubit for m in measurements]
        overlap = set(measured) & set(outputs)
        if len(set(measured)) != len(measured) or overlap or len(set(outputs)) != len(outputs):
            raise PatternException(
                error_code = "PAT004",
                method = method,
                detail = f"repeated or overlapping vertices in measured={measured}, outputs={list(outputs)}"
            )

        earlier = set()
        for m in measurements:
            late = m.adapt.support() - earlier
            if late:
                raise PatternException(
                    error_code = "PAT001",
                    method = method,
                    qubit = m.qubit,
                    detail = sorted(late),
                    suggestion = "Adaptations may only use outcomes of vertices measured earlier."
                )
            if m.is_z and not m.adapt.is_zero:
                raise PatternException(
                    error_code = "PAT002",
                    method = method,
                    qubit = m.qubit,
                    suggestion = "Drop the adaptation; z measurements are never adapted."
                )
            earlier.add(m.qubit)

        for qubit, byproduct in byproducts.items():
            if qubit not in outputs:
                raise PatternException(
                    error_code = "PAT004",
                    method = method,
                    qubit = qubit,
                    detail = f"by-product on non-output vertex {qubit}"
                )
            unknown = set().union(*(e.support() for e in byproduct.exprs())) - earlier
            if unknown:
                raise PatternException(
                    error_code = "PAT004",
                    method = method,
                    qubit = qubit,
                    detail = f"by-product uses unmeasured vertices {sorted(unknown)}"
                )

        for name, expr in self.readout.items():
            if expr.support() - earlier:
                raise PatternException(
                    error_code = "PAT004",
                    method = method,
                    detail = f"readout {name!r} uses unmeasured vertices {sorted(expr.support() - earlier)}"
                )

        object.__setattr__(self, "measurements", measurements)
        object.__setattr__(self, "outputs", outputs)
        object.__setattr__(self, "byproducts", byproducts)
        object.__setattr__(self, "readout", dict(self.readout))

    # ------------------------------------
    #             Properties
    # ------------------------------------

    @property
    def measured(self) -> Tuple[int, ...]:
        return tuple(m.qubit for m in self.measurements)

    @property
    def M(self) -> int:
        return len(self.measurements)

    @property
    def adapted_qubits(self) -> Tuple[int, ...]:
        return tuple(m.qubit for m in self.measurements if not m.adapt.is_zero)

    @property
    def is_adaptive(self) -> bool:
        return bool(self.adapted_qubits)

    @property
    def byproducts_affine(self) -> bool:
        return all(b.fx.is_affine and b.fz.is_affine for b in self.byproducts.values())

    def check_graph(self, graph: Graph) -> None:
        """Measured plus output vertices must be exactly the graph's vertices."""
        everything = sorted(self.measured + self.outputs)
        if everything != list(range(graph.n_vertices)):
            raise PatternException(
                error_code = "PAT004",
                method = "MeasurementPattern.check_graph",
                detail = f"pattern covers {everything}, graph has {graph.n_vertices} vertices"
            )

    # ------------------------------------
    #              Outcomes
    # ------------------------------------

    def outcome_bits(self, index: int) -> Outcome:
        """Outcome vector of an integer label; the first measured bit is the most significant."""
        return tuple((index >> (self.M - 1 - i)) & 1 for i in range(self.M))

    @staticmethod
    def outcome_index(bits: Sequence[int]) -> int:
        index = 0
        for b in bits:
            index = (index << 1) | int(b)
        return index

    def bits_by_vertex(self, outcome: Sequence[int]) -> Dict[int, int]:
        return {m.qubit: int(b) for m, b in zip(self.measurements, outcome)}

    def adaptations(self, outcome: Sequence[int]) -> Tuple[int, ...]:
        """``s_i`` for every measurement under the outcome vector."""
        bits = self.bits_by_vertex(outcome)
        return tuple(m.adapt.evaluate(bits) for m in self.measurements)

    def evaluate_readout(self, outcome: Sequence[int]) -> Dict[str, int]:
        bits = self.bits_by_vertex(outcome)
        return {name: expr.evaluate(bits) for name, expr in self.readout.items()}

    def byproduct_frame(self, outcome: Sequence[int]) -> Dict[int, Tuple[int, int, int]]:
        """``(fx, fz, fsig)`` per output vertex."""
        bits = self.bits_by_vertex(outcome)
        frame = {}
        for q in self.outputs:
            b = self.byproducts.get(q)
            frame[q] = (0, 0, 0) if b is None else tuple(e.evaluate(bits) for e in b.exprs())
        return frame

    # ------------------------------------
    #           Serialization
    # ------------------------------------

    def to_dict(self) -> dict:
        return {
            "measured": list(self.measured),
            "angles": [{"theta": m.theta, "alpha": m.alpha} for m in self.measurements],
            "adapt": [m.adapt.to_dict() for m in self.measurements],
            "outputs": list(self.outputs),
            "byproducts": [
                {"qubit": q, "fx": b.fx.to_dict(), "fz": b.fz.to_dict(), "fsig": b.fsig.to_dict()}
                for q, b in sorted(self.byproducts.items())
            ],
            "readout": {name: expr.to_dict() for name, expr in self.readout.items()}
        }

    @classmethod
    def from_dict(cls, document: dict, n_vertices: Optional[int] = None) -> "MeasurementPattern":
        """
        Parse a pattern document. Without ``"outputs"`` the by-product vertices are the
        outputs, or every unmeasured vertex when ``n_vertices`` is given.
        """
        try:
            measured = [int(q) for q in document["measured"]]
            angles = document.get("angles", [{}] * len(measured))
            adapt = document.get("adapt", [None] * len(measured))
            if len(angles) != len(measured) or len(adapt) != len(measured):
                raise ValueError("angles/adapt length differs from measured")

            measurements = [
                Measurement(
                    qubit = q,
                    theta = float(a.get("theta", 0.0)),
                    alpha = float(a.get("alpha", XY_PLANE)),
                    adapt = BooleanExpr.from_dict(s)
                )
                for q, a, s in zip(measured, angles, adapt)
            ]

            byproducts = {
                int(b["qubit"]): Byproduct(
                    qubit = int(b["qubit"]),
                    fx = BooleanExpr.from_dict(b.get("fx")),
                    fz = BooleanExpr.from_dict(b.get("fz")),
                    fsig = BooleanExpr.from_dict(b.get("fsig"))
                )
                for b in document.get("byproducts", [])
            }
        except (KeyError, TypeError, ValueError, AttributeError) as error:
            raise PatternException(
                error_code = "PAT006",
                method = "MeasurementPattern.from_dict",
                detail = str(error)
            ) from error

        if "outputs" in document:
            outputs = [int(q) for q in document["outputs"]]
        elif n_vertices is not None:
            outputs = [q for q in range(n_vertices) if q not in measured]
        else:
            outputs = sorted(byproducts)

        readout = {name: BooleanExpr.from_dict(e) for name, e in document.get("readout", {}).items()}
        return cls(tuple(measurements), tuple(outputs), byproducts, readout)


# ------------------------------------
#             By-products
# ------------------------------------

def byproduct_unitary(pat: MeasurementPattern, outcome: Sequence[int]) -> np.ndarray:
    """
    ``(x)_i (-1)^{fsig_i} X_i^{fx_i} Z_i^{fz_i}`` over the output vertices, in output order.
    """
    frame = pat.byproduct_frame(outcome)
    unitary = np.ones((1, 1), dtype = complex)
    for q in pat.outputs:
        fx, fz, fsig = frame[q]
        local = (-1) ** fsig * np.linalg.matrix_power(X, fx) @ np.linalg.matrix_power(Z, fz)
        unitary = np.kron(unitary, local)
    return unitary
