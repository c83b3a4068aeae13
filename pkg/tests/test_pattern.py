import math

import numpy as np
import pytest

from noisyoneway.core import Graph, H, PureState, X, Z, build_graph_state, state_fidelity
from noisyoneway.exceptions import PatternException
from noisyoneway.pattern import (BooleanExpr, Byproduct, Measurement, MeasurementPattern, OneWayBuilder, Z_AXIS,
                                 basis_vector, byproduct_unitary, check_orthonormal, ideal_answers,
                                 reference_answer)


def _chain(n: int, angles) -> MeasurementPattern:
    """Linear chain measuring 0..n-2 with the usual sign adaptation and by-product."""
    measurements = [Measurement(qubit = 0, theta = angles[0])]
    for i in range(1, n - 1):
        adapt = BooleanExpr.of(*range(i - 1, -1, -2))
        measurements.append(Measurement(qubit = i, theta = angles[i], adapt = adapt))
    out = n - 1
    fx = BooleanExpr.of(*range(n - 2, -1, -2))
    fz = BooleanExpr.of(*range(n - 3, -1, -2))
    return MeasurementPattern(tuple(measurements), (out,), {out: Byproduct(out, fx = fx, fz = fz)})


# ------------------------------------
#          Boolean expressions
# ------------------------------------

class TestBooleanExpr:

    def test_repeated_outcomes_cancel(self):
        assert BooleanExpr.of(1, 2, 1) == BooleanExpr.of(2)
        assert (BooleanExpr.of(3) ^ BooleanExpr.of(3)).is_zero

    def test_square_of_an_outcome_is_linear(self):
        assert BooleanExpr.product(2, 2) == BooleanExpr.of(2)

    def test_xor_with_a_constant(self):
        expr = 1 ^ BooleanExpr.of(0)
        assert expr.const == 1
        assert expr.evaluate({0: 1}) == 0

    def test_evaluate_with_products(self):
        expr = BooleanExpr.of(0) ^ BooleanExpr.product(1, 2)
        assert expr.evaluate({0: 0, 1: 1, 2: 1}) == 1
        assert expr.evaluate({0: 1, 1: 1, 2: 1}) == 0
        assert not expr.is_affine
        assert expr.support() == frozenset({0, 1, 2})

    def test_dict_round_trip(self):
        expr = BooleanExpr(const = 1, xor = (4, 0), and2 = ((1, 3),))
        assert BooleanExpr.from_dict(expr.to_dict()) == expr
        assert expr.to_dict() == {"const": 1, "xor": [0, 4], "and2": [[1, 3]]}

    def test_none_is_zero(self):
        assert BooleanExpr.from_dict(None).is_zero

    def test_higher_products_are_rejected(self):
        with pytest.raises(PatternException, match = "PAT003"):
            BooleanExpr.from_dict({"and2": [[0, 1, 2]]})

    def test_unknown_keys_are_rejected(self):
        with pytest.raises(PatternException, match = "PAT006"):
            BooleanExpr.from_dict({"or": [0]})

    def test_string_form(self):
        assert str(BooleanExpr.of(2, 0, const = 1)) == "k0 + k2 + 1"
        assert str(BooleanExpr.zero()) == "0"


# ------------------------------------
#        Bases and validation
# ------------------------------------

class TestMeasurementBasis:

    @pytest.mark.parametrize("theta", [0.0, 0.4, math.pi / 3, 2.5])
    @pytest.mark.parametrize("s", [0, 1])
    def test_bases_are_orthonormal(self, theta, s):
        pair = [basis_vector(theta, math.pi / 2, s, k).amplitudes for k in (0, 1)]
        check_orthonormal(pair, "test")

    def test_z_basis_is_computational(self):
        np.testing.assert_allclose(basis_vector(0.7, Z_AXIS, 0, 0).amplitudes, [1, 0])
        np.testing.assert_allclose(np.abs(basis_vector(0.7, Z_AXIS, 0, 1).amplitudes), [0, 1])

    def test_non_orthonormal_pair(self):
        with pytest.raises(PatternException, match = "PAT005"):
            check_orthonormal([np.array([1, 0]), np.array([1, 0])], "test")


class TestPatternValidation:

    def test_adaptation_on_a_later_outcome(self):
        with pytest.raises(PatternException, match = "PAT001"):
            MeasurementPattern(
                (Measurement(0, adapt = BooleanExpr.of(1)), Measurement(1)),
                (2,)
            )

    def test_adapted_z_measurement(self):
        with pytest.raises(PatternException, match = "PAT002"):
            MeasurementPattern(
                (Measurement(0), Measurement(1, alpha = Z_AXIS, adapt = BooleanExpr.of(0))),
                (2,)
            )

    def test_measured_output(self):
        with pytest.raises(PatternException, match = "PAT004"):
            MeasurementPattern((Measurement(0), Measurement(1)), (1,))

    def test_byproduct_on_unmeasured_vertex(self):
        with pytest.raises(PatternException, match = "PAT004"):
            MeasurementPattern((Measurement(0),), (1, 2), {1: Byproduct(1, fx = BooleanExpr.of(2))})

    def test_graph_coverage(self):
        pattern = _chain(3, [0.0, 0.0])
        pattern.check_graph(Graph.linear(3))
        with pytest.raises(PatternException, match = "PAT004"):
            pattern.check_graph(Graph.linear(4))

    def test_outcome_labels_put_the_first_measurement_first(self):
        pattern = _chain(4, [0.0, 0.0, 0.0])
        assert pattern.outcome_bits(4) == (1, 0, 0)
        assert pattern.outcome_index((0, 1, 1)) == 3

    def test_dict_round_trip(self):
        pattern = _chain(4, [0.1, 0.2, 0.3])
        again = MeasurementPattern.from_dict(pattern.to_dict())
        assert again.measurements == pattern.measurements
        assert again.outputs == pattern.outputs
        assert again.byproducts == pattern.byproducts

    def test_outputs_default_to_unmeasured_vertices(self):
        pattern = MeasurementPattern.from_dict({"measured": [0]}, n_vertices = 3)
        assert pattern.outputs == (1, 2)

    def test_malformed_document(self):
        with pytest.raises(PatternException, match = "PAT006"):
            MeasurementPattern.from_dict({"measured": [0, 1], "angles": [{}]})


# ------------------------------------
#           Ideal answers
# ------------------------------------

class TestIdealAnswers:

    def test_two_vertex_teleportation(self):
        answers = ideal_answers(build_graph_state(Graph.linear(2)), _chain(2, [0.0]))
        assert len(answers) == 2
        np.testing.assert_allclose(answers.probabilities, [0.5, 0.5])
        # |+> through one step is H|+> = |0>
        np.testing.assert_allclose(np.abs(reference_answer(answers)), [1.0, 0.0], atol = 1e-12)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_chain_answers_agree_after_byproduct(self, n, rng):
        angles = rng.uniform(0, 2 * np.pi, n - 1)
        pattern = _chain(n, angles)
        answers = ideal_answers(build_graph_state(Graph.linear(n)), pattern)
        reference = reference_answer(answers)
        assert answers.probabilities.sum() == pytest.approx(1.0)
        for outcome, branch in answers.items():
            corrected = byproduct_unitary(pattern, outcome).conj().T @ branch.amplitudes
            assert state_fidelity(reference, corrected) == pytest.approx(1.0)

    def test_z_measurement_leaves_an_unreachable_branch(self):
        pattern = MeasurementPattern((Measurement(0, alpha = Z_AXIS),), (1,))
        resource = PureState(np.kron([1, 0], np.array([1, 1]) / np.sqrt(2)))
        answers = ideal_answers(resource, pattern)
        assert answers.unreachable == [(1,)]
        assert answers[(1,)].state is None
        assert answers[(0,)].probability == pytest.approx(1.0)

    def test_size_mismatch(self):
        with pytest.raises(PatternException, match = "PAT004"):
            ideal_answers(PureState.plus(3), _chain(2, [0.0]))


class TestByproducts:

    def test_byproduct_unitary(self):
        pattern = MeasurementPattern(
            (Measurement(0), Measurement(1)),
            (2, 3),
            {2: Byproduct(2, fx = BooleanExpr.of(0)), 3: Byproduct(3, fz = BooleanExpr.of(1), fsig = BooleanExpr.of(0))}
        )
        np.testing.assert_allclose(byproduct_unitary(pattern, (1, 1)), -np.kron(X, Z))
        np.testing.assert_allclose(byproduct_unitary(pattern, (0, 0)), np.eye(4))


# ------------------------------------
#        Non-adaptive builder
# ------------------------------------

class TestOneWayBuilder:

    def test_hadamard_step(self):
        builder = OneWayBuilder()
        builder.wire("a")
        builder.h("a")
        graph, pattern = builder.build()
        assert graph.edges == ((0, 1),)
        assert pattern.outputs == (1,)
        answers = ideal_answers(build_graph_state(graph), pattern)
        np.testing.assert_allclose(np.abs(reference_answer(answers)), np.abs(H @ [1, 1]) / np.sqrt(2), atol = 1e-12)

    def test_cnot_kicks_back_the_phase(self):
        builder = OneWayBuilder()
        builder.wire("a")
        builder.wire("b", minus = True)
        builder.cnot("a", "b")
        graph, pattern = builder.build()
        assert not pattern.is_adaptive

        minus = np.array([1, -1]) / np.sqrt(2)
        expected = np.kron(minus, minus)
        answers = ideal_answers(build_graph_state(graph), pattern)
        for outcome, branch in answers.items():
            corrected = byproduct_unitary(pattern, outcome).conj().T @ branch.amplitudes
            assert state_fidelity(expected, corrected) == pytest.approx(1.0)

    def test_readout_closes_the_wire(self):
        builder = OneWayBuilder()
        builder.wire("a")
        builder.z("a")
        result = builder.readout_x("a", "bit")
        assert result == BooleanExpr.of(0, const = 1)
        with pytest.raises(PatternException, match = "PAT004"):
            builder.h("a")

    def test_duplicate_wire(self):
        builder = OneWayBuilder()
        builder.wire("a")
        with pytest.raises(PatternException, match = "PAT004"):
            builder.wire("a")
