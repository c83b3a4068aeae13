import numpy as np
import pytest

from noisyoneway.channels import NoiseChannel
from noisyoneway.core import DensityMatrix, Graph, PureState, build_graph_state
from noisyoneway.exceptions import SimulationException
from noisyoneway.oracle import MAX_QUBITS, measure_distribution, simulate
from noisyoneway.pattern import BooleanExpr, Byproduct, Measurement, MeasurementPattern, Z_AXIS, ideal_answers


def _teleport() -> MeasurementPattern:
    return MeasurementPattern((Measurement(0),), (1,), {1: Byproduct(1, fx = BooleanExpr.of(0))})


class TestMeasureDistribution:

    def test_bell_state_in_the_z_basis(self, bell):
        state = DensityMatrix(np.outer(bell, bell.conj()))
        p0, p1, posts = measure_distribution(state, 0, [np.array([1, 0]), np.array([0, 1])])
        assert (p0, p1) == (pytest.approx(0.5), pytest.approx(0.5))
        np.testing.assert_allclose(posts[0].entries, np.diag([1, 0]), atol = 1e-12)
        np.testing.assert_allclose(posts[1].entries, np.diag([0, 1]), atol = 1e-12)

    def test_impossible_outcome_is_pruned(self):
        state = PureState.basis("01").to_density()
        p0, p1, posts = measure_distribution(state, 1, [np.array([1, 0]), np.array([0, 1])])
        assert p0 == pytest.approx(0.0)
        assert posts[0] is None

    def test_last_qubit_leaves_a_scalar(self):
        p0, p1, posts = measure_distribution(PureState.plus().to_density(), 0, [np.array([1, 1]) / np.sqrt(2), np.array([1, -1]) / np.sqrt(2)])
        assert p0 == pytest.approx(1.0)
        assert posts[0].entries.shape == (1, 1)


class TestSimulate:

    def test_noiseless_run_reproduces_the_ideal_branches(self):
        resource = build_graph_state(Graph.linear(2))
        run = simulate(resource, _teleport())
        np.testing.assert_allclose(run.probabilities, ideal_answers(resource, _teleport()).probabilities)
        assert run.average == pytest.approx(1.0)

    def test_dephasing_on_the_measured_vertex(self):
        resource = build_graph_state(Graph.linear(2))
        channel = NoiseChannel.phase_flip(1.0, 0.5)
        run = simulate(resource, _teleport(), {0: channel})
        assert run.average == pytest.approx(1 - channel.mixing_probabilities().p_xy)

    def test_pruned_branches_are_nan(self):
        pattern = MeasurementPattern((Measurement(0, alpha = Z_AXIS),), (1,))
        resource = PureState(np.kron([1, 0], np.array([1, 1]) / np.sqrt(2)))
        run = simulate(resource, pattern)
        assert run.branches[(1,)] == (0.0, None)
        assert np.isnan(run.fidelities[(1,)])
        report = run.to_report()
        assert report.average() == pytest.approx(1.0)

    def test_density_resource_needs_a_target(self):
        with pytest.raises(SimulationException, match = "SIM002"):
            simulate(DensityMatrix.maximally_mixed(2), _teleport())

    def test_size_limit(self):
        n = MAX_QUBITS + 1
        pattern = MeasurementPattern(tuple(Measurement(q) for q in range(n - 1)), (n - 1,))
        with pytest.raises(SimulationException, match = "SIM001"):
            simulate(build_graph_state(Graph.linear(n)), pattern)
