import numpy as np
import pytest

from noisyoneway.core import (DensityMatrix, H, I2, PureState, X, Y, Z, apply_operator, cnot_matrix, cz_matrix,
                              euler_unitary, hermitian_eig, operator_on, partial_trace, partial_transpose,
                              place_state, rotation, rz, state_fidelity, tensor)
from noisyoneway.exceptions import StateException


# ------------------------------------
#               States
# ------------------------------------

class TestPureState:

    def test_basis_ordering_puts_qubit_zero_first(self):
        state = PureState.basis("10")
        np.testing.assert_allclose(state.amplitudes, [0, 0, 1, 0])

    def test_rejects_unnormalized_amplitudes(self):
        with pytest.raises(StateException, match = "LIN002"):
            PureState(np.array([1, 1], dtype = complex))

    def test_rejects_non_power_of_two(self):
        with pytest.raises(StateException, match = "LIN001"):
            PureState.normalized([1, 1, 1])

    def test_zero_vector_cannot_be_normalized(self):
        with pytest.raises(StateException, match = "LIN002"):
            PureState.normalized([0, 0])

    def test_random_state_is_normalized(self, rng):
        state = PureState.random(3, rng)
        assert state.n == 3
        assert np.vdot(state.amplitudes, state.amplitudes).real == pytest.approx(1.0)

    def test_amplitudes_are_read_only(self):
        state = PureState.plus(2)
        with pytest.raises(ValueError):
            state.amplitudes[0] = 0


class TestDensityMatrix:

    def test_rejects_non_hermitian(self):
        with pytest.raises(StateException, match = "LIN006"):
            DensityMatrix(np.array([[0.5, 0.5], [0.0, 0.5]]))

    def test_rejects_wrong_trace(self):
        with pytest.raises(StateException, match = "LIN007"):
            DensityMatrix(np.eye(2))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(StateException, match = "LIN007"):
            DensityMatrix(np.diag([1.5, -0.5]))

    def test_purity(self):
        assert PureState.plus().to_density().purity() == pytest.approx(1.0)
        assert DensityMatrix.maximally_mixed(2).purity() == pytest.approx(0.25)

    def test_tensor_of_mixed_kinds_is_rejected(self):
        with pytest.raises(StateException, match = "LIN003"):
            tensor(PureState.plus(), DensityMatrix.maximally_mixed())


# ------------------------------------
#        Partial trace / transpose
# ------------------------------------

class TestReductions:

    def test_partial_trace_of_product(self, rng):
        a, b = PureState.random(1, rng), PureState.random(2, rng)
        joint = tensor(a, b).to_density()
        np.testing.assert_allclose(partial_trace(joint, [0]).entries, a.to_density().entries, atol = 1e-12)
        np.testing.assert_allclose(partial_trace(joint, [1, 2]).entries, b.to_density().entries, atol = 1e-12)

    def test_partial_trace_needs_a_kept_qubit(self):
        with pytest.raises(StateException, match = "LIN004"):
            partial_trace(DensityMatrix.maximally_mixed(2), [])

    def test_partial_trace_out_of_range(self):
        with pytest.raises(StateException, match = "LIN005"):
            partial_trace(DensityMatrix.maximally_mixed(2), [2])

    def test_partial_transpose_of_bell_state(self, bell):
        rho = np.outer(bell, bell.conj())
        values = np.linalg.eigvalsh(partial_transpose(rho, [0]))
        np.testing.assert_allclose(np.sort(values), [-0.5, 0.5, 0.5, 0.5], atol = 1e-12)

    def test_partial_transpose_twice_is_identity(self, rng):
        vector = PureState.random(3, rng).amplitudes
        rho = np.outer(vector, vector.conj())
        np.testing.assert_allclose(partial_transpose(partial_transpose(rho, [1]), [1]), rho)


class TestHermitianEig:

    def test_reconstruction_and_order(self, rng):
        a = rng.normal(size = (8, 8)) + 1j * rng.normal(size = (8, 8))
        matrix = a + a.conj().T
        values, vectors = hermitian_eig(matrix)
        assert np.all(np.diff(values) <= 0)
        np.testing.assert_allclose((vectors * values) @ vectors.conj().T, matrix, atol = 1e-10)

    def test_rejects_non_hermitian(self):
        with pytest.raises(StateException, match = "LIN006"):
            hermitian_eig(np.array([[0, 1], [0, 0]]))


# ------------------------------------
#               Gates
# ------------------------------------

class TestGates:

    def test_paulis_square_to_identity(self):
        for gate in (X, Y, Z, H):
            np.testing.assert_allclose(gate @ gate, I2, atol = 1e-14)

    def test_rotation_about_z_by_pi_is_z_up_to_phase(self):
        np.testing.assert_allclose(rotation((0, 0, 1), np.pi), -1j * Z, atol = 1e-14)

    def test_euler_unitary_is_unitary(self, rng):
        u = euler_unitary(*rng.uniform(0, 2 * np.pi, 3))
        np.testing.assert_allclose(u @ u.conj().T, I2, atol = 1e-12)

    def test_cnot_from_cz_and_hadamards(self):
        h_target = operator_on(H, 1, 2)
        np.testing.assert_allclose(h_target @ cz_matrix(2, 0, 1) @ h_target, cnot_matrix(2, 0, 1), atol = 1e-12)

    def test_apply_operator_matches_dense(self, rng):
        vector = PureState.random(3, rng).amplitudes
        np.testing.assert_allclose(apply_operator(vector, rz(0.3), 1), operator_on(rz(0.3), 1, 3) @ vector)

    def test_place_state_on_scattered_positions(self):
        block = PureState.basis("10").amplitudes
        full = place_state(block, [2, 0], 3)
        plus = np.array([1, 1]) / np.sqrt(2)
        expected = np.kron(np.kron([1, 0], plus), [0, 1])
        np.testing.assert_allclose(full, expected)

    def test_state_fidelity_of_vector_and_matrix_agree(self, rng):
        a, b = PureState.random(2, rng).amplitudes, PureState.random(2, rng).amplitudes
        assert state_fidelity(a, b) == pytest.approx(state_fidelity(a, np.outer(b, b.conj())))
