import math

import numpy as np
import pytest

from noisyoneway.channels import NoiseChannel, apply_channels
from noisyoneway.core import DensityMatrix, PureState, rx, rz
from noisyoneway.correlations import (bell_diagonal_discord, classical_correlation, concurrence,
                                      correlation_profile, discord, entanglement_potential, fibonacci_directions,
                                      linear_entropy, mep, mutual_information, negativity, von_neumann_entropy)
from noisyoneway.exceptions import CorrelationException
from noisyoneway.protocols import rsp


def _werner(bell, p):
    return p * np.outer(bell, bell.conj()) + (1 - p) * np.eye(4) / 4


def _classical_quantum():
    """Qubit A classical in the z basis, qubit B in |0> or |+>."""
    zero, plus = np.array([1, 0]), np.array([1, 1]) / np.sqrt(2)
    return 0.5 * (np.kron(np.diag([1, 0]), np.outer(zero, zero)) + np.kron(np.diag([0, 1]), np.outer(plus, plus)))


def _random_mixed(rng, n = 2):
    ginibre = rng.normal(size = (2 ** n, 2 ** n)) + 1j * rng.normal(size = (2 ** n, 2 ** n))
    rho = ginibre @ ginibre.conj().T
    return rho / np.trace(rho)


def _local_rotation(rng):
    return np.kron(
        rz(rng.uniform(0, 2 * np.pi)) @ rx(rng.uniform(0, 2 * np.pi)),
        rz(rng.uniform(0, 2 * np.pi)) @ rx(rng.uniform(0, 2 * np.pi))
    )


# ------------------------------------
#             Entanglement
# ------------------------------------

class TestEntanglement:

    def test_bell_state(self, bell):
        rho = np.outer(bell, bell.conj())
        assert concurrence(rho) == pytest.approx(1.0)
        assert negativity(rho) == pytest.approx(0.5)
        assert von_neumann_entropy(rho) == pytest.approx(0.0, abs = 1e-12)

    def test_product_state(self, rng):
        rho = np.kron(PureState.random(1, rng).to_density().entries, PureState.random(1, rng).to_density().entries)
        assert concurrence(rho) == pytest.approx(0.0, abs = 1e-7)
        assert negativity(rho) == pytest.approx(0.0, abs = 1e-12)

    @pytest.mark.parametrize("p", [0.1, 1 / 3, 0.5, 0.9])
    def test_werner_concurrence(self, bell, p):
        assert concurrence(_werner(bell, p)) == pytest.approx(max(0.0, (3 * p - 1) / 2), abs = 1e-7)

    def test_negativity_partition_on_three_qubits(self, bell):
        vector = np.kron(bell, [1, 0])
        rho = np.outer(vector, vector.conj())
        assert negativity(rho, (0,)) == pytest.approx(0.5)
        assert negativity(rho, (2,)) == pytest.approx(0.0, abs = 1e-12)

    def test_linear_entropy(self):
        assert linear_entropy(np.eye(2) / 2) == pytest.approx(1.0)
        assert linear_entropy(PureState.plus().to_density()) == pytest.approx(0.0, abs = 1e-12)

    @pytest.mark.parametrize("t", [0.0, 0.3, 1.0, 3.0])
    def test_dephased_pair_concurrence_is_exact(self, t):
        vector = rsp().resource().state.amplitudes
        rho = apply_channels(np.outer(vector, vector.conj()), {0: NoiseChannel.phase_flip(1.0, t)})
        assert concurrence(rho) == pytest.approx(math.exp(-2 * t), abs = 1e-12)

    def test_invariant_under_local_rotations(self, rng, bell):
        for rho in (_random_mixed(rng), _werner(bell, 0.8), _random_mixed(rng, 3)):
            n = int(np.log2(len(rho)))
            local = _local_rotation(rng) if n == 2 else np.kron(_local_rotation(rng), rx(rng.uniform(0, np.pi)))
            rotated = local @ rho @ local.conj().T
            assert negativity(rotated) == pytest.approx(negativity(rho), abs = 1e-10)
            if n == 2:
                assert concurrence(rotated) == pytest.approx(concurrence(rho), abs = 1e-10)

    def test_concurrence_needs_two_qubits(self):
        with pytest.raises(CorrelationException, match = "COR001"):
            concurrence(np.eye(8) / 8)


# ------------------------------------
#               Discord
# ------------------------------------

class TestDiscord:

    def test_bell_state(self, bell):
        rho = np.outer(bell, bell.conj())
        assert mutual_information(rho) == pytest.approx(2.0)
        assert discord(rho) == pytest.approx(1.0, abs = 1e-8)

    @pytest.mark.parametrize("p", [0.2, 0.6])
    def test_werner_closed_form(self, bell, p):
        value, information, classical = bell_diagonal_discord(_werner(bell, p))
        c = (1 + p) / 2
        assert classical == pytest.approx(1 + c * math.log2(c) + (1 - c) * math.log2(1 - c))
        assert value == pytest.approx(information - classical)
        assert discord(_werner(bell, p)) == pytest.approx(value)

    def test_optimizer_reaches_the_closed_form_off_the_bell_basis(self, rng):
        bells = np.array([[1, 0, 0, 1], [1, 0, 0, -1], [0, 1, 1, 0], [0, 1, -1, 0]]) / np.sqrt(2)
        weights = rng.dirichlet(np.ones(4))
        diagonal = sum(w * np.outer(v, v) for w, v in zip(weights, bells))
        local = _local_rotation(rng)
        rho = local @ diagonal @ local.conj().T
        assert not np.allclose(rho, diagonal)

        _, _, closed = bell_diagonal_discord(rho)
        for side in ("A", "B"):
            assert classical_correlation(rho, side) == pytest.approx(closed, abs = 1e-6)

    def test_classical_side_has_no_discord(self):
        rho = _classical_quantum()
        assert discord(rho, "A", starts = 8) == pytest.approx(0.0, abs = 1e-5)
        assert discord(rho, "B", starts = 8) > 1e-3

    def test_classical_correlation_is_bounded_by_mutual_information(self, rng):
        vector = PureState.random(2, rng).amplitudes
        rho = 0.7 * np.outer(vector, vector.conj()) + 0.3 * np.eye(4) / 4
        assert 0.0 <= classical_correlation(rho, starts = 4) <= mutual_information(rho) + 1e-9

    def test_closed_form_needs_mixed_marginals(self):
        with pytest.raises(CorrelationException, match = "COR001"):
            bell_diagonal_discord(_classical_quantum())

    def test_unknown_side(self, bell):
        with pytest.raises(CorrelationException, match = "COR001"):
            discord(np.outer(bell, bell.conj()), "C")

    def test_fibonacci_directions_cover_the_sphere(self):
        directions = fibonacci_directions(64)
        assert directions.shape == (64, 2)
        z = np.cos(directions[:, 0])
        assert z.max() > 0.95 and z.min() < -0.95
        assert abs(z.mean()) < 1e-12


# ------------------------------------
#      Minimum entanglement potential
# ------------------------------------

class TestMep:

    def test_bell_state(self, bell):
        assert mep(np.outer(bell, bell.conj()), starts = 4).value == pytest.approx(1.0, abs = 1e-4)

    def test_computational_product_state(self):
        assert mep(PureState.basis("00").to_density(), starts = 1).value == pytest.approx(0.0, abs = 1e-12)

    def test_rotated_product_state(self):
        rho = PureState.plus(2).to_density()
        # Copying |+>|+> gives four equal Schmidt coefficients: (4 * 1/2)^2 - 1
        assert entanglement_potential(rho) == pytest.approx(3.0, abs = 1e-9)
        assert mep(rho).value < 1e-6

    def test_seed_is_reproducible(self, bell):
        rho = _werner(bell, 0.5)
        assert mep(rho, starts = 3, seed = 7) == mep(rho, starts = 3, seed = 7)

    def test_size_limit(self):
        with pytest.raises(CorrelationException, match = "COR003"):
            mep(DensityMatrix.maximally_mixed(4))


# ------------------------------------
#               Profile
# ------------------------------------

class TestProfile:

    def test_bell_profile(self, bell):
        profile = correlation_profile(np.outer(bell, bell.conj()), with_mep = False)
        assert profile.concurrence == pytest.approx(1.0)
        assert profile.negativity == pytest.approx(0.5)
        assert profile.discord == pytest.approx(1.0, abs = 1e-8)
        assert profile.classical_corr == pytest.approx(1.0, abs = 1e-8)
        assert profile.linear_entropy == pytest.approx(1.0)
        assert math.isnan(profile.mep)

    def test_series_view(self, bell):
        series = correlation_profile(_werner(bell, 0.5), with_mep = False).to_series()
        assert list(series.index) == [
            "concurrence", "negativity", "discord", "mutual_info", "classical_corr", "linear_entropy", "mep"
        ]
