import math

import numpy as np
import pytest

from noisyoneway.channels import NoiseChannel
from noisyoneway.core import PureState, rx, rz
from noisyoneway.exceptions import ConfigurationException, ProtocolException
from noisyoneway.protocols import (EnsembleResource, PROTOCOLS, ancilla_entangling_step, ancilla_step,
                                   build_protocol, classical_replacement, cnot15, dj, is_constant,
                                   outcome_distribution, replacement_maps, rotation, rotation_unitary, rsp,
                                   success_probability, truth_table, zero_readout_probability)


# ------------------------------------
#          Noiseless behaviour
# ------------------------------------

class TestZeroNoise:

    @pytest.mark.parametrize("phi", [0.0, 0.4, math.pi / 2, 2.9])
    def test_rsp(self, phi):
        assert rsp(phi).zero_noise_check()

    def test_rotation(self, rng):
        for _ in range(5):
            angles = rng.uniform(0, 2 * np.pi, 3)
            assert rotation(*angles, input_state = PureState.random(1, rng)).zero_noise_check()

    def test_rotation_unitary_order(self):
        np.testing.assert_allclose(rotation_unitary(0.3, 0.5, 0.7), rx(0.7) @ rz(0.5) @ rx(0.3), atol = 1e-14)

    def test_cnot15(self, rng):
        protocol = cnot15(PureState.normalized(np.kron(PureState.random(1, rng).amplitudes,
                                                       PureState.random(1, rng).amplitudes)))
        assert protocol.graph.n_vertices == 15
        assert protocol.pattern.M == 13
        assert not protocol.pattern.is_adaptive
        assert protocol.zero_noise_check()

    def test_with_input_keeps_the_circuit(self, rng):
        base = rotation(0.3, 0.5, 0.7)
        fresh = base.with_input(PureState.random(1, rng))
        assert fresh.pattern is base.pattern
        np.testing.assert_allclose(fresh.target, rotation_unitary(0.3, 0.5, 0.7) @ fresh.input_state.amplitudes)
        assert fresh.zero_noise_check()

    @pytest.mark.parametrize("f", ["balanced", "constant0", "constant1"])
    def test_dj(self, f):
        assert dj(3, f).zero_noise_check()


# ------------------------------------
#              Noisy runs
# ------------------------------------

class TestNoisy:

    @pytest.mark.parametrize("phi", [0.0, 1.1])
    def test_rsp_under_dephasing(self, phi):
        channel = NoiseChannel.phase_flip(1.0, 0.6)
        report = rsp(phi).fidelity({0: channel})
        assert report.average() == pytest.approx((1 + math.exp(-1.2)) / 2)

    def test_rotation_engine_matches_oracle(self, rng, random_channel):
        protocol = rotation(*rng.uniform(0, 2 * np.pi, 3), input_state = PureState.random(1, rng))
        channels = {q: random_channel() for q in range(5)}
        measured, outputs = protocol.split_channels(channels)

        report = protocol.fidelity(measured, outputs)
        oracle = protocol.simulate(channels).to_report()
        np.testing.assert_allclose(report.F, oracle.F, atol = 1e-9)
        np.testing.assert_allclose(report.Z, oracle.Z, atol = 1e-9)

    def test_split_channels_shares_a_single_channel(self):
        channel = NoiseChannel.white(1.0, 0.1)
        measured, outputs = rsp().split_channels(channel)
        assert measured == {0: channel}
        assert outputs == {1: channel}

    def test_to_dict(self):
        document = rsp(0.5).to_dict()
        assert document["name"] == "rsp"
        assert document["params"] == {"phi": 0.5}
        assert document["graph"] == {"n": 2, "edges": [[0, 1]]}


# ------------------------------------
#            Deutsch-Jozsa
# ------------------------------------

class TestDeutschJozsa:

    def test_truth_tables(self):
        balanced = truth_table(3, "balanced")
        assert sum(balanced.values()) == 4
        assert not is_constant(balanced)
        assert is_constant(truth_table(3, "constant1"))
        assert truth_table(2, 0) == {"00": 0, "01": 0, "10": 0, "11": 0}

    @pytest.mark.parametrize("f, zero", [("constant0", 1.0), ("constant1", 1.0), ("balanced", 0.0)])
    def test_readout_is_deterministic(self, f, zero):
        assert zero_readout_probability(dj(3, f)) == pytest.approx(zero, abs = 1e-12)
        assert success_probability(dj(3, f)) == pytest.approx(1.0)

    def test_noise_lowers_success(self):
        protocol = dj(3, "balanced")
        channel = NoiseChannel.phase_flip(1.0, 0.3)
        noisy = success_probability(protocol, channel)
        assert 0.5 < noisy < 1.0

    def test_distribution_sums_to_one(self):
        distribution = outcome_distribution(dj(2, "balanced"), NoiseChannel.white(0.5, 0.4))
        assert sum(distribution.values()) == pytest.approx(1.0)

    def test_unknown_function(self):
        with pytest.raises(ProtocolException, match = "PRO001"):
            dj(3, "parity")

    def test_no_input_bits(self):
        with pytest.raises(ProtocolException, match = "PRO001"):
            dj(0)


# ------------------------------------
#         Classical replacement
# ------------------------------------

class TestReplacement:

    @pytest.mark.parametrize("f", ["balanced", "constant1"])
    def test_dense_replacement_keeps_the_statistics(self, f):
        protocol = dj(3, f)
        replacement, report = classical_replacement(protocol)
        assert report.dense
        assert report.passed
        assert set(report.negativities) == set(protocol.pattern.measured)
        assert zero_readout_probability(protocol, resource = replacement) == pytest.approx(
            zero_readout_probability(protocol), abs = 1e-10
        )

    def test_replacement_maps_protect_the_measurement_axis(self):
        maps = replacement_maps(dj(2))
        assert all(m.p == 0.5 for m in maps.values())

    def test_ensemble_for_large_resources(self):
        replacement, report = classical_replacement(cnot15(), samples = 5, seed = 1)
        assert isinstance(replacement, EnsembleResource)
        assert not report.dense
        assert len(report.marginals) == 5
        assert report.passed

    def test_adaptive_pattern_is_rejected(self):
        with pytest.raises(ProtocolException, match = "PRO002"):
            classical_replacement(rotation(0.1, 0.2, 0.3))


# ------------------------------------
#          Ancilla-driven steps
# ------------------------------------

class TestAncilla:

    @pytest.mark.parametrize("p_xy", [0.0, 0.15, 0.4])
    def test_single_qubit_step_closed_form(self, p_xy, rng):
        channel = NoiseChannel.from_mixing(p_xy, "white")
        for _ in range(5):
            report = ancilla_step(PureState.random(2, rng), 0, 0.4, channel)
            assert report.holds
            assert report.mean_fidelity == pytest.approx(1 - p_xy * (1 - report.xi ** 2))
            assert report.mean_fidelity <= report.bound + 1e-9

    def test_bound_is_tight_for_a_maximally_entangled_register(self, bell):
        report = ancilla_step(PureState(bell), 0, 0.0, NoiseChannel.from_mixing(0.2, "white"))
        assert report.xi == pytest.approx(0.0, abs = 1e-12)
        assert report.linear_entropy == pytest.approx(1.0)
        assert report.mean_fidelity == pytest.approx(report.bound)

    def test_entangling_step(self, rng):
        report = ancilla_entangling_step(PureState.random(2, rng), 0, 1, NoiseChannel.white(0.5, 0.3))
        assert report.holds

    def test_register_size_limit(self, rng):
        with pytest.raises(ProtocolException, match = "PRO003"):
            ancilla_step(PureState.random(5, rng), 0, 0.1, NoiseChannel.white(1.0, 0.1))

    def test_entangling_step_needs_two_qubits(self, rng):
        with pytest.raises(ProtocolException, match = "PRO005"):
            ancilla_entangling_step(PureState.random(2, rng), 1, 1, NoiseChannel.white(1.0, 0.1))


# ------------------------------------
#               Catalog
# ------------------------------------

class TestCatalog:

    def test_names(self):
        assert set(PROTOCOLS) == {"rsp", "rotation", "cnot15", "dj"}

    def test_build_with_params(self):
        assert build_protocol("dj", n = 2, f = "constant0").params == {"n": 2, "f": "constant0"}

    def test_unknown_protocol(self):
        with pytest.raises(ConfigurationException, match = "CON003"):
            build_protocol("grover")

    def test_unknown_parameter(self):
        with pytest.raises(ConfigurationException, match = "CON002"):
            build_protocol("rsp", theta = 0.3)
