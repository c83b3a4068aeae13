import numpy as np
import pytest

from noisyoneway.cli import CHECKS, run_checks


@pytest.mark.parametrize("name", list(CHECKS))
def test_check_passes(name):
    result = CHECKS[name](0.0, np.random.default_rng(0))
    assert result.name == name
    assert result.passed, f"{name}: error {result.error:.3g} > {result.tolerance:.3g} ({result.detail})"


@pytest.mark.parametrize("name", ["rsp_phase_flip", "channels", "ancilla"])
def test_perturbation_is_detected(name):
    result = CHECKS[name](1e-3, np.random.default_rng(0))
    assert not result.passed
    assert result.error >= 1e-3


def test_filter_selects_by_substring():
    table = run_checks("rsp_", 0.0)
    assert set(table["name"]) == {"rsp_phase_flip", "rsp_white", "rsp_fig1_ordering", "rsp_fig2_discord", "rsp_mep"}
