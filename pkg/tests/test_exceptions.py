import pytest

from noisyoneway.exceptions import (ChannelException, ConfigurationException, CorrelationException,
                                    ErrorCodeRegistry, PatternException, ProtocolException, StateException)


# ------------------------------------
#             Registry
# ------------------------------------

class TestRegistry:

    def test_families_are_registered(self):
        assert ErrorCodeRegistry.codes("CON") == [f"CON00{i}" for i in range(1, 8)]
        assert ErrorCodeRegistry.codes("LIN") == [f"LIN00{i}" for i in range(1, 10)]
        assert ErrorCodeRegistry.codes("PRO") == [f"PRO00{i}" for i in range(1, 6)]
        assert ErrorCodeRegistry.codes("COR") == ["COR001", "COR002", "COR003"]

    def test_duplicate_code_is_rejected(self):
        with pytest.raises(ValueError, match = "Duplicate"):
            ErrorCodeRegistry.register("CON001", "{method}")

    def test_malformed_code_is_rejected(self):
        with pytest.raises(ValueError, match = "Malformed"):
            ErrorCodeRegistry.register("CONF01", "{method}")

    def test_families(self):
        assert ErrorCodeRegistry.families() == ["CHN", "CON", "COR", "FID", "GRA", "LIN", "PAT", "PRO", "SIM"]


# ------------------------------------
#             Messages
# ------------------------------------

class TestMessages:

    def test_configuration_message_names_the_field(self):
        error = ConfigurationException(error_code = "CON001", method = "ExperimentConfig", parameter = "sweep.steps")
        assert "sweep.steps" in str(error)
        assert "CON001" in str(error)

    def test_unsupported_message_uses_typed_method(self):
        error = ConfigurationException(
            error_code = "CON003",
            method = "build_protocol",
            typed_method = "protocol 'simon'"
        )
        assert "protocol 'simon'" in str(error)

    def test_unknown_code_falls_back(self):
        error = ConfigurationException(error_code = "CON999", method = "somewhere")
        assert "NE000" in str(error)

    def test_unfilled_field_stays_visible(self):
        error = ConfigurationException(error_code = "CON006", method = "m", typed_method = "discord")
        assert "<parameter?>" in str(error)

    def test_details(self):
        error = ChannelException(error_code = "CHN003", method = "FixedPoleMap")
        details = error.details()
        assert details["family"] == "CHN"
        assert details["method"] == "FixedPoleMap"
        assert details["suggestion"] == error.suggestion

    def test_default_suggestion(self):
        error = ConfigurationException(error_code = "CON002", method = "m", parameter_context = "x")
        assert "Please check your parameters" in str(error)

    @pytest.mark.parametrize("family", [
        StateException, ChannelException, PatternException, ProtocolException, CorrelationException
    ])
    def test_families_share_the_base(self, family):
        from noisyoneway.exceptions import NoisyOneWayException
        assert issubclass(family, NoisyOneWayException)
