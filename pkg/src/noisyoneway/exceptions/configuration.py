from .base import NoisyOneWayException
from typing import Optional, List, Union
from .error_code_registry import ErrorCodeRegistry


# ----------------------------------------------------------------
#                Configuration Exception Error Codes
# ----------------------------------------------------------------

# CON001 – Required field absent from a config or channel document

ErrorCodeRegistry.register(
    "CON001",
    "[{method}] - {error_code}\n\n"
    "Field {parameter} is required but absent\n\n"
    "Suggestion: {suggestion}"
)

# CON002 – Value out of range (probability outside [0, 1], negative rate, bad label ...)

ErrorCodeRegistry.register(
    "CON002",
    "[{method}] - {error_code}\n\n"
    "Value rejected at {parameter_context}\n\n"
    "Suggestion: {suggestion}"
)

# CON003 – Unknown protocol, measure, channel kind or preset

ErrorCodeRegistry.register(
    "CON003",
    "[{method}] - {error_code}\n\n"
    "Unknown {typed_method}\n\n"
    "Suggestion: {suggestion}"
)

# CON004 – Field of the wrong JSON type

ErrorCodeRegistry.register(
    "CON004",
    "[{method}] - {error_code}\n\n"
    "Field {parameter} has the wrong type\n\n"
    "Suggestion: {suggestion}"
)

# CON005 – Sweep with fewer than two points

ErrorCodeRegistry.register(
    "CON005",
    "[{method}] - {error_code}\n\n"
    "Sweep {parameter_context} has fewer than two points\n\n"
    "Suggestion: {suggestion}"
)

# CON006 – Measure or channel the protocol cannot evaluate

ErrorCodeRegistry.register(
    "CON006",
    "[{method}] - {error_code}\n\n"
    "{typed_method} is not available for {parameter}\n\n"
    "Suggestion: {suggestion}"
)

# CON007 – Config or output path unusable

ErrorCodeRegistry.register(
    "CON007",
    "[{method}] - {error_code}\n\n"
    "Cannot use path {parameter}\n\n"
    "Suggestion: {suggestion}"
)




# ----------------------------------------------------------------
#                    Configuration Exception
# ----------------------------------------------------------------

class ConfigurationException(NoisyOneWayException):
    """
    Raised for experiment configs and constructor arguments that cannot be used.

    ``parameter`` names a field path such as ``channels[1].gamma``; ``parameter_context``
    is used where the message describes the location rather than a single field.
    """
    default_suggestion = "Please check your parameters or experiment config."

    def __init__(
            self,
            *,
            error_code: str,
            method: str,
            parameter: Optional[Union[str, List[str]]] = None,
            parameter_context: Optional[Union[str, List[str]]] = None,
            typed_method: Optional[str] = None,
            suggestion: Optional[str] = None
    ):
        if isinstance(parameter, list):
            parameter = ", ".join(parameter)

        super().__init__(
            error_code = error_code,
            method = method,
            context = {
                "parameter": parameter,
                "typed_method": typed_method,
                "parameter_context": parameter_context
            },
            suggestion = suggestion
        )
