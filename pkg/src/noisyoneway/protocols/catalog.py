from typing import Callable, Dict

from ..exceptions import ConfigurationException
from .base import Protocol
from .cnot import cnot15
from .dj import dj
from .rotation import rotation
from .rsp import rsp

PROTOCOLS: Dict[str, Callable[..., Protocol]] = {
    "rsp": rsp,
    "rotation": rotation,
    "cnot15": cnot15,
    "dj": dj
}


def build_protocol(name: str, **params) -> Protocol:
    """
    Catalog lookup. The ancilla-driven steps are analyses rather than patterns and are not
    listed here.
    """
    factory = PROTOCOLS.get(name)
    if factory is None:
        raise ConfigurationException(
            error_code = "CON003",
            method = "build_protocol",
            typed_method = f"protocol {name!r}",
            suggestion = f"Available protocols: {', '.join(PROTOCOLS)}."
        )
    try:
        return factory(**params)
    except TypeError as error:
        raise ConfigurationException(
            error_code = "CON002",
            method = "build_protocol",
            parameter_context = f"params of {name}",
            suggestion = str(error)
        ) from error
