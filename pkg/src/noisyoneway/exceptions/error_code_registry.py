import re

from typing import Dict, List, Optional

CODE_FORMAT = re.compile(r"^[A-Z]{3}\d{3}$")


class ErrorCodeRegistry:
    """
    Message templates by error code. Codes are three capitals and three digits; the capitals name
    the family (``CON`` configuration, ``LIN`` states, ``CHN`` channels ...).
    """
    _registry: Dict[str, str] = {}

    @classmethod
    def register(cls, code: str, message_template: str) -> None:
        if not CODE_FORMAT.match(code):
            raise ValueError(f"Malformed error code: {code!r}")
        if code in cls._registry:
            raise ValueError(f"Duplicate error code detected: {code}")

        cls._registry[code] = message_template

    @classmethod
    def get(cls, code: str) -> Optional[str]:
        return cls._registry.get(code)

    @classmethod
    def codes(cls, prefix: str = "") -> List[str]:
        return sorted(code for code in cls._registry if code.startswith(prefix))

    @classmethod
    def families(cls) -> List[str]:
        return sorted({code[:3] for code in cls._registry})
