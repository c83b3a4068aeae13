"""
Boolean functions of measurement outcomes: an XOR of single outcomes, a constant bit and
optional degree-two products.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Mapping

from ..exceptions import PatternException


def _pair(term, method: str) -> FrozenSet[int]:
    indices = frozenset(int(i) for i in term)
    if len(list(term)) > 2:
        raise PatternException(
            error_code = "PAT003",
            method = method,
            detail = list(term),
            suggestion = "Only products of two outcomes are supported."
        )
    return indices


@dataclass(frozen = True)
class BooleanExpr:
    """
    ``const XOR (XOR_{i in xor} k_i) XOR (XOR_{(i,j) in and2} k_i k_j)``.

    Indices name measured vertices, not positions in the measurement order.

    Attributes:
        const (int): Constant bit.
        xor (FrozenSet[int]): Outcomes entering linearly.
        and2 (FrozenSet[FrozenSet[int]]): Pairs entering as products.
    """
    const: int = 0
    xor: FrozenSet[int] = field(default_factory = frozenset)
    and2: FrozenSet[FrozenSet[int]] = field(default_factory = frozenset)

    def __post_init__(self):
        linear = set()
        for i in self.xor:
            linear ^= {int(i)}

        products = set()
        for term in self.and2:
            pair = _pair(term, "BooleanExpr")
            # k_i k_i = k_i
            if len(pair) == 1:
                linear ^= set(pair)
            else:
                products ^= {pair}

        object.__setattr__(self, "const", int(self.const) & 1)
        object.__setattr__(self, "xor", frozenset(linear))
        object.__setattr__(self, "and2", frozenset(products))

    # ------------------------------------
    #            Constructors
    # ------------------------------------

    @classmethod
    def zero(cls) -> "BooleanExpr":
        return cls()

    @classmethod
    def one(cls) -> "BooleanExpr":
        return cls(const = 1)

    @classmethod
    def of(cls, *indices: int, const: int = 0) -> "BooleanExpr":
        """``BooleanExpr.of(3, 1)`` is ``k_3 XOR k_1``."""
        return cls(const = const, xor = tuple(indices))

    @classmethod
    def product(cls, i: int, j: int) -> "BooleanExpr":
        return cls(and2 = frozenset({frozenset({i, j})}))

    # ------------------------------------
    #              Algebra
    # ------------------------------------

    def __xor__(self, other: "BooleanExpr") -> "BooleanExpr":
        if isinstance(other, int):
            other = BooleanExpr(const = other)
        return BooleanExpr(
            const = self.const ^ other.const,
            xor = self.xor ^ other.xor,
            and2 = self.and2 ^ other.and2
        )

    __rxor__ = __xor__

    def support(self) -> FrozenSet[int]:
        indices = set(self.xor)
        for pair in self.and2:
            indices |= pair
        return frozenset(indices)

    @property
    def is_zero(self) -> bool:
        return self.const == 0 and not self.xor and not self.and2

    @property
    def is_affine(self) -> bool:
        return not self.and2

    def evaluate(self, bits: Mapping[int, int]) -> int:
        """Value for the outcome bits ``bits[vertex]``."""
        value = self.const
        for i in self.xor:
            value ^= bits[i]
        for pair in self.and2:
            i, j = tuple(pair)
            value ^= bits[i] & bits[j]
        return value

    # ------------------------------------
    #           Serialization
    # ------------------------------------

    def to_dict(self) -> dict:
        return {
            "const": self.const,
            "xor": sorted(self.xor),
            "and2": sorted(sorted(pair) for pair in self.and2)
        }

    @classmethod
    def from_dict(cls, document) -> "BooleanExpr":
        """
        Parse ``{"const": bit, "xor": [i, ...], "and2": [[i, j], ...]}``; ``None`` is zero.
        """
        if document is None:
            return cls()
        if not isinstance(document, dict) or set(document) - {"const", "xor", "and2"}:
            raise PatternException(
                error_code = "PAT006",
                method = "BooleanExpr.from_dict",
                detail = document,
                suggestion = 'Use {"const": bit, "xor": [...], "and2": [[i, j], ...]}.'
            )

        pairs = [_pair(term, "BooleanExpr.from_dict") for term in document.get("and2", [])]
        return cls(
            const = document.get("const", 0),
            xor = tuple(document.get("xor", [])),
            and2 = tuple(pairs)
        )

    def __str__(self):
        terms = [f"k{i}" for i in sorted(self.xor)]
        terms += [f"k{i}k{j}" for i, j in sorted(sorted(p) for p in self.and2)]
        if self.const or not terms:
            terms.append(str(self.const))
        return " + ".join(terms)
