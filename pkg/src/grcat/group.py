"""Elementary abelian 2-groups Z2^n: elements, group law, enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

DIMENSION_LIMIT = 16  # exponent tables downstream hold 4**n entries


@dataclass(frozen=True)
class GroupElement:
    """Element of Z2^n, stored as the coordinate tuple (x1, ..., xn).

    Addition is coordinatewise XOR, so every element is its own inverse.
    Serializes as the comma-free bit string "x1x2...xn".
    """

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.bits, tuple):
            object.__setattr__(self, "bits", tuple(self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"coordinates must be 0 or 1: {self.bits!r}")

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def index(self) -> int:
        """Rank in lexicographic order; x1 is the most significant bit."""
        value = 0
        for b in self.bits:
            value = value << 1 | b
        return value

    @classmethod
    def from_index(cls, n: int, index: int) -> GroupElement:
        if not 0 <= index < 1 << n:
            raise ValueError(f"index {index} out of range for Z2^{n}")
        return cls(tuple(index >> (n - 1 - k) & 1 for k in range(n)))

    @classmethod
    def from_string(cls, text: str) -> GroupElement:
        if not all(ch in "01" for ch in text):
            raise ValueError(f"not a bit string: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def __add__(self, other: GroupElement) -> GroupElement:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return add(self, other)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    """Coordinatewise XOR; add(a, a) is the identity."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} != {b.n}")
    return GroupElement(tuple(x ^ y for x, y in zip(a.bits, b.bits)))


def identity(n: int) -> GroupElement:
    """The all-zero tuple, the unit of Z2^n."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return GroupElement((0,) * n)


@lru_cache(maxsize=None)
def elements(n: int) -> tuple[GroupElement, ...]:
    """All 2**n elements, lexicographically ascending by (x1, ..., xn)."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    if n > DIMENSION_LIMIT:
        raise ValueError(f"dimension {n} exceeds limit {DIMENSION_LIMIT}")
    return tuple(GroupElement.from_index(n, i) for i in range(1 << n))
