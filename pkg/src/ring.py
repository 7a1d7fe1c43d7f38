"""
Arithmetic of R = Z2 + uZ2 with u*u = 0, and its maps to Z2, Z2^2 and Z4.

An element a + bu is stored as the pair of bits (a, b). Its 2-bit value
a | b << 1 equals its image under theta, so 0, 1, u, 1+u encode as 0, 1, 2, 3.
"""
from dataclasses import dataclass
from typing import Dict, Tuple

from .errors import InvalidParameters


@dataclass(frozen=True)
class RingElem:
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.a not in (0, 1) or self.b not in (0, 1):
            raise ValueError(f"ring coefficients must be bits, got ({self.a}, {self.b})")

    @classmethod
    def from_value(cls, value: int) -> "RingElem":
        return ELEMENTS[value]

    @property
    def value(self) -> int:
        return self.a | (self.b << 1)

    @property
    def symbol(self) -> str:
        return "01uv"[self.value]

    def __add__(self, other: "RingElem") -> "RingElem":
        return add(self, other)

    def __mul__(self, other: "RingElem") -> "RingElem":
        return mul(self, other)

    def __str__(self) -> str:
        return self.symbol

    def __repr__(self) -> str:
        return f"RingElem({self.symbol})"


ZERO = RingElem(0, 0)
ONE = RingElem(1, 0)
U = RingElem(0, 1)
V = RingElem(1, 1)  # 1+u
ELEMENTS: Tuple[RingElem, ...] = (ZERO, ONE, U, V)
UNITS: Tuple[RingElem, ...] = (ONE, V)
SYMBOLS: Dict[str, RingElem] = {e.symbol: e for e in ELEMENTS}


@dataclass(frozen=True)
class Z4Elem:
    v: int = 0

    def __post_init__(self):
        if self.v not in (0, 1, 2, 3):
            raise ValueError(f"Z4 element must be in 0..3, got {self.v}")

    def __add__(self, other: "Z4Elem") -> "Z4Elem":
        return Z4Elem((self.v + other.v) % 4)

    def __mul__(self, other: "Z4Elem") -> "Z4Elem":
        return Z4Elem((self.v * other.v) % 4)

    def __str__(self) -> str:
        return str(self.v)


def add(x: RingElem, y: RingElem) -> RingElem:
    return ELEMENTS[x.value ^ y.value]


def mul(x: RingElem, y: RingElem) -> RingElem:
    a = x.a & y.a
    b = (x.a & y.b) ^ (x.b & y.a)
    return ELEMENTS[a | (b << 1)]


def eta(x: RingElem) -> int:
    """Reduction mod u."""
    return x.a


def phi(x: RingElem) -> Tuple[int, int]:
    """Gray map a+bu -> (b, a+b)."""
    return x.b, x.a ^ x.b


def lee_weight(x: RingElem) -> int:
    return sum(phi(x))


def theta(x: RingElem) -> Z4Elem:
    return Z4Elem(x.value)


def theta_inv(z: Z4Elem) -> RingElem:
    return ELEMENTS[z.v]


def is_unit(x: RingElem) -> bool:
    return x.a == 1


def inverse(x: RingElem) -> RingElem:
    # both units square to 1
    if not is_unit(x):
        raise InvalidParameters(f"{x.symbol} is not a unit of R")
    return x
