"""
Vectors in Z2^alpha x R^beta.

A word packs its binary block into one int and its ring block into two ints
holding the a (constant) and b (u) coefficients, coordinate i at bit i.
"""
from dataclasses import dataclass
from typing import List, Sequence

from . import ring
from .ring import RingElem
from .utils import bits_to_int, int_to_bits, mask, parity


@dataclass(frozen=True)
class MixedWord:
    alpha: int
    beta: int
    bin: int = 0
    ring_a: int = 0
    ring_b: int = 0

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("word lengths must be non-negative")
        if self.bin >> self.alpha or self.ring_a >> self.beta or self.ring_b >> self.beta:
            raise ValueError("packed word has bits outside its length")

    @classmethod
    def zero(cls, alpha: int, beta: int) -> "MixedWord":
        return cls(alpha, beta)

    @classmethod
    def from_lists(cls, bits: Sequence[int], elems: Sequence[RingElem]) -> "MixedWord":
        return cls(
            len(bits),
            len(elems),
            bits_to_int(bits),
            bits_to_int([e.a for e in elems]),
            bits_to_int([e.b for e in elems]),
        )

    @classmethod
    def from_key(cls, alpha: int, beta: int, key: int) -> "MixedWord":
        xkey, ykey = key >> (2 * beta), key & mask(2 * beta)
        bits = [(xkey >> (alpha - 1 - i)) & 1 for i in range(alpha)]
        elems = [ring.ELEMENTS[(ykey >> (2 * (beta - 1 - j))) & 3] for j in range(beta)]
        return cls.from_lists(bits, elems)

    @property
    def length(self) -> int:
        """Length of the Gray image, n = alpha + 2 beta."""
        return self.alpha + 2 * self.beta

    def bits(self) -> List[int]:
        return int_to_bits(self.bin, self.alpha)

    def ring(self) -> List[RingElem]:
        return [self.ring_at(j) for j in range(self.beta)]

    def bit_at(self, i: int) -> int:
        return (self.bin >> i) & 1

    def ring_at(self, j: int) -> RingElem:
        return ring.ELEMENTS[((self.ring_a >> j) & 1) | (((self.ring_b >> j) & 1) << 1)]

    def is_zero(self) -> bool:
        return not (self.bin or self.ring_a or self.ring_b)

    def x_part(self) -> "MixedWord":
        return MixedWord(self.alpha, 0, self.bin)

    def y_part(self) -> "MixedWord":
        return MixedWord(0, self.beta, 0, self.ring_a, self.ring_b)

    def key(self) -> int:
        """Sort key: binary coordinates then ring coordinates, coordinate 0 most significant."""
        key = 0
        for i in range(self.alpha):
            key = (key << 1) | self.bit_at(i)
        for j in range(self.beta):
            key = (key << 2) | self.ring_at(j).value
        return key

    def permuted(self, perm_x: Sequence[int], perm_y: Sequence[int]) -> "MixedWord":
        """New coordinate i takes old coordinate perm[i]."""
        bits = [self.bit_at(p) for p in perm_x]
        elems = [self.ring_at(p) for p in perm_y]
        return MixedWord.from_lists(bits, elems)

    def concat(self, other: "MixedWord") -> "MixedWord":
        return MixedWord(
            self.alpha + other.alpha,
            self.beta + other.beta,
            self.bin | (other.bin << self.alpha),
            self.ring_a | (other.ring_a << self.beta),
            self.ring_b | (other.ring_b << self.beta),
        )

    def literal(self) -> str:
        tokens = [str(b) for b in self.bits()] + ["|"] + [e.symbol for e in self.ring()]
        return " ".join(tokens)

    def __add__(self, other: "MixedWord") -> "MixedWord":
        return add(self, other)

    def __str__(self) -> str:
        return f"({self.literal()})"


@dataclass(frozen=True)
class WordStats:
    N: int
    N_u: int
    wtH_bin: int
    wtL: int


@dataclass(frozen=True)
class PairStats:
    n11: int
    n1u: int
    nu1: int
    ns: int
    nd: int


def _check_shape(v: MixedWord, w: MixedWord):
    if (v.alpha, v.beta) != (w.alpha, w.beta):
        raise ValueError(f"shape mismatch: ({v.alpha},{v.beta}) vs ({w.alpha},{w.beta})")


def scalar_mul(d: RingElem, v: MixedWord) -> MixedWord:
    if d.a:
        return MixedWord(v.alpha, v.beta, v.bin, v.ring_a, v.ring_b ^ (v.ring_a if d.b else 0))
    if d.b:
        return MixedWord(v.alpha, v.beta, 0, 0, v.ring_a)
    return MixedWord.zero(v.alpha, v.beta)


def add(v: MixedWord, w: MixedWord) -> MixedWord:
    _check_shape(v, w)
    return MixedWord(v.alpha, v.beta, v.bin ^ w.bin, v.ring_a ^ w.ring_a, v.ring_b ^ w.ring_b)


def inner_value(v: MixedWord, w: MixedWord) -> int:
    """2-bit value of the inner product; 0 means orthogonal."""
    const = parity(v.ring_a & w.ring_a)
    u_part = parity(v.bin & w.bin) ^ parity(v.ring_a & w.ring_b) ^ parity(v.ring_b & w.ring_a)
    return const | (u_part << 1)


def inner_product(v: MixedWord, w: MixedWord) -> RingElem:
    """u * (binary dot mod 2) + ring dot, valued in R."""
    _check_shape(v, w)
    return ring.ELEMENTS[inner_value(v, w)]


def ring_dot(w: MixedWord, y: MixedWord) -> RingElem:
    """Sum of coordinatewise products of the ring blocks only."""
    if w.beta != y.beta:
        raise ValueError(f"ring length mismatch: {w.beta} vs {y.beta}")
    const = parity(w.ring_a & y.ring_a)
    u_part = parity(w.ring_a & y.ring_b) ^ parity(w.ring_b & y.ring_a)
    return ring.ELEMENTS[const | (u_part << 1)]


def binary_dot(v: MixedWord, x: MixedWord) -> int:
    """Dot product of the binary blocks, mod 2."""
    if v.alpha != x.alpha:
        raise ValueError(f"binary length mismatch: {v.alpha} vs {x.alpha}")
    return parity(v.bin & x.bin)


def gray_map(v: MixedWord) -> List[int]:
    image = v.bits()
    for e in v.ring():
        image.extend(ring.phi(e))
    return image


def lee_weight(v: MixedWord) -> int:
    return v.bin.bit_count() + v.ring_b.bit_count() + (v.ring_a ^ v.ring_b).bit_count()


def stats(v: MixedWord) -> WordStats:
    n_units = v.ring_a.bit_count()
    n_u = (v.ring_b & ~v.ring_a).bit_count()
    wt_bin = v.bin.bit_count()
    return WordStats(n_units, n_u, wt_bin, wt_bin + n_units + 2 * n_u)


def pair_stats(w: MixedWord, y: MixedWord) -> PairStats:
    """Coordinate counts over the ring blocks of w and y."""
    if w.beta != y.beta:
        raise ValueError(f"ring length mismatch: {w.beta} vs {y.beta}")
    wa, wb, ya, yb = w.ring_a, w.ring_b, y.ring_a, y.ring_b
    both_units = wa & ya
    return PairStats(
        n11=both_units.bit_count(),
        n1u=(wa & yb & ~ya).bit_count(),
        nu1=(wb & ~wa & ya).bit_count(),
        ns=(both_units & ~(wb ^ yb)).bit_count(),
        nd=(both_units & (wb ^ yb)).bit_count(),
    )
