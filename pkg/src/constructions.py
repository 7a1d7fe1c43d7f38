"""
Direct sums, the theta bridge to Z2Z4, and the building-up constructions.

The building-up variants extend a self-dual code:
  1. two binary columns and one new row (1 0 x | y);
  2. two ring columns and one new row (x | 1 0 y);
  3. two binary and two ring columns with rows (1 0 x | 0 0 a) and (0 0 e | 1 0 y).
Old rows pick up h = g.x mod 2 in the new binary columns and s = r.y, t*s in
the new ring columns.
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Sequence, Set, Tuple

import numpy as np

from . import ring
from .codes import GenMatrix, is_self_dual, span
from .errors import HypothesisFailed, InvalidParameters, NotSelfDual, PreconditionFailed
from .ring import RingElem, Z4Elem
from .utils import bits_to_int, parity
from .words import MixedWord, inner_value, lee_weight, pair_stats, ring_dot

logger = logging.getLogger("z2r")


def direct_sum(G: GenMatrix, G2: GenMatrix) -> GenMatrix:
    for name, M in (("first", G), ("second", G2)):
        if not is_self_dual(M):
            raise NotSelfDual(f"{name} summand is not self-dual")
    pad_right = MixedWord.zero(G2.alpha, G2.beta)
    pad_left = MixedWord.zero(G.alpha, G.beta)
    rows = [r.concat(pad_right) for r in G.rows] + [pad_left.concat(r) for r in G2.rows]
    return GenMatrix(G.alpha + G2.alpha, G.beta + G2.beta, rows)


# Base blocks for exists_self_dual
_BLOCK_2_1 = GenMatrix(2, 1, [MixedWord(2, 1, 0b11), MixedWord(2, 1, 0, 0, 1)])
_BLOCK_2_0 = GenMatrix(2, 0, [MixedWord(2, 0, 0b11)])
_BLOCK_0_1 = GenMatrix(0, 1, [MixedWord(0, 1, 0, 0, 1)])


def exists_self_dual(alpha: int, beta: int) -> GenMatrix:
    if alpha % 2 or alpha < 0 or beta < 0:
        raise InvalidParameters(f"no self-dual code with alpha={alpha}, beta={beta}")
    paired = min(alpha // 2, beta)
    blocks = ([_BLOCK_2_1] * paired + [_BLOCK_2_0] * (alpha // 2 - paired)
              + [_BLOCK_0_1] * (beta - paired))
    result = GenMatrix(0, 0)
    for block in blocks:
        result = direct_sum(result, block)
    return result


# --- theta bridge ---------------------------------------------------------

@dataclass(frozen=True)
class Z2Z4Word:
    bin: Tuple[int, ...]
    quat: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bin", tuple(self.bin))
        object.__setattr__(self, "quat", tuple(self.quat))

    @property
    def flat(self) -> Tuple[int, ...]:
        return self.bin + self.quat

    def inner_product(self, other: "Z2Z4Word") -> int:
        binary = sum(a * b for a, b in zip(self.bin, other.bin)) % 2
        return (2 * binary + sum(a * b for a, b in zip(self.quat, other.quat))) % 4


@dataclass(frozen=True)
class Z2Z4Matrix:
    alpha: int
    beta: int
    rows: Tuple[Z2Z4Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))

    def as_array(self) -> np.ndarray:
        return np.array([r.flat for r in self.rows], dtype=int).reshape(len(self.rows), self.alpha + self.beta)

    @property
    def moduli(self) -> np.ndarray:
        return np.array([2] * self.alpha + [4] * self.beta, dtype=int)


def z2z4_span(H: Z2Z4Matrix) -> Set[Tuple[int, ...]]:
    words = {(0,) * (H.alpha + H.beta)}
    moduli = H.moduli
    for row in H.as_array():
        words = {tuple(np.mod(np.array(w) + d * row, moduli).tolist()) for w in words for d in range(4)}
    return words


def z2z4_orthogonal_complement(H: Z2Z4Matrix) -> Set[Tuple[int, ...]]:
    alpha, beta = H.alpha, H.beta
    if alpha + beta == 0:
        return {()}
    ambient = np.array(list(product(*([range(2)] * alpha + [range(4)] * beta))), dtype=int)
    ambient = ambient.reshape(-1, alpha + beta)
    G = H.as_array()
    if len(G) == 0:
        return {tuple(v) for v in ambient.tolist()}
    binary = np.mod(np.dot(ambient[:, :alpha], G[:, :alpha].T), 2)
    products = np.mod(2 * binary + np.dot(ambient[:, alpha:], G[:, alpha:].T), 4)
    keep = np.all(products == 0, axis=1)
    return {tuple(v) for v in ambient[keep].tolist()}


def is_z2z4_self_dual(H: Z2Z4Matrix) -> bool:
    """Compares the span with the brute-force orthogonal complement."""
    return z2z4_span(H) == z2z4_orthogonal_complement(H)


def _check_n11(ring_parts: Sequence[Tuple[int, int]], beta: int):
    parts = [MixedWord(0, beta, 0, a, b) for a, b in ring_parts]
    for w in parts:
        for y in parts:
            n11 = pair_stats(w, y).n11
            if n11 % 4:
                raise HypothesisFailed(f"N11({w}, {y}) = {n11} is not divisible by 4", (w, y))


def to_z2z4(G: GenMatrix) -> Z2Z4Matrix:
    code = span(G)
    _check_n11(sorted({(w.ring_a, w.ring_b) for w in code.words}), G.beta)
    logger.debug(f"N11 hypothesis holds on ({G.alpha},{G.beta}), mapping {len(code.standard.matrix)} rows through theta")
    rows = [
        Z2Z4Word(r.bits(), [ring.theta(e).v for e in r.ring()])
        for r in code.standard.unpermuted().rows
    ]
    return Z2Z4Matrix(G.alpha, G.beta, rows)


def from_z2z4(H: Z2Z4Matrix) -> GenMatrix:
    alpha, beta = H.alpha, H.beta
    quats = {w[alpha:] for w in z2z4_span(H)}
    # units of Z4 are the odd symbols, so N11 only sees the parity bits
    _check_n11(sorted({(bits_to_int([q & 1 for q in quat]), 0) for quat in quats}), beta)
    rows = [
        MixedWord.from_lists(r.bin, [ring.theta_inv(Z4Elem(q)) for q in r.quat])
        for r in H.rows
    ]
    return GenMatrix(alpha, beta, rows)


# --- building-up ------------------------------------------------------------

@dataclass(frozen=True)
class BuildUpInput:
    variant: int
    x: Tuple[int, ...]
    y: Tuple[RingElem, ...]
    e: Tuple[int, ...] = ()
    a: Tuple[RingElem, ...] = ()
    t: RingElem = ring.ONE


def _binary(bits: Sequence[int]) -> MixedWord:
    return MixedWord.from_lists(list(bits), [])


def _ring(elems: Sequence[RingElem]) -> MixedWord:
    return MixedWord.from_lists([], list(elems))


def _lengths(failures: List[str], **vectors):
    for name, (vec, expected) in vectors.items():
        if len(vec) != expected:
            failures.append(f"{name} has length {len(vec)}, expected {expected}")


def _failures_1(G: GenMatrix, x: Sequence[int], y: Sequence[RingElem]) -> List[str]:
    failures: List[str] = []
    _lengths(failures, x=(x, G.alpha), y=(y, G.beta))
    if failures:
        return failures
    if sum(x) % 2 == 0:
        failures.append("x must have odd weight")
    if any(c not in (ring.ZERO, ring.U) for c in y):
        failures.append("y must have entries in {0,u}")
    yw = _ring(y)
    if any(ring_dot(r, yw) != ring.ZERO for r in G.rows):
        failures.append("y is not orthogonal to every ring row")
    return failures


def _failures_2(G: GenMatrix, y: Sequence[RingElem], x: Sequence[int], t: RingElem) -> List[str]:
    failures: List[str] = []
    _lengths(failures, x=(x, G.alpha), y=(y, G.beta))
    if failures:
        return failures
    if lee_weight(_ring(y)) % 2 == 0:
        failures.append("y must have odd Lee weight")
    if sum(x) % 2:
        failures.append("x must have even weight")
    xb = bits_to_int(x)
    if any(parity(r.bin & xb) for r in G.rows):
        failures.append("x is not orthogonal to every binary row")
    if not ring.is_unit(t):
        failures.append(f"t={t} is not a unit")
    return failures


def _failures_3(G: GenMatrix, x: Sequence[int], y: Sequence[RingElem], e: Sequence[int],
                a: Sequence[RingElem], t: RingElem) -> List[str]:
    failures: List[str] = []
    _lengths(failures, x=(x, G.alpha), y=(y, G.beta), e=(e, G.alpha), a=(a, G.beta))
    if failures:
        return failures
    if sum(x) % 2 == 0:
        failures.append("x must have odd weight")
    if lee_weight(_ring(y)) % 2 == 0:
        failures.append("y must have odd Lee weight")
    if sum(e) % 2:
        failures.append("e must have even weight")
    eb = bits_to_int(e)
    if any(parity(r.bin & eb) for r in G.rows):
        failures.append("e is not orthogonal to every binary row")
    if any(c not in (ring.ZERO, ring.U) for c in a):
        failures.append("a must have entries in {0,u}")
    aw = _ring(a)
    if any(ring_dot(r, aw) != ring.ZERO for r in G.rows):
        failures.append("a is not orthogonal to every ring row")
    if inner_value(MixedWord.from_lists(list(x), list(a)), MixedWord.from_lists(list(e), list(y))):
        failures.append("(x|a) is not orthogonal to (e|y)")
    if not ring.is_unit(t):
        failures.append(f"t={t} is not a unit")
    return failures


def _require_seed(G: GenMatrix):
    if not is_self_dual(G):
        raise NotSelfDual("building-up needs a self-dual seed code")


def _h(r: MixedWord, xb: int) -> int:
    h = parity(r.bin & xb)
    return h | (h << 1)


def _s_columns(r: MixedWord, yw: MixedWord, t: RingElem) -> Tuple[int, int]:
    """Packed (a, b) bits of the two new ring entries s, t*s."""
    s = ring_dot(r, yw)
    ts = t * s
    return s.a | (ts.a << 1), s.b | (ts.b << 1)


def build_up_1(G: GenMatrix, x: Sequence[int], y: Sequence[RingElem]) -> GenMatrix:
    _require_seed(G)
    failures = _failures_1(G, x, y)
    if failures:
        raise PreconditionFailed(failures)

    alpha, beta = G.alpha + 2, G.beta
    xb, yw = bits_to_int(x), _ring(y)
    rows = [MixedWord(alpha, beta, 1 | (xb << 2), yw.ring_a, yw.ring_b)]
    for r in G.rows:
        rows.append(MixedWord(alpha, beta, _h(r, xb) | (r.bin << 2), r.ring_a, r.ring_b))
    return GenMatrix(alpha, beta, rows)


def build_up_2(G: GenMatrix, y: Sequence[RingElem], x: Sequence[int], t: RingElem) -> GenMatrix:
    _require_seed(G)
    failures = _failures_2(G, y, x, t)
    if failures:
        raise PreconditionFailed(failures)

    alpha, beta = G.alpha, G.beta + 2
    xb, yw = bits_to_int(x), _ring(y)
    rows = [MixedWord(alpha, beta, xb, 1 | (yw.ring_a << 2), yw.ring_b << 2)]
    for r in G.rows:
        sa, sb = _s_columns(r, yw, t)
        rows.append(MixedWord(alpha, beta, r.bin, sa | (r.ring_a << 2), sb | (r.ring_b << 2)))
    return GenMatrix(alpha, beta, rows)


def build_up_3(G: GenMatrix, x: Sequence[int], y: Sequence[RingElem], e: Sequence[int],
               a: Sequence[RingElem], t: RingElem) -> GenMatrix:
    _require_seed(G)
    failures = _failures_3(G, x, y, e, a, t)
    if failures:
        raise PreconditionFailed(failures)

    alpha, beta = G.alpha + 2, G.beta + 2
    xb, eb, yw, aw = bits_to_int(x), bits_to_int(e), _ring(y), _ring(a)
    rows = [
        MixedWord(alpha, beta, 1 | (xb << 2), aw.ring_a << 2, aw.ring_b << 2),
        MixedWord(alpha, beta, eb << 2, 1 | (yw.ring_a << 2), yw.ring_b << 2),
    ]
    for r in G.rows:
        sa, sb = _s_columns(r, yw, t)
        rows.append(MixedWord(alpha, beta, _h(r, xb) | (r.bin << 2),
                              sa | (r.ring_a << 2), sb | (r.ring_b << 2)))
    return GenMatrix(alpha, beta, rows)


def build_up(G: GenMatrix, inp: BuildUpInput) -> GenMatrix:
    if inp.variant == 1:
        return build_up_1(G, inp.x, inp.y)
    if inp.variant == 2:
        return build_up_2(G, inp.y, inp.x, inp.t)
    if inp.variant == 3:
        return build_up_3(G, inp.x, inp.y, inp.e, inp.a, inp.t)
    raise InvalidParameters(f"unknown building-up variant {inp.variant}")


def buildup_inputs(G: GenMatrix, variant: int) -> Iterator[BuildUpInput]:
    """Every valid input tuple of the given variant for seed G."""
    _require_seed(G)
    bit_vectors = [tuple(v) for v in product((0, 1), repeat=G.alpha)]
    ring_vectors = [tuple(v) for v in product(ring.ELEMENTS, repeat=G.beta)]
    u_vectors = [tuple(v) for v in product((ring.ZERO, ring.U), repeat=G.beta)]

    if variant == 1:
        for x, y in product(bit_vectors, u_vectors):
            if not _failures_1(G, x, y):
                yield BuildUpInput(1, x, y)
    elif variant == 2:
        for y, x, t in product(ring_vectors, bit_vectors, ring.UNITS):
            if not _failures_2(G, y, x, t):
                yield BuildUpInput(2, x, y, t=t)
    elif variant == 3:
        for x, y, e, a, t in product(bit_vectors, ring_vectors, bit_vectors, u_vectors, ring.UNITS):
            if not _failures_3(G, x, y, e, a, t):
                yield BuildUpInput(3, x, y, e, a, t)
    else:
        raise InvalidParameters(f"unknown building-up variant {variant}")
