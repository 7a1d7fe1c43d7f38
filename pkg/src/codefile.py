"""
Text format for generator matrices.

    alpha=2 beta=1
    1 1 | 0
    0 0 | u

Every non-space character is one token. Blank lines and lines starting
with '#' are skipped. Ring symbols are 0, 1, u, v (v = 1+u); the Z2Z4
variant uses 0..3 instead.
"""
import re
import json
from typing import Dict, List, Tuple, TypeVar

from . import ring
from .codes import GenMatrix
from .constructions import Z2Z4Matrix, Z2Z4Word
from .errors import ParseError
from .ring import RingElem
from .words import MixedWord

T = TypeVar("T")

HEADER = re.compile(r"alpha=(\d+)\s+beta=(\d+)")
BINARY_SYMBOLS = {"0": 0, "1": 1}
Z4_SYMBOLS = {str(i): i for i in range(4)}


def _tokens(line: str) -> List[Tuple[int, str]]:
    return [(col, ch) for col, ch in enumerate(line, 1) if not ch.isspace()]


def _parse_row(lineno: int, line: str, alpha: int, beta: int,
               ring_symbols: Dict[str, T]) -> Tuple[List[int], List[T]]:
    tokens = _tokens(line)
    end = len(line) + 1
    bits: List[int] = []
    elems: List[T] = []

    pos = 0
    for _ in range(alpha):
        if pos == len(tokens):
            raise ParseError(lineno, end, f"expected {alpha} binary symbols, found {len(bits)}")
        col, ch = tokens[pos]
        if ch not in BINARY_SYMBOLS:
            raise ParseError(lineno, col, f"invalid binary symbol {ch!r}")
        bits.append(BINARY_SYMBOLS[ch])
        pos += 1

    if pos == len(tokens):
        raise ParseError(lineno, end, "expected '|'")
    col, ch = tokens[pos]
    if ch != "|":
        raise ParseError(lineno, col, f"expected '|', found {ch!r}")
    pos += 1

    for _ in range(beta):
        if pos == len(tokens):
            raise ParseError(lineno, end, f"expected {beta} ring symbols, found {len(elems)}")
        col, ch = tokens[pos]
        if ch not in ring_symbols:
            raise ParseError(lineno, col, f"invalid ring symbol {ch!r}")
        elems.append(ring_symbols[ch])
        pos += 1

    if pos < len(tokens):
        col, ch = tokens[pos]
        raise ParseError(lineno, col, f"unexpected symbol {ch!r} after {beta} ring symbols")
    return bits, elems


def _parse(text: str, ring_symbols: Dict[str, T]) -> Tuple[int, int, List[Tuple[List[int], List[T]]]]:
    lines = [(i, line) for i, line in enumerate(text.splitlines(), 1)
             if line.strip() and not line.lstrip().startswith("#")]
    if not lines:
        raise ParseError(1, 1, "missing header 'alpha=<int> beta=<int>'")

    lineno, header = lines[0]
    match = HEADER.fullmatch(header.strip())
    if not match:
        raise ParseError(lineno, 1, f"malformed header {header.strip()!r}")
    alpha, beta = int(match.group(1)), int(match.group(2))

    rows = [_parse_row(n, line, alpha, beta, ring_symbols) for n, line in lines[1:]]
    return alpha, beta, rows


def parse(text: str) -> GenMatrix:
    alpha, beta, rows = _parse(text, ring.SYMBOLS)
    return GenMatrix(alpha, beta, [MixedWord.from_lists(bits, elems) for bits, elems in rows])


def emit(G: GenMatrix) -> str:
    lines = [f"alpha={G.alpha} beta={G.beta}"] + [r.literal() for r in G.rows]
    return "\n".join(lines) + "\n"


def emit_json(result) -> str:
    """One JSON line for anything exposing to_json()."""
    return json.dumps(result.to_json())


def parse_z2z4(text: str) -> Z2Z4Matrix:
    alpha, beta, rows = _parse(text, Z4_SYMBOLS)
    return Z2Z4Matrix(alpha, beta, [Z2Z4Word(bits, quats) for bits, quats in rows])


def emit_z2z4(H: Z2Z4Matrix) -> str:
    lines = [f"alpha={H.alpha} beta={H.beta}"]
    for r in H.rows:
        lines.append(" ".join([str(b) for b in r.bin] + ["|"] + [str(q) for q in r.quat]))
    return "\n".join(lines) + "\n"


def _parse_vector(text: str, symbols: Dict[str, T], what: str) -> Tuple[T, ...]:
    values = []
    for col, ch in _tokens(text):
        if ch not in symbols:
            raise ParseError(1, col, f"invalid {what} symbol {ch!r}")
        values.append(symbols[ch])
    return tuple(values)


def parse_bits(text: str) -> Tuple[int, ...]:
    """'1 0 1' or '101'."""
    return _parse_vector(text, BINARY_SYMBOLS, "binary")


def parse_ring_vector(text: str) -> Tuple[RingElem, ...]:
    return _parse_vector(text, ring.SYMBOLS, "ring")


def parse_ring_elem(text: str) -> RingElem:
    values = parse_ring_vector(text)
    if len(values) != 1:
        raise ParseError(1, 1, f"expected a single ring symbol, got {text!r}")
    return values[0]
