import pytest

from src.codefile import (
    emit,
    emit_json,
    emit_z2z4,
    parse,
    parse_bits,
    parse_ring_elem,
    parse_ring_vector,
    parse_z2z4,
)
from src.codes import GenMatrix
from src.constructions import Z2Z4Matrix, Z2Z4Word
from src.errors import ParseError
from src.ring import ONE, U, V, ZERO
from src.words import MixedWord

from test_codes import random_matrix


def test_parse_smallest_code(sd_2_1):
    G = parse("alpha=2 beta=1\n1 1 | 0\n0 0 | u")
    assert G == sd_2_1
    assert G.rows == (MixedWord.from_lists([1, 1], [ZERO]), MixedWord.from_lists([0, 0], [U]))


def test_parse_pure_ring_and_pure_binary():
    G = parse("alpha=0 beta=1\n| u\n")
    assert (G.alpha, G.beta) == (0, 1)
    assert G.rows[0].ring() == [U]
    G = parse("alpha=2 beta=0\n1 1 |\n")
    assert G.rows[0].bits() == [1, 1]


def test_whitespace_comments_and_blank_lines():
    text = "# smallest code\n\nalpha=2   beta=1\n  11|0\n# second row\n0 0 |   u\n\n"
    assert emit(parse(text)) == "alpha=2 beta=1\n1 1 | 0\n0 0 | u\n"


def test_emit_with_ring_symbols(type2_4_2):
    assert emit(type2_4_2) == "alpha=4 beta=2\n1 0 1 0 | u 0\n0 1 0 1 | u 0\n0 0 1 1 | 1 1\n"
    G = GenMatrix(1, 2, [MixedWord.from_lists([1], [V, ONE])])
    assert emit(G) == "alpha=1 beta=2\n1 | v 1\n"


def test_emit_empty_matrix():
    assert emit(GenMatrix(3, 2)) == "alpha=3 beta=2\n"
    assert parse("alpha=3 beta=2\n") == GenMatrix(3, 2)


def test_round_trip(rng):
    for _ in range(1000):
        G = random_matrix(rng)
        assert parse(emit(G)) == G


@pytest.mark.parametrize("text,line,column", [
    ("alpha=2 beta=1\n1 1 0", 2, 5),
    ("alpha=2 beta=1\n1 1 | 3", 2, 7),
    ("alpha=2 beta=1\n1 | 0", 2, 3),
    ("alpha=2 beta=1\n1 1 | 0 u", 2, 9),
    ("alpha=2 beta=1\n1 2 | 0", 2, 3),
    ("alpha=2 beta=1\n1 1 | ", 2, 7),
    ("alpha=2 beta=1\n1 1 | 0\n\n1 1", 4, 4),
    ("alpha=2\n1 1 | 0", 1, 1),
    ("", 1, 1),
])
def test_parse_errors(text, line, column):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_z2z4_format():
    H = Z2Z4Matrix(2, 2, [Z2Z4Word((1, 1), (0, 2)), Z2Z4Word((0, 1), (3, 1))])
    text = emit_z2z4(H)
    assert text == "alpha=2 beta=2\n1 1 | 0 2\n0 1 | 3 1\n"
    assert parse_z2z4(text) == H
    with pytest.raises(ParseError):
        parse_z2z4("alpha=0 beta=1\n| u\n")


def test_vector_flags():
    assert parse_bits("1 0 1") == (1, 0, 1)
    assert parse_bits("101") == (1, 0, 1)
    assert parse_bits("") == ()
    assert parse_ring_vector("1uv0") == (ONE, U, V, ZERO)
    assert parse_ring_elem("v") == V
    with pytest.raises(ParseError):
        parse_ring_elem("uv")
    with pytest.raises(ParseError):
        parse_bits("1 2")


def test_emit_json():
    class Stub:
        def to_json(self):
            return {"alpha": 2, "beta": 1}

    assert emit_json(Stub()) == '{"alpha": 2, "beta": 1}'
