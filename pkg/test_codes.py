import pytest

from src.codes import (
    CodeType,
    GenMatrix,
    ambient_words,
    dual,
    dual_type,
    is_self_dual,
    is_self_orthogonal,
    is_separable,
    kappa_oracle,
    orthogonal_complement,
    punctured_X,
    punctured_Y,
    separability_report,
    span,
    standard_form,
    subcode_0,
    subcode_b,
)
from src.constructions import direct_sum
from src.errors import BoundExceeded, InconsistentType, NotSelfDual, SizeExceeded
from src.words import MixedWord, inner_value

from conftest import load_code
from test_words import random_word

SELF_DUAL = ["sd_2_1", "type2_4_2", "sd_4_3_nonseparable", "type2_4_2_nonseparable", "hamming8", "ring4"]


def random_matrix(rng, max_bits=10):
    beta = rng.randint(0, max_bits // 2)
    alpha = rng.randint(0, max_bits - 2 * beta)
    rows = [random_word(rng, alpha, beta) for _ in range(rng.randint(0, 4))]
    return GenMatrix(alpha, beta, rows)


@pytest.mark.parametrize("name,expected", [
    ("sd_2_1", "(2,1;2,0;1)"),
    ("type2_4_2", "(4,2;2,1;2)"),
    ("sd_4_3_nonseparable", "(4,3;3,1;2)"),
    ("type2_4_2_nonseparable", "(4,2;2,1;2)"),
    ("two_weight_2_1", "(2,1;1,1;1)"),
])
def test_standard_form_type(name, expected):
    G = load_code(name)
    sf = standard_form(G)
    assert str(sf.code_type) == expected
    code = span(G)
    assert kappa_oracle(code) == sf.code_type.kappa
    assert len(code) == 2 ** sf.code_type.size_exponent


def test_standard_form_template_rows(type2_4_2):
    sf = standard_form(type2_4_2)
    assert sf.perm_x == (0, 1, 2, 3)
    assert sf.perm_y == (1, 0)
    assert sf.matrix.rows == type2_4_2.rows
    blocks = sf.blocks()
    assert blocks["A1"] == [[1, 0], [0, 1]]
    assert blocks["T"] == [[1], [1]]
    assert blocks["S"] == [[1, 1]]


def test_unpermuted_standard_form_spans_the_same_code(rng):
    for _ in range(100):
        G = random_matrix(rng, 8)
        sf = standard_form(G)
        assert span(sf.unpermuted()) == span(G)


@pytest.mark.parametrize("name", SELF_DUAL + ["two_weight_2_1", "two_weight_n8"])
def test_dual_matches_brute_force(name):
    G = load_code(name)
    H = dual(standard_form(G))
    assert span(H) == orthogonal_complement(G)


def test_dual_oracle_on_random_matrices(rng):
    for _ in range(500):
        G = random_matrix(rng)
        sf = standard_form(G)
        H = dual(sf)
        assert all(inner_value(g, h) == 0 for g in G.rows for h in H.rows)
        code, dual_code = span(G), span(H)
        assert dual_code == orthogonal_complement(G)
        assert len(code) * len(dual_code) == 2 ** G.length
        assert standard_form(H).code_type == dual_type(sf.code_type)


def test_dual_type_rejects_impossible_types():
    with pytest.raises(InconsistentType):
        dual_type(CodeType(2, 1, 5, 0, 0))


def test_span_limit(type2_4_2):
    with pytest.raises(SizeExceeded) as err:
        span(type2_4_2, limit=8)
    assert err.value.size == 16


def test_empty_matrix_spans_zero_code():
    code = span(GenMatrix(2, 1))
    assert len(code) == 1
    assert str(code.code_type) == "(2,1;0,0;0)"


@pytest.mark.parametrize("name", SELF_DUAL)
def test_self_dual_examples(name):
    assert is_self_dual(load_code(name))


def test_not_self_dual(two_weight_2_1):
    assert not is_self_orthogonal(two_weight_2_1)
    assert not is_self_dual(two_weight_2_1)
    half = GenMatrix(2, 1, [MixedWord(2, 1, 0b11)])
    assert is_self_orthogonal(half)
    assert not is_self_dual(half)


@pytest.mark.parametrize("name,separable", [
    ("sd_2_1", True),
    ("hamming8", True),
    ("ring4", True),
    ("sd_4_3_nonseparable", False),
    ("type2_4_2_nonseparable", False),
])
def test_separability_report_agrees(name, separable):
    code = span(load_code(name))
    assert is_separable(code) == separable
    report = separability_report(code)
    assert report.agree
    assert set(report.as_dict().values()) == {separable}


def test_separability_report_on_direct_sum(hamming8, ring4):
    report = separability_report(span(direct_sum(hamming8, ring4)))
    assert report.agree
    assert set(report.as_dict().values()) == {True}


def test_separability_report_needs_self_dual(two_weight_2_1):
    with pytest.raises(NotSelfDual):
        separability_report(span(two_weight_2_1))


def test_subcode_b(sd_2_1):
    cb = subcode_b(span(sd_2_1))
    assert all(w.ring_a == 0 for w in cb.words)
    assert len(cb) == 4


def test_ambient_bound():
    with pytest.raises(BoundExceeded):
        next(ambient_words(17, 0))


def test_punctured_codes(sd_2_1, type2_4_2):
    code = span(sd_2_1)
    assert {w.literal() for w in punctured_X(code).words} == {"0 0 |", "1 1 |"}
    assert len(punctured_Y(code)) == 2

    code = span(type2_4_2)
    assert len(punctured_X(code)) == 8
    assert len(punctured_Y(code)) == 8


def test_subcode_0(sd_2_1, type2_4_2):
    assert {w.literal() for w in subcode_0(span(sd_2_1)).words} == {"0 0 | 0", "1 1 | 0"}
    words = subcode_0(span(type2_4_2)).words
    assert {w.literal() for w in words} == {"0 0 0 0 | 0 0", "1 1 1 1 | 0 0"}
