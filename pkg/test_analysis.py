import pytest
from sympy import expand

from src.analysis import (
    X,
    Y,
    SelfDualType,
    WeightEnumerator,
    check_min_param_bounds,
    classify,
    enumerator_polynomial,
    lee_weight_set,
    macwilliams,
    min_lee_distance,
    self_dual_report,
    two_weight_check,
    weight_enumerator,
)
from src.codes import GenMatrix, orthogonal_complement, span
from src.constructions import direct_sum
from src.errors import InvalidParameters, NonIntegral, NotSelfDual

from conftest import load_code
from test_codes import SELF_DUAL, random_matrix


@pytest.mark.parametrize("name,coeffs", [
    ("sd_2_1", [1, 0, 2, 0, 1]),
    ("type2_4_2", [1, 0, 0, 0, 14, 0, 0, 0, 1]),
    ("type2_4_2_nonseparable", [1, 0, 0, 0, 14, 0, 0, 0, 1]),
    ("sd_4_3_nonseparable", [1, 0, 1, 0, 14, 0, 14, 0, 1, 0, 1]),
    ("hamming8", [1, 0, 0, 0, 14, 0, 0, 0, 1]),
    ("ring4", [1, 0, 0, 0, 14, 0, 0, 0, 1]),
    ("two_weight_2_1", [1, 0, 6, 0, 1]),
])
def test_weight_enumerator(name, coeffs):
    assert list(weight_enumerator(span(load_code(name))).coeffs) == coeffs


def test_direct_sum_enumerator_is_the_product(hamming8, ring4):
    W = weight_enumerator(span(direct_sum(hamming8, ring4)))
    assert list(W.coeffs) == [1, 0, 0, 0, 28, 0, 0, 0, 198, 0, 0, 0, 28, 0, 0, 0, 1]


def test_enumerator_polynomial(sd_2_1):
    poly = enumerator_polynomial(weight_enumerator(span(sd_2_1)))
    assert expand(poly - (X ** 4 + 2 * X ** 2 * Y ** 2 + Y ** 4)) == 0


@pytest.mark.parametrize("name", SELF_DUAL)
def test_macwilliams_fixes_self_dual_enumerators(name):
    code = span(load_code(name))
    W = weight_enumerator(code)
    assert macwilliams(W, len(code)) == W


def test_macwilliams_matches_the_dual(rng):
    for _ in range(500):
        G = random_matrix(rng)
        code = span(G)
        W = weight_enumerator(code)
        assert macwilliams(W, len(code)) == weight_enumerator(orthogonal_complement(G))


def test_macwilliams_rejects_non_integral_transform():
    # not the enumerator of any code of size 32
    W = WeightEnumerator(10, [1, 0, 8, 0, 0, 0, 14, 0, 8, 0, 1])
    with pytest.raises(NonIntegral):
        macwilliams(W, 32)


def test_macwilliams_size_must_match():
    with pytest.raises(InvalidParameters):
        macwilliams(WeightEnumerator(4, [1, 0, 2, 0, 1]), 8)


@pytest.mark.parametrize("n,coeffs", [
    (4, [1, 0, -2, 0, 9]),
    (4, [0, 0, 4, 0, 4]),
    (4, [1, 0, 2, 0]),
    (-1, []),
])
def test_enumerator_rejects_impossible_coefficients(n, coeffs):
    with pytest.raises(InvalidParameters):
        WeightEnumerator(n, coeffs)


@pytest.mark.parametrize("name,tag", [
    ("sd_2_1", SelfDualType.TYPE1),
    ("type2_4_2", SelfDualType.TYPE2),
    ("sd_4_3_nonseparable", SelfDualType.TYPE1),
    ("type2_4_2_nonseparable", SelfDualType.TYPE2),
    ("hamming8", SelfDualType.TYPE2),
])
def test_classify(name, tag):
    assert classify(span(load_code(name))) is tag


def test_classify_needs_self_dual(two_weight_2_1):
    with pytest.raises(NotSelfDual):
        classify(span(two_weight_2_1))


def test_lee_distances(sd_2_1, two_weight_n8, sd_4_3_nonseparable):
    assert min_lee_distance(span(sd_2_1)) == 2
    assert min_lee_distance(span(two_weight_n8)) == 4
    assert lee_weight_set(span(sd_4_3_nonseparable)) == [2, 4, 6, 8, 10]
    with pytest.raises(InvalidParameters):
        min_lee_distance(span(GenMatrix(2, 1)))


def test_min_param_bounds(sd_2_1, type2_4_2, sd_4_3_nonseparable, hamming8):
    report = check_min_param_bounds(span(sd_2_1))
    assert report.applicable and report.ok
    assert report.kind == "TypeI separable"
    assert check_min_param_bounds(span(type2_4_2)).kind == "TypeII"
    nonseparable = check_min_param_bounds(span(sd_4_3_nonseparable))
    assert nonseparable.kind == "TypeI non-separable"
    assert (nonseparable.alpha_min, nonseparable.beta_min) == (4, 2)
    assert nonseparable.ok
    assert not check_min_param_bounds(span(hamming8)).applicable


@pytest.mark.parametrize("name", ["two_weight_2_1", "sd_2_1", "two_weight_n8"])
def test_two_weight_codes_pass(name):
    report = two_weight_check(span(load_code(name)))
    assert report.two_weight
    assert report.passed, report.checks
    assert report.distance_interpretation == "lee"


def test_two_weight_dual_distance(two_weight_2_1):
    report = two_weight_check(span(two_weight_2_1))
    assert report.weights == [2, 4]
    assert report.dual_distance == 4
    assert report.expected_dual_distance == 4


def test_two_weight_preconditions(hamming8, sd_4_3_nonseparable):
    report = two_weight_check(span(hamming8))
    assert "alpha * beta must be nonzero" in report.precondition_failures
    assert not report.passed
    report = two_weight_check(span(sd_4_3_nonseparable))
    assert not report.two_weight
    assert not report.passed


@pytest.mark.parametrize("name", SELF_DUAL)
def test_self_dual_report_has_no_violations(name):
    report = self_dual_report(span(load_code(name)))
    assert report.violations == []


def test_self_dual_report_needs_self_dual(two_weight_2_1):
    with pytest.raises(NotSelfDual):
        self_dual_report(span(two_weight_2_1))
