import json

import pytest

from src.analysis import SelfDualType
from src.cache import SearchCache
from src.codes import is_self_dual, span
from src.errors import BoundExceeded, InvalidParameters
from src.search import (
    SearchSpec,
    canonical_form,
    classify_two_weight,
    code_keys,
    enumerate_self_dual,
    enumerate_self_dual_bruteforce,
    orbit,
    orthogonal_matrices,
)

SMALL = [(2, 1), (2, 2), (4, 1), (4, 2)]


def keys_of(words):
    return tuple(w.key() for w in words)


@pytest.mark.parametrize("k,count", [(0, 1), (1, 1), (2, 2), (3, 6)])
def test_orthogonal_matrices(k, count):
    found = list(orthogonal_matrices(k))
    assert len(found) == count
    for M in found:
        for i in range(k):
            for j in range(k):
                assert sum(a * b for a, b in zip(M[i], M[j])) % 2 == int(i == j)


@pytest.mark.parametrize("alpha,beta,classes", [(2, 1, 1), (4, 1, 1)])
def test_class_counts(alpha, beta, classes):
    assert len(enumerate_self_dual(SearchSpec(alpha, beta, threads=1))) == classes


@pytest.mark.parametrize("alpha,beta", SMALL)
def test_every_result_satisfies_the_structure_checks(alpha, beta):
    results = enumerate_self_dual(SearchSpec(alpha, beta, threads=2))
    assert results
    for r in results:
        assert r.violations == ()
        assert r.selfdual_type is not SelfDualType.TYPE0
        assert is_self_dual(r.matrix)
        assert r.code_type.kappa * 2 == alpha


@pytest.mark.parametrize("alpha,beta", [(2, 1), (4, 2)])
def test_search_is_complete(alpha, beta):
    found = set()
    for r in enumerate_self_dual(SearchSpec(alpha, beta, threads=2)):
        found |= orbit(span(r.matrix))
    assert found == enumerate_self_dual_bruteforce(alpha, beta)


def test_uncanonicalized_search_lists_every_distinct_code():
    results = enumerate_self_dual(SearchSpec(2, 1, canonicalize=False, threads=1))
    assert {code_keys(span(r.matrix)) for r in results} == enumerate_self_dual_bruteforce(2, 1)


def test_output_does_not_depend_on_threads():
    one = [r.json_line() for r in enumerate_self_dual(SearchSpec(4, 2, threads=1))]
    many = [r.json_line() for r in enumerate_self_dual(SearchSpec(4, 2, threads=4, chunk_size=1))]
    assert one == many


def test_results_are_sorted_and_distinct():
    results = enumerate_self_dual(SearchSpec(2, 2, threads=1))
    canon = [r.canonical for r in results]
    assert canon == sorted(canon)
    assert len(set(canon)) == len(canon)


def test_filters():
    type2 = enumerate_self_dual(SearchSpec(4, 2, type_tag="TypeII", threads=1))
    assert type2
    assert all(r.selfdual_type is SelfDualType.TYPE2 for r in type2)
    separable = enumerate_self_dual(SearchSpec(4, 2, separable=True, threads=1))
    non_separable = enumerate_self_dual(SearchSpec(4, 2, separable=False, threads=1))
    assert all(r.separable for r in separable)
    assert non_separable and not any(r.separable for r in non_separable)
    assert len(separable) + len(non_separable) == len(enumerate_self_dual(SearchSpec(4, 2, threads=1)))


def test_odd_alpha_has_no_self_dual_codes():
    assert enumerate_self_dual(SearchSpec(3, 1)) == []
    assert enumerate_self_dual_bruteforce(3, 1) == set()


def test_search_bounds():
    with pytest.raises(BoundExceeded):
        enumerate_self_dual(SearchSpec(8, 3))
    with pytest.raises(BoundExceeded):
        enumerate_self_dual(SearchSpec(8, 2))
    with pytest.raises(InvalidParameters):
        enumerate_self_dual(SearchSpec(2, 1, self_dual=False))
    with pytest.raises(InvalidParameters):
        enumerate_self_dual(SearchSpec(2, 1, type_tag="TypeIII"))
    with pytest.raises(BoundExceeded):
        enumerate_self_dual_bruteforce(6, 2)


@pytest.mark.parametrize("options", [{"threads": 0}, {"threads": -2}, {"chunk_size": 0}])
def test_search_rejects_empty_worker_pool(options):
    with pytest.raises(InvalidParameters):
        enumerate_self_dual(SearchSpec(2, 1, **options))


def test_canonical_form_is_a_class_invariant(type2_4_2_nonseparable, two_weight_n8):
    # swapping binary coordinates 1 and 3 maps one onto the other
    permuted = type2_4_2_nonseparable.permuted((0, 3, 2, 1), (0, 1))
    assert span(permuted) == span(two_weight_n8)
    assert canonical_form(span(type2_4_2_nonseparable)) == canonical_form(span(two_weight_n8))
    shuffled = two_weight_n8.permuted((2, 0, 3, 1), (1, 0))
    assert canonical_form(span(shuffled)) == canonical_form(span(two_weight_n8))


def test_canonical_form_bounds(hamming8):
    with pytest.raises(BoundExceeded):
        canonical_form(span(hamming8))


def test_classify_two_weight(sd_2_1, two_weight_n8):
    n4 = classify_two_weight(4, threads=1)
    assert len(n4) == 1
    assert n4[0].canonical == keys_of(canonical_form(span(sd_2_1)))
    n8 = classify_two_weight(8, threads=1)
    assert len(n8) == 1
    assert n8[0].canonical == keys_of(canonical_form(span(two_weight_n8)))
    assert n8[0].selfdual_type is SelfDualType.TYPE2
    assert not n8[0].separable
    assert classify_two_weight(12, threads=2) == []


def test_classify_two_weight_parameters():
    with pytest.raises(InvalidParameters):
        classify_two_weight(6)
    with pytest.raises(BoundExceeded):
        classify_two_weight(16)


def test_result_json():
    result = enumerate_self_dual(SearchSpec(2, 1, threads=1))[0]
    data = json.loads(result.json_line())
    assert data == {
        "alpha": 2,
        "beta": 1,
        "type": [2, 0, 1],
        "selfdual_type": "TypeI",
        "separable": True,
        "enumerator": {"n": 4, "coefficients": [1, 0, 2, 0, 1]},
        "matrix": data["matrix"],
    }
    assert len(data["matrix"]) == 2


def test_search_cache(tmp_path):
    path = tmp_path / "cache.json"
    cache = SearchCache(str(path))
    assert cache.get("2,1") is None
    cache.put("2,1", ["line one"])
    cache.put("4,2", ["line two", "line three"])
    assert cache.get("2,1") == ["line one"]
    assert cache.get("4,2") == ["line two", "line three"]
    assert (tmp_path / "cache.json.bak").exists()

    data = json.loads(path.read_text())
    assert data["version"] == 1
    assert data["records"]["4,2"]["count"] == 2


def test_search_cache_shared_between_instances(tmp_path):
    path = str(tmp_path / "cache.json")
    SearchCache(path).put("2,1", ["line"])
    assert SearchCache(path).get("2,1") == ["line"]


@pytest.mark.parametrize("contents", [
    "{not json",
    '{"last_updated": 0, "searches": {}}',
    '{"version": 1, "records": []}',
])
def test_unreadable_cache_starts_fresh(tmp_path, contents):
    path = tmp_path / "cache.json"
    path.write_text(contents)
    cache = SearchCache(str(path))
    assert cache.get("2,1") is None
    cache.put("2,1", ["line"])
    assert cache.get("2,1") == ["line"]
    assert (tmp_path / "cache.json.bak").read_text() == contents


def test_damaged_cache_record_is_a_miss(tmp_path):
    path = tmp_path / "cache.json"
    path.write_text(json.dumps({"version": 1, "records": {"2,1": {"results": ["a", "b"], "count": 3}}}))
    assert SearchCache(str(path)).get("2,1") is None
