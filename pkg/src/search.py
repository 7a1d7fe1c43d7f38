import json
import logging
import concurrent.futures
from dataclasses import dataclass
from functools import lru_cache, partial
from itertools import permutations, product
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from tqdm import tqdm

from . import config
from . import ring
from .analysis import (
    SelfDualType,
    WeightEnumerator,
    classify,
    lee_weight_set,
    self_dual_report,
    weight_enumerator,
)
from .codes import Code, CodeType, GenMatrix, _extend, ambient_words, is_self_orthogonal, is_separable, span
from .errors import BoundExceeded, InvalidParameters
from .run_logger import RunLogger
from .words import MixedWord, inner_value

logger = logging.getLogger("z2r")

EXHAUSTIVE_BITS_LIMIT = 12
CANONICAL_ALPHA_LIMIT = 6
CANONICAL_BETA_LIMIT = 4
BRUTEFORCE_BITS_LIMIT = 8

Matrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class SearchSpec:
    alpha: int
    beta: int
    self_dual: bool = True
    type_tag: Optional[str] = None
    two_weight: Optional[bool] = None
    separable: Optional[bool] = None
    canonicalize: bool = True
    verify: bool = True
    threads: int = config.SEARCH_THREADS
    chunk_size: int = config.SEARCH_CHUNK
    progress: bool = False

    def validate(self):
        if self.threads < 1 or self.chunk_size < 1:
            raise InvalidParameters(
                f"threads={self.threads} and chunk_size={self.chunk_size} must both be at least 1"
            )
        if self.alpha < 0 or self.beta < 0:
            raise InvalidParameters("alpha and beta must be non-negative")
        if not self.self_dual:
            raise InvalidParameters("only self-dual codes can be searched exhaustively")
        if self.alpha + 2 * self.beta > EXHAUSTIVE_BITS_LIMIT:
            raise BoundExceeded(
                f"alpha + 2 beta = {self.alpha + 2 * self.beta} exceeds {EXHAUSTIVE_BITS_LIMIT}"
            )
        if self.canonicalize:
            _check_canonical_bounds(self.alpha, self.beta)
        if self.type_tag is not None and self.type_tag not in {t.value for t in SelfDualType}:
            raise InvalidParameters(f"unknown type tag {self.type_tag}")

    def cache_key(self) -> str:
        return (f"{self.alpha},{self.beta},type={self.type_tag},two_weight={self.two_weight},"
                f"separable={self.separable},canonical={self.canonicalize}")


@dataclass(frozen=True)
class SearchResult:
    matrix: GenMatrix
    code_type: CodeType
    selfdual_type: SelfDualType
    separable: bool
    enumerator: WeightEnumerator
    canonical: Tuple[int, ...]
    violations: Tuple[str, ...] = ()

    def to_json(self) -> Dict:
        return {
            "alpha": self.matrix.alpha,
            "beta": self.matrix.beta,
            "type": self.code_type.as_list(),
            "selfdual_type": self.selfdual_type.value,
            "separable": self.separable,
            "enumerator": self.enumerator.to_json(),
            "matrix": [r.literal() for r in self.matrix.rows],
        }

    def json_line(self) -> str:
        return json.dumps(self.to_json())


# --- permutation tables ---------------------------------------------------

def _check_canonical_bounds(alpha: int, beta: int):
    if alpha > CANONICAL_ALPHA_LIMIT or beta > CANONICAL_BETA_LIMIT:
        raise BoundExceeded(
            f"canonical forms need alpha <= {CANONICAL_ALPHA_LIMIT} and beta <= {CANONICAL_BETA_LIMIT}"
        )


@lru_cache(maxsize=None)
def _perm_tables(alpha: int, beta: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...], List[int], List[int]]]:
    """For every (perm_x, perm_y) the lookup tables acting on the two halves of a word key."""
    x_tables = []
    for px in permutations(range(alpha)):
        table = []
        for xkey in range(1 << alpha):
            new = 0
            for i in range(alpha):
                new = (new << 1) | ((xkey >> (alpha - 1 - px[i])) & 1)
            table.append(new)
        x_tables.append((px, table))

    y_tables = []
    for py in permutations(range(beta)):
        table = []
        for ykey in range(1 << (2 * beta)):
            new = 0
            for j in range(beta):
                new = (new << 2) | ((ykey >> (2 * (beta - 1 - py[j]))) & 3)
            table.append(new)
        y_tables.append((py, table))

    return [(px, py, tx, ty) for px, tx in x_tables for py, ty in y_tables]


def _images(keys: Sequence[int], alpha: int, beta: int) -> Iterator[Tuple[Tuple[int, ...], Tuple, Tuple]]:
    shift = 2 * beta
    low = (1 << shift) - 1
    for px, py, tx, ty in _perm_tables(alpha, beta):
        image = tuple(sorted((tx[k >> shift] << shift) | ty[k & low] for k in keys))
        yield image, px, py


def _canonize(C: Code) -> Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...], Set[Tuple[int, ...]]]:
    """Lexicographically least image, the permutation reaching it, and the whole orbit."""
    _check_canonical_bounds(C.alpha, C.beta)
    keys = [w.key() for w in C.words]
    best = None
    orbit = set()
    for image, px, py in _images(keys, C.alpha, C.beta):
        orbit.add(image)
        if best is None or image < best[0]:
            best = (image, px, py)
    return best[0], best[1], best[2], orbit


def canonical_form(C: Code) -> Tuple[MixedWord, ...]:
    keys = _canonize(C)[0]
    return tuple(MixedWord.from_key(C.alpha, C.beta, k) for k in keys)


def orbit(C: Code) -> Set[Tuple[int, ...]]:
    """Every code permutation-equivalent to C, each as its sorted key tuple."""
    return _canonize(C)[3]


def code_keys(C: Code) -> Tuple[int, ...]:
    return tuple(sorted(w.key() for w in C.words))


# --- candidate generation ---------------------------------------------------

def orthogonal_matrices(k: int) -> Iterator[Matrix]:
    """Binary k x k matrices M with M M^T = I, rows built depth first."""
    candidates = [tuple((v >> (k - 1 - i)) & 1 for i in range(k))
                  for v in range(1 << k) if bin(v).count("1") % 2 == 1]

    def extend(rows: List[Tuple[int, ...]]) -> Iterator[Matrix]:
        if len(rows) == k:
            yield tuple(rows)
            return
        for c in candidates:
            if all(sum(a * b for a, b in zip(c, r)) % 2 == 0 for r in rows):
                yield from extend(rows + [c])

    yield from extend([])


def _all_matrices(rows: int, cols: int, symbols: Sequence) -> Iterator[Tuple[tuple, ...]]:
    for flat in product(symbols, repeat=rows * cols):
        yield tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows))


def template_matrix(alpha: int, beta: int, delta: int, A1: Matrix, T: Matrix, D: Matrix,
                    B: Tuple[Tuple[ring.RingElem, ...], ...]) -> GenMatrix:
    """
    Standard-form matrix of a would-be self-dual code with alpha = 2 kappa.

    The blocks A = B1 D^T and S^T = A1^T T B1^T are forced by orthogonality of
    the unit rows against the other rows, so only A1, T, D and B are free.
    """
    kappa, g, f = alpha // 2, beta - 2 * delta, delta
    B1 = [[e.a for e in row] for row in B]
    A = [[sum(B1[j][m] * D[i][m] for m in range(f)) % 2 for i in range(g)] for j in range(delta)]
    S = []
    for j in range(delta):
        v = [sum(T[i][m] * B1[j][m] for m in range(f)) % 2 for i in range(kappa)]
        S.append([sum(A1[i][m] * v[i] for i in range(kappa)) % 2 for m in range(kappa)])

    zero, one, u = ring.ZERO, ring.ONE, ring.U
    rows = []
    for i in range(kappa):
        bits = [int(m == i) for m in range(kappa)] + list(A1[i])
        elems = [u if T[i][m] else zero for m in range(f)] + [zero] * (g + delta)
        rows.append(MixedWord.from_lists(bits, elems))
    for i in range(g):
        elems = ([u if D[i][m] else zero for m in range(f)]
                 + [u if m == i else zero for m in range(g)] + [zero] * delta)
        rows.append(MixedWord.from_lists([0] * alpha, elems))
    for j in range(delta):
        bits = [0] * kappa + S[j]
        elems = (list(B[j]) + [one if A[j][i] else zero for i in range(g)]
                 + [one if m == j else zero for m in range(delta)])
        rows.append(MixedWord.from_lists(bits, elems))
    return GenMatrix(alpha, beta, rows)


def _prefixes(alpha: int, beta: int) -> Iterator[Tuple[int, Matrix, Matrix]]:
    kappa = alpha // 2
    for delta in range(beta // 2 + 1):
        for A1 in orthogonal_matrices(kappa):
            for T in _all_matrices(kappa, delta, (0, 1)):
                yield delta, A1, T


def _expand_chunk(alpha: int, beta: int, chunk: Sequence[Tuple[int, Matrix, Matrix]]) -> List[GenMatrix]:
    found = []
    for delta, A1, T in chunk:
        g = beta - 2 * delta
        for D in _all_matrices(g, delta, (0, 1)):
            for B in _all_matrices(delta, delta, ring.ELEMENTS):
                G = template_matrix(alpha, beta, delta, A1, T, D, B)
                if is_self_orthogonal(G):
                    found.append(G)
    return found


def _candidates(spec: SearchSpec) -> List[GenMatrix]:
    prefixes = list(_prefixes(spec.alpha, spec.beta))
    chunks = [prefixes[i:i + spec.chunk_size] for i in range(0, len(prefixes), spec.chunk_size)]
    logger.info(f"Searching ({spec.alpha},{spec.beta}): {len(prefixes)} block prefixes in {len(chunks)} chunks")

    candidates: List[GenMatrix] = []
    worker = partial(_expand_chunk, spec.alpha, spec.beta)
    with concurrent.futures.ThreadPoolExecutor(max_workers=spec.threads) as executor:
        results = executor.map(worker, chunks)
        with tqdm(results, total=len(chunks), desc="Searching", unit="chunk", disable=not spec.progress) as pbar:
            for chunk_result in pbar:
                candidates.extend(chunk_result)
                pbar.set_postfix_str(f"{len(candidates)} self-orthogonal templates")
    return candidates


def _passes_filters(spec: SearchSpec, code: Code) -> bool:
    if spec.type_tag is not None and classify(code).value != spec.type_tag:
        return False
    if spec.two_weight is not None and (len(lee_weight_set(code)) == 2) != spec.two_weight:
        return False
    if spec.separable is not None and is_separable(code) != spec.separable:
        return False
    return True


def _result(code: Code, canonical: Tuple[int, ...], verify: bool) -> SearchResult:
    violations: Tuple[str, ...] = ()
    if verify:
        violations = tuple(self_dual_report(code).violations)
        if violations:
            matrix_text = "\n".join(r.literal() for r in code.generators.rows)
            RunLogger().log_violation("self_dual_report", code.alpha, code.beta, matrix_text,
                                      {"violations": list(violations)})
    return SearchResult(
        matrix=code.generators,
        code_type=code.code_type,
        selfdual_type=classify(code),
        separable=is_separable(code),
        enumerator=weight_enumerator(code),
        canonical=canonical,
        violations=violations,
    )


def enumerate_self_dual(spec: SearchSpec) -> List[SearchResult]:
    spec.validate()
    if spec.alpha % 2:
        logger.info(f"No self-dual codes with odd alpha={spec.alpha}")
        return []

    seen: Set[Tuple[int, ...]] = set()
    results: List[SearchResult] = []
    for G in _candidates(spec):
        code = span(G)
        if len(code) != 2 ** (code.length // 2):
            continue
        keys = code_keys(code)
        if keys in seen:
            continue
        if not _passes_filters(spec, code):
            seen.add(keys)
            continue

        if spec.canonicalize:
            canonical, px, py, images = _canonize(code)
            seen |= images
            code = span(code.standard.unpermuted().permuted(px, py))
        else:
            seen.add(keys)
            canonical = keys
            code = span(code.standard.unpermuted())
        results.append(_result(code, canonical, spec.verify))

    results.sort(key=lambda r: r.canonical)
    logger.info(f"Found {len(results)} codes for ({spec.alpha},{spec.beta})")
    return results


def classify_two_weight(n: int, **options) -> List[SearchResult]:
    """Self-dual two-weight codes of length n with alpha = n/2, beta = n/4."""
    if n <= 0 or n % 4:
        raise InvalidParameters(f"no self-dual two-weight codes exist when 4 does not divide n={n}")
    return enumerate_self_dual(SearchSpec(n // 2, n // 4, two_weight=True, **options))


def enumerate_self_dual_bruteforce(alpha: int, beta: int) -> Set[Tuple[int, ...]]:
    """
    Every self-dual code of (alpha, beta), not up to equivalence.

    Grows self-orthogonal submodules one isotropic word at a time until they
    reach size 2^(n/2).
    """
    if alpha + 2 * beta > BRUTEFORCE_BITS_LIMIT:
        raise BoundExceeded(f"brute-force oracle is limited to alpha + 2 beta <= {BRUTEFORCE_BITS_LIMIT}")
    n = alpha + 2 * beta
    if n % 2:
        return set()
    target = 2 ** (n // 2)
    isotropic = [w for w in ambient_words(alpha, beta) if not w.is_zero() and inner_value(w, w) == 0]

    found: Set[FrozenSet[MixedWord]] = set()
    level: Set[FrozenSet[MixedWord]] = {frozenset([MixedWord.zero(alpha, beta)])}
    while level:
        next_level: Set[FrozenSet[MixedWord]] = set()
        for code in level:
            if len(code) == target:
                found.add(code)
                continue
            for w in isotropic:
                if w in code or any(inner_value(w, c) for c in code):
                    continue
                next_level.add(frozenset(_extend(set(code), w)))
        level = next_level
    return {tuple(sorted(w.key() for w in code)) for code in found}
