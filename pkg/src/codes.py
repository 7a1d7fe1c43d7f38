import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from . import config
from . import ring
from .errors import BoundExceeded, InconsistentType, NotSelfDual, SizeExceeded
from .ring import RingElem
from .utils import inverse_permutation, mask, reduced_row_echelon_form
from .words import MixedWord, inner_value, scalar_mul

logger = logging.getLogger("z2r")

# Brute-force oracles enumerate the whole ambient space
AMBIENT_BITS_LIMIT = 16


@dataclass(frozen=True)
class GenMatrix:
    alpha: int
    beta: int
    rows: Tuple[MixedWord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for row in self.rows:
            if (row.alpha, row.beta) != (self.alpha, self.beta):
                raise ValueError(
                    f"row {row} does not have shape ({self.alpha},{self.beta})"
                )

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[MixedWord]:
        return iter(self.rows)

    @property
    def length(self) -> int:
        return self.alpha + 2 * self.beta

    def permuted(self, perm_x: Sequence[int], perm_y: Sequence[int]) -> "GenMatrix":
        return GenMatrix(self.alpha, self.beta, [r.permuted(perm_x, perm_y) for r in self.rows])


@dataclass(frozen=True)
class CodeType:
    alpha: int
    beta: int
    gamma: int
    delta: int
    kappa: int

    @property
    def size_exponent(self) -> int:
        """log2 |C| = gamma + 2 delta."""
        return self.gamma + 2 * self.delta

    def as_list(self) -> List[int]:
        return [self.gamma, self.delta, self.kappa]

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta};{self.gamma},{self.delta};{self.kappa})"


@dataclass(frozen=True)
class StandardForm:
    """Template matrix in permuted coordinates; new column i is old column perm[i]."""

    matrix: GenMatrix
    code_type: CodeType
    perm_x: Tuple[int, ...]
    perm_y: Tuple[int, ...]

    @property
    def free_columns(self) -> int:
        t = self.code_type
        return t.beta + t.kappa - t.gamma - t.delta

    def unpermuted(self) -> GenMatrix:
        return self.matrix.permuted(inverse_permutation(self.perm_x), inverse_permutation(self.perm_y))

    def blocks(self) -> Dict[str, List[list]]:
        """The Z2 blocks A1, T, D, S, A and the R block B of the template."""
        t = self.code_type
        k, g, d, f = t.kappa, t.gamma - t.kappa, t.delta, self.free_columns
        rows = self.matrix.rows
        type1, type2, type3 = rows[:k], rows[k:k + g], rows[k + g:]
        return {
            "A1": [[r.bit_at(k + j) for j in range(t.alpha - k)] for r in type1],
            "T": [[(r.ring_b >> j) & 1 for j in range(f)] for r in type1],
            "D": [[(r.ring_b >> j) & 1 for j in range(f)] for r in type2],
            "S": [[r.bit_at(k + j) for j in range(t.alpha - k)] for r in type3],
            "B": [[r.ring_at(j) for j in range(f)] for r in type3],
            "A": [[(r.ring_a >> (f + j)) & 1 for j in range(g)] for r in type3],
        }


class Code:
    """An enumerated code: the full word set together with a generating matrix."""

    def __init__(self, alpha: int, beta: int, words: Iterable[MixedWord], generators: GenMatrix,
                 standard: Optional[StandardForm] = None):
        self.alpha = alpha
        self.beta = beta
        self.words: FrozenSet[MixedWord] = frozenset(words)
        self.generators = generators
        self._standard = standard

    @classmethod
    def from_words(cls, alpha: int, beta: int, words: Iterable[MixedWord]) -> "Code":
        """Wrap a word set that is already closed, extracting a greedy generating set."""
        words = frozenset(words)
        gens: List[MixedWord] = []
        reached: Set[MixedWord] = {MixedWord.zero(alpha, beta)}
        for w in sorted(words, key=MixedWord.key):
            if w not in reached:
                gens.append(w)
                reached = _extend(reached, w)
        return cls(alpha, beta, words, GenMatrix(alpha, beta, gens))

    @property
    def standard(self) -> StandardForm:
        if self._standard is None:
            self._standard = standard_form(self.generators)
        return self._standard

    @property
    def code_type(self) -> CodeType:
        return self.standard.code_type

    @property
    def length(self) -> int:
        return self.alpha + 2 * self.beta

    def sorted_words(self) -> List[MixedWord]:
        return sorted(self.words, key=MixedWord.key)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: MixedWord) -> bool:
        return word in self.words

    def __iter__(self) -> Iterator[MixedWord]:
        return iter(self.sorted_words())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return (self.alpha, self.beta, self.words) == (other.alpha, other.beta, other.words)

    def __hash__(self) -> int:
        return hash((self.alpha, self.beta, self.words))


def _extend(words: Set[MixedWord], row: MixedWord) -> Set[MixedWord]:
    """All w + d*row for w in words and d in R."""
    multiples = {scalar_mul(d, row) for d in ring.ELEMENTS}
    return {w + m for w in words for m in multiples}


def _eliminate(row: MixedWord, pivot: MixedWord, col: int) -> MixedWord:
    c = row.ring_at(col)
    if c == ring.ZERO:
        return row
    return row + scalar_mul(c, pivot)


def standard_form(G: GenMatrix) -> StandardForm:
    alpha, beta = G.alpha, G.beta
    rest = [r for r in G.rows if not r.is_zero()]

    # Phase 1: unit pivots in ring columns, leftmost column then topmost row
    pivots: List[Tuple[int, MixedWord]] = []
    for col in range(beta):
        idx = next((i for i, r in enumerate(rest) if (r.ring_a >> col) & 1), None)
        if idx is None:
            continue
        pivot = rest.pop(idx)
        pivot = scalar_mul(ring.inverse(pivot.ring_at(col)), pivot)
        rest = [_eliminate(r, pivot, col) for r in rest]
        pivots = [(c, _eliminate(p, pivot, col)) for c, p in pivots]
        pivots.append((col, pivot))

    # Phase 2: the rest has ring part in uZ2, reduce over Z2 with X columns first
    packed = [r.bin | (r.ring_b << alpha) for r in rest]
    reduced, pivot_cols = reduced_row_echelon_form(packed, alpha + beta)
    type1: List[Tuple[int, MixedWord]] = []
    type2: List[Tuple[int, MixedWord]] = []
    for v, c in zip(reduced, pivot_cols):
        word = MixedWord(alpha, beta, v & mask(alpha), 0, v >> alpha)
        if c < alpha:
            type1.append((c, word))
        else:
            type2.append((c - alpha, word))

    # Phase 3: clear the unit rows against the X pivots and the u pivots
    type3 = []
    for col, row in pivots:
        for xcol, t1 in type1:
            if row.bit_at(xcol):
                row = row + t1
        for ycol, t2 in type2:
            if (row.ring_b >> ycol) & 1:
                row = row + t2
        type3.append(row)

    x_pivots = [c for c, _ in type1]
    y_pivots = [c for c, _ in type2]
    d_pivots = [c for c, _ in pivots]
    taken = set(y_pivots) | set(d_pivots)
    perm_x = tuple(x_pivots + [c for c in range(alpha) if c not in set(x_pivots)])
    perm_y = tuple([c for c in range(beta) if c not in taken] + y_pivots + d_pivots)

    rows = [w for _, w in type1] + [w for _, w in type2] + type3
    kappa = len(type1)
    code_type = CodeType(alpha, beta, kappa + len(type2), len(pivots), kappa)
    logger.debug(f"Standard form of {len(G)} rows has type {code_type}")
    matrix = GenMatrix(alpha, beta, rows).permuted(perm_x, perm_y)
    return StandardForm(matrix, code_type, perm_x, perm_y)


def dual(sf: StandardForm) -> GenMatrix:
    """Generator matrix of the dual code, in the original coordinates."""
    t = sf.code_type
    alpha, beta = t.alpha, t.beta
    k, g, d, f = t.kappa, t.gamma - t.kappa, t.delta, sf.free_columns
    blk = sf.blocks()
    A1, T, D, S, B, A = blk["A1"], blk["T"], blk["D"], blk["S"], blk["B"], blk["A"]
    one, u = ring.ONE, ring.U

    def row(bits: List[int], elems: List[RingElem]) -> MixedWord:
        return MixedWord.from_lists(bits, elems)

    rows = []
    for j in range(alpha - k):
        bits = [A1[i][j] for i in range(k)] + [int(i == j) for i in range(alpha - k)]
        elems = [ring.ZERO] * (f + g) + [u if S[i][j] else ring.ZERO for i in range(d)]
        rows.append(row(bits, elems))
    for j in range(g):
        elems = ([ring.ZERO] * f + [u if i == j else ring.ZERO for i in range(g)]
                 + [u if A[i][j] else ring.ZERO for i in range(d)])
        rows.append(row([0] * alpha, elems))
    for j in range(f):
        bits = [T[i][j] for i in range(k)] + [0] * (alpha - k)
        elems = [one if i == j else ring.ZERO for i in range(f)]
        elems += [one if D[i][j] else ring.ZERO for i in range(g)]
        for i in range(d):
            ad = sum(A[i][m] * D[m][j] for m in range(g)) % 2
            elems.append(B[i][j] + (one if ad else ring.ZERO))
        rows.append(row(bits, elems))

    H = GenMatrix(alpha, beta, rows)
    return H.permuted(inverse_permutation(sf.perm_x), inverse_permutation(sf.perm_y))


def dual_type(t: CodeType) -> CodeType:
    result = CodeType(
        t.alpha,
        t.beta,
        t.alpha + t.gamma - 2 * t.kappa,
        t.beta - t.gamma - t.delta + t.kappa,
        t.alpha - t.kappa,
    )
    if min(result.gamma, result.delta, result.kappa) < 0:
        raise InconsistentType(f"type {t} has no valid dual type")
    return result


def span_words(alpha: int, beta: int, rows: Sequence[MixedWord]) -> Set[MixedWord]:
    words = {MixedWord.zero(alpha, beta)}
    for r in rows:
        words = _extend(words, r)
    return words


def span(G: GenMatrix, limit: Optional[int] = None) -> Code:
    limit = config.SPAN_LIMIT if limit is None else limit
    sf = standard_form(G)
    size = 2 ** sf.code_type.size_exponent
    if size > limit:
        raise SizeExceeded(size, limit)
    return Code(G.alpha, G.beta, span_words(G.alpha, G.beta, sf.unpermuted().rows), G, sf)


def ambient_words(alpha: int, beta: int) -> Iterator[MixedWord]:
    if alpha + 2 * beta > AMBIENT_BITS_LIMIT:
        raise BoundExceeded(f"ambient space of ({alpha},{beta}) is too large to enumerate")
    for b in range(1 << alpha):
        for ra in range(1 << beta):
            for rb in range(1 << beta):
                yield MixedWord(alpha, beta, b, ra, rb)


def orthogonal_complement(G: GenMatrix) -> Code:
    """Brute-force dual: every ambient word orthogonal to all rows of G."""
    rows = [r for r in G.rows if not r.is_zero()]
    words = [w for w in ambient_words(G.alpha, G.beta)
             if all(inner_value(w, r) == 0 for r in rows)]
    return Code.from_words(G.alpha, G.beta, words)


def punctured_X(C: Code) -> Code:
    return Code.from_words(C.alpha, 0, {w.x_part() for w in C.words})


def punctured_Y(C: Code) -> Code:
    return Code.from_words(0, C.beta, {w.y_part() for w in C.words})


def subcode_b(C: Code) -> Code:
    """Codewords whose ring coordinates all lie in {0, u}."""
    return Code.from_words(C.alpha, C.beta, {w for w in C.words if w.ring_a == 0})


def subcode_0(C: Code) -> Code:
    return Code.from_words(C.alpha, C.beta, {w for w in C.words if w.ring_a == 0 and w.ring_b == 0})


def kappa_oracle(C: Code) -> int:
    """dim (C_b)_X by enumeration."""
    return len(punctured_X(subcode_b(C))).bit_length() - 1


def is_self_orthogonal(G: GenMatrix) -> bool:
    rows = G.rows
    return all(inner_value(rows[i], rows[j]) == 0
               for i in range(len(rows)) for j in range(i, len(rows)))


def is_self_dual(G: GenMatrix) -> bool:
    n = G.length
    if n % 2:
        return False
    return is_self_orthogonal(G) and standard_form(G).code_type.size_exponent == n // 2


def is_separable(C: Code) -> bool:
    cx, cy = punctured_X(C), punctured_Y(C)
    if len(C) != len(cx) * len(cy):
        return False
    return all(x.concat(y) in C.words for x in cx.words for y in cy.words)


@dataclass(frozen=True)
class SeparabilityReport:
    separable: bool
    cx_self_orthogonal: bool
    cx_self_dual: bool
    cx_size_is_2_kappa: bool
    cy_self_orthogonal: bool
    cy_self_dual: bool
    cy_size_is_2_beta: bool

    def as_dict(self) -> Dict[str, bool]:
        return dict(self.__dict__)

    @property
    def agree(self) -> bool:
        return len(set(self.as_dict().values())) == 1


def separability_report(C: Code) -> SeparabilityReport:
    if not is_self_dual(C.generators):
        raise NotSelfDual("separability report needs a self-dual code")
    cx, cy = punctured_X(C), punctured_Y(C)
    return SeparabilityReport(
        separable=is_separable(C),
        cx_self_orthogonal=is_self_orthogonal(cx.generators),
        cx_self_dual=is_self_dual(cx.generators),
        cx_size_is_2_kappa=len(cx) == 2 ** C.code_type.kappa,
        cy_self_orthogonal=is_self_orthogonal(cy.generators),
        cy_self_dual=is_self_dual(cy.generators),
        cy_size_is_2_beta=len(cy) == 2 ** C.beta,
    )
