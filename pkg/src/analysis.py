import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from sympy import Poly, expand, symbols

from .codes import (
    AMBIENT_BITS_LIMIT,
    Code,
    is_self_dual,
    is_separable,
    kappa_oracle,
    orthogonal_complement,
    punctured_X,
    punctured_Y,
    separability_report,
    subcode_0,
    subcode_b,
)
from .errors import InvalidParameters, NonIntegral, NotSelfDual
from .utils import mask
from .words import MixedWord, lee_weight, pair_stats, stats

logger = logging.getLogger("z2r")

X, Y = symbols("X Y")


@dataclass(frozen=True)
class WeightEnumerator:
    n: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if self.n < 0 or len(self.coeffs) != self.n + 1:
            raise InvalidParameters(f"enumerator of length {self.n} needs {self.n + 1} coefficients")
        if self.coeffs[0] < 1 or min(self.coeffs) < 0:
            raise InvalidParameters(f"A_0 must be at least 1 and no coefficient negative, got {list(self.coeffs)}")

    @property
    def size(self) -> int:
        return sum(self.coeffs)

    def nonzero_weights(self) -> List[int]:
        return [i for i, a in enumerate(self.coeffs) if a and i > 0]

    def to_json(self) -> Dict:
        return {"n": self.n, "coefficients": list(self.coeffs)}


class SelfDualType(Enum):
    TYPE0 = "Type0"
    TYPE1 = "TypeI"
    TYPE2 = "TypeII"

    def __str__(self) -> str:
        return self.value


def weight_enumerator(C: Code) -> WeightEnumerator:
    n = C.length
    coeffs = [0] * (n + 1)
    for w in C.words:
        coeffs[lee_weight(w)] += 1
    return WeightEnumerator(n, coeffs)


def enumerator_polynomial(W: WeightEnumerator):
    """W(X, Y) = sum of A_i X^(n-i) Y^i as a sympy expression."""
    return sum((a * X ** (W.n - i) * Y ** i for i, a in enumerate(W.coeffs) if a), 0)


def macwilliams(W: WeightEnumerator, size: int) -> WeightEnumerator:
    """Enumerator of the dual: W(X+Y, X-Y) / |C|, with exact division."""
    if size != W.size:
        raise InvalidParameters(f"code size {size} does not match enumerator total {W.size}")
    n = W.n
    transformed = expand(sum(a * (X + Y) ** (n - i) * (X - Y) ** i for i, a in enumerate(W.coeffs) if a))
    poly = Poly(transformed, X, Y)

    coeffs = []
    for i in range(n + 1):
        c = poly.coeff_monomial(X ** (n - i) * Y ** i)
        if c < 0 or c % size != 0:
            raise NonIntegral(f"coefficient of X^{n - i}Y^{i} is {c}/{size}")
        coeffs.append(int(c) // size)
    return WeightEnumerator(n, coeffs)


def lee_weight_set(C: Code) -> List[int]:
    return sorted({lee_weight(w) for w in C.words} - {0})


def min_lee_distance(C: Code) -> int:
    weights = lee_weight_set(C)
    if not weights:
        raise InvalidParameters("code has no nonzero codewords")
    return weights[0]


def _require_self_dual(C: Code, what: str):
    if not is_self_dual(C.generators):
        raise NotSelfDual(f"{what} is only defined for self-dual codes")


def classify(C: Code) -> SelfDualType:
    _require_self_dual(C, "classification")
    weights = {lee_weight(w) for w in C.words}
    if any(wt % 2 for wt in weights):
        return SelfDualType.TYPE0
    if all(wt % 4 == 0 for wt in weights):
        return SelfDualType.TYPE2
    return SelfDualType.TYPE1


@dataclass(frozen=True)
class BoundsReport:
    applicable: bool
    kind: str = ""
    alpha_min: int = 0
    beta_min: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_min_param_bounds(C: Code) -> BoundsReport:
    """Lower bounds on alpha and beta for self-dual codes by Type and separability."""
    if C.alpha * C.beta == 0:
        return BoundsReport(applicable=False)
    tag = classify(C)
    if tag is SelfDualType.TYPE0:
        return BoundsReport(True, "Type0", violations=["a Type 0 self-dual code exists"])

    if tag is SelfDualType.TYPE2:
        kind, alpha_min, beta_min = "TypeII", 4, 2
    elif is_separable(C):
        kind, alpha_min, beta_min = "TypeI separable", 2, 1
    else:
        kind, alpha_min, beta_min = "TypeI non-separable", 4, 2

    violations = []
    if C.alpha < alpha_min:
        violations.append(f"{kind} code has alpha={C.alpha} < {alpha_min}")
    if C.beta < beta_min:
        violations.append(f"{kind} code has beta={C.beta} < {beta_min}")
    return BoundsReport(True, kind, alpha_min, beta_min, violations)


@dataclass
class TwoWeightReport:
    precondition_failures: List[str]
    weights: List[int]
    two_weight: bool
    checks: Dict[str, bool] = field(default_factory=dict)
    dual_distance: Optional[int] = None
    expected_dual_distance: Optional[int] = None
    distance_interpretation: str = "lee"

    @property
    def passed(self) -> bool:
        return not self.precondition_failures and self.two_weight and all(self.checks.values())

    def to_json(self) -> Dict:
        return {
            "precondition_failures": self.precondition_failures,
            "weights": self.weights,
            "two_weight": self.two_weight,
            "checks": self.checks,
            "dual_distance": self.dual_distance,
            "expected_dual_distance": self.expected_dual_distance,
            "distance_interpretation": self.distance_interpretation,
        }


def _special_words(alpha: int, beta: int) -> List[MixedWord]:
    """(0|0), (0|u), (1|0), (1|u) with all-ones and all-u blocks."""
    ones, us = mask(alpha), mask(beta)
    return [MixedWord(alpha, beta, b, 0, r) for b in (0, ones) for r in (0, us)]


def two_weight_check(C: Code) -> TwoWeightReport:
    alpha, beta, n = C.alpha, C.beta, C.length
    special = _special_words(alpha, beta)

    failures = []
    if alpha * beta == 0:
        failures.append("alpha * beta must be nonzero")
    if special[2] not in C:
        failures.append("(1..1|0..0) is not a codeword")
    if special[1] not in C:
        failures.append("(0..0|u..u) is not a codeword")

    weights = lee_weight_set(C)
    report = TwoWeightReport(failures, weights, len(weights) == 2)
    if failures or not report.two_weight:
        return report

    W = weight_enumerator(C)
    expected = [0] * (n + 1)
    expected[0] = 1
    expected[n] += 1
    if n % 2 == 0:
        expected[n // 2] += len(C) - 2

    def dichotomy(w: MixedWord) -> bool:
        s = stats(w)
        quarter = 4 * s.wtH_bin == n
        return quarter and ((4 * s.N == n and s.N_u == 0) or (s.N == 0 and 8 * s.N_u == n))

    report.checks = {
        "alpha_is_2beta": alpha == 2 * beta,
        "n_divisible_by_4": n % 4 == 0,
        "weight_distribution": list(W.coeffs) == expected,
        "dichotomy": all(dichotomy(w) for w in C.words if w not in special),
        "delta_at_most_1": C.code_type.delta <= 1,
    }

    if is_self_dual(C.generators):
        dual_code = C
    elif n <= AMBIENT_BITS_LIMIT:
        dual_code = orthogonal_complement(C.generators)
    else:
        dual_code = None
    if dual_code is not None and len(dual_code) > 1:
        report.dual_distance = min_lee_distance(dual_code)
        report.expected_dual_distance = 4 if 2 * n == len(C) else 2
        report.checks["dual_distance"] = report.dual_distance == report.expected_dual_distance

    logger.debug(f"Two-weight check on ({alpha},{beta}): {report.checks}")
    return report


@dataclass
class SelfDualReport:
    checks: Dict[str, bool]

    @property
    def violations(self) -> List[str]:
        return [name for name, ok in self.checks.items() if not ok]


def self_dual_report(C: Code) -> SelfDualReport:
    """Every structural fact a self-dual code must satisfy, evaluated on C."""
    _require_self_dual(C, "the structure report")
    t = C.code_type
    alpha, beta, kappa, delta = C.alpha, C.beta, t.kappa, t.delta
    ones, us = mask(alpha), mask(beta)

    cb = subcode_b(C)
    cx, cy = punctured_X(C), punctured_Y(C)
    separable = is_separable(C)

    r = len(punctured_X(subcode_0(C))).bit_length() - 1
    preimages = Counter(w.y_part() for w in C.words)
    repetition = (
        len(set(preimages.values())) == 1
        and next(iter(preimages.values())) == 2 ** r
        and r <= kappa
        and (alpha == 0 or r >= 1)
        and len(cy) >= 2 ** beta
    )

    ring_parts = list(cy.words)
    pair_parity = all(
        ps.ns % 2 == ps.nd % 2 and ps.n11 % 2 == 0
        for ps in (pair_stats(w, y) for w in ring_parts for y in ring_parts)
    )

    doubly_even_x = all(w.bin.bit_count() % 4 == 0 for w in cx.words)

    checks = {
        "parameter_law": (
            alpha == 2 * kappa
            and t.gamma == beta + kappa - 2 * delta
            and len(C) == 2 ** (kappa + beta)
            and len(cb) == 2 ** (kappa + beta - delta)
        ),
        "membership": all(
            MixedWord(alpha, beta, b, 0, rb) in C for b, rb in ((ones, 0), (0, us), (ones, us))
        ),
        "even_parts": all(w.bin.bit_count() % 2 == 0 and w.ring_a.bit_count() % 2 == 0 for w in C.words),
        "cb_x_self_dual": (
            is_self_dual(punctured_X(cb).generators) and kappa_oracle(C) == kappa
        ),
        "repetition": repetition,
        "pair_parity": pair_parity,
        "separability_agreement": separability_report(C).agree,
        "doubly_even_x_separable": separable or not doubly_even_x,
        "delta_zero_separable": separable or delta != 0,
        "no_type0": classify(C) is not SelfDualType.TYPE0,
        "min_param_bounds": check_min_param_bounds(C).ok,
    }
    return SelfDualReport(checks)
