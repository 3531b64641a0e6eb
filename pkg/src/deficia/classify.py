"""Deficiency/abundance classification and exact-k witness search.

A witness set for n on the deficient side is a set of k distinct proper
divisors summing to 2n - sigma(n); on the near side it sums to
sigma(n) - 2n.  The solver enumerates witness sets in a fixed
lexicographic order (by decreasing d1, then d2, ...) so output is
reproducible and diffable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .factor import Factorization, divisor_list, factorize, sigma

__all__ = [
    "Side",
    "Status",
    "WitnessSet",
    "ClassificationRecord",
    "SideMismatchError",
    "TargetZeroError",
    "delta",
    "witnesses_exact_k",
    "classify_full",
]

DEFAULT_WITNESS_LIMIT = 1024


class Side(Enum):
    DEFICIENT = "deficient"
    NEAR = "near"


class Status(Enum):
    DEFICIENT = "deficient"
    PERFECT = "perfect"
    ABUNDANT = "abundant"


class SideMismatchError(ValueError):
    """The sign of sigma(n) - 2n contradicts the requested side."""


class TargetZeroError(ValueError):
    """n is perfect, so no exactly-k witness with k >= 1 can exist."""


@dataclass(frozen=True)
class WitnessSet:
    n: int
    k: int
    divisors: tuple[int, ...]  # strictly decreasing
    cofactors: tuple[int, ...]  # n // d, strictly increasing
    side: Side

    def __post_init__(self) -> None:
        if len(self.divisors) != self.k or self.k < 1:
            raise ValueError("witness cardinality mismatch")
        for d, cof in zip(self.divisors, self.cofactors):
            if not (1 <= d < self.n and self.n % d == 0 and cof == self.n // d):
                raise ValueError(f"{d} is not a proper divisor of {self.n}")
        if any(a <= b for a, b in zip(self.divisors, self.divisors[1:])):
            raise ValueError("witness divisors must be strictly decreasing")

    @property
    def total(self) -> int:
        return sum(self.divisors)


@dataclass
class ClassificationRecord:
    n: int
    factorization: Factorization
    sigma: int
    delta: int
    status: Status
    witnesses: dict[int, list[WitnessSet]] = field(default_factory=dict)


def delta(n: int) -> int:
    """sigma(n) - 2n (negative: deficient, zero: perfect, positive: abundant)."""
    if n < 1:
        raise ValueError(f"n >= 1 required, got {n}")
    return sigma(n) - 2 * n


def _k_subsets_with_sum(divs_desc: list[int], k: int, target: int, limit: int):
    """All k-subsets of divs_desc summing to target, lexicographic by the
    decreasing-order tuples.  divs_desc must be sorted descending."""
    m = len(divs_desc)
    if k > m or target <= 0:
        return []
    if k >= 4 and m >= 12:
        return _meet_in_the_middle(divs_desc, k, target, limit)
    out: list[tuple[int, ...]] = []
    asc = divs_desc[::-1]

    def rec(start: int, need: int, remaining: int, chosen: list[int]) -> bool:
        if need == 0:
            if remaining == 0:
                out.append(tuple(chosen))
                return len(out) >= limit
            return False
        for i in range(start, m - need + 1):
            d = divs_desc[i]
            if d + sum(divs_desc[i + 1 : i + need]) < remaining:
                # even the largest continuation is too small; later i only shrink
                break
            if d + sum(asc[: need - 1]) > remaining:
                # smallest continuation still too big; skip this d
                continue
            chosen.append(d)
            if rec(i + 1, need - 1, remaining - d, chosen):
                chosen.pop()
                return True
            chosen.pop()
        return False

    rec(0, k, target, [])
    return out


def _meet_in_the_middle(divs_desc: list[int], k: int, target: int, limit: int):
    """Exact fixed-cardinality subset-sum via meet-in-the-middle."""
    m = len(divs_desc)
    half = m // 2
    left, right = divs_desc[:half], divs_desc[half:]
    found: set[tuple[int, ...]] = set()
    for ka in range(max(0, k - len(right)), min(k, len(left)) + 1):
        kb = k - ka
        table: dict[int, list[tuple[int, ...]]] = {}
        for combo in combinations(right, kb):
            table.setdefault(sum(combo), []).append(combo)
        for combo in combinations(left, ka):
            rest = target - sum(combo)
            for other in table.get(rest, ()):
                found.add(combo + other)
                if len(found) >= 4 * limit:
                    break
    result = sorted(found, key=lambda t: tuple(-d for d in t))
    return result[:limit]


def witnesses_exact_k(
    n: int,
    k: int,
    side: Side,
    limit: int = DEFAULT_WITNESS_LIMIT,
) -> list[WitnessSet]:
    """All (up to limit) sets of k distinct proper divisors of n summing to
    |sigma(n) - 2n| on the requested side."""
    if n < 2:
        raise ValueError(f"n >= 2 required, got {n}")
    if k < 1:
        raise ValueError(f"k >= 1 required, got {k}")
    f = factorize(n)
    d = sigma(f) - 2 * n
    if d == 0:
        raise TargetZeroError(f"{n} is perfect; no exactly-{k} witness exists")
    if (d > 0) != (side is Side.NEAR):
        raise SideMismatchError(f"delta(n)={d} contradicts side {side.value}")
    target = abs(d)
    proper_desc = [v for v in reversed(divisor_list(f)) if v != n]
    subsets = _k_subsets_with_sum(proper_desc, k, target, limit)
    return [
        WitnessSet(n, k, combo, tuple(n // v for v in combo), side)
        for combo in subsets
    ]


def classify_full(
    n: int,
    kmax: int,
    limit: int = DEFAULT_WITNESS_LIMIT,
) -> ClassificationRecord:
    """Classification record with witness sets for 1 <= k <= kmax on the
    side applicable to n's deficiency sign."""
    if n < 1:
        raise ValueError(f"n >= 1 required, got {n}")
    f = factorize(n)
    s = sigma(f)
    d = s - 2 * n
    if d < 0:
        status, side = Status.DEFICIENT, Side.DEFICIENT
    elif d == 0:
        status, side = Status.PERFECT, None
    else:
        status, side = Status.ABUNDANT, Side.NEAR
    record = ClassificationRecord(n, f, s, d, status)
    if side is not None and n >= 2:
        for k in range(1, kmax + 1):
            sets = witnesses_exact_k(n, k, side, limit)
            if sets:
                record.witnesses[k] = sets
    return record
