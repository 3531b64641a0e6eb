"""Bulk range search over a segmented sum-of-divisors sieve.

The sieve extracts smallest-prime-power structure per segment, giving
exact sigma values and full factorizations for every n in the segment in
one pass.  Searches stream SearchHit records, can filter by parity and
omega, and persist progress through atomic JSON checkpoints so a killed
run resumes to a byte-identical output file.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field, replace
from math import isqrt
from typing import Iterator

from .classify import (
    DEFAULT_WITNESS_LIMIT,
    ClassificationRecord,
    Side,
    Status,
    WitnessSet,
    _k_subsets_with_sum,
)
from .factor import Factorization, divisor_list, is_prime, sigma

__all__ = [
    "SearchConfig",
    "SearchHit",
    "Checkpoint",
    "CheckpointMismatchError",
    "SegmentTooLargeError",
    "sigma_sieve",
    "search_range",
    "search_structured",
    "verify_lemma1",
    "verify_lemma2",
    "verify_theorem",
    "Lemma1Report",
    "Lemma2Report",
    "TheoremReport",
]

SEGMENT_CAP = 1 << 26
DEFAULT_SEGMENT_SIZE = 1 << 17


class SegmentTooLargeError(ValueError):
    pass


class CheckpointMismatchError(RuntimeError):
    """Checkpoint was produced by a different search configuration."""


_prime_cache: list[int] = [2, 3, 5, 7]


def _primes_upto(limit: int) -> list[int]:
    global _prime_cache
    if _prime_cache[-1] < limit:
        top = max(limit, 2 * _prime_cache[-1])
        sieve = bytearray([1]) * (top + 1)
        sieve[0] = sieve[1] = 0
        for i in range(2, isqrt(top) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        _prime_cache = [i for i, v in enumerate(sieve) if v]
    import bisect

    return _prime_cache[: bisect.bisect_right(_prime_cache, limit)]


def _sieve_segment(lo: int, hi: int) -> tuple[list[int], list[list[tuple[int, int]]]]:
    """Exact sigma and factor list for every n in [lo, hi]."""
    size = hi - lo + 1
    rem = list(range(lo, hi + 1))
    sig = [1] * size
    fac: list[list[tuple[int, int]]] = [[] for _ in range(size)]
    for p in _primes_upto(isqrt(hi)):
        start = ((lo + p - 1) // p) * p
        for idx in range(start - lo, size, p):
            r = rem[idx]
            e = 0
            while r % p == 0:
                r //= p
                e += 1
            rem[idx] = r
            sig[idx] *= (p ** (e + 1) - 1) // (p - 1)
            fac[idx].append((p, e))
    for idx in range(size):
        r = rem[idx]
        if r > 1:
            sig[idx] *= r + 1
            fac[idx].append((r, 1))
    if lo <= 1 <= hi:
        sig[1 - lo] = 1
    return sig, fac


def sigma_sieve(lo: int, hi: int) -> list[int]:
    """sigma(n) for every n in [lo, hi], by segmented sieving."""
    if lo < 1 or hi < lo:
        raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    if hi - lo + 1 > SEGMENT_CAP:
        raise SegmentTooLargeError(f"segment [{lo}, {hi}] exceeds cap {SEGMENT_CAP}")
    return _sieve_segment(lo, hi)[0]


@dataclass(frozen=True)
class SearchConfig:
    lo: int
    hi: int
    kset: frozenset[int]
    side: Side = Side.DEFICIENT
    odd_only: bool = False
    omega_max: int | None = None
    segment_size: int = DEFAULT_SEGMENT_SIZE
    checkpoint_path: str | None = None
    hits_path: str | None = None
    witness_limit: int = DEFAULT_WITNESS_LIMIT

    def __post_init__(self) -> None:
        if not (1 <= self.lo <= self.hi):
            raise ValueError(f"need 1 <= lo <= hi, got [{self.lo}, {self.hi}]")
        if not self.kset or min(self.kset) < 1:
            raise ValueError("kset must be a nonempty set of positive integers")
        if self.segment_size < 1:
            raise ValueError("segment_size must be >= 1")

    def digest(self) -> str:
        # hits/checkpoint paths do not affect search semantics
        payload = {
            "lo": self.lo,
            "hi": self.hi,
            "kset": sorted(self.kset),
            "side": self.side.value,
            "odd_only": self.odd_only,
            "omega_max": self.omega_max,
            "segment_size": self.segment_size,
            "witness_limit": self.witness_limit,
        }
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


@dataclass(frozen=True)
class SearchHit:
    record: ClassificationRecord
    matched_k: frozenset[int]

    def to_json_dict(self) -> dict:
        rec = self.record
        return {
            "n": str(rec.n),
            "sigma": str(rec.sigma),
            "delta": str(rec.delta),
            "status": rec.status.value,
            "witnesses": {
                str(k): [[str(d) for d in w.divisors] for w in ws]
                for k, ws in sorted(rec.witnesses.items())
            },
        }


@dataclass
class Checkpoint:
    config_digest: str
    next_segment_start: int
    hits_so_far: int
    emitted_file_offset: int

    def write(self, path: str) -> None:
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(self.__dict__, fh)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)

    @classmethod
    def read(cls, path: str) -> "Checkpoint":
        with open(path) as fh:
            return cls(**json.load(fh))


def _classify_from_sieve(
    n: int, sig: int, factors: list[tuple[int, int]], config: SearchConfig
) -> SearchHit | None:
    d = sig - 2 * n
    if config.side is Side.DEFICIENT:
        if d >= 0:
            return None
        status = Status.DEFICIENT
    else:
        if d <= 0:
            return None
        status = Status.ABUNDANT
    target = abs(d)
    f = Factorization(n, tuple(factors))
    proper_desc = [v for v in reversed(divisor_list(f)) if v != n]
    if not proper_desc or target > sum(proper_desc[: max(config.kset)]):
        return None
    matched: dict[int, list[WitnessSet]] = {}
    for k in sorted(config.kset):
        combos = _k_subsets_with_sum(proper_desc, k, target, config.witness_limit)
        if combos:
            matched[k] = [
                WitnessSet(n, k, c, tuple(n // v for v in c), config.side)
                for c in combos
            ]
    if not matched:
        return None
    record = ClassificationRecord(n, f, sig, d, status, matched)
    return SearchHit(record, frozenset(matched))


def _scan_segment(seg_lo: int, seg_hi: int, config: SearchConfig) -> list[SearchHit]:
    sig, fac = _sieve_segment(seg_lo, seg_hi)
    hits = []
    start = seg_lo
    if config.odd_only and start % 2 == 0:
        start += 1
    step = 2 if config.odd_only else 1
    for n in range(start, seg_hi + 1, step):
        if n < 2:
            continue
        idx = n - seg_lo
        if config.omega_max is not None and len(fac[idx]) > config.omega_max:
            continue
        hit = _classify_from_sieve(n, sig[idx], fac[idx], config)
        if hit is not None:
            hits.append(hit)
    return hits


def search_range(config: SearchConfig) -> Iterator[SearchHit]:
    """Stream all hits in [lo, hi]; resumes from a checkpoint if present.

    When hits_path is set, hits are also appended there as JSON Lines and
    checkpointing (one checkpoint per segment, atomic rename) guarantees a
    byte-identical file across kill/resume cycles.
    """
    digest = config.digest()
    seg_start = config.lo
    hits_so_far = 0
    offset = 0
    if config.checkpoint_path and os.path.exists(config.checkpoint_path):
        ckpt = Checkpoint.read(config.checkpoint_path)
        if ckpt.config_digest != digest:
            raise CheckpointMismatchError(
                f"checkpoint digest {ckpt.config_digest[:12]} != config {digest[:12]}"
            )
        seg_start = ckpt.next_segment_start
        hits_so_far = ckpt.hits_so_far
        offset = ckpt.emitted_file_offset
    sink = None
    if config.hits_path is not None:
        # truncate to the last durable offset so replayed segments append cleanly
        mode = "r+" if os.path.exists(config.hits_path) else "w"
        sink = open(config.hits_path, mode)
        sink.truncate(offset)
        sink.seek(offset)
    try:
        while seg_start <= config.hi:
            seg_hi = min(seg_start + config.segment_size - 1, config.hi)
            hits = _scan_segment(seg_start, seg_hi, config)
            for hit in hits:
                if sink is not None:
                    sink.write(json.dumps(hit.to_json_dict(), sort_keys=True) + "\n")
                yield hit
            hits_so_far += len(hits)
            if sink is not None:
                sink.flush()
                offset = sink.tell()
            seg_start = seg_hi + 1
            if config.checkpoint_path:
                Checkpoint(digest, seg_start, hits_so_far, offset).write(
                    config.checkpoint_path
                )
    finally:
        if sink is not None:
            sink.close()


def search_structured(
    p1_range: tuple[int, int],
    p2_range: tuple[int, int],
    alpha_max: int,
    beta_max: int,
    k: int,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
) -> list[SearchHit]:
    """Exact-k deficient search over square candidates p1^(2a) * p2^(2b)
    with odd primes p1 < p2."""
    p1s = [p for p in range(max(3, p1_range[0]), p1_range[1] + 1) if is_prime(p)]
    p2s = [p for p in range(max(3, p2_range[0]), p2_range[1] + 1) if is_prime(p)]
    hits = []
    for p1 in p1s:
        for p2 in p2s:
            if p2 <= p1:
                continue
            for a in range(1, alpha_max + 1):
                for b in range(1, beta_max + 1):
                    n = p1 ** (2 * a) * p2 ** (2 * b)
                    f = Factorization(n, ((p1, 2 * a), (p2, 2 * b)))
                    sig = sigma(f)
                    cfg = SearchConfig(
                        lo=n, hi=n, kset=frozenset({k}), witness_limit=witness_limit
                    )
                    hit = _classify_from_sieve(n, sig, list(f.factors), cfg)
                    if hit is not None:
                        hits.append(hit)
    hits.sort(key=lambda h: h.record.n)
    return hits


# ---------------------------------------------------------------------------
# Empirical verifiers


@dataclass
class Lemma1Report:
    bound: int
    kmax: int
    counterexamples: list[tuple[int, int]]  # (n, k) violating the parity law
    counts: dict[tuple[int, bool], int]  # (k, is_square) -> occurrences

    @property
    def passed(self) -> bool:
        return not self.counterexamples


@dataclass
class Lemma2Report:
    bound: int
    kmax: int
    hits: list[tuple[int, int]]  # (prime power n, k) with a witness
    counterexamples: list[tuple[int, int]]  # hits other than (2^a, k=1)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


@dataclass
class TheoremReport:
    bound: int
    hits: list[int]

    @property
    def passed(self) -> bool:
        expected = [1521] if self.bound >= 1521 else []
        return self.hits == expected


def verify_lemma1(
    bound: int, kmax: int, segment_size: int = DEFAULT_SEGMENT_SIZE
) -> Lemma1Report:
    """Odd n with an exact-k deficient witness must satisfy:
    n is a square iff k is odd.  Scans all odd n <= bound."""
    from math import isqrt as _isqrt

    counts: dict[tuple[int, bool], int] = {}
    bad: list[tuple[int, int]] = []
    config = SearchConfig(
        lo=1,
        hi=max(bound, 1),
        kset=frozenset(range(1, kmax + 1)),
        side=Side.DEFICIENT,
        odd_only=True,
        segment_size=segment_size,
        witness_limit=1,
    )
    for hit in search_range(config):
        n = hit.record.n
        r = _isqrt(n)
        square = r * r == n
        for k in sorted(hit.matched_k):
            counts[(k, square)] = counts.get((k, square), 0) + 1
            if square != (k % 2 == 1):
                bad.append((n, k))
    return Lemma1Report(bound, kmax, bad, counts)


def verify_lemma2(bound: int, kmax: int, prime: int | None = None) -> Lemma2Report:
    """Exact-k deficient prime powers <= bound must be n = 2^a with k = 1
    and witness {1}.  Optionally restrict to powers of one prime."""
    hits: list[tuple[int, int]] = []
    bad: list[tuple[int, int]] = []
    primes = [prime] if prime is not None else _primes_upto(bound)
    for p in primes:
        pe, a = p, 1
        while pe <= bound:
            f = Factorization(pe, ((p, a),))
            sig = sigma(f)
            target = 2 * pe - sig
            if target > 0:
                proper_desc = [p**i for i in range(a - 1, -1, -1)]
                for k in range(1, kmax + 1):
                    combos = _k_subsets_with_sum(proper_desc, k, target, 1)
                    if combos:
                        hits.append((pe, k))
                        if not (p == 2 and k == 1 and combos[0] == (1,)):
                            bad.append((pe, k))
            pe *= p
            a += 1
    return Lemma2Report(bound, kmax, hits, bad)


def verify_theorem(
    bound: int, segment_size: int = DEFAULT_SEGMENT_SIZE
) -> TheoremReport:
    """Scan odd n <= bound with omega(n) <= 2 for exactly-3-deficient
    numbers; the expected hit set is {1521}."""
    config = SearchConfig(
        lo=1,
        hi=max(bound, 1),
        kset=frozenset({3}),
        side=Side.DEFICIENT,
        odd_only=True,
        omega_max=2,
        segment_size=segment_size,
        witness_limit=1,
    )
    hits = [hit.record.n for hit in search_range(config)]
    return TheoremReport(bound, hits)
