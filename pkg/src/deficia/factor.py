"""Exact integer factorization and multiplicative-function evaluation.

Everything here works on arbitrary-precision Python ints; no floating
point is used anywhere.  Factorization combines trial division by a
precomputed wheel of small primes with Brent-cycle rho for the leftover
cofactor, using a deterministic Miller-Rabin test that is exact for all
inputs below 3.3 * 10**24.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, prod

__all__ = [
    "Factorization",
    "DivisorCapError",
    "factorize",
    "sigma",
    "omega",
    "tau",
    "divisor_list",
    "is_perfect_square",
    "is_prime",
]

DEFAULT_DIVISOR_CAP = 10**6

# Trial-division primes.  1000 is enough to make rho's job easy at desk
# scale (remaining factors are > 10^3, so rho needs ~ p^(1/4) < 40 steps
# for anything below 10^12).
_TRIAL_LIMIT = 1000


def _small_primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(limit + 1) if sieve[i]]


SMALL_PRIMES = _small_primes(_TRIAL_LIMIT)

# Deterministic Miller-Rabin witness set, exact for n < 3.317e24
# (Sorenson & Webster), which comfortably covers 64-bit-squared scale.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class DivisorCapError(ValueError):
    """Raised when a divisor enumeration would exceed its configured cap."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in SMALL_PRIMES[:12]:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Return a nontrivial factor of composite odd n (deterministic in n)."""
    if n % 2 == 0:
        return 2
    # Seed parameters from n so repeated runs are reproducible.
    y0 = n % 2731 + 2
    for c in range(1 + n % 97, 1 + n % 97 + 100):
        y, r, q = y0, 1, 1
        g, x, ys = 1, y0, y0
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # pragma: no cover


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition: primes strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"positive integer required, got {self.n}")
        last = 1
        for p, a in self.factors:
            if p <= last or a < 1 or not is_prime(p):
                raise ValueError(f"invalid factor list for {self.n}: {self.factors}")
            last = p
        if prod(p**a for p, a in self.factors) != self.n:
            raise ValueError(f"factor list does not multiply back to {self.n}")


def factorize(n: int) -> Factorization:
    """Canonical factorization of n >= 1 (deterministic)."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    m = n
    found: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        root = isqrt(m)
        if root * root == m:
            stack.extend((root, root))
            continue
        d = _brent_rho(m)
        stack.extend((d, m // d))
    return Factorization(n, tuple(sorted(found.items())))


def _as_factorization(f: Factorization | int) -> Factorization:
    return f if isinstance(f, Factorization) else factorize(f)


def sigma(f: Factorization | int) -> int:
    """Sum of all divisors, computed multiplicatively and exactly."""
    f = _as_factorization(f)
    return prod((p ** (a + 1) - 1) // (p - 1) for p, a in f.factors)


def omega(f: Factorization | int) -> int:
    """Number of distinct prime factors."""
    return len(_as_factorization(f).factors)


def tau(f: Factorization | int) -> int:
    """Number of divisors."""
    return prod(a + 1 for _, a in _as_factorization(f).factors)


def divisor_list(f: Factorization | int, cap: int = DEFAULT_DIVISOR_CAP) -> list[int]:
    """All divisors of n in increasing order, including 1 and n."""
    f = _as_factorization(f)
    count = tau(f)
    if count > cap:
        raise DivisorCapError(f"{f.n} has {count} divisors, exceeding cap {cap}")
    divs = [1]
    for p, a in f.factors:
        powers = [p**i for i in range(1, a + 1)]
        divs += [d * q for q in powers for d in divs]
    divs.sort()
    return divs


def is_perfect_square(n: int) -> bool:
    if n < 0:
        raise ValueError(f"nonnegative integer required, got {n}")
    r = isqrt(n)
    return r * r == n
