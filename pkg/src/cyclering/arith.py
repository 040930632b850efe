"""Integer helpers: checked 64-bit arithmetic, primality, trial division."""

from __future__ import annotations

from math import gcd, isqrt

U64_MAX = (1 << 64) - 1

#: Largest input accepted by the trial-division routines (divisor scans and
#: the factorization oracle).
TRIAL_DIVISION_CAP = 10**12


class CycleOverflowError(OverflowError):
    """A value left the unsigned 64-bit range."""


class BudgetExceededError(ValueError):
    """An exhaustive routine was asked for more work than its cap allows."""


def checked(value: int, what: str = "value") -> int:
    if value < 0 or value > U64_MAX:
        raise CycleOverflowError(f"{what} {value} does not fit in an unsigned 64-bit integer")
    return value


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


# Witness bases making Miller-Rabin deterministic below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every 64-bit input."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int, cap: int = TRIAL_DIVISION_CAP) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as (prime, exponent) pairs.

    Raises BudgetExceededError when ``n`` exceeds ``cap`` (trial division up
    to sqrt(cap) stays below 10**6 iterations for the default).
    """
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    if n > cap:
        raise BudgetExceededError(f"{n} exceeds the trial-division cap {cap}")
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def divisors(n: int, cap: int = TRIAL_DIVISION_CAP) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    if n < 1:
        raise ValueError(f"cannot list divisors of {n}")
    if n > cap:
        raise BudgetExceededError(f"{n} exceeds the divisor-scan cap {cap}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]
