"""Solutions of ``C(1,p) * X = C(n,q)`` through feasible divisors.

A cycle of length ``t`` in ``X`` contributes ``gcd(p, t)`` cycles of length
``lcm(p, t)``.  To land on length ``q`` we need ``lcm(p, t) = q``, and then
``r = gcd(p, t)`` and ``t = (q/p) * r``.  The divisors ``r`` for which this
works are the feasible divisors.  A solution is a choice of how many cycles
to take for each one, with the ``r``-weighted total equal to ``n``.  That
makes existence a numerical-semigroup membership question, and the
solutions are the partitions of ``n`` into feasible divisors.
"""

from __future__ import annotations

import heapq
import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .arith import BudgetExceededError, divisors, lcm
from .cycles import CycleSet, C, mul, normalize
from .decide import DecisionReport, Refutation

__all__ = [
    "FeasibleDivisorSet",
    "feasible_divisors",
    "representable",
    "representation",
    "decide_by_enumeration",
    "enumerate_solutions",
    "enumerate_sequences",
    "count_solutions",
    "decide_sum_lhs",
    "COUNT_BUDGET",
]

COUNT_BUDGET = 10**7


@dataclass(frozen=True)
class FeasibleDivisorSet:
    p: int
    q: int
    divisors: tuple[int, ...]
    """Feasible divisors in strictly decreasing order."""
    derived_lengths: tuple[int, ...]
    """Cycle length ``(q/p) * r`` for each divisor ``r``."""

    def cycle_length(self, r: int) -> int:
        return self.q // self.p * r


@lru_cache(maxsize=4096)
def feasible_divisors(p: int, q: int) -> FeasibleDivisorSet:
    """Divisors ``r`` of ``q`` such that ``C(1,p) * C(1,(q/p)*r) = C(r,q)``."""
    if p < 1 or q < 1 or q % p:
        raise ValueError(f"feasible divisors need p | q, got p={p}, q={q}")
    k = q // p
    found = [r for r in divisors(q)
             if gcd(p, k * r) == r and lcm(p, k * r) == q]
    found.reverse()
    return FeasibleDivisorSet(p, q, tuple(found), tuple(k * r for r in found))


@lru_cache(maxsize=4096)
def _residue_table(gens: tuple[int, ...]) -> tuple[int, list[int], list[int]]:
    """Shortest-path table over residues modulo the smallest generator.

    ``dist[r]`` is the least representable number congruent to ``r``;
    ``last[r]`` is the generator used on the final step of that path.
    Unreachable residues have ``dist = -1``.
    """
    a = gens[0]
    dist = [-1] * a
    last = [0] * a
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for g in gens[1:]:
            nd = d + g
            nr = nd % a
            if dist[nr] == -1 or nd < dist[nr]:
                dist[nr] = nd
                last[nr] = g
                heapq.heappush(heap, (nd, nr))
    return a, dist, last


def _reduce(gens, n: int) -> tuple[tuple[int, ...], int, int] | None:
    gens = sorted(set(gens))
    if not gens:
        return None
    if gens[0] < 1:
        raise ValueError("generators must be positive")
    g = math.gcd(*gens)
    if n % g:
        return None
    return tuple(x // g for x in gens), n // g, g


def representable(gens, n: int) -> bool:
    """Whether ``n`` is a nonnegative integer combination of ``gens``.

    Uses a residue table modulo the smallest generator (after dividing out
    the common gcd), so ``n`` itself may be arbitrarily large.
    """
    if n < 0:
        return False
    if n == 0:
        return True
    reduced = _reduce(gens, n)
    if reduced is None:
        return False
    gens, n, _ = reduced
    if gens[0] == 1:
        return True
    a, dist, _ = _residue_table(gens)
    d = dist[n % a]
    return d != -1 and d <= n


def representation(gens, n: int) -> dict[int, int] | None:
    """One way of writing ``n`` over ``gens`` as ``{generator: multiplicity}``."""
    if n < 0:
        return None
    if n == 0:
        return {}
    reduced = _reduce(gens, n)
    if reduced is None:
        return None
    red, m, g = reduced
    if red[0] == 1:
        return {g: m}
    a, dist, last = _residue_table(red)
    r = m % a
    if dist[r] == -1 or dist[r] > m:
        return None
    counts: dict[int, int] = {}
    rest = m
    while r:
        step = last[r]
        counts[step * g] = counts.get(step * g, 0) + 1
        rest -= step
        r = (r - step) % a
    if rest:
        counts[red[0] * g] = counts.get(red[0] * g, 0) + rest // red[0]
    return counts


def decide_by_enumeration(p: int, q: int, n: int) -> bool:
    """Solvability via feasible divisors and semigroup membership."""
    if min(p, q, n) < 1:
        raise ValueError("p, q, n must be positive")
    if q % p:
        return False
    return representable(feasible_divisors(p, q).divisors, n)


def enumerate_sequences(parts: tuple[int, ...], n: int) -> Iterator[list[int]]:
    """Multiplicity vectors ``y`` with ``sum(parts[i] * y[i]) == n``.

    ``parts`` must be strictly decreasing.  Vectors come out in
    lexicographically decreasing order of the expanded non-increasing part
    sequence.  Branches that cannot reach ``n`` are pruned, so every descent
    ends in a solution.
    """
    k = len(parts)
    if k == 0:
        if n == 0:
            yield []
        return
    suffixes = [parts[i:] for i in range(k)] + [()]

    def can(i: int, r: int) -> bool:
        return r == 0 if i == k else representable(suffixes[i], r)

    if not can(0, n):
        return
    ys = [0] * k
    rem = [0] * k
    rem[0] = n
    ys[0] = n // parts[0] + 1
    i = 0
    while i >= 0:
        y = ys[i] - 1
        while y >= 0 and not can(i + 1, rem[i] - y * parts[i]):
            y -= 1
        ys[i] = y
        if y < 0:
            i -= 1
            continue
        r = rem[i] - y * parts[i]
        if r == 0:
            yield ys[: i + 1] + [0] * (k - i - 1)
            continue
        i += 1
        rem[i] = r
        ys[i] = r // parts[i] + 1


def enumerate_solutions(p: int, q: int, n: int, limit: int | None = None) -> Iterator[CycleSet]:
    """Lazily yield every solution ``X`` of ``C(1,p) * X = C(n,q)`` once.

    Order: lexicographically decreasing non-increasing divisor sequences,
    so for ``(4, 12, 12)`` the first solution is ``C(3,12)`` and the last
    ``C(12,3)``.
    """
    if min(p, q, n) < 1:
        raise ValueError("p, q, n must be positive")
    if q % p or (limit is not None and limit <= 0):
        return
    fds = feasible_divisors(p, q)
    rhs = C(n, q)
    emitted = 0
    for ys in enumerate_sequences(fds.divisors, n):
        x = normalize(zip(fds.derived_lengths, ys))
        assert mul(C(1, p), x) == rhs, f"bad solution {x}"
        yield x
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def count_solutions(p: int, q: int, n: int, budget: int = COUNT_BUDGET) -> int:
    """Number of solutions, by coin-change counting over feasible divisors."""
    if min(p, q, n) < 1:
        raise ValueError("p, q, n must be positive")
    if q % p:
        return 0
    parts = feasible_divisors(p, q).divisors
    g = math.gcd(*parts)
    if n % g:
        return 0
    target = n // g
    if target > budget:
        raise BudgetExceededError(f"counting up to {target} exceeds the budget {budget}")
    ways = [0] * (target + 1)
    ways[0] = 1
    for d in parts:
        d //= g
        for v in range(d, target + 1):
            ways[v] += ways[v - d]
    return ways[target]


def decide_sum_lhs(monomials: list[tuple[int, int]], q: int, n: int) -> DecisionReport:
    """Decide ``sum C(m_i,p_i) * X = C(n,q)`` exactly, with a witness.

    Only cycle lengths ``t | q`` with ``lcm(p_i, t) = q`` for every ``i``
    may occur in ``X``.  Each such cycle adds ``sum(m_i * gcd(p_i, t))``
    cycles of length ``q``, so solvability is membership of ``n`` in the
    semigroup generated by those weights.
    """
    if not monomials:
        raise ValueError("at least one monomial is required")
    if min(q, n) < 1 or any(m < 1 or p < 1 for m, p in monomials):
        raise ValueError("q, n and every monomial entry must be positive")
    if any(q % p for _, p in monomials):
        return DecisionReport(False, refutation=Refutation.NOT_DIVISIBLE,
                              reason="some p_i does not divide q")
    by_weight: dict[int, int] = {}
    for t in divisors(q):
        if all(lcm(p, t) == q for _, p in monomials):
            w = sum(m * gcd(p, t) for m, p in monomials)
            by_weight.setdefault(w, t)
    counts = representation(by_weight, n)
    if counts is None:
        return DecisionReport(False, refutation=Refutation.WEIGHT_FAILS,
                              reason=f"{n} is not a sum of weights {sorted(by_weight)}",
                              extra={"weights": sorted(by_weight)})
    witness = normalize((by_weight[w], y) for w, y in counts.items())
    lhs = normalize((p, m) for m, p in monomials)
    assert mul(lhs, witness) == C(n, q), f"bad witness {witness}"
    return DecisionReport(True, witness=witness, extra={"weights": sorted(by_weight)})
