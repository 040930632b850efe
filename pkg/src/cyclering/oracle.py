"""Exhaustive cross-checks between the deciders and their oracles."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cycles import C, mul
from .decide import deep_decide, theorem_characterization
from .enumeration import decide_by_enumeration


def scaled_reachable(m: int, p: int, q: int, n_max: int) -> list[bool]:
    """Brute force for ``C(m,p) * X = C(n,q)``: ``reachable[n]`` for ``n <= n_max``.

    Every cycle length ``t <= q`` is tried as a building block by actually
    multiplying ``C(m,p) * C(1,t)``; blocks that produce only length-``q``
    cycles are combined by unbounded knapsack.  Longer cycles cannot help
    since ``lcm(p, t) >= t``.
    """
    weights = set()
    for t in range(1, q + 1):
        prod = mul(C(m, p), C(1, t))
        if len(prod) == 1 and prod.entries[0][0] == q:
            weights.add(prod.entries[0][1])
    reach = [False] * (n_max + 1)
    reach[0] = True
    for w in sorted(weights):
        for v in range(w, n_max + 1):
            if reach[v - w]:
                reach[v] = True
    return reach


@dataclass
class GridResult:
    triples: int = 0
    solvable: int = 0
    disagreements: list = field(default_factory=list)
    max_gcd_ratio: float = 0.0
    gcd_bound_violations: list = field(default_factory=list)

    def merge(self, other: GridResult) -> GridResult:
        self.triples += other.triples
        self.solvable += other.solvable
        self.disagreements += other.disagreements
        self.max_gcd_ratio = max(self.max_gcd_ratio, other.max_gcd_ratio)
        self.gcd_bound_violations += other.gcd_bound_violations
        return self


def gcd_call_bound(p: int, q: int, c: int = 4) -> float:
    return c * (math.log2(p) + 1) * (math.log2(q) + 1)


def _check_rows(args) -> GridResult:
    ps, q_max, n_max = args
    res = GridResult()
    for p in ps:
        for q in range(1, q_max + 1):
            bound = gcd_call_bound(p, q)
            for n in range(1, n_max + 1):
                report = deep_decide(p, q, n)
                a = report.verdict
                b = theorem_characterization(p, q, n)
                c = decide_by_enumeration(p, q, n)
                res.triples += 1
                res.solvable += a
                if not a == b == c:
                    res.disagreements.append((p, q, n, a, b, c))
                ratio = report.gcd_calls / bound
                res.max_gcd_ratio = max(res.max_gcd_ratio, ratio)
                if ratio > 1:
                    res.gcd_bound_violations.append((p, q, n, report.gcd_calls))
    return res


def grid_check(p_max: int, n_max: int, q_max: int | None = None, workers: int = 1) -> GridResult:
    """Three-way agreement of the gcd decider, the factorization oracle and
    the divisor decider on every ``(p, q, n)`` in the grid.

    Rows of ``p`` are dealt round-robin to ``workers`` processes.
    """
    q_max = p_max if q_max is None else q_max
    workers = max(1, workers)
    chunks = [(list(range(1 + w, p_max + 1, workers)), q_max, n_max) for w in range(workers)]
    if workers == 1:
        return _check_rows(chunks[0])
    total = GridResult()
    with ProcessPoolExecutor(workers) as pool:
        for part in pool.map(_check_rows, chunks):
            total.merge(part)
    return total
