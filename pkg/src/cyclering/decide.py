"""Factorization-free deciders for equations ``C(m,p) * X = C(n,q)`` and kin.

The core fact: ``C(1,p) * X = C(n,q)`` is solvable iff ``p | q`` and the
prime-power parts ``r^h`` of ``p`` that appear in ``q`` with a strictly
larger exponent all divide ``n``.  :func:`deep_decide` checks this with a
handful of gcd computations, never factoring anything.
:func:`theorem_characterization` checks the same condition by trial
division and serves as its oracle.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from math import gcd

from .arith import CycleOverflowError, factorize, is_prime
from .cycles import CycleSet, C, ZERO, add

__all__ = [
    "Refutation",
    "DecisionReport",
    "GcdCounter",
    "pi_f",
    "pi_e",
    "deep_decide",
    "deep_verdict",
    "theorem_characterization",
    "decide_scaled",
    "decide_scaled_paper",
    "decide_multi_target",
    "necessary_weight_condition",
    "necessary_gcd_condition",
    "solve_prime_power",
]


class Refutation(enum.Enum):
    NOT_DIVISIBLE = "NotDivisible"
    DEFICIENT_PART_FAILS = "DeficientPartFails"
    COEFFICIENT_FAILS = "CoefficientFails"
    LENGTH_NOT_PRIME_POWER = "LengthNotPrimePower"
    WEIGHT_FAILS = "WeightFails"


@dataclass(frozen=True)
class DecisionReport:
    """Verdict plus whatever certifies it.

    ``witness`` multiplies back to the right-hand side when present;
    ``refutation`` names the violated condition when the verdict is false.
    ``pi_f`` and ``e`` are the intermediates of the gcd procedure.
    """

    verdict: bool
    witness: CycleSet | None = None
    refutation: Refutation | None = None
    pi_f: int | None = None
    e: int | None = None
    gcd_calls: int | None = None
    reason: str = ""
    extra: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.verdict

    def to_record(self) -> dict:
        rec = {
            "verdict": self.verdict,
            "witness": None if self.witness is None else str(self.witness),
            "refutation": None if self.refutation is None else self.refutation.value,
            "intermediates": None if self.e is None else {"pi_f": self.pi_f, "e": self.e},
            "gcd_calls": self.gcd_calls,
            "reason": self.reason,
        }
        rec.update(self.extra)
        return rec


class GcdCounter:
    """``math.gcd`` that counts its calls."""

    __slots__ = ("calls",)

    def __init__(self):
        self.calls = 0

    def __call__(self, a: int, b: int) -> int:
        self.calls += 1
        return gcd(a, b)


def _positive(**values: int) -> None:
    for name, v in values.items():
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v!r}")


def pi_f(p: int, q: int, gcd=gcd) -> int:
    """Product of the prime-power parts of ``q`` whose prime does not divide ``p``.

    >>> pi_f(8400, 8316000)
    11
    """
    _positive(p=p, q=q)
    while True:
        g = gcd(p, q)
        if g == 1:
            return q
        p, q = g, q // g


def pi_e(p: int, q: int, gcd=gcd) -> int:
    """Product of the parts ``r^h`` of ``p`` whose prime has exponent ``> h`` in ``q``.

    Requires ``p | q``.  Squares ``q/p`` until its gcd with ``p`` stops
    growing; working modulo ``p`` keeps the numbers small.

    >>> pi_e(8400, 756000)
    1200
    """
    _positive(p=p, q=q)
    if q % p:
        raise ValueError(f"pi_e needs p | q, got p={p}, q={q}")
    d = (q // p) % p
    g = gcd(d, p)
    if g == 1 or g == p:
        return g
    while True:
        d = d * d % p
        g2 = gcd(d, p)
        if g2 == g:
            return g
        g = g2


def deep_verdict(p: int, q: int, n: int, gcd=gcd) -> bool:
    """Bare verdict of :func:`deep_decide`, without a report."""
    if gcd(p, q) != p:
        return False
    e = pi_e(p, q // pi_f(p, q, gcd), gcd)
    return gcd(e, n) == e


def deep_decide(p: int, q: int, n: int) -> DecisionReport:
    """Decide ``C(1,p) * X = C(n,q)`` in O(log p * log q) gcd steps.

    A true verdict carries the witness ``C(n/e, (q/p)*e)``: one cycle length
    whose gcd with ``p`` is exactly ``e``.  The witness is left out (with a
    reason) when it does not fit in 64 bits.
    """
    _positive(p=p, q=q, n=n)
    g = GcdCounter()
    if g(p, q) != p:
        return DecisionReport(False, refutation=Refutation.NOT_DIVISIBLE,
                              gcd_calls=g.calls, reason=f"{p} does not divide {q}")
    pf = pi_f(p, q, g)
    e = pi_e(p, q // pf, g)
    if g(e, n) != e:
        return DecisionReport(False, refutation=Refutation.DEFICIENT_PART_FAILS, pi_f=pf, e=e,
                              gcd_calls=g.calls, reason=f"e={e} does not divide n={n}")
    witness, reason = None, ""
    try:
        witness = C(n // e, q // p * e)
    except CycleOverflowError as exc:
        reason = f"witness not representable: {exc}"
    return DecisionReport(True, witness=witness, pi_f=pf, e=e, gcd_calls=g.calls, reason=reason)


def theorem_characterization(p: int, q: int, n: int) -> bool:
    """Evaluate the solvability condition directly on prime factorizations.

    Oracle for :func:`deep_decide`; factors ``p`` and ``q`` by trial
    division, so both must stay below the trial-division cap.
    """
    _positive(p=p, q=q, n=n)
    q_exp = dict(factorize(q))
    for prime, h in factorize(p):
        k = q_exp.get(prime, 0)
        if h > k:
            return False
        if h < k and n % prime**h:
            return False
    return True


def decide_scaled(m: int, p: int, q: int, n: int) -> DecisionReport:
    """Decide ``C(m,p) * X = C(n,q)``.

    ``C(m,p) * X`` is ``m`` copies of ``C(1,p) * X``, so the equation is
    solvable iff ``m | n`` and ``C(1,p) * X = C(n/m,q)`` is.
    """
    _positive(m=m, p=p, q=q, n=n)
    if n % m:
        return DecisionReport(False, refutation=Refutation.COEFFICIENT_FAILS,
                              reason=f"m={m} does not divide n={n}")
    report = deep_decide(p, q, n // m)
    if m == 1:
        return report
    return DecisionReport(report.verdict, witness=report.witness, refutation=report.refutation,
                          pi_f=report.pi_f, e=report.e, gcd_calls=report.gcd_calls,
                          reason=report.reason)


def decide_scaled_paper(m: int, p: int, q: int, n: int) -> DecisionReport:
    """The alternative criterion: ``mq/p | n`` and ``C(1,p) * X = C(np/(mq), q)``.

    Diagnostic only.  It rejects solvable instances such as
    ``C(2,2) * X = C(4,4)`` (solved by ``X = C(1,4)``).
    """
    _positive(m=m, p=p, q=q, n=n)
    if (m * q) % p or n % (m * q // p):
        return DecisionReport(False, refutation=Refutation.COEFFICIENT_FAILS,
                              reason="mq/p does not divide n")
    inner = deep_decide(p, q, n * p // (m * q))
    return DecisionReport(inner.verdict, refutation=inner.refutation, pi_f=inner.pi_f,
                          e=inner.e, gcd_calls=inner.gcd_calls, reason=inner.reason)


def decide_multi_target(m: int, p: int, targets: list[tuple[int, int]]) -> DecisionReport:
    """Decide ``C(m,p) * X = sum of C(n_i, q_i)``; ``targets`` holds ``(n_i, q_i)``.

    Each cycle of ``X`` lands on a single length, so the equation splits
    into one scaled equation per distinct target length.
    """
    if not targets:
        raise ValueError("at least one target is required")
    merged: dict[int, int] = {}
    for n_i, q_i in targets:
        _positive(n=n_i, q=q_i)
        merged[q_i] = merged.get(q_i, 0) + n_i
    witness = ZERO
    for q_i, n_i in sorted(merged.items()):
        report = decide_scaled(m, p, q_i, n_i)
        if not report.verdict:
            return DecisionReport(False, refutation=report.refutation, pi_f=report.pi_f,
                                  e=report.e,
                                  reason=f"target C({n_i},{q_i}): {report.reason}")
        if witness is not None and report.witness is not None:
            witness = add(witness, report.witness)
        else:
            witness = None
    return DecisionReport(True, witness=witness)


def necessary_weight_condition(monomials: list[tuple[int, int]], q: int, n: int) -> bool:
    """``sum(m_k * p_k)`` divides ``n * q``; false rules out a solution."""
    if not monomials:
        raise ValueError("at least one monomial is required")
    return (n * q) % sum(m * p for m, p in monomials) == 0


def necessary_gcd_condition(monomials: list[tuple[int, int]], n: int) -> bool:
    """gcd of the multiplicities ``m_k`` divides ``n``; false rules out a solution."""
    if not monomials:
        raise ValueError("at least one monomial is required")
    return n % math.gcd(*(m for m, _ in monomials)) == 0


def solve_prime_power(monomials: list[tuple[int, int]], q_prime: int, t: int,
                      n: int) -> CycleSet | None:
    """Unique solution of ``sum C(m_i,p_i) * X = C(n, q_prime**t)``, or None.

    With a prime ``q_prime`` and no ``p_i`` equal to ``q_prime**t``, every
    cycle of ``X`` must have length ``q_prime**t``.  The solution exists iff
    each ``p_i`` is a smaller power of ``q_prime`` and ``sum(m_i*p_i) | n``.
    """
    _positive(q_prime=q_prime, t=t, n=n)
    if not monomials:
        raise ValueError("at least one monomial is required")
    if not is_prime(q_prime):
        raise ValueError(f"{q_prime} is not prime")
    target = q_prime**t
    for m, p in monomials:
        _positive(m=m, p=p)
        if p == target:
            raise ValueError(f"p={p} equals q^t={target}")
    for _, p in monomials:
        while p % q_prime == 0:
            p //= q_prime
        if p != 1:
            return None
        # remaining case p == q^t_i with t_i > t is caught below
    if any(target % p for _, p in monomials):
        return None
    weight = sum(m * p for m, p in monomials)
    if n % weight:
        return None
    return C(n // weight, target)
