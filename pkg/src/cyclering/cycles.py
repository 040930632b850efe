"""Permutation digraphs as cycle multisets, and their semiring operations.

A permutation digraph is determined up to isomorphism by how many cycles
of each length it has, so a :class:`CycleSet` stores exactly that: sorted
``(length, count)`` pairs with no zero counts.  ``C(n, p)`` builds the
disjoint union of ``n`` cycles of length ``p``.

Sum is disjoint union.  Product is the direct (tensor) product, which on
two single cycles gives ``gcd(p1, p2)`` cycles of length ``lcm(p1, p2)``.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator
from math import gcd

from .arith import BudgetExceededError, checked, lcm

__all__ = [
    "CycleSet",
    "C",
    "ZERO",
    "ONE",
    "normalize",
    "add",
    "mul",
    "power",
    "explicit_product_oracle",
    "DEFAULT_ORACLE_BOUND",
]

DEFAULT_ORACLE_BOUND = 10**6
ORACLE_BOUND_ENV = "CYCLERING_ORACLE_BOUND"


class CycleSet:
    """Immutable canonical multiset of cycles.

    Build one with :func:`normalize`, :func:`C`, or the arithmetic
    operators; the constructor trusts that its argument is canonical.
    """

    __slots__ = ("_entries", "_hash")

    def __init__(self, entries: tuple[tuple[int, int], ...] = ()):
        self._entries = entries
        self._hash = None

    @property
    def entries(self) -> tuple[tuple[int, int], ...]:
        return self._entries

    @property
    def total_states(self) -> int:
        return sum(length * count for length, count in self._entries)

    @property
    def is_zero(self) -> bool:
        return not self._entries

    def count(self, length: int) -> int:
        for l, c in self._entries:
            if l == length:
                return c
        return 0

    def lengths(self) -> list[int]:
        return [l for l, _ in self._entries]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, CycleSet):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._entries)
        return self._hash

    def __add__(self, other: CycleSet) -> CycleSet:
        return add(self, other)

    def __mul__(self, other: CycleSet) -> CycleSet:
        return mul(self, other)

    def __pow__(self, w: int) -> CycleSet:
        return power(self, w)

    def __str__(self) -> str:
        if not self._entries:
            return "0"
        return "+".join(f"C({c},{l})" for l, c in self._entries)

    def __repr__(self) -> str:
        return f"CycleSet({str(self)!r})"


def normalize(raw: Iterable[tuple[int, int]]) -> CycleSet:
    """Merge duplicate lengths, drop zero counts, sort by length."""
    merged: dict[int, int] = {}
    for length, count in raw:
        if length < 1:
            raise ValueError(f"cycle length must be positive, got {length}")
        if count < 0:
            raise ValueError(f"cycle count must be nonnegative, got {count}")
        if count:
            merged[length] = checked(merged.get(length, 0) + count, "cycle count")
    entries = tuple(sorted(merged.items()))
    checked(sum(l * c for l, c in entries), "total state count")
    return CycleSet(entries)


def C(count: int, length: int) -> CycleSet:
    """``count`` disjoint cycles of length ``length``."""
    return normalize([(length, count)])


ZERO = CycleSet()
ONE = CycleSet(((1, 1),))


def add(a: CycleSet, b: CycleSet) -> CycleSet:
    return normalize(list(a.entries) + list(b.entries))


def mul(a: CycleSet, b: CycleSet) -> CycleSet:
    terms = []
    for p1, n1 in a.entries:
        for p2, n2 in b.entries:
            # n1*n2*p1*p2/lcm == n1*n2*gcd
            terms.append((lcm(p1, p2), checked(n1 * n2 * gcd(p1, p2), "cycle count")))
    return normalize(terms)


def power(a: CycleSet, w: int) -> CycleSet:
    if w < 0:
        raise ValueError(f"exponent must be nonnegative, got {w}")
    result = ONE
    for _ in range(w):
        result = mul(result, a)
    return result


def _successors(a: CycleSet) -> list[int]:
    succ = []
    for length, count in a.entries:
        for _ in range(count):
            base = len(succ)
            succ.extend(base + (i + 1) % length for i in range(length))
    return succ


def _oracle_bound() -> int:
    raw = os.environ.get(ORACLE_BOUND_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_BOUND


def explicit_product_oracle(a: CycleSet, b: CycleSet, bound: int | None = None) -> CycleSet:
    """Cycle type of the direct product, computed on explicit vertices.

    Builds the successor maps of both digraphs, forms the product map on
    vertex pairs and walks its cycles.  Independent of :func:`mul`; used to
    check it.  ``bound`` caps the number of product vertices (default from
    ``CYCLERING_ORACLE_BOUND`` or 10**6).
    """
    if bound is None:
        bound = _oracle_bound()
    na, nb = a.total_states, b.total_states
    if na * nb > bound:
        raise BudgetExceededError(f"product has {na * nb} vertices, oracle bound is {bound}")
    sa, sb = _successors(a), _successors(b)
    seen = bytearray(na * nb)
    found: dict[int, int] = {}
    for start in range(na * nb):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = 1
            length += 1
            u, w = divmod(v, nb)
            v = sa[u] * nb + sb[w]
        found[length] = found.get(length, 0) + 1
    return normalize(found.items())

