"""Brute-force combinatorial oracles, independent of the library under test.

Everything here is computed by direct enumeration or direct fraction
summation: set partitions for second-kind Stirling and Bell values,
ordered set partitions for Fubini values, permutation cycle counts for
unsigned first-kind values, and plain partial sums for harmonic numbers.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def set_partitions(n: int):
    """Yield all partitions of {0,...,n-1} as lists of blocks."""
    if n == 0:
        yield []
        return
    last = n - 1
    for part in set_partitions(n - 1):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [last]] + part[i + 1:]
        yield part + [[last]]


def stirling2_counts(n: int) -> dict[int, int]:
    """Number of partitions of an n-set into k blocks, for each k."""
    counts: dict[int, int] = {}
    for part in set_partitions(n):
        k = len(part)
        counts[k] = counts.get(k, 0) + 1
    return counts


def bell_number(n: int) -> int:
    return sum(stirling2_counts(n).values()) if n else 1


def ordered_partition_counts(n: int) -> dict[int, int]:
    """Number of ordered set partitions of an n-set with k blocks."""
    return {k: count * math.factorial(k) for k, count in stirling2_counts(n).items()}


def fubini_number(n: int) -> int:
    return sum(ordered_partition_counts(n).values()) if n else 1


def cycle_counts(n: int) -> dict[int, int]:
    """Number of permutations of an n-set with k cycles, by enumeration."""
    counts: dict[int, int] = {}
    for perm in itertools.permutations(range(n)):
        seen = [False] * n
        cycles = 0
        for start in range(n):
            if seen[start]:
                continue
            cycles += 1
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
        counts[cycles] = counts.get(cycles, 0) + 1
    if n == 0:
        counts[0] = 1
    return counts


def harmonic_sum(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def hyperharmonic_sum(n: int, r: int) -> Fraction:
    """Iterated partial sums of the classical harmonic numbers."""
    values = [harmonic_sum(i) for i in range(n + 1)]
    for _ in range(r - 1):
        acc = Fraction(0)
        nxt = [Fraction(0)]
        for i in range(1, n + 1):
            acc += values[i]
            nxt.append(acc)
        values = nxt
    return values[n]


def convolve(a: list[Fraction], b: list[Fraction], order: int) -> list[Fraction]:
    """Plain convolution truncated to ``order`` (series-multiplication oracle)."""
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return out
