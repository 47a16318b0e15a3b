"""Slow independent reference implementations used by the tests."""

from fractions import Fraction
from itertools import combinations, permutations


def det_leibniz(m):
    n = len(m)
    total = Fraction(0)
    for p in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    sign = -sign
        prod = Fraction(1)
        for i in range(n):
            prod *= m[i][p[i]]
        total += sign * prod
    return total


def rank_by_minors(m):
    """Largest k with a nonzero k x k minor."""
    rows, cols = len(m), len(m[0]) if m else 0
    for k in range(min(rows, cols), 0, -1):
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                if det_leibniz([[m[i][j] for j in c] for i in r]) != 0:
                    return k
    return 0
