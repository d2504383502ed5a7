"""Independent reference computations shared by the tests."""

from itertools import combinations_with_replacement

# Positive roots in simple-root coordinates, written out by hand.
ROOTS = {
    "A2": [(1, 0), (0, 1), (1, 1)],
    "B2": [(1, 0), (0, 1), (1, 1), (1, 2)],
    "C2": [(1, 0), (0, 1), (1, 1), (2, 1)],
    "G2": [(1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3)],
}


def brute_partitions(beta, roots):
    """Count multisets of roots summing to beta by exhaustive enumeration."""
    if not any(beta):
        return 1
    total = 0
    for k in range(1, sum(beta) + 1):
        for combo in combinations_with_replacement(roots, k):
            if tuple(map(sum, zip(*combo))) == tuple(beta):
                total += 1
    return total


def clebsch_gordan(a, b):
    """Highest weights in L(a) (x) L(b) for sl2: a+b, a+b-2, ..., |a-b|."""
    return list(range(a + b, abs(a - b) - 1, -2))
