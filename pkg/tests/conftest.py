"""Shared helpers for the test suite: seeded samplers and comparison utilities."""

import math

import numpy as np

# Angle grids used across the suite. GRID6 stresses both limits; GRID8_OPEN
# stays strictly below pi/4 for the operations that require it.
GRID6 = (0.0, math.pi / 16, math.pi / 8, 3 * math.pi / 16, math.pi / 4 - 1e-3, math.pi / 4)
GRID8_OPEN = tuple(j * math.pi / 32 for j in range(8))


def rel_close(a, b, tol):
    """|a - b| <= tol * (1 + max magnitude), the comparator used throughout."""
    return abs(a - b) <= tol * (1.0 + max(abs(a), abs(b)))


def random_generic_matrix(rng):
    """Entries uniform over the square [-1, 1] x [-1, 1]i, resampled until generic."""
    while True:
        m = rng.uniform(-1, 1, (2, 2)) + 1j * rng.uniform(-1, 1, (2, 2))
        norms = np.sqrt(np.sum(np.abs(m) ** 2, axis=0))
        if norms.min() > 1e-3:
            return m


def random_unit_column_matrix(rng):
    """Random generic matrix with both columns normalized."""
    m = random_generic_matrix(rng)
    return m / np.sqrt(np.sum(np.abs(m) ** 2, axis=0))


def match_sets(left, right, tol):
    """Greedy matching of two complex collections within tol; True when bijective."""
    right = list(right)
    if len(left) != len(right):
        return False
    for value in left:
        hits = [i for i, other in enumerate(right) if abs(value - other) <= tol]
        if not hits:
            return False
        right.pop(hits[0])
    return True
