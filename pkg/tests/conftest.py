"""Shared matrices, random generators, and brute-force oracles."""

import random

import pytest

from schubertisom import CartanMatrix, IndexSet, validate_cartan


def type_a(n):
    labels = [f"s{i}" for i in range(1, n + 1)]
    entries = [
        [2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)]
        for i in range(n)
    ]
    return validate_cartan(entries, labels)


A3 = type_a(3)
A2 = type_a(2)

C3 = validate_cartan(
    [[2, -1, 0], [-1, 2, -1], [0, -2, 2]], ["s1", "s2", "s3"]
)
B3 = validate_cartan(
    [[2, -1, 0], [-1, 2, -2], [0, -1, 2]], ["s1", "s2", "s3"]
)
B2 = validate_cartan([[2, -2], [-1, 2]], ["s1", "s2"])
G2 = validate_cartan([[2, -3], [-1, 2]], ["s1", "s2"])
A1_AFFINE = validate_cartan([[2, -2], [-2, 2]], ["s1", "s2"])

# star with center s2
D4 = validate_cartan(
    [
        [2, -1, 0, 0],
        [-1, 2, -1, -1],
        [0, -1, 2, 0],
        [0, -1, 0, 2],
    ],
    ["s1", "s2", "s3", "s4"],
)

# star with center s0 and four leaves
D4_AFFINE = validate_cartan(
    [
        [2, -1, -1, -1, -1],
        [-1, 2, 0, 0, 0],
        [-1, 0, 2, 0, 0],
        [-1, 0, 0, 2, 0],
        [-1, 0, 0, 0, 2],
    ],
    ["s0", "s1", "s2", "s3", "s4"],
)


def random_cartan(rng, max_rank=4, min_entry=-3):
    """A random valid Cartan matrix with entries in [min_entry, 0]."""
    n = rng.randint(2, max_rank)
    labels = [f"s{i}" for i in range(1, n + 1)]
    entries = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.6:
                entries[i][j] = rng.randint(min_entry, -1)
                entries[j][i] = rng.randint(min_entry, -1)
    return validate_cartan(entries, labels)


def random_word(rng, A, max_len=8):
    return tuple(rng.choice(A.labels) for _ in range(rng.randint(0, max_len)))


@pytest.fixture
def rng():
    return random.Random(20260824)
