"""Shared fixtures for exercising the exact-matrix layer."""

import random

from deltasynth.linalg import ExactMatrix, word_matrix
from deltasynth.oracle import op_alphabet as alphabet
from deltasynth.ring import D_INV_SQRT2, D_ONE, D_ZERO, DOmega, ZW_OMEGA

H_EXACT = ExactMatrix([
    [D_INV_SQRT2, D_INV_SQRT2],
    [D_INV_SQRT2, -D_INV_SQRT2],
])
T_EXACT = ExactMatrix([
    [D_ONE, D_ZERO],
    [D_ZERO, DOmega(ZW_OMEGA, 0)],
])


def random_word(dim, length, rng):
    ops = alphabet(dim)
    return [rng.choice(ops) for _ in range(length)]


def random_word_matrix(dim, length, seed):
    return word_matrix(random_word(dim, length, random.Random(seed)), dim)
