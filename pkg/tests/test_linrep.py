import random

import pytest

from homotopybraid import redfree
from homotopybraid.linrep import (
    IDENTITY3,
    is_unitriangular,
    k2_eval_word,
    k2_oracle_equals,
    k2_recover,
    k2_rep,
    mat_mul,
    unitriangular,
)


def test_generator_images():
    assert k2_rep(1, 1, (1, 0, 0)) == unitriangular(1, 0, 0)
    assert k2_rep(2, 5, (0, 1, 0)) == unitriangular(0, 5, 0)
    # [x1, x2] maps to the elementary matrix with ab in the corner
    assert k2_rep(2, 3, (0, 0, 1)) == unitriangular(0, 0, 6)
    assert k2_rep(4, 7, (1, 1, 0)) == unitriangular(4, 7, 28)


def test_commutator_matrix_from_products():
    a, b = 2, -3
    A = k2_eval_word([1], a, b)
    B = k2_eval_word([2], a, b)
    C = k2_eval_word([-1, -2, 1, 2], a, b)
    assert C == unitriangular(0, 0, a * b)
    assert mat_mul(A, B) != mat_mul(B, A)


def test_zero_parameters_rejected():
    with pytest.raises(ValueError):
        k2_rep(0, 1, (1, 0, 0))
    with pytest.raises(ValueError):
        k2_eval_word([1], 1, 0)


def test_homomorphism_against_collection():
    rng = random.Random(20)
    for _ in range(150):
        u = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 8))]
        v = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 8))]
        g = redfree.collect(u, 2)
        h = redfree.collect(v, 2)
        gh = redfree.multiply(g, h)
        a, b = 3, 2
        assert k2_rep(a, b, gh.exponents) == mat_mul(
            k2_rep(a, b, g.exponents), k2_rep(a, b, h.exponents)
        )
        assert k2_rep(a, b, g.exponents) == k2_eval_word(u, a, b)


def test_faithfulness_and_recovery():
    rng = random.Random(21)
    seen = set()
    for _ in range(200):
        exps = tuple(rng.randint(-6, 6) for _ in range(3))
        m = k2_rep(2, -5, exps)
        assert is_unitriangular(m)
        assert k2_recover(2, -5, m) == exps
        seen.add(m)
    # distinct exponent vectors give distinct matrices (injectivity sampling)
    assert len(seen) > 150


def test_oracle_examples():
    assert not k2_oracle_equals([1, 2], [2, 1])
    assert k2_oracle_equals([1, 2, -1, -2], [-1, -2, 1, 2])  # [x1^-1,x2^-1] = [x1,x2]
    assert k2_oracle_equals([1, -1], [])
    w = [1, 2, -1, 2, 1]
    assert k2_oracle_equals(w, w)


def test_word_evaluation_identity():
    assert k2_eval_word([]) == IDENTITY3
    with pytest.raises(ValueError):
        k2_eval_word([3])
