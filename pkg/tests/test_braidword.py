import json
import random

import pytest

from homotopybraid.braidword import (
    BraidWord,
    Permutation,
    free_reduce,
    goldsmith_word,
    parse,
    permutation,
    pure_gen,
)

GOLDSMITH_LETTERS = (1, 2, 2, 1, 1, -2, -2, -1, -1, 2, 2, -1, -1, -2, -2, 1)


def brute_permutation(letters, n):
    """Independent oracle: compose transpositions on a list, first letter first."""
    images = list(range(1, n + 1))
    for k in letters:
        i = abs(k)
        # post-compose with (i, i+1): replace every image i <-> i+1
        images = [i + 1 if x == i else i if x == i + 1 else x for x in images]
    return tuple(images)


def test_parse_tokens():
    assert parse("s1 s2^-1", 3).letters == (1, -2)
    assert parse("", 3).letters == ()
    assert parse("-1 2", 3).letters == (-1, 2)
    assert parse("[1, -2]", 3).letters == (1, -2)
    assert parse("s1^3", 4).letters == (1, 1, 1)


def test_parse_goldsmith_text():
    text = "s1 s2^2 s1^2 s2^-2 s1^-2 s2^2 s1^-2 s2^-2 s1"
    assert parse(text, 3).letters == GOLDSMITH_LETTERS
    assert goldsmith_word().letters == GOLDSMITH_LETTERS


def test_parse_errors():
    with pytest.raises(ValueError):
        parse("s3", 3)  # generator out of range for 3 strands
    with pytest.raises(ValueError):
        parse("x1", 3)
    with pytest.raises(ValueError):
        parse("[1, \"a\"]", 3)
    with pytest.raises(ValueError):
        BraidWord((0,), 3)


def test_free_reduce():
    assert free_reduce(BraidWord((1, -1), 3)).letters == ()
    assert free_reduce(BraidWord((1, 2, -2, -1), 3)).letters == ()
    assert free_reduce(BraidWord((1, 2, 1), 3)).letters == (1, 2, 1)


def test_free_reduce_idempotent():
    rng = random.Random(0)
    for _ in range(200):
        w = BraidWord(tuple(rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(0, 12))), 3)
        once = free_reduce(w)
        assert free_reduce(once) == once


def test_permutation_examples():
    assert permutation(BraidWord((1,), 3)).images == (2, 1, 3)
    assert permutation(BraidWord((), 3)).is_identity()
    # Goldsmith word: 16 transpositions composed by the independent oracle.
    assert brute_permutation(GOLDSMITH_LETTERS, 3) == (1, 2, 3)
    assert permutation(goldsmith_word()).is_identity()


def test_permutation_homomorphism():
    rng = random.Random(1)
    for _ in range(150):
        n = rng.randint(2, 5)
        pool = [k for k in range(-(n - 1), n) if k]
        u = BraidWord(tuple(rng.choice(pool) for _ in range(rng.randint(0, 8))), n)
        v = BraidWord(tuple(rng.choice(pool) for _ in range(rng.randint(0, 8))), n)
        assert permutation(u * v) == permutation(u).then(permutation(v))
        assert permutation(u).images == brute_permutation(u.letters, n)


def test_free_reduce_preserves_permutation():
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(2, 5)
        pool = [k for k in range(-(n - 1), n) if k]
        w = BraidWord(tuple(rng.choice(pool) for _ in range(rng.randint(0, 10))), n)
        assert permutation(free_reduce(w)) == permutation(w)


def test_pure_gen_examples():
    assert pure_gen(1, 2, 3).letters == (1, 1)
    assert pure_gen(1, 3, 3).letters == (2, 1, 1, -2)
    assert pure_gen(2, 4, 4).letters == (3, 2, 2, -3)
    with pytest.raises(ValueError):
        pure_gen(2, 2, 3)
    with pytest.raises(ValueError):
        pure_gen(1, 4, 3)


def test_pure_gen_is_pure():
    for n in range(2, 8):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                assert permutation(pure_gen(i, j, n)).is_identity()


def test_strand_mismatch_is_error():
    with pytest.raises(ValueError):
        BraidWord((1,), 3) * BraidWord((1,), 4)


def test_inverse_and_power():
    w = BraidWord((1, 2, -1), 3)
    assert free_reduce(w * w.inverse()).letters == ()
    assert (w ** 2).letters == w.letters * 2
    assert (w ** -1).letters == w.inverse().letters


def test_json_roundtrip():
    w = BraidWord((1, -2, 1), 3)
    assert json.loads(w.to_json()) == [1, -2, 1]
    assert parse(w.to_json(), 3) == w


def test_permutation_type():
    p = Permutation.transposition(1, 2, 3)
    assert p.then(p).is_identity()
    assert p.inverse() == p
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
