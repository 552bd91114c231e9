import random

import pytest

from homotopybraid import artin, redfree
from homotopybraid.artin import (
    AutFn,
    AutKn,
    artin_free,
    artin_k,
    homotopy_equal,
    is_homotopy_trivial,
    verify_relations,
    weight3_report,
)
from homotopybraid.braidword import BraidWord, free_reduce, goldsmith_word, pure_gen


def random_braid(rng, n, length=None):
    pool = [k for k in range(-(n - 1), n) if k]
    length = rng.randint(0, 8) if length is None else length
    return BraidWord(tuple(rng.choice(pool) for _ in range(length)), n)


def test_artin_free_examples():
    assert artin_free(BraidWord((), 3)).is_identity()
    aut = artin_free(BraidWord((1,), 2))
    assert aut.images == ((1, 2, -1), (1,))
    inv = artin_free(BraidWord((-1,), 2))
    assert aut.then(inv).is_identity()
    assert inv.then(aut).is_identity()


def test_artin_free_goldsmith_nontrivial():
    assert not artin_free(goldsmith_word()).is_identity()


def test_artin_free_composition():
    rng = random.Random(30)
    for _ in range(100):
        n = rng.randint(2, 5)
        u, v = random_braid(rng, n), random_braid(rng, n)
        assert artin_free(u * v) == artin_free(u).then(artin_free(v))


def test_artin_free_braid_relations():
    for n in (3, 4):
        for i in range(1, n - 1):
            lhs = artin_free(BraidWord((i, i + 1, i), n))
            rhs = artin_free(BraidWord((i + 1, i, i + 1), n))
            assert lhs == rhs


def test_artin_k_examples():
    assert artin_k(BraidWord((), 3)).is_identity()
    assert artin_k(goldsmith_word()).is_identity()
    assert not artin_k(pure_gen(1, 2, 3)).is_identity()


def test_artin_k_functorial():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(2, 4)
        u, v = random_braid(rng, n, 5), random_braid(rng, n, 5)
        assert artin_k(u * v) == artin_k(u).then(artin_k(v))


def test_artin_k_factors_through_free_reduction():
    rng = random.Random(32)
    for _ in range(60):
        n = rng.randint(2, 4)
        w = random_braid(rng, n)
        assert artin_k(w) == artin_k(free_reduce(w))


def test_autkn_apply_is_homomorphism():
    rng = random.Random(33)
    for _ in range(40):
        n = rng.randint(2, 4)
        aut = artin_k(random_braid(rng, n, 5))
        g = redfree.collect([rng.choice([k for k in range(-n, n + 1) if k]) for _ in range(6)], n)
        h = redfree.collect([rng.choice([k for k in range(-n, n + 1) if k]) for _ in range(6)], n)
        assert aut.apply(redfree.multiply(g, h)) == redfree.multiply(aut.apply(g), aut.apply(h))


def test_homotopy_triviality():
    assert is_homotopy_trivial(goldsmith_word())
    assert not is_homotopy_trivial(BraidWord((1,), 3))
    assert not is_homotopy_trivial(pure_gen(1, 2, 3))


def test_homotopy_equal():
    g = goldsmith_word()
    assert homotopy_equal(g, BraidWord((), 3))
    assert homotopy_equal(g, g)
    assert not homotopy_equal(BraidWord((1,), 3), BraidWord((2,), 3))
    with pytest.raises(ValueError):
        homotopy_equal(BraidWord((1,), 3), BraidWord((1,), 4))


def test_homotopy_equal_consistent_with_htrivial():
    rng = random.Random(34)
    for _ in range(25):
        u, v = random_braid(rng, 3, 5), random_braid(rng, 3, 5)
        assert homotopy_equal(u, v) == is_homotopy_trivial(u * v.inverse())


def test_verify_relations_small():
    for n in (2, 3, 4):
        report = verify_relations(n)
        assert report, f"empty report for n={n}"
        failures = [row for row in report if not row["pass"]]
        assert not failures, failures


def test_verify_relations_n2_vacuous_braid():
    report = verify_relations(2)
    assert all(row["relation"] != "braid" for row in report)
    adjacent = [row for row in report if row["relation"] == "action-adjacent"]
    assert len(adjacent) == 1 and adjacent[0]["pass"]


def test_weight3_report():
    report = weight3_report()
    assert len(report) == 8
    assert all(row["pass"] for row in report)
    trivial = [row for row in report if row["expected_trivial"]]
    assert len(trivial) == 6


def test_embedding_detects_nontrivial_commutator():
    aut = artin.embedded_commutator_aut(((2, 1), 3))
    assert not aut.is_identity()
    aut_trivial = artin.embedded_commutator_aut(((2, 1), 2))
    assert aut_trivial.is_identity()


def test_rank_mismatch_errors():
    with pytest.raises(ValueError):
        AutFn.identity(2).then(AutFn.identity(3))
    with pytest.raises(ValueError):
        AutKn.identity(2).then(AutKn.identity(3))
    with pytest.raises(ValueError):
        AutKn.identity(2).apply(redfree.identity(3))
