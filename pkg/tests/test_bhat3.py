import json
import math
import random

import pytest

from homotopybraid import artin, bhat3, redfree
from homotopybraid.bhat3 import (
    IDENTITY,
    Bhat3Element,
    LETTER_TABLE,
    REP_MULT,
    REP_WORDS,
    conj_pure,
    conj_pure_letter,
    derive_letter_table,
    derive_rep_mult,
    from_braid_word,
    inverse,
    multiply,
    order,
    power,
    pure_inverse,
    pure_multiply,
    pure_power,
    to_aut_k3,
    to_braid_word,
)
from homotopybraid.braidword import BraidWord, commutator_word, pure_gen

A12 = pure_gen(1, 2, 3)
A13 = pure_gen(1, 3, 3)
A23 = pure_gen(2, 3, 3)
Z_WORD = commutator_word(A23, A13)  # z = [b23, b13]

B12 = (1, 0, 0, 0)
B13 = (0, 1, 0, 0)
B23 = (0, 0, 1, 0)
Z = (0, 0, 0, 1)

WORD_OF = {B12: A12, B13: A13, B23: A23, Z: Z_WORD}


def random_element(rng, bound=5):
    return Bhat3Element(
        rng.randint(-bound, bound),
        rng.randint(-bound, bound),
        rng.randint(-bound, bound),
        rng.randint(-bound, bound),
        rng.choice(bhat3.REPS),
    )


def random_braid(rng, length=None):
    length = rng.randint(0, 8) if length is None else length
    return BraidWord(tuple(rng.choice([1, -1, 2, -2]) for _ in range(length)), 3)


# -- frozen tables -----------------------------------------------------------


def test_letter_table_regenerates():
    assert derive_letter_table() == LETTER_TABLE


def test_rep_mult_regenerates():
    assert derive_rep_mult() == REP_MULT


# -- the conjugation formulas ------------------------------------------------


def test_cyclic_action_formulas():
    rng = random.Random(40)
    for _ in range(30):
        k = rng.randint(-6, 6)
        assert conj_pure(B13, k) == (0, 1, 0, k)  # b13 -> b13 z^k
        assert conj_pure(B23, k) == (0, 0, 1, -k)  # b23 -> b23 z^-k
        assert conj_pure(Z, k) == Z
        assert conj_pure(B12, k) == B12


#: (element, conjugating letter, expected image), all in pure normal form.
GENERATOR_CONJUGATION_CASES = [
    (B12, 1, B12),
    (B12, -1, B12),
    (B13, 1, (0, 0, 1, -1)),  # b13^s1 = b23 z^-1
    (B23, 1, B13),
    (B13, -1, B23),
    (B23, -1, (0, 1, 0, -1)),  # b23^(s1^-1) = b13 z^-1
    (Z, -1, (0, 0, 0, -1)),
    (Z, 1, (0, 0, 0, -1)),
    (B12, 2, (0, 1, 0, -1)),  # b12^s2 = b13 z^-1
    (B13, 2, B12),
    (B23, 2, B23),
    (B23, -2, B23),
    (B12, -2, B13),
    (B13, -2, (1, 0, 0, -1)),  # b13^(s2^-1) = b12 z^-1
    (Z, -2, (0, 0, 0, -1)),
]


@pytest.mark.parametrize("element,letter,expected", GENERATOR_CONJUGATION_CASES)
def test_generator_conjugation_table(element, letter, expected):
    assert conj_pure_letter(element, letter) == expected


@pytest.mark.parametrize("element,letter,expected", GENERATOR_CONJUGATION_CASES)
def test_generator_conjugation_via_words(element, letter, expected):
    """The same conjugations computed through the word pipeline and through
    the action on K_3: three independent routes must agree."""
    x_word = WORD_OF[element]
    sigma = BraidWord((letter,), 3)
    conj_word = sigma.inverse() * x_word * sigma
    nf = from_braid_word(conj_word)
    assert nf == Bhat3Element(*expected, "e")
    assert artin.artin_k(conj_word) == to_aut_k3(nf)


def test_cyclic_action_via_words():
    rng = random.Random(41)
    for _ in range(10):
        k = rng.randint(-3, 3)
        for element in (B13, B23, Z):
            conj_word = (A12 ** -k) * WORD_OF[element] * (A12 ** k)
            assert from_braid_word(conj_word) == Bhat3Element(
                *conj_pure(element, k), "e"
            )


def test_conj_pure_by_rep_matches_words():
    rng = random.Random(42)
    for _ in range(60):
        p = tuple(rng.randint(-4, 4) for _ in range(4))
        lam = rng.choice(bhat3.REPS)
        lam_word = BraidWord(REP_WORDS[lam], 3)
        p_word = (A12 ** p[0]) * (A13 ** p[1]) * (A23 ** p[2]) * (Z_WORD ** p[3])
        conj_word = lam_word.inverse() * p_word * lam_word
        assert from_braid_word(conj_word) == Bhat3Element(*conj_pure(p, lam), "e")


def test_conj_pure_rejects_unknown():
    with pytest.raises(ValueError):
        conj_pure(B12, "s3")


# -- pure part algebra ---------------------------------------------------------


def test_pure_algebra():
    rng = random.Random(43)
    for _ in range(150):
        p = tuple(rng.randint(-8, 8) for _ in range(4))
        q = tuple(rng.randint(-8, 8) for _ in range(4))
        r = tuple(rng.randint(-8, 8) for _ in range(4))
        assert pure_multiply(pure_multiply(p, q), r) == pure_multiply(p, pure_multiply(q, r))
        assert pure_multiply(p, pure_inverse(p)) == (0, 0, 0, 0)
        k = rng.randint(-6, 6)
        step = (0, 0, 0, 0)
        for _ in range(abs(k)):
            step = pure_multiply(step, p if k > 0 else pure_inverse(p))
        assert pure_power(p, k) == step


# -- normal form examples ------------------------------------------------------


def test_normal_form_examples():
    assert from_braid_word(BraidWord((2, 2), 3)) == Bhat3Element(0, 0, 1, 0, "e")
    assert from_braid_word(BraidWord((1,), 3)) == Bhat3Element(0, 0, 0, 0, "s1")
    s1s2 = Bhat3Element(0, 0, 0, 0, "s1s2")
    assert multiply(s1s2, s1s2) == Bhat3Element(1, 0, 0, 0, "s2s1")
    assert multiply(multiply(s1s2, s1s2), s1s2) == Bhat3Element(1, 1, 1, 0, "e")
    assert multiply(IDENTITY, s1s2) == s1s2
    assert multiply(s1s2, IDENTITY) == s1s2


def test_from_braid_word_strands_guard():
    with pytest.raises(ValueError):
        from_braid_word(BraidWord((1,), 4))


def test_from_braid_word_homomorphism():
    rng = random.Random(44)
    for _ in range(150):
        u, v = random_braid(rng), random_braid(rng)
        assert from_braid_word(u * v) == multiply(from_braid_word(u), from_braid_word(v))


def test_multiplication_associative():
    rng = random.Random(45)
    for _ in range(150):
        g, h, k = (random_element(rng) for _ in range(3))
        assert multiply(multiply(g, h), k) == multiply(g, multiply(h, k))


def test_inverse_and_power():
    rng = random.Random(46)
    for _ in range(100):
        g = random_element(rng)
        assert multiply(g, inverse(g)) == IDENTITY
        assert multiply(inverse(g), g) == IDENTITY
        assert power(g, 0) == IDENTITY
        assert power(g, 1) == g
        assert power(g, -2) == inverse(multiply(g, g))
        assert power(g, 5) == multiply(power(g, 3), power(g, 2))


def test_roundtrip_through_braid_words():
    rng = random.Random(47)
    for _ in range(60):
        g = random_element(rng, bound=3)
        assert from_braid_word(to_braid_word(g)) == g


# -- closed power forms --------------------------------------------------------


def test_square_closed_form_random():
    rng = random.Random(48)
    for _ in range(200):
        a, b, c, d = (rng.randint(-10, 10) for _ in range(4))
        g = Bhat3Element(a, b, c, d, "s2")
        expected = Bhat3Element(
            a + b, a + b, 2 * c + 1, a * c + b * (b - c + a - 1), "e"
        )
        assert multiply(g, g) == expected
        assert expected.gamma % 2 == 1  # never zero


def test_cube_closed_form_random():
    rng = random.Random(49)
    for _ in range(200):
        a, b, c, d = (rng.randint(-10, 10) for _ in range(4))
        g = Bhat3Element(a, b, c, d, "s1s2")
        s = a + b + c + 1
        z = a * (a + 2 * c - b) + b * b + c * c - b * c + 3 * d + 3 * b
        assert power(g, 3) == Bhat3Element(s, s, s, z, "e")
        if s == 0:
            # the residual z-exponent is 3(b^2+2b+d)+1, congruent to 1 mod 3
            assert z % 3 == 1


def test_order():
    assert order(IDENTITY) == 1
    assert order(Bhat3Element(0, 0, 0, 0, "s1")) == math.inf
    assert order(Bhat3Element(1, 0, 0, 0, "e")) == math.inf
    rng = random.Random(50)
    for _ in range(100):
        g = random_element(rng)
        if not g.is_identity():
            assert order(g) == math.inf


def test_torsion_certificate():
    report = bhat3.torsion_certificate()
    assert report["all_pass"]
    assert len(report["items"]) == 10


# -- bridge to Aut K_3 ---------------------------------------------------------


def test_to_aut_k3_matches_artin_on_words():
    rng = random.Random(51)
    for _ in range(25):
        w = random_braid(rng, 6)
        assert to_aut_k3(from_braid_word(w)) == artin.artin_k(w)


def test_to_aut_k3_identity_and_z():
    assert to_aut_k3(IDENTITY).is_identity()
    assert not to_aut_k3(Bhat3Element(0, 0, 0, 1, "e")).is_identity()


def test_to_aut_k3_injective_sampling():
    rng = random.Random(52)
    for _ in range(20):
        g = random_element(rng, bound=2)
        h = random_element(rng, bound=2)
        if g != h:
            assert to_aut_k3(g) != to_aut_k3(h)


# -- the U_3-hat presentation through K_2 ---------------------------------------


def test_u3hat_defining_relations_in_k2():
    # a13 and a23 map to x1, x2; both defining relations hold in K_2
    assert redfree.equals([1, -2, 1, 2], [-2, 1, 2, 1], 2, debug=True)
    assert redfree.equals([2, -1, 2, 1], [-1, 2, 1, 2], 2, debug=True)
    # the equivalent weight-3 form
    assert redfree.collect([2, 1, -2, -1, -2, 1, 2, -1, -2, -1, 2, 1], 2).is_identity()


def test_u3hat_relation_variants_in_k2():
    x1, x2 = redfree.generator(1, 2), redfree.generator(2, 2)
    z21 = redfree.commutator(x2, x1)
    # [x1, x1[x1,x2]] = [x2, x2[x2,x1]] = 1
    assert redfree.commutator(
        x1, redfree.multiply(x1, redfree.commutator(x1, x2))
    ).is_identity()
    assert redfree.commutator(
        x2, redfree.multiply(x2, z21)
    ).is_identity()
    # [[x2,x1],x2] = [[x2,x1],x1] = 1
    assert redfree.commutator(z21, x2).is_identity()
    assert redfree.commutator(z21, x1).is_identity()


def test_u3hat_normal_form_unique_via_k2():
    rng = random.Random(53)
    seen = {}
    for _ in range(150):
        a, b, c = (rng.randint(-5, 5) for _ in range(3))
        word = [1] * max(a, 0) + [-1] * max(-a, 0)
        word += [2] * max(b, 0) + [-2] * max(-b, 0)
        word += ([2, 1, -2, -1] if c > 0 else [1, 2, -1, -2]) * abs(c)
        element = redfree.collect(word, 2)
        key = element.exponents
        if key in seen:
            assert seen[key] == (a, b, c)
        seen[key] = (a, b, c)


# -- serialization ---------------------------------------------------------------


def test_json_form():
    g = Bhat3Element(1, -2, 0, 3, "s2s1")
    assert json.loads(g.to_json()) == {
        "alpha": 1,
        "beta": -2,
        "gamma": 0,
        "delta": 3,
        "lam": "s2s1",
    }
    with pytest.raises(ValueError):
        Bhat3Element(0, 0, 0, 0, "bogus")
