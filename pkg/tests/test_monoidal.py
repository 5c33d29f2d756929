from conftest import random_word
from partialbraid.action import PartialInjection, equal_action, tau
from partialbraid.garside import equal_nf
from partialbraid.monoidal import (
    PairedWord,
    check_naturality,
    factorize,
    is_central,
    mu,
    positive_lift,
)
from partialbraid.garside import is_permutation_braid
from partialbraid.words import (
    EPSILON,
    SIGMA,
    Word,
    braiding_word,
    delta_word,
    epsilon,
    parse_word,
)


def w(text, n):
    return parse_word(text, n)


def test_mu_examples():
    assert str(mu(w("s1", 2), w("s1", 2))) == "s1 s3"
    assert str(mu(w("e1", 1), w("e1", 1))) == "e1 e2"
    assert mu(Word(0), w("s1 e2", 3)) == w("s1 e2", 3)


def test_mu_is_associative(rng):
    for _ in range(100):
        a = random_word(rng, rng.randint(0, 3), 6)
        b = random_word(rng, rng.randint(0, 3), 6)
        c = random_word(rng, rng.randint(0, 3), 6)
        assert mu(mu(a, b), c) == mu(a, mu(b, c))


def test_mu_restricted_to_braids_is_index_shift():
    left = w("s1 s2^-1", 3)
    right = w("s1", 2)
    assert str(mu(left, right)) == "s1 s2^-1 s4"


def test_paired_word_invariant(rng):
    for _ in range(50):
        a = random_word(rng, rng.randint(0, 4), 6)
        b = random_word(rng, rng.randint(0, 4), 6)
        pair = PairedWord.of(a, b)
        assert pair.combined == mu(pair.left, pair.right)


def test_naturality_examples():
    assert check_naturality(w("s1", 2), w("e1", 1))
    assert check_naturality(Word(0), Word(0))


def test_naturality_random(rng):
    for _ in range(80):
        m = rng.randint(0, 4)
        n2 = rng.randint(0, 4)
        bm = random_word(rng, m, 8)
        bn = random_word(rng, n2, 8)
        assert check_naturality(bm, bn), (str(bm), str(bn))


def test_braiding_conjugates_deletions():
    # carrying the blocks over each other relabels the deleted strand
    for m in range(1, 5):
        for n2 in range(1, 5):
            total = m + n2
            c = braiding_word(m, n2)
            for i in range(1, total + 1):
                target = i - n2 if i > n2 else i + m
                lhs = c * Word(total, (epsilon(i),))
                rhs = Word(total, (epsilon(target),)) * c
                assert equal_action(lhs, rhs), (m, n2, i)


def test_factorize_examples():
    for text, n, expected in [
        ("e1", 2, ("e1", "")),
        ("e1 s1", 2, ("e1", "s1")),
        ("s1 e1", 2, ("e2", "s1")),
    ]:
        idempotent, braid_part = factorize(w(text, n))
        assert (str(idempotent), str(braid_part)) == expected


def test_factorize_properties(rng):
    for _ in range(200):
        n = rng.randint(0, 5)
        word = random_word(rng, n, 14)
        idempotent, braid_part = factorize(word)
        assert equal_action(idempotent * braid_part, word)
        assert equal_action(idempotent * idempotent, idempotent)
        assert all(letter.kind == EPSILON for letter in idempotent)
        assert all(letter.kind != EPSILON for letter in braid_part)
        assert tau(idempotent).domain() == tau(word).domain()
        # the braid part deletes nothing
        assert tau(braid_part).is_total()


def test_positive_lift_is_a_section(rng):
    for _ in range(200):
        n = rng.randint(1, 5)
        injection = tau(random_word(rng, n, 10))
        lifted = positive_lift(injection)
        assert tau(lifted) == injection
        assert all(letter.kind in (SIGMA, EPSILON) for letter in lifted)
        crossings = Word(n, tuple(l for l in lifted if l.kind == SIGMA))
        assert is_permutation_braid(crossings, n)


def test_positive_lift_identity():
    assert positive_lift(PartialInjection.identity(3)) == Word(3)


def test_is_central_examples():
    assert is_central(delta_word(3) ** 2)
    assert is_central(w("e1 e2 e3", 3))
    assert not is_central(w("s1", 3))
    assert not is_central(w("e1", 2))
    assert is_central(Word(3))  # the identity


def test_center_classification_small():
    # among all words of length <= 4 on three strands the central ones are
    # exactly the identity, the sampled half-twist powers and the empty braid
    import itertools

    alphabet = ["s1", "s2", "s1^-1", "s2^-1", "e1", "e2", "e3"]
    delta_sq = delta_word(3) ** 2
    empty_braid = w("e1 e2 e3", 3)
    central, checked = 0, 0
    for length in range(0, 5):
        for combo in itertools.product(alphabet, repeat=length):
            word = w(" ".join(combo), 3)
            expected = (
                equal_nf(word, Word(3))
                or equal_nf(word, delta_sq)  # length caps rule out higher powers
                or equal_nf(word, empty_braid)
            )
            assert is_central(word) == expected, str(word)
            checked += 1
            central += expected
    assert checked == 1 + 7 + 49 + 343 + 2401
    assert central > 0
