"""Positive braid combinatorics and Garside left normal forms.

Permutations are one-line tuples (0-based internally, so p[i] is where
position i+1 lands, minus one) composed in diagram order: the left factor
acts first.  A positive permutation braid is stored as the permutation it
induces; a braid word normalizes to a power of the half-twist followed by
a left-greedy sequence of permutation-braid factors, and a general word
normalizes to that data together with its surviving strands.

The greedy condition for an adjacent factor pair (A, B) is that every
crossing that could start B already finishes A; sliding violating
crossings leftward terminates and the resulting form is unique, which is
what makes structural equality of canonical forms a word-problem solver.
"""

from __future__ import annotations

import dataclasses

from .diagram import evaluate_skeleton
from .words import (
    SIGMA,
    SIGMA_INV,
    Word,
    delta_word,
    epsilon_block,
    mirror_inverse,
    sigma,
)

Perm = tuple[int, ...]


def identity_perm(k: int) -> Perm:
    return tuple(range(k))


def longest_perm(k: int) -> Perm:
    """The order reversal: the permutation of the half-twist."""
    return tuple(range(k - 1, -1, -1))


def compose_perms(p: Perm, q: Perm) -> Perm:
    """Diagram order: p first, then q."""
    return tuple(q[v] for v in p)


def invert_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def perm_length(p: Perm) -> int:
    """Number of inversions; the crossing count of the permutation braid."""
    return sum(
        1
        for i in range(len(p))
        for j in range(i + 1, len(p))
        if p[i] > p[j]
    )


def _starts(p: Perm) -> frozenset[int]:
    """0-based g such that the braid of p can begin with crossing g+1."""
    return frozenset(g for g in range(len(p) - 1) if p[g] > p[g + 1])


def _finishes(p: Perm) -> frozenset[int]:
    """0-based g such that the braid of p can end with crossing g+1."""
    return _starts(invert_perm(p))


def left_weighted(a: Perm, b: Perm) -> bool:
    """No crossing can move from the front of b into a: starts(b) ⊆ finishes(a)."""
    return _starts(b) <= _finishes(a)


def word_to_perm(w: Word, k: int | None = None) -> Perm:
    """Underlying permutation of a positive crossing-only word."""
    if k is None:
        k = w.n
    p = list(range(k))
    pinv = list(range(k))
    for letter in w.letters:
        if letter.kind != SIGMA:
            raise ValueError("word_to_perm expects positive crossings only")
        g = letter.index - 1
        if g >= k - 1:
            raise ValueError(f"crossing {letter.token()} out of range for k={k}")
        i, j = pinv[g], pinv[g + 1]
        p[i], p[j] = p[j], p[i]
        pinv[g], pinv[g + 1] = j, i
    return tuple(p)


def perm_to_word(p: Perm, n: int | None = None) -> Word:
    """A reduced positive word inducing p; its length is the inversion count."""
    k = len(p)
    if n is None:
        n = k
    a = list(p)
    apos = list(invert_perm(p))
    reversed_letters: list[int] = []
    while True:
        g = next(
            (g for g in range(k - 1) if apos[g + 1] < apos[g]), None
        )
        if g is None:
            break
        i, j = apos[g], apos[g + 1]
        a[i], a[j] = a[j], a[i]
        apos[g], apos[g + 1] = j, i
        reversed_letters.append(g)
    return Word(n, tuple(sigma(g + 1) for g in reversed(reversed_letters)))


def is_permutation_braid(w: Word, k: int | None = None) -> bool:
    """Does every pair of strands cross at most once in w?

    Equivalent to the word having exactly as many letters as its
    permutation has inversions.
    """
    if k is None:
        k = w.n
    return len(w.letters) == perm_length(word_to_perm(w, k))


def _delta_conjugate(p: Perm) -> Perm:
    """Conjugation by the half-twist: the index-reversal automorphism."""
    k = len(p)
    return tuple(k - 1 - p[k - 1 - s] for s in range(k))


def _left_weight_pair(a: Perm, b: Perm, k: int) -> tuple[Perm, Perm, bool]:
    """Slide crossings from the front of b to the back of a until greedy."""
    ainv = list(invert_perm(a))
    bb = list(b)
    moved = False
    while True:
        for g in range(k - 1):
            if bb[g] > bb[g + 1] and ainv[g] < ainv[g + 1]:
                break
        else:
            break
        ainv[g], ainv[g + 1] = ainv[g + 1], ainv[g]
        bb[g], bb[g + 1] = bb[g + 1], bb[g]
        moved = True
    if not moved:
        return a, b, False
    return invert_perm(tuple(ainv)), tuple(bb), True


def _normalize(factors: list[Perm], k: int) -> tuple[int, tuple[Perm, ...]]:
    """Left-weight a factor sequence; returns extracted half-twist power."""
    ident = identity_perm(k)
    half_twist = longest_perm(k)
    fs = [f for f in factors if f != ident]
    i = 0
    while i < len(fs) - 1:
        a, b, moved = _left_weight_pair(fs[i], fs[i + 1], k)
        if not moved:
            i += 1
            continue
        if b == ident:
            fs[i] = a
            del fs[i + 1]
        else:
            fs[i], fs[i + 1] = a, b
        i = max(i - 1, 0)
    power = 0
    while fs and fs[0] == half_twist:
        power += 1
        del fs[0]
    return power, tuple(fs)


@dataclasses.dataclass(frozen=True)
class GarsideNF:
    """Left normal form of a braid on k strands: half-twist^inf · factors."""

    k: int
    inf: int
    factors: tuple[Perm, ...]

    def __post_init__(self):
        if self.k < 2 and self.inf != 0:
            raise ValueError("the half-twist is trivial below two strands")
        ident = identity_perm(self.k)
        half_twist = longest_perm(self.k)
        for a in self.factors:
            if a == ident or a == half_twist:
                raise ValueError("factors exclude the identity and the half-twist")
        for a, b in zip(self.factors, self.factors[1:]):
            if not left_weighted(a, b):
                raise ValueError("factor sequence is not left-greedy")

    def to_word(self, n: int | None = None) -> Word:
        if n is None:
            n = self.k
        if self.k < 2:
            return Word(n)
        twist = delta_word(self.k)
        if self.inf >= 0:
            out = Word(n, twist.letters * self.inf)
        else:
            out = Word(n, mirror_inverse(twist).letters * -self.inf)
        for factor in self.factors:
            out = out * perm_to_word(factor, n)
        return out

    def __str__(self) -> str:
        body = ";".join(
            " ".join(str(v + 1) for v in factor) for factor in self.factors
        )
        return f"inf={self.inf} factors=[{body}]"


def left_greedy_nf(b: Word, k: int | None = None) -> GarsideNF:
    """Left-greedy normal form of a crossing-only word on k strands.

    Each inverse crossing is rewritten as half-twist^-1 times the
    complementary permutation braid; the negative twists migrate to the
    front through the index-reversal automorphism, and the remaining
    positive factors are left-weighted.
    """
    if k is None:
        k = b.n
    half_twist = longest_perm(k)
    raw: list[tuple[Perm, int]] = []
    for letter in b.letters:
        g = letter.index - 1
        if g >= k - 1:
            raise ValueError(f"crossing {letter.token()} out of range for k={k}")
        if letter.kind == SIGMA:
            p = list(range(k))
            p[g], p[g + 1] = p[g + 1], p[g]
            raw.append((tuple(p), 0))
        elif letter.kind == SIGMA_INV:
            # half-twist followed by the inverse crossing: swap the values
            # g, g+1 in the reversal's one-line form
            p = list(half_twist)
            p[k - 1 - g], p[k - 2 - g] = p[k - 2 - g], p[k - 1 - g]
            raw.append((tuple(p), -1))
        else:
            raise ValueError("normal forms expect crossing-only words")
    total = 0
    factors: list[Perm] = []
    for p, d in reversed(raw):
        factors.append(_delta_conjugate(p) if total % 2 else p)
        total += d
    factors.reverse()
    extra, normal = _normalize(factors, k)
    return GarsideNF(k, total + extra, normal)


@dataclasses.dataclass(frozen=True)
class CanonicalForm:
    """Unique normal form of a partial braid word.

    Two words are equal in the monoid exactly when their canonical forms
    are structurally identical.
    """

    n: int
    domain: tuple[int, ...]
    codomain: tuple[int, ...]
    nf: GarsideNF

    def __str__(self) -> str:
        dom = ",".join(str(i) for i in self.domain)
        cod = ",".join(str(j) for j in self.codomain)
        body = ";".join(
            " ".join(str(v + 1) for v in factor) for factor in self.nf.factors
        )
        return f"I={{{dom}}} J={{{cod}}} inf={self.nf.inf} factors=[{body}]"


def canonical_form(w: Word) -> CanonicalForm:
    """Skeleton of w with its underlying braid put in left normal form."""
    skel = evaluate_skeleton(w)
    return CanonicalForm(
        w.n,
        skel.domain,
        skel.codomain,
        left_greedy_nf(skel.braid, len(skel.domain)),
    )


def equal_nf(w1: Word, w2: Word) -> bool:
    """Word-problem test through canonical forms."""
    if w1.n != w2.n:
        raise ValueError(f"strand-count mismatch: {w1.n} vs {w2.n}")
    return canonical_form(w1) == canonical_form(w2)


def domain_prefix_letters(domain: tuple[int, ...]) -> tuple:
    """Positive runs walking the strands of domain down to positions 1..k.

    Run t descends sigma_{i_t - 1} ... sigma_t and is empty when i_t = t.
    """
    letters = []
    for t, i_t in enumerate(domain, 1):
        for g in range(i_t - 1, t - 1, -1):
            letters.append(sigma(g))
    return tuple(letters)


def _codomain_suffix_letters(codomain: tuple[int, ...]) -> tuple:
    """Positive runs spreading positions 1..k out to codomain, emitted for
    t = k..1 so each strand only ever moves across empty positions."""
    letters = []
    for t in range(len(codomain), 0, -1):
        for g in range(t, codomain[t - 1]):
            letters.append(sigma(g))
    return tuple(letters)


def reconstruct_word(c: CanonicalForm) -> Word:
    """A word in the ambient alphabet evaluating to the element of c:
    gathering runs, deletion block, the braid, the block again, spreading
    runs."""
    k = len(c.domain)
    block = epsilon_block(k, c.n).letters
    letters = (
        domain_prefix_letters(c.domain)
        + block
        + c.nf.to_word(c.n).letters
        + block
        + _codomain_suffix_letters(c.codomain)
    )
    return Word(c.n, letters)
