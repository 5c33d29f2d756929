"""Monoidal structure: block pairing, braiding checks, factorization, center.

The pairing places two partial braids side by side; the braiding carries
one block over the other, and conjugation by it swaps paired factors.
Every element also factors as an idempotent (the deletions) times an
honest braid, which is what the decomposition here computes.
"""

from __future__ import annotations

import dataclasses

from .action import PartialInjection, equal_action
from .diagram import evaluate_skeleton
from .garside import domain_prefix_letters, perm_to_word
from .words import (
    Word,
    braiding_word,
    epsilon,
    mirror_inverse,
    shift_word,
    sigma,
)


def mu(a: Word, b: Word) -> Word:
    """Side-by-side pairing: a on the first strands, b shifted past them."""
    n = a.n + b.n
    return Word(n, a.letters + shift_word(b, a.n, n).letters)


@dataclasses.dataclass(frozen=True)
class PairedWord:
    """A pairing that remembers its blocks alongside the combined word."""

    left: Word
    right: Word
    combined: Word

    @staticmethod
    def of(a: Word, b: Word) -> PairedWord:
        return PairedWord(a, b, mu(a, b))


def check_naturality(bm: Word, bn: Word) -> bool:
    """Does the braiding carry mu(bm, bn) to mu(bn, bm)?

    In stacking order the paired word runs first and the block braiding
    after it, against the braiding first and the swapped pair below.
    """
    c = braiding_word(bm.n, bn.n)
    pair = PairedWord.of(bm, bn)
    swapped = PairedWord.of(bn, bm)
    return equal_action(pair.combined * c, c * swapped.combined)


def _extension_perm(targets: dict[int, int], n: int) -> tuple:
    """0-based full permutation extending targets, complement filled ascending."""
    images = [0] * n
    used = set(targets.values())
    spare = iter(j for j in range(1, n + 1) if j not in used)
    for i in range(1, n + 1):
        images[i - 1] = (targets[i] if i in targets else next(spare)) - 1
    return tuple(images)


def factorize(w: Word) -> tuple[Word, Word]:
    """Split w as (idempotent, full braid) with the same action.

    The idempotent deletes exactly the strands w deletes.  The braid part
    conjugates the underlying braid onto the surviving start positions,
    then spreads sorted starts to sorted ends by a positive permutation
    braid whose extension fills the deleted positions in ascending order.
    """
    skel = evaluate_skeleton(w)
    n = w.n
    dom = set(skel.domain)
    idempotent = Word(n, tuple(epsilon(i) for i in range(1, n + 1) if i not in dom))
    embedded: tuple = ()
    if skel.braid.letters:
        prefix = Word(n, domain_prefix_letters(skel.domain))
        gathered = prefix * Word(n, skel.braid.letters) * mirror_inverse(prefix)
        embedded = gathered.letters
    targets = dict(zip(skel.domain, skel.codomain))
    spread = perm_to_word(_extension_perm(targets, n), n)
    return idempotent, Word(n, embedded + spread.letters)


def positive_lift(p: PartialInjection) -> Word:
    """A positive partial permutation braid inducing p.

    Product of the domain-complement idempotent with the positive
    permutation braid of the minimal full extension of p; every pair of
    surviving strands crosses at most once.
    """
    n = p.n
    dom = p.domain()
    idempotent = tuple(epsilon(i) for i in range(1, n + 1) if i not in set(dom))
    targets = {i: p.mapping[i - 1] for i in dom}
    spread = perm_to_word(_extension_perm(targets, n), n)
    return Word(n, idempotent + spread.letters)


def is_central(w: Word) -> bool:
    """Does w commute with every generator of its monoid?"""
    n = w.n
    generators = [Word(n, (sigma(i),)) for i in range(1, n)]
    generators += [Word(n, (epsilon(i),)) for i in range(1, n + 1)]
    return all(equal_action(w * g, g * w) for g in generators)
