"""The faithful action of partial braid words on a free group.

Every word acts as a partial endomorphism: each surviving strand's
generator goes to a conjugate of the generator of its endpoint, deleted
strands have no image.  Two words are equal in the monoid exactly when
they act identically, which makes evaluation a word-problem solver.

Values are kept in canonical form: conjugators are words over the
codomain generators only.  Composition follows word order (the earlier
word acts first); when a strand is deleted mid-composition its letters
are erased from the conjugators of the survivors, the way an arc that no
longer reaches both planes is discarded from a diagram.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Optional

from . import freegroup
from .freegroup import FreeWord, ResourceLimitError
from .words import EPSILON, SIGMA, SIGMA_INV, XI, Letter, Word

__all__ = [
    "PartialEndo",
    "PartialInjection",
    "AbelianClass",
    "ResourceLimitError",
    "letter_endo",
    "compose",
    "evaluate",
    "equal_action",
    "tau",
    "compose_injection",
    "abelian_invariant",
]

Images = tuple[Optional[FreeWord], ...]


@dataclasses.dataclass(frozen=True)
class PartialEndo:
    """A partial endomorphism x_i -> w_i^-1 x_{a(i)} w_i of a free group.

    images[i-1] is the reduced image of x_i, or None outside the domain.
    The index map a is injective and conjugators only use codomain
    generators; validate() checks all of that.
    """

    n: int
    images: Images

    def __post_init__(self):
        if len(self.images) != self.n:
            raise ValueError(f"expected {self.n} images, got {len(self.images)}")

    @staticmethod
    def identity(n: int) -> PartialEndo:
        return PartialEndo(n, _identity_images(n))

    def domain(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, img in enumerate(self.images) if img is not None)

    def index_map(self) -> tuple[Optional[int], ...]:
        """The partial injection i -> a(i), read from the image cores."""
        return tuple(
            img[len(img) // 2] if img is not None else None for img in self.images
        )

    def codomain(self) -> tuple[int, ...]:
        return tuple(sorted(j for j in self.index_map() if j is not None))

    def validate(self) -> PartialEndo:
        """Check the canonical-form invariants, raising ValueError if broken."""
        cores = []
        for img in self.images:
            if img is None:
                continue
            decomposition = freegroup.conjugate_decompose(img)
            if decomposition is None:
                raise ValueError(
                    f"image {freegroup.word_str(img)} is not a conjugated generator"
                )
            cores.append(decomposition[0])
        if len(set(cores)) != len(cores):
            raise ValueError("index map is not injective")
        allowed = set(cores)
        for img in self.images:
            if img is None:
                continue
            if any(abs(x) not in allowed for x in img):
                raise ValueError(
                    f"image {freegroup.word_str(img)} uses letters outside the codomain"
                )
        return self

    def __str__(self) -> str:
        lines = []
        for i, img in enumerate(self.images, 1):
            rhs = "_" if img is None else freegroup.word_str(img)
            lines.append(f"x{i} -> {rhs}")
        return "\n".join(lines)


def _identity_images(n: int) -> Images:
    return tuple((i,) for i in range(1, n + 1))


@functools.lru_cache(maxsize=None)
def _letter_images(kind: str, index: int, n: int) -> Images:
    base: list[Optional[FreeWord]] = [(i,) for i in range(1, n + 1)]
    i = index
    if kind == SIGMA:
        base[i - 1] = (i + 1,)
        base[i] = (-(i + 1), i, i + 1)
    elif kind == SIGMA_INV:
        base[i - 1] = (i, i + 1, -i)
        base[i] = (i,)
    elif kind == EPSILON:
        base[i - 1] = None
    else:  # XI
        base[i - 1] = (i + 1,)
        base[i] = (i,)
    return tuple(base)


def letter_endo(letter: Letter, n: int) -> PartialEndo:
    """The action of a single generator letter on n free generators."""
    if not letter.fits(n):
        raise ValueError(f"letter {letter.token()} out of range for n={n}")
    return PartialEndo(n, _letter_images(letter.kind, letter.index, n))


def _compose_images(first: Images, second: Images, max_letters: int) -> Images:
    mapped: list[Optional[FreeWord]] = []
    for img in first:
        if img is None:
            mapped.append(None)
            continue
        u = freegroup.substitute_erasing(img, second, max_letters)
        # a surviving strand's image is a conjugate, never empty; an image
        # erased to nothing means the strand just got deleted
        mapped.append(u if u else None)
    cores = frozenset(u[len(u) // 2] for u in mapped if u)
    return tuple(
        freegroup.project(u, cores) if u is not None else None for u in mapped
    )


def compose(
    e1: PartialEndo, e2: PartialEndo, max_letters: int = freegroup.MAX_LETTERS
) -> PartialEndo:
    """Composite in word order: e1 acts first, then e2."""
    if e1.n != e2.n:
        raise ValueError(f"strand-count mismatch: {e1.n} vs {e2.n}")
    return PartialEndo(e1.n, _compose_images(e1.images, e2.images, max_letters))


def evaluate(w: Word, max_letters: int = freegroup.MAX_LETTERS) -> PartialEndo:
    """Fold the letter actions of w left to right."""
    images = _identity_images(w.n)
    for letter in w.letters:
        images = _compose_images(
            images, _letter_images(letter.kind, letter.index, w.n), max_letters
        )
        if all(img is None for img in images):
            break  # the empty braid absorbs everything after it
    return PartialEndo(w.n, images)


def equal_action(
    w1: Word, w2: Word, max_letters: int = freegroup.MAX_LETTERS
) -> bool:
    """Word-problem test: do the two words act identically?"""
    if w1.n != w2.n:
        raise ValueError(f"strand-count mismatch: {w1.n} vs {w2.n}")
    return evaluate(w1, max_letters).images == evaluate(w2, max_letters).images


@dataclasses.dataclass(frozen=True)
class PartialInjection:
    """A partial injection of {1..n}; mapping[i-1] is the target of i or None."""

    n: int
    mapping: tuple[Optional[int], ...]

    def __post_init__(self):
        if len(self.mapping) != self.n:
            raise ValueError(f"expected {self.n} entries, got {len(self.mapping)}")
        targets = [j for j in self.mapping if j is not None]
        if any(not 1 <= j <= self.n for j in targets):
            raise ValueError("targets out of range")
        if len(set(targets)) != len(targets):
            raise ValueError("mapping is not injective")

    @staticmethod
    def identity(n: int) -> PartialInjection:
        return PartialInjection(n, tuple(range(1, n + 1)))

    def inverse(self) -> PartialInjection:
        inv: list[Optional[int]] = [None] * self.n
        for i, j in enumerate(self.mapping, 1):
            if j is not None:
                inv[j - 1] = i
        return PartialInjection(self.n, tuple(inv))

    def domain(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.mapping, 1) if j is not None)

    def is_total(self) -> bool:
        return all(j is not None for j in self.mapping)

    def __str__(self) -> str:
        pairs = ", ".join(
            f"{i}->{j}" for i, j in enumerate(self.mapping, 1) if j is not None
        )
        return "{" + pairs + "}"


def compose_injection(p: PartialInjection, q: PartialInjection) -> PartialInjection:
    """Composite in word order: i -> q(p(i)) where the chain is defined."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    mapping = tuple(
        q.mapping[j - 1] if j is not None else None for j in p.mapping
    )
    return PartialInjection(p.n, mapping)


def tau(w: Word, max_letters: int = freegroup.MAX_LETTERS) -> PartialInjection:
    """Project a word to the partial injection it induces on strand endpoints."""
    return PartialInjection(w.n, evaluate(w, max_letters).index_map())


GROUP_CLASS = "group"
EPSILON_CLASS = "epsilon"


@dataclasses.dataclass(frozen=True)
class AbelianClass:
    """Image in the commutative quotient: an exponent sum for honest braids,
    one absorbing class for anything with a deleted strand."""

    kind: str
    exponent_sum: int = 0


def abelian_invariant(w: Word) -> AbelianClass:
    """Commutative-quotient invariant of a word without welded letters."""
    total = sum(1 for letter in w.letters if letter.kind == SIGMA) - sum(
        1 for letter in w.letters if letter.kind == SIGMA_INV
    )
    live = [True] * w.n
    deleted = False
    for letter in w.letters:
        if letter.kind == XI:
            raise ValueError("abelian invariant is not defined for xi letters")
        i = letter.index - 1
        if letter.kind == EPSILON:
            if live[i]:
                live[i] = False
                deleted = True
        else:
            live[i], live[i + 1] = live[i + 1], live[i]
    if deleted:
        return AbelianClass(EPSILON_CLASS)
    return AbelianClass(GROUP_CLASS, total)
