"""Reduced words in a finitely generated free group.

A word is a tuple of nonzero ints: +i is the i-th generator, -i its
inverse.  Every operation returns fully reduced words, so group-element
equality is tuple equality.  Lengths are capped (braid actions can grow
words exponentially); crossing the cap raises ResourceLimitError.
"""

from __future__ import annotations

from typing import Container, Iterable, Optional, Sequence

FreeWord = tuple[int, ...]

MAX_LETTERS = 10 ** 6


class ResourceLimitError(RuntimeError):
    """A free word outgrew the configured letter cap."""


def reduce_word(letters: Iterable[int], max_letters: int = MAX_LETTERS) -> FreeWord:
    """Freely reduce a letter sequence, cancelling adjacent inverse pairs."""
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("free-word letters are nonzero ints")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
            if len(out) > max_letters:
                raise ResourceLimitError(f"free word exceeded {max_letters} letters")
    return tuple(out)


def multiply(a: FreeWord, b: FreeWord, max_letters: int = MAX_LETTERS) -> FreeWord:
    """Product of two reduced words: concatenate and reduce."""
    out = list(a)
    for x in b:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
            if len(out) > max_letters:
                raise ResourceLimitError(f"free word exceeded {max_letters} letters")
    return tuple(out)


def invert(a: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(a))


def substitute(
    a: FreeWord,
    images: Sequence[Optional[FreeWord]],
    max_letters: int = MAX_LETTERS,
) -> Optional[FreeWord]:
    """Replace each letter x_i^e by images[i-1]^e and reduce.

    Returns None as soon as any letter of a has no image: the substitution
    is a partial map and a is outside its domain.
    """
    out: list[int] = []
    for x in a:
        img = images[abs(x) - 1]
        if img is None:
            return None
        block = img if x > 0 else tuple(-y for y in reversed(img))
        for y in block:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
                if len(out) > max_letters:
                    raise ResourceLimitError(
                        f"free word exceeded {max_letters} letters"
                    )
    return tuple(out)


def substitute_erasing(
    a: FreeWord,
    images: Sequence[Optional[FreeWord]],
    max_letters: int = MAX_LETTERS,
) -> FreeWord:
    """Substitute with imageless letters erased instead of blocking.

    This is the homomorphism sending x_i to images[i-1] when defined and to
    the empty word otherwise; it is how deleted strands drop out of the
    conjugators of surviving ones.
    """
    out: list[int] = []
    for x in a:
        img = images[abs(x) - 1]
        if img is None:
            continue
        if x > 0:
            for y in img:
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
                    if len(out) > max_letters:
                        raise ResourceLimitError(
                            f"free word exceeded {max_letters} letters"
                        )
        else:
            for y in reversed(img):
                if out and out[-1] == y:
                    out.pop()
                else:
                    out.append(-y)
                    if len(out) > max_letters:
                        raise ResourceLimitError(
                            f"free word exceeded {max_letters} letters"
                        )
    return tuple(out)


def project(a: FreeWord, keep: Container[int]) -> FreeWord:
    """Erase every letter whose generator index is not in keep, then reduce."""
    out: list[int] = []
    for x in a:
        if abs(x) not in keep:
            continue
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def conjugate_decompose(a: FreeWord) -> Optional[tuple[int, FreeWord]]:
    """Split a reduced word as w^-1 x_j w, returning (j, w).

    The decomposition with the shortest conjugator is unique; in the
    reduced word it is literal: the core generator sits in the middle and
    the two halves are mirror inverses.  Returns None when a is not a
    conjugate of a positive generator.
    """
    if len(a) % 2 == 0:
        return None
    mid = len(a) // 2
    core = a[mid]
    if core < 0:
        return None
    for i in range(mid):
        if a[i] != -a[-1 - i]:
            return None
    return core, a[mid + 1:]


def word_str(a: FreeWord) -> str:
    """Display form, e.g. ``x2^-1 x1 x2``; the empty word displays as ``1``."""
    if not a:
        return "1"
    return " ".join(f"x{x}" if x > 0 else f"x{-x}^-1" for x in a)
