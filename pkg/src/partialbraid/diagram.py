"""Strand-level geometry: skeletons, strand deletion, Makanin tests.

A word is simulated top to bottom as a diagram with live and empty
positions.  A crossing over two live positions records a crossing of the
underlying braid, over a single live position it just relocates that
strand, and a deletion letter removes the live strand at its position
together with every crossing it was involved in.
"""

from __future__ import annotations

import bisect
import dataclasses

from . import action
from .words import EPSILON, SIGMA, SIGMA_INV, XI, Letter, Word, epsilon, sigma, sigma_inv


@dataclasses.dataclass(frozen=True)
class Skeleton:
    """(domain, codomain, underlying braid) of a partial braid.

    domain lists the surviving strands by start position, codomain their
    end positions, both ascending; braid is a crossing-only word on
    k = len(domain) strands, indexed by rank among the survivors.
    """

    n: int
    domain: tuple[int, ...]
    codomain: tuple[int, ...]
    braid: Word

    def __post_init__(self):
        if len(self.domain) != len(self.codomain):
            raise ValueError("domain and codomain sizes differ")
        if self.braid.n != len(self.domain):
            raise ValueError("underlying braid has the wrong strand count")
        if any(letter.kind not in (SIGMA, SIGMA_INV) for letter in self.braid):
            raise ValueError("underlying braid must be crossing-only")

    def injection(self) -> action.PartialInjection:
        """The partial injection the skeleton induces: t-th domain element
        to the codomain element its strand reaches through the braid."""
        k = len(self.domain)
        rank = list(range(k))  # rank[t] = current rank of the t-th strand
        for letter in self.braid:
            r = letter.index - 1
            for t, value in enumerate(rank):
                if value == r:
                    rank[t] = r + 1
                elif value == r + 1:
                    rank[t] = r
        mapping: list[int | None] = [None] * self.n
        for t, start in enumerate(self.domain):
            mapping[start - 1] = self.codomain[rank[t]]
        return action.PartialInjection(self.n, tuple(mapping))

    def __str__(self) -> str:
        dom = ",".join(str(i) for i in self.domain)
        cod = ",".join(str(j) for j in self.codomain)
        return f"I={{{dom}}} J={{{cod}}} braid={self.braid}"


def _delete_letters(letters: list[int], start_pos: int) -> list[int]:
    """Drop one strand from a crossing word given as signed rank indices."""
    out: list[int] = []
    p = start_pos
    for x in letters:
        r = abs(x)
        if r == p:
            p += 1
        elif r == p - 1:
            p -= 1
        elif r > p:
            out.append(x - 1 if x > 0 else x + 1)
        else:
            out.append(x)
    return out


def _signed(letter: Letter) -> int:
    return letter.index if letter.kind == SIGMA else -letter.index


def _crossing_word(k: int, signed: list[int]) -> Word:
    return Word(
        k, tuple(sigma(x) if x > 0 else sigma_inv(-x) for x in signed)
    )


def evaluate_skeleton(w: Word) -> Skeleton:
    """Track strands through w and return (domain, codomain, braid)."""
    n = w.n
    occupant: list[int | None] = list(range(1, n + 1))
    live_ids = list(range(1, n + 1))  # ascending; index+1 = rank at the top
    braid: list[int] = []
    for letter in w.letters:
        if letter.kind == XI:
            raise ValueError("skeletons are not defined for xi letters")
        p = letter.index - 1
        if letter.kind == EPSILON:
            strand = occupant[p]
            if strand is None:
                continue
            top_rank = bisect.bisect_left(live_ids, strand) + 1
            braid = _delete_letters(braid, top_rank)
            live_ids.remove(strand)
            occupant[p] = None
        else:
            a, b = occupant[p], occupant[p + 1]
            if a is not None and b is not None:
                rank = sum(1 for q in range(p + 1) if occupant[q] is not None)
                braid.append(rank if letter.kind == SIGMA else -rank)
            occupant[p], occupant[p + 1] = b, a
    domain = tuple(live_ids)
    codomain = tuple(
        p + 1 for p, strand in enumerate(occupant) if strand is not None
    )
    return Skeleton(n, domain, codomain, _crossing_word(len(domain), braid))


def delete_strand(braid: Word, start_pos: int) -> Word:
    """Remove the strand starting at start_pos from a crossing-only word.

    Crossings involving the tracked strand are dropped (moving it), the
    rest are reindexed below it.
    """
    m = braid.n
    if any(letter.kind not in (SIGMA, SIGMA_INV) for letter in braid):
        raise ValueError("delete_strand expects a crossing-only word")
    if not 1 <= start_pos <= m:
        raise ValueError(f"start position {start_pos} out of range for {m} strands")
    signed = _delete_letters([_signed(letter) for letter in braid], start_pos)
    return _crossing_word(m - 1, signed)


def _is_trivial_braid(braid: Word) -> bool:
    if not braid.letters:
        return True
    endo = action.evaluate(braid)
    return endo.images == action.PartialEndo.identity(braid.n).images


def _is_single_deletion(skel: Skeleton, i: int) -> bool:
    # trivial braid forces the sorted correspondence, so domain == codomain
    # == complement plus braid triviality pins the element down
    rest = tuple(j for j in range(1, skel.n + 1) if j != i)
    return (
        skel.domain == rest
        and skel.codomain == rest
        and _is_trivial_braid(skel.braid)
    )


def is_i_makanin(w: Word, i: int) -> bool:
    """Does deleting strand i from w leave the trivial diagram?

    Defined for full braids (every strand survives w) and for the
    single-deletion idempotent at i itself; other partial words raise.
    """
    n = w.n
    if not 1 <= i <= n:
        raise ValueError(f"strand index {i} out of range for n={n}")
    skel = evaluate_skeleton(w)
    if len(skel.domain) != n:
        if _is_single_deletion(skel, i):
            return True
        raise ValueError(
            "i-Makanin test needs a full braid or the single-deletion "
            "idempotent at i itself"
        )
    return _is_single_deletion(
        evaluate_skeleton(Word(n, (epsilon(i),)) * w), i
    )


def is_makanin(w: Word) -> bool:
    """True when w is i-Makanin for every strand i."""
    skel = evaluate_skeleton(w)
    if len(skel.domain) != w.n:
        raise ValueError("Makanin test needs a full braid")
    return all(is_i_makanin(w, i) for i in range(1, w.n + 1))
