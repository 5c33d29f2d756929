"""Words over the generator alphabet of the inverse braid monoid.

A word is a finite sequence of letters sigma_i, sigma_i^-1, epsilon_i or
xi_i together with an ambient strand count n.  Words multiply by
concatenation and are read left to right: letter order is the order in
which the corresponding diagrams are stacked top to bottom.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Iterator

SIGMA = "sigma"
SIGMA_INV = "sigma-inverse"
EPSILON = "epsilon"
XI = "xi"

_KINDS = frozenset((SIGMA, SIGMA_INV, EPSILON, XI))


class WordSyntaxError(ValueError):
    """Malformed word text; carries the character position of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclasses.dataclass(frozen=True)
class Letter:
    kind: str
    index: int  # 1-based

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"letter index must be >= 1, got {self.index}")

    def fits(self, n: int) -> bool:
        """Whether the index is in range for ambient strand count n.

        epsilon_i exists for i <= n, the crossing letters only for i <= n-1.
        """
        limit = n if self.kind == EPSILON else n - 1
        return self.index <= limit

    def token(self) -> str:
        if self.kind == SIGMA:
            return f"s{self.index}"
        if self.kind == SIGMA_INV:
            return f"s{self.index}^-1"
        if self.kind == EPSILON:
            return f"e{self.index}"
        return f"t{self.index}"


def sigma(i: int) -> Letter:
    return Letter(SIGMA, i)


def sigma_inv(i: int) -> Letter:
    return Letter(SIGMA_INV, i)


def epsilon(i: int) -> Letter:
    return Letter(EPSILON, i)


def xi(i: int) -> Letter:
    return Letter(XI, i)


@dataclasses.dataclass(frozen=True)
class Word:
    n: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"strand count must be >= 0, got {self.n}")
        for letter in self.letters:
            if not letter.fits(self.n):
                raise ValueError(
                    f"letter {letter.token()} out of range for n={self.n}"
                )

    def __mul__(self, other: Word) -> Word:
        if self.n != other.n:
            raise ValueError(
                f"cannot concatenate words on {self.n} and {other.n} strands"
            )
        return Word(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> Word:
        if k < 0:
            raise ValueError("monoid words only have nonnegative powers")
        return Word(self.n, self.letters * k)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def kinds(self) -> frozenset[str]:
        return frozenset(letter.kind for letter in self.letters)


_TOKEN_RE = re.compile(r"s(\d+)(\^-1|')?|e(\d+)|E|t(\d+)")


def parse_word(text: str, n: int) -> Word:
    """Parse whitespace-separated tokens into a word on n strands.

    Grammar: ``s<i>`` / ``s<i>^-1`` / ``s<i>'`` (crossing and its inverse),
    ``e<i>`` / ``E`` (strand deletion, ``E`` meaning ``e1``), ``t<i>``
    (welded swap).  The empty string is the identity.
    """
    letters = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        start = pos
        while pos < len(text) and not text[pos].isspace():
            pos += 1
        token = text[start:pos]
        match = _TOKEN_RE.fullmatch(token)
        if match is None:
            raise WordSyntaxError(f"bad token {token!r}", start)
        s_idx, inv, e_idx, t_idx = match.groups()
        if s_idx is not None:
            letter = Letter(SIGMA_INV if inv else SIGMA, _index(s_idx, start))
        elif e_idx is not None:
            letter = Letter(EPSILON, _index(e_idx, start))
        elif t_idx is not None:
            letter = Letter(XI, _index(t_idx, start))
        else:
            letter = Letter(EPSILON, 1)
        if not letter.fits(n):
            raise WordSyntaxError(
                f"index of {letter.token()!r} out of range for n={n}", start
            )
        letters.append(letter)
    return Word(n, tuple(letters))


def _index(digits: str, position: int) -> int:
    value = int(digits)
    if value < 1:
        raise WordSyntaxError("indices start at 1", position)
    return value


def format_word(w: Word) -> str:
    return " ".join(letter.token() for letter in w.letters)


_MIRROR = {SIGMA: SIGMA_INV, SIGMA_INV: SIGMA}


def mirror_inverse(w: Word) -> Word:
    """The reversed word with each crossing replaced by its inverse.

    This is the vertical flip of the diagram: the unique monoid inverse m
    of w, satisfying w m w = w and m w m = m.  Deletion letters are fixed
    (idempotents are self-inverse) and so are welded swaps; words mixing
    epsilon and xi letters are rejected.
    """
    kinds = w.kinds()
    if EPSILON in kinds and XI in kinds:
        raise ValueError("mirror inverse of a word mixing epsilon and xi letters")
    letters = tuple(
        Letter(_MIRROR.get(letter.kind, letter.kind), letter.index)
        for letter in reversed(w.letters)
    )
    return Word(w.n, letters)


def epsilon_block(k: int, n: int) -> Word:
    """The idempotent deleting strands k+1..n: epsilon_{k+1} ... epsilon_n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return Word(n, tuple(epsilon(i) for i in range(k + 1, n + 1)))


def delta_word(k: int) -> Word:
    """The half-twist on k strands: sigma_1..sigma_{k-1} sigma_1..sigma_{k-2} ... sigma_1."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    letters = [sigma(i) for t in range(k - 1, 0, -1) for i in range(1, t + 1)]
    return Word(k, tuple(letters))


def braiding_word(m: int, n2: int) -> Word:
    """The block transposition braid in Br_{m+n2}.

    Run j (j = 1..n2) is the descending run sigma_{m+j-1} ... sigma_j; the
    word carries the first m strands over the last n2.
    """
    if m < 0 or n2 < 0:
        raise ValueError("block sizes must be >= 0")
    letters = [
        sigma(i) for j in range(1, n2 + 1) for i in range(m + j - 1, j - 1, -1)
    ]
    return Word(m + n2, tuple(letters))


def shift_word(w: Word, offset: int, new_n: int) -> Word:
    """Reindex every letter by +offset inside ambient count new_n."""
    letters = tuple(
        Letter(letter.kind, letter.index + offset) for letter in w.letters
    )
    return Word(new_n, letters)


@dataclasses.dataclass(frozen=True)
class RelationPair:
    left: Word
    right: Word
    tag: str

    def __post_init__(self):
        if self.left.n != self.right.n:
            raise ValueError("relation sides live on different strand counts")


def _word(n: int, *letters: Letter) -> Word:
    return Word(n, letters)


def _artin(n: int) -> list[RelationPair]:
    rels = []
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(RelationPair(
                _word(n, sigma(i), sigma(j)),
                _word(n, sigma(j), sigma(i)),
                f"braid-commute[i={i},j={j}]",
            ))
    for i in range(1, n - 1):
        rels.append(RelationPair(
            _word(n, sigma(i), sigma(i + 1), sigma(i)),
            _word(n, sigma(i + 1), sigma(i), sigma(i + 1)),
            f"braid-slide[i={i}]",
        ))
    return rels


def _sigma_inverses(n: int) -> list[RelationPair]:
    rels = []
    for i in range(1, n):
        rels.append(RelationPair(
            _word(n, sigma(i), sigma_inv(i)), _word(n), f"sigma-unit[i={i},lr]"
        ))
        rels.append(RelationPair(
            _word(n, sigma_inv(i), sigma(i)), _word(n), f"sigma-unit[i={i},rl]"
        ))
    return rels


def _eps1_relations(n: int) -> list[RelationPair]:
    """Relations of the one-idempotent presentation (epsilon = e1)."""
    e, s1 = epsilon(1), sigma(1)
    rels = [RelationPair(_word(n, e), _word(n, e, e), "eps-idempotent")]
    if n >= 2:
        rels.append(RelationPair(
            _word(n, e, s1, e), _word(n, s1, e, s1, e), "eps-sandwich[lhs]"
        ))
        rels.append(RelationPair(
            _word(n, e, s1, e), _word(n, e, s1, e, s1), "eps-sandwich[rhs]"
        ))
        rels.append(RelationPair(
            _word(n, e), _word(n, e, s1, s1), "eps-absorb[right]"
        ))
        rels.append(RelationPair(
            _word(n, e), _word(n, s1, s1, e), "eps-absorb[left]"
        ))
    for i in range(2, n):
        rels.append(RelationPair(
            _word(n, e, sigma(i)), _word(n, sigma(i), e), f"eps-commute[i={i}]"
        ))
    return rels


def _ibn_eps(n: int) -> list[RelationPair]:
    return _sigma_inverses(n) + _eps1_relations(n) + _artin(n)


def _ibn_balanced(n: int) -> list[RelationPair]:
    rels = _sigma_inverses(n)
    for i in range(1, n):
        for j in range(1, n + 1):
            if abs(j - i) > 1:
                rels.append(RelationPair(
                    _word(n, epsilon(j), sigma(i)),
                    _word(n, sigma(i), epsilon(j)),
                    f"eps-commute[i={i},j={j}]",
                ))
    for i in range(1, n):
        rels.append(RelationPair(
            _word(n, epsilon(i), sigma(i)),
            _word(n, sigma(i), epsilon(i + 1)),
            f"eps-slide-down[i={i}]",
        ))
        rels.append(RelationPair(
            _word(n, epsilon(i + 1), sigma(i)),
            _word(n, sigma(i), epsilon(i)),
            f"eps-slide-up[i={i}]",
        ))
    for i in range(1, n + 1):
        rels.append(RelationPair(
            _word(n, epsilon(i)), _word(n, epsilon(i), epsilon(i)),
            f"eps-idempotent[i={i}]",
        ))
    for i in range(1, n):
        square = _word(n, epsilon(i + 1), sigma(i), sigma(i))
        rels.append(RelationPair(
            square, _word(n, sigma(i), sigma(i), epsilon(i + 1)),
            f"eps-absorb[i={i},swap]",
        ))
        rels.append(RelationPair(
            square, _word(n, epsilon(i + 1)), f"eps-absorb[i={i}]"
        ))
        pair = _word(n, epsilon(i), epsilon(i + 1), sigma(i))
        rels.append(RelationPair(
            pair, _word(n, sigma(i), epsilon(i), epsilon(i + 1)),
            f"eps-pair[i={i},swap]",
        ))
        rels.append(RelationPair(
            pair, _word(n, epsilon(i), epsilon(i + 1)), f"eps-pair[i={i}]"
        ))
    return rels + _artin(n)


def _ibn_2gen(n: int) -> list[RelationPair]:
    e = _word(n, epsilon(1))
    rels = [RelationPair(e, e * e, "eps-idempotent")]
    if n < 2:
        return rels
    s1 = _word(n, sigma(1))
    s1i = _word(n, sigma_inv(1))
    s = Word(n, tuple(sigma(i) for i in range(1, n)))
    si = mirror_inverse(s)
    one = _word(n)
    rels += [
        RelationPair(s1 * s1i, one, "sigma1-unit[lr]"),
        RelationPair(s1i * s1, one, "sigma1-unit[rl]"),
        RelationPair(s * si, one, "cycle-unit[lr]"),
        RelationPair(si * s, one, "cycle-unit[rl]"),
        RelationPair(e * s1 * e, s1 * e * s1 * e, "eps-sandwich[lhs]"),
        RelationPair(e * s1 * e, e * s1 * e * s1, "eps-sandwich[rhs]"),
        RelationPair(e, e * s1 * s1, "eps-absorb[right]"),
        RelationPair(e, s1 * s1 * e, "eps-absorb[left]"),
    ]
    for i in range(1, n - 1):
        conj = (s ** i) * s1 * (si ** i)
        rels.append(RelationPair(e * conj, conj * e, f"eps-commute[i={i}]"))
    for i in range(2, n // 2 + 1):
        conj = (s ** i) * s1 * (si ** i)
        rels.append(RelationPair(s1 * conj, conj * s1, f"twogen-commute[i={i}]"))
    rels.append(RelationPair(s ** n, (s * s1) ** (n - 1), "twogen-power"))
    return rels


def _sym_inverse(n: int) -> list[RelationPair]:
    rels = _artin(n)
    for i in range(1, n):
        rels.append(RelationPair(
            _word(n, sigma(i), sigma(i)), _word(n), f"involution[i={i}]"
        ))
    e, s1 = epsilon(1), sigma(1)
    rels.append(RelationPair(_word(n, e), _word(n, e, e), "eps-idempotent"))
    if n >= 2:
        rels.append(RelationPair(
            _word(n, e, s1, e), _word(n, s1, e, s1, e), "eps-sandwich[lhs]"
        ))
        rels.append(RelationPair(
            _word(n, e, s1, e), _word(n, e, s1, e, s1), "eps-sandwich[rhs]"
        ))
    for i in range(2, n):
        rels.append(RelationPair(
            _word(n, e, sigma(i)), _word(n, sigma(i), e), f"eps-commute[i={i}]"
        ))
    return rels


def _ibp_mixed(n: int) -> list[RelationPair]:
    rels = []
    for i in range(1, n):
        rels.append(RelationPair(
            _word(n, xi(i), xi(i)), _word(n), f"xi-involution[i={i}]"
        ))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(RelationPair(
                _word(n, xi(i), xi(j)), _word(n, xi(j), xi(i)),
                f"xi-commute[i={i},j={j}]",
            ))
            rels.append(RelationPair(
                _word(n, sigma(i), xi(j)), _word(n, xi(j), sigma(i)),
                f"mixed-commute[i={i},j={j}]",
            ))
            rels.append(RelationPair(
                _word(n, sigma(j), xi(i)), _word(n, xi(i), sigma(j)),
                f"mixed-commute[i={j},j={i}]",
            ))
    for i in range(1, n - 1):
        rels.append(RelationPair(
            _word(n, xi(i), xi(i + 1), xi(i)),
            _word(n, xi(i + 1), xi(i), xi(i + 1)),
            f"xi-slide[i={i}]",
        ))
        rels.append(RelationPair(
            _word(n, xi(i), xi(i + 1), sigma(i)),
            _word(n, sigma(i + 1), xi(i), xi(i + 1)),
            f"mixed-slide[xi,i={i}]",
        ))
        rels.append(RelationPair(
            _word(n, sigma(i), sigma(i + 1), xi(i)),
            _word(n, xi(i + 1), sigma(i), sigma(i + 1)),
            f"mixed-slide[sigma,i={i}]",
        ))
    # epsilon against xi: the same pattern as against sigma
    for i in range(1, n):
        for j in range(1, n + 1):
            if abs(j - i) > 1:
                rels.append(RelationPair(
                    _word(n, epsilon(j), xi(i)),
                    _word(n, xi(i), epsilon(j)),
                    f"eps-xi-commute[i={i},j={j}]",
                ))
    for i in range(1, n):
        rels.append(RelationPair(
            _word(n, epsilon(i), xi(i)),
            _word(n, xi(i), epsilon(i + 1)),
            f"eps-xi-slide-down[i={i}]",
        ))
        rels.append(RelationPair(
            _word(n, epsilon(i + 1), xi(i)),
            _word(n, xi(i), epsilon(i)),
            f"eps-xi-slide-up[i={i}]",
        ))
        square = _word(n, epsilon(i + 1), xi(i), xi(i))
        rels.append(RelationPair(
            square, _word(n, xi(i), xi(i), epsilon(i + 1)),
            f"eps-xi-absorb[i={i},swap]",
        ))
        rels.append(RelationPair(
            square, _word(n, epsilon(i + 1)), f"eps-xi-absorb[i={i}]"
        ))
        pair = _word(n, epsilon(i), epsilon(i + 1), xi(i))
        rels.append(RelationPair(
            pair, _word(n, xi(i), epsilon(i), epsilon(i + 1)),
            f"eps-xi-pair[i={i},swap]",
        ))
        rels.append(RelationPair(
            pair, _word(n, epsilon(i), epsilon(i + 1)), f"eps-xi-pair[i={i}]"
        ))
    return rels + _ibn_balanced(n)


_SUITES = {
    "artin": _artin,
    "ibn-eps": _ibn_eps,
    "ibn-balanced": _ibn_balanced,
    "ibn-2gen": _ibn_2gen,
    "sym-inverse": _sym_inverse,
    "ibp-mixed": _ibp_mixed,
}

SUITE_IDS = tuple(_SUITES)

# sym-inverse only holds after projecting to partial injections; ibp-mixed
# needs the welded letters, which the normal-form engine does not cover.
SUITE_ENGINES = {
    "artin": "garside",
    "ibn-eps": "garside",
    "ibn-balanced": "garside",
    "ibn-2gen": "garside",
    "sym-inverse": "injection",
    "ibp-mixed": "action",
}


def relation_suite(suite_id: str, n: int) -> tuple[RelationPair, ...]:
    """All relation instances of the named presentation at size n."""
    if suite_id not in _SUITES:
        known = ", ".join(SUITE_IDS)
        raise ValueError(f"unknown presentation {suite_id!r} (known: {known})")
    if n < 1:
        raise ValueError(f"presentations need n >= 1, got {n}")
    return tuple(
        RelationPair(rel.left, rel.right, f"{suite_id}:{rel.tag}")
        for rel in _SUITES[suite_id](n)
    )
