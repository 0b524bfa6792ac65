"""Lyndon factorization and the predicates built on it.

Everything here is driven by Duval's algorithm, which splits any nonempty
word into a nonincreasing product of Lyndon words in linear time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyWord, NotPreNecklace
from .words import Word


def duval(s: Sequence[int]) -> list[tuple[int, int]]:
    """Return the Lyndon factorization of ``s`` as ``(offset, length)`` spans.

    ``s`` only needs ``len`` and integer indexing, so any sequence works
    (including :class:`~debruijn_shift.instrument.CountingSequence`).
    """
    n = len(s)
    spans = []
    i = 0
    while i < n:
        j = i + 1
        kk = i
        while j < n:
            a = s[kk]
            b = s[j]
            if a > b:
                break
            kk = i if a < b else kk + 1
            j += 1
        period = j - kk
        while i <= kk:
            spans.append((i, period))
            i += period
    return spans


@dataclass(frozen=True)
class CflFactorization:
    """Factors are stored as spans into ``word`` rather than copies."""

    word: Word
    spans: tuple[tuple[int, int], ...]

    @property
    def factors(self) -> list[Word]:
        return [self.word[o : o + ln] for o, ln in self.spans]

    def __len__(self):
        return len(self.spans)

    def __iter__(self):
        return iter(self.factors)

    def __str__(self):
        return "·".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class FractionalPower:
    u: Word
    m: int
    v: Word

    def expand(self) -> Word:
        return self.u * self.m + self.v


def _require_nonempty(w: Word) -> None:
    if len(w) == 0:
        raise EmptyWord("operation undefined on the empty word")


def cfl_factorize(w: Word) -> CflFactorization:
    _require_nonempty(w)
    return CflFactorization(w, tuple(duval(w.letters)))


def is_lyndon(w: Word) -> bool:
    return len(cfl_factorize(w)) == 1


def is_expanded_lyndon(w: Word) -> bool:
    """True iff ``w`` is a power of a single Lyndon word.

    Factors are nonincreasing, so first == last already forces all equal.
    """
    _require_nonempty(w)
    s = w.letters
    spans = duval(s)
    (o0, l0), (o1, l1) = spans[0], spans[-1]
    return l0 == l1 and s[o0 : o0 + l0] == s[o1 : o1 + l1]


def fractional_power_decompose(w: Word) -> FractionalPower:
    """Write a pre-necklace as ``u^m v`` with ``u`` Lyndon and ``v`` a proper prefix of ``u``."""
    _require_nonempty(w)
    s = w.letters
    _, p = duval(s)[0]
    u = s[:p]
    m = 1
    while s[m * p : (m + 1) * p] == u:
        m += 1
    v = s[m * p :]
    if len(v) >= p or u[: len(v)] != v:
        raise NotPreNecklace(f"{w} is not a pre-necklace")
    return FractionalPower(Word(u, w.k), m, Word(v, w.k))


def is_prenecklace(w: Word) -> bool:
    try:
        fractional_power_decompose(w)
    except NotPreNecklace:
        return False
    return True
