"""Slow reference implementations.

These follow the definitions as literally as possible and make no attempt
at speed. They back the test suite and the ``verify --engine greedy`` CLI
path.
"""

from __future__ import annotations

import enum
import itertools

from .errors import CapExceeded, EmptyWord, InvalidParameter
from .words import Ordering, Word, lex_compare, rotate

DEFAULT_SEQUENCE_CAP = 2**24
DEFAULT_WORK_CAP = 2**26


class SequenceOrder(enum.Enum):
    PREFER_MIN = "min"
    PREFER_MAX = "max"

    @classmethod
    def parse(cls, value) -> SequenceOrder:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidParameter(f"order must be 'min' or 'max', got {value!r}") from None


def _check_nk(n: int, k: int) -> None:
    if n < 1 or k < 2:
        raise InvalidParameter(f"need n >= 1 and k >= 2, got n={n}, k={k}")


def greedy_sequence(n: int, k: int, order=SequenceOrder.PREFER_MIN, cap: int = DEFAULT_SEQUENCE_CAP) -> Word:
    """Build the sequence one letter at a time, never repeating a window.

    For prefer-min: seed with ``(k-1)^n``, always append the smallest letter
    whose new window is unseen, stop at ``k^n`` letters, then move the seed
    to the end. Prefer-max is the mirror image (seed ``0^n``, largest
    letter first).
    """
    _check_nk(n, k)
    order = SequenceOrder.parse(order)
    total = k**n
    if total > cap:
        raise CapExceeded(f"k^n = {total} exceeds cap {cap}")
    prefer_min = order is SequenceOrder.PREFER_MIN
    seed = k - 1 if prefer_min else 0
    candidates = range(k) if prefer_min else range(k - 1, -1, -1)
    high = k ** (n - 1)

    seen = bytearray(total)
    window = sum(seed * k**i for i in range(n))
    seen[window] = 1
    seq = [seed] * n
    while len(seq) < total:
        base = (window % high) * k
        for c in candidates:
            if not seen[base + c]:
                break
        else:
            raise AssertionError("greedy construction got stuck")
        window = base + c
        seen[window] = 1
        seq.append(c)
    return Word(seq[n:] + seq[:n], k)


def head_naive(v: Word) -> bool:
    """Necklace-head predicate evaluated straight from its definition."""
    if len(v) == 0:
        raise EmptyWord("head undefined on the empty word")
    top = v.k - 1
    n = len(v)
    t = 0
    while t < n and v[t] == top:
        t += 1
    if t == n or v[n - 1] == top:
        return False
    r = rotate(v, t)
    return all(lex_compare(r, rotate(r, i)) is not Ordering.GREATER for i in range(1, n))


def min_s_naive(s: Word) -> int | None:
    """Smallest ``σ'' <= k-2`` with ``head(w σ'')``, or None when there is none."""
    w = s.letters[1:]
    for c in range(s.k - 1):
        if head_naive(Word(w + (c,), s.k)):
            return c
    return None


def next_naive(s: Word) -> Word:
    """Three-case successor, with the minimum found by scanning every letter."""
    if len(s) == 0:
        raise EmptyWord("next undefined on the empty word")
    sigma, w = s.letters[0], s.letters[1:]
    top = s.k - 1
    if sigma != top and head_naive(Word(w + (sigma,), s.k)):
        return Word(w + (sigma + 1,), s.k)
    if sigma == top:
        least = min_s_naive(s)
        if least is not None:
            return Word(w + (least,), s.k)
    return Word(w + (sigma,), s.k)


def all_words(n: int, k: int):
    """Every word of length ``n`` over ``[k]`` in lexicographic order."""
    for letters in itertools.product(range(k), repeat=n):
        yield Word(letters, k)


def enumerate_expanded_lyndon(n: int, k: int, cap: int = DEFAULT_WORK_CAP) -> list[Word]:
    """All words that are least among their rotations, in increasing order."""
    _check_nk(n, k)
    if n * k**n > cap:
        raise CapExceeded(f"n*k^n = {n * k**n} exceeds cap {cap}")
    found = []
    for v in all_words(n, k):
        if all(lex_compare(v, rotate(v, i)) is not Ordering.GREATER for i in range(1, n)):
            found.append(v)
    return found

