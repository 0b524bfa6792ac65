"""Words over the integer alphabet ``[k] = {0, ..., k-1}``.

A :class:`Word` is an immutable letter tuple tagged with its alphabet size.
Letters are compared as integers, so ``0 < 1 < ... < k-1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    AlphabetMismatch,
    AlphabetTooSmall,
    EmptyWord,
    InvalidParameter,
    LetterOutOfRange,
)

MAX_ALPHABET = 2**31 - 1


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise AlphabetTooSmall(f"alphabet size must be >= 2, got {self.k!r}")
        if self.k > MAX_ALPHABET:
            raise InvalidParameter(f"alphabet size {self.k} exceeds {MAX_ALPHABET}")
        letters = tuple(int(c) for c in self.letters)
        for c in letters:
            if c < 0 or c >= self.k:
                raise LetterOutOfRange(f"letter {c} not in [0, {self.k})")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index], self.k)
        return self.letters[index]

    def __add__(self, other: Word) -> Word:
        _check_same_alphabet(self, other)
        return Word(self.letters + other.letters, self.k)

    def __mul__(self, times: int) -> Word:
        return Word(self.letters * times, self.k)

    def __lt__(self, other: Word) -> bool:
        return lex_compare(self, other) is Ordering.LESS

    def __le__(self, other: Word) -> bool:
        return lex_compare(self, other) is not Ordering.GREATER

    def __gt__(self, other: Word) -> bool:
        return lex_compare(self, other) is Ordering.GREATER

    def __ge__(self, other: Word) -> bool:
        return lex_compare(self, other) is not Ordering.LESS

    def __str__(self) -> str:
        return format_word(self)

    @classmethod
    def constant(cls, letter: int, length: int, k: int) -> Word:
        """The word ``letter^length``."""
        return cls((letter,) * length, k)


def make_word(letters: Iterable[int], k: int) -> Word:
    """Build a validated word; raises on a bad alphabet or letter."""
    return Word(tuple(letters), k)


def _check_same_alphabet(x: Word, y: Word) -> None:
    if x.k != y.k:
        raise AlphabetMismatch(f"alphabet sizes differ: {x.k} vs {y.k}")


def _require_nonempty(v: Word) -> None:
    if not v.letters:
        raise EmptyWord("operation undefined on the empty word")


def lex_compare(x: Word, y: Word) -> Ordering:
    """Lexicographic order where a proper prefix sorts first."""
    _check_same_alphabet(x, y)
    # tuple comparison already implements prefix-first lexicographic order
    if x.letters < y.letters:
        return Ordering.LESS
    if x.letters == y.letters:
        return Ordering.EQUAL
    return Ordering.GREATER


def rotate(v: Word, i: int) -> Word:
    """Apply the left rotation ``i`` times (``i`` taken modulo ``len(v)``)."""
    _require_nonempty(v)
    i %= len(v)
    return Word(v.letters[i:] + v.letters[:i], v.k)


def cyclic_order(v: Word) -> int:
    """Smallest ``d > 0`` with ``rotate(v, d) == v``; it always divides ``len(v)``."""
    _require_nonempty(v)
    n = len(v)
    s = v.letters
    for d in range(1, n + 1):
        if n % d == 0 and s[:d] * (n // d) == s:
            return d
    raise AssertionError("unreachable: d = n always matches")


def primitive_root(v: Word) -> Word:
    return v[: cyclic_order(v)]


def complement(v: Word) -> Word:
    """Map every letter ``c`` to ``k-1-c``; an involution."""
    top = v.k - 1
    return Word(tuple(top - c for c in v.letters), v.k)


def _totient(m: int) -> int:
    result = m
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def necklace_count(n: int, k: int) -> int:
    """Number of necklaces of length ``n`` over ``k`` letters (exact)."""
    if n < 1 or k < 2:
        raise InvalidParameter(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    total = sum(_totient(d) * k ** (n // d) for d in range(1, n + 1) if n % d == 0)
    assert total % n == 0
    return total // n


def format_word(v: Word | Sequence[int], k: int | None = None) -> str:
    """Digits when ``k <= 10``, otherwise comma-separated letter values."""
    if isinstance(v, Word):
        letters, k = v.letters, v.k
    else:
        letters = v
    if k is None:
        raise InvalidParameter("alphabet size required for a raw letter sequence")
    if k <= 10:
        return "".join(str(c) for c in letters)
    return ",".join(str(c) for c in letters)


def parse_word(text: str, k: int) -> Word:
    """Inverse of :func:`format_word`."""
    if k < 2:
        raise AlphabetTooSmall(f"alphabet size must be >= 2, got {k}")
    text = text.strip()
    if not text:
        return Word((), k)
    try:
        if k <= 10:
            letters = [int(ch) for ch in text]
        else:
            letters = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise LetterOutOfRange(f"cannot parse word {text!r} over k={k}") from exc
    return make_word(letters, k)
