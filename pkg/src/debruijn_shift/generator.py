"""Streaming sequence generation and the De Bruijn window check."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import islice
from typing import BinaryIO, Iterable, Iterator, TextIO

import numpy as np

from . import _kernels as K
from .errors import CapExceeded, InvalidParameter, LengthMismatch
from .instrument import Counter, CountingSequence
from .oracles import DEFAULT_SEQUENCE_CAP, SequenceOrder, greedy_sequence
from .words import Word

ENGINES = ("fsr", "fkm", "greedy")
FORMATS = ("digits", "csv", "binary")


def _check_nk(n: int, k: int) -> None:
    if n < 1 or k < 2:
        raise InvalidParameter(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    if k > 2**31 - 1:
        raise InvalidParameter(f"alphabet size {k} too large")


class GeneratorCursor:
    """A running FSR: holds the current window and how many letters came out.

    Iterating yields letters forever; the output repeats with period ``k^n``.
    A cursor is single-owner state and must not be shared between threads.
    """

    def __init__(self, n: int, k: int, order=SequenceOrder.PREFER_MIN):
        _check_nk(n, k)
        self.n = n
        self.k = k
        self.order = SequenceOrder.parse(order)
        start = 0 if self.order is SequenceOrder.PREFER_MIN else k - 1
        self._state = np.full(n, start, dtype=np.int64)
        self._ops = K.new_ops()
        self.emitted = 0

    @property
    def prefer_max(self) -> bool:
        return self.order is SequenceOrder.PREFER_MAX

    @property
    def state(self) -> Word:
        return Word(tuple(int(c) for c in self._state), self.k)

    @property
    def period(self) -> int:
        return self.k**self.n

    def __iter__(self) -> Iterator[int]:
        return self

    def __next__(self) -> int:
        letter = int(self._state[0])
        if self.prefer_max:
            K.next_max_inplace(self._state, self.k, self._ops)
        else:
            K.next_min_inplace(self._state, self.k, self._ops)
        self.emitted += 1
        return letter

    def take(self, count: int) -> np.ndarray:
        """The next ``count`` letters as an int64 array (bulk path)."""
        out = np.empty(count, dtype=np.int64)
        K.fill_letters(self._state, self.k, out, self.prefer_max, self._ops)
        self.emitted += count
        return out

    def __repr__(self):
        return (
            f"GeneratorCursor(n={self.n}, k={self.k}, order={self.order.value}, "
            f"emitted={self.emitted})"
        )


def fsr_stream(n: int, k: int, order=SequenceOrder.PREFER_MIN) -> GeneratorCursor:
    """Lazily produce the sequence by iterating the shift rule from ``0^n`` (or ``(k-1)^n``)."""
    return GeneratorCursor(n, k, order)


def fkm_sequence(n: int, k: int, order=SequenceOrder.PREFER_MIN, counter: Counter | None = None) -> Iterator[int]:
    """Concatenate the Lyndon words whose length divides ``n``, in increasing order.

    Pre-necklaces are visited in lexicographic order: drop the trailing
    run of ``k-1``, raise the last remaining letter, then extend
    periodically with the new prefix (the smallest continuation that keeps
    a pre-necklace). Whenever the period divides ``n`` the period block is
    the next Lyndon root. Pass ``counter`` to tally letter operations.
    """
    _check_nk(n, k)
    order = SequenceOrder.parse(order)
    top = k - 1
    flip = order is SequenceOrder.PREFER_MAX
    a = [0] * n if counter is None else CountingSequence([0] * n, counter)

    yield top if flip else 0
    while True:
        i = n - 1
        while i >= 0 and a[i] == top:
            i -= 1
        if i < 0:
            return
        a[i] = a[i] + 1
        for j in range(i + 1, n):
            a[j] = a[j - i - 1]
        p = i + 1
        if n % p == 0:
            for c in a[:p]:
                yield top - c if flip else c


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    first: int | None = None
    second: int | None = None

    def __bool__(self):
        return self.valid

    def __str__(self):
        if self.valid:
            return "Valid"
        return f"duplicate windows at positions ({self.first}, {self.second})"


def verify_debruijn(seq: Word | Iterable[int], n: int, k: int | None = None, cap: int = DEFAULT_SEQUENCE_CAP) -> VerificationReport:
    """Check that all cyclic length-``n`` windows of ``seq`` are distinct.

    Reports the earliest position whose window repeats, paired with the
    position where that window first appeared.
    """
    if isinstance(seq, Word):
        letters, k = list(seq.letters), seq.k
    else:
        letters = [int(c) for c in seq]
        if k is None:
            raise InvalidParameter("alphabet size required for a raw letter sequence")
    _check_nk(n, k)
    total = k**n
    if total > cap:
        raise CapExceeded(f"k^n = {total} exceeds cap {cap}")
    if len(letters) != total:
        raise LengthMismatch(f"sequence length {len(letters)} != k^n = {total}")

    def windows():
        high = k ** (n - 1)
        value = 0
        for i in range(n):
            value = value * k + letters[i % total]
        for i in range(total):
            yield i, value
            value = (value % high) * k + letters[(i + n) % total]

    seen = bytearray(total)
    for i, value in windows():
        if seen[value]:
            first = next(j for j, v in windows() if v == value)
            return VerificationReport(False, first, i)
        seen[value] = 1
    return VerificationReport(True)


def generate(n: int, k: int, order=SequenceOrder.PREFER_MIN, engine: str = "fsr", limit: int | None = None, cap: int = DEFAULT_SEQUENCE_CAP) -> Iterator[int]:
    """Letters from the chosen engine; ``limit`` defaults to one full period.

    ``fsr`` may run past one period (the sequence repeats); ``fkm`` and
    ``greedy`` stop after ``k^n`` letters.
    """
    _check_nk(n, k)
    if engine not in ENGINES:
        raise InvalidParameter(f"engine must be one of {ENGINES}, got {engine!r}")
    if limit is None:
        limit = k**n
    if limit < 0:
        raise InvalidParameter("limit must be nonnegative")
    if engine == "fsr":
        return _fsr_chunks(fsr_stream(n, k, order), limit)
    if engine == "fkm":
        return islice(fkm_sequence(n, k, order), limit)
    return islice(iter(greedy_sequence(n, k, order, cap=cap).letters), limit)


def _fsr_chunks(cursor: GeneratorCursor, limit: int, chunk: int = 1 << 14) -> Iterator[int]:
    remaining = limit
    while remaining > 0:
        block = cursor.take(min(chunk, remaining))
        remaining -= len(block)
        yield from block.tolist()


def materialize(n: int, k: int, order=SequenceOrder.PREFER_MIN, engine: str = "fsr", cap: int = DEFAULT_SEQUENCE_CAP) -> Word:
    """One full period as a :class:`Word`; refuses ``k^n`` above ``cap``."""
    _check_nk(n, k)
    if k**n > cap:
        raise CapExceeded(f"k^n = {k**n} exceeds cap {cap}")
    return Word(tuple(generate(n, k, order, engine, cap=cap)), k)


def write_letters(letters: Iterable[int], k: int, fmt: str = "digits", out: TextIO | BinaryIO | None = None, chunk: int = 1 << 14) -> None:
    """Serialize letters as ``digits`` (k <= 10), ``csv`` or raw ``binary`` octets (k <= 256)."""
    if fmt not in FORMATS:
        raise InvalidParameter(f"format must be one of {FORMATS}, got {fmt!r}")
    if fmt == "digits" and k > 10:
        raise InvalidParameter("digits format needs k <= 10")
    if fmt == "binary" and k > 256:
        raise InvalidParameter("binary format needs k <= 256")
    if out is None:
        out = sys.stdout.buffer if fmt == "binary" else sys.stdout
    it = iter(letters)
    first = True
    while True:
        block = list(islice(it, chunk))
        if not block:
            break
        if fmt == "binary":
            out.write(bytes(block))
        elif fmt == "digits":
            out.write("".join(map(str, block)))
        else:
            out.write(("" if first else ",") + ",".join(map(str, block)))
        first = False
    if fmt != "binary":
        out.write("\n")
