"""The prefer-min shift rule and its prefer-max conjugate.

``next_min`` maps an FSR state ``σw`` to ``wσ'``, the next window of the
lexicographically smallest De Bruijn sequence. It runs in time and memory
linear in the state length and never touches anything sized by ``k``.
"""

from __future__ import annotations

import enum

import numpy as np

from . import _kernels as K
from .errors import EmptyWord, InvalidParameter
from .lyndon import fractional_power_decompose
from .words import Word, complement


class Branch(enum.IntEnum):
    """Which return path of the shift rule produced the new letter."""

    RAISE = 1  # head(wσ): append σ+1
    ALL_TOP = 2  # state (k-1)^n: append 0
    SIGMA_PRIME = 3  # append σ'
    SIGMA_PRIME_PLUS_ONE = 4  # append σ'+1
    REPEAT = 5  # append σ


def _require_nonempty(v: Word) -> None:
    if len(v) == 0:
        raise EmptyWord("shift rule needs a nonempty state")


def head(v: Word) -> bool:
    """Whether ``v`` is the necklace head of its rotation class.

    ``v = (k-1)^t w σ`` is a head when ``σ <= k-2``, ``t`` is the full
    leading run of ``k-1``, and ``w σ (k-1)^t`` is a power of a Lyndon word.
    False for ``(k-1)^n`` and for any word ending in ``k-1``.
    """
    _require_nonempty(v)
    # head_shifted looks at s[1:] + [c]; pad a dummy first letter
    s = K.as_state((0,) + v.letters[:-1])
    return bool(K.head_shifted(s, v.letters[-1], v.k, K.new_ops()))


def next_min_with_branch(s: Word) -> tuple[Word, Branch]:
    _require_nonempty(s)
    buf = K.as_state(s.letters)
    letter, branch = K.next_min_letter(buf, s.k, K.new_ops())
    return Word(s.letters[1:] + (int(letter),), s.k), Branch(branch)


def next_min(s: Word) -> Word:
    """Successor of state ``s`` in the prefer-min sequence."""
    return next_min_with_branch(s)[0]


def next_max(s: Word) -> Word:
    """Successor of state ``s`` in the prefer-max sequence."""
    return complement(next_min(complement(s)))


def next_min_inplace(buf: np.ndarray, k: int) -> None:
    """Overwrite an int64 state buffer with its prefer-min successor."""
    _check_buffer(buf, k)
    K.next_min_inplace(buf, k, K.new_ops())


def next_max_inplace(buf: np.ndarray, k: int) -> None:
    _check_buffer(buf, k)
    K.next_max_inplace(buf, k, K.new_ops())


def _check_buffer(buf: np.ndarray, k: int) -> None:
    if not isinstance(buf, np.ndarray) or buf.dtype != np.int64 or buf.ndim != 1:
        raise InvalidParameter("state buffer must be a 1-D int64 numpy array")
    if buf.shape[0] == 0:
        raise EmptyWord("shift rule needs a nonempty state")
    if k < 2:
        raise InvalidParameter(f"alphabet size must be >= 2, got {k}")


def count_next_min_ops(s: Word) -> int:
    """Number of letter reads and writes one in-place ``next_min`` step performs."""
    _require_nonempty(s)
    ops = K.new_ops()
    K.next_min_inplace(K.as_state(s.letters), s.k, ops)
    return int(ops[0])


def sigma_prime(s: Word) -> int:
    """The candidate letter ``σ'`` for a state ``(k-1) w`` whose ``w`` is not all ``k-1``.

    Strip the leading ``k-1`` run from ``w``, decompose the rest as
    ``u^m v`` and read the letter at index ``len(v)``. Computed through the
    word-level Lyndon routines, independently of the kernels.
    """
    w = s[1:]
    top = s.k - 1
    t = 0
    while t < len(w) and w[t] == top:
        t += 1
    rest = w[t:]
    if len(rest) == 0:
        raise InvalidParameter("σ' is undefined when w is all k-1")
    fp = fractional_power_decompose(rest)
    return rest[len(fp.v)]
