"""Array kernels for the shift rule.

All functions take the FSR state as a 1-D int64 array ``s`` of length n and
an int64 array ``ops`` of length 1 that accumulates letter reads and
writes. They are compiled with numba when it is importable; the plain
Python versions stay reachable through ``.py_func``.

Most queries are about a *shifted* word ``x = s[1:] + [c]``: the state with
its first letter dropped and ``c`` appended. Working on that virtual word
avoids building a copy for every candidate last letter.
"""

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True, inline="always")
def _x_at(s, c, idx, ops):
    # letter idx of x = s[1:] + [c]
    ops[0] += 1
    if idx == s.shape[0] - 1:
        return c
    return s[idx + 1]


@njit(cache=True)
def _top_run(s, c, top, limit, ops):
    """Length of the leading run of ``top`` in x, capped at ``limit``."""
    t = 0
    while t < limit and _x_at(s, c, t, ops) == top:
        t += 1
    return t


@njit(cache=True)
def _duval_head(s, c, off, length, ops):
    """First inner Duval loop over ``y[j] = x[(off + j) % n]`` for ``j < length``.

    Returns ``(end, period)``: the scan reached ``end`` and the prefix
    ``y[:end]`` is a fractional power with Lyndon root ``y[:period]``.
    """
    n = s.shape[0]
    j = 1
    kk = 0
    while j < length:
        ia = off + kk
        if ia >= n:
            ia -= n
        ib = off + j
        if ib >= n:
            ib -= n
        a = _x_at(s, c, ia, ops)
        b = _x_at(s, c, ib, ops)
        if a > b:
            break
        if a < b:
            kk = 0
        else:
            kk += 1
        j += 1
    return j, j - kk


@njit(cache=True)
def head_shifted(s, c, k, ops):
    """Necklace-head test for ``x = s[1:] + [c]``."""
    n = s.shape[0]
    top = k - 1
    if c == top:
        return False
    t = _top_run(s, c, top, n - 1, ops)
    end, period = _duval_head(s, c, t, n, ops)
    # rotate(x, t) is a power of its first Lyndon factor
    return end == n and n % period == 0


@njit(cache=True)
def _all_top(s, top, ops):
    for i in range(s.shape[0]):
        ops[0] += 1
        if s[i] != top:
            return False
    return True


@njit(cache=True)
def next_min_letter(s, k, ops):
    """The letter appended by the prefer-min shift rule, plus a branch code.

    Branch codes: 1 raise last letter, 2 the all-(k-1) state, 3 return
    sigma', 4 return sigma'+1, 5 repeat the dropped letter.
    """
    n = s.shape[0]
    top = k - 1
    ops[0] += 1
    sigma = s[0]
    if sigma < top and head_shifted(s, sigma, k, ops):
        return sigma + 1, 1
    if sigma == top and _all_top(s, top, ops):
        return 0, 2
    if sigma == top and head_shifted(s, k - 2, k, ops):
        # w = s[1:] = top^t w', and w' is a pre-necklace u^m v
        t = _top_run(s, 0, top, n - 1, ops)
        length = n - 1 - t
        end, period = _duval_head(s, 0, t, length, ops)
        assert end == length
        vlen = length % period
        ops[0] += 1
        sp = s[1 + t + vlen]
        assert sp <= k - 2
        if head_shifted(s, sp, k, ops):
            return sp, 3
        assert sp + 1 <= k - 2
        return sp + 1, 4
    return sigma, 5


@njit(cache=True)
def _shift_in(s, letter, ops):
    n = s.shape[0]
    for i in range(n - 1):
        s[i] = s[i + 1]
    s[n - 1] = letter
    ops[0] += 2 * n - 1


@njit(cache=True)
def _complement(s, k, ops):
    top = k - 1
    for i in range(s.shape[0]):
        s[i] = top - s[i]
    ops[0] += 2 * s.shape[0]


@njit(cache=True)
def next_min_inplace(s, k, ops):
    letter, branch = next_min_letter(s, k, ops)
    _shift_in(s, letter, ops)
    return branch


@njit(cache=True)
def next_max_inplace(s, k, ops):
    _complement(s, k, ops)
    branch = next_min_inplace(s, k, ops)
    _complement(s, k, ops)
    return branch


@njit(cache=True)
def run_fsr(s, k, steps, prefer_max, ops):
    """Advance the state ``steps`` times in place."""
    for _ in range(steps):
        if prefer_max:
            next_max_inplace(s, k, ops)
        else:
            next_min_inplace(s, k, ops)


@njit(cache=True)
def fill_letters(s, k, out, prefer_max, ops):
    """Write ``len(out)`` sequence letters into ``out``, advancing the state."""
    for i in range(out.shape[0]):
        out[i] = s[0]
        if prefer_max:
            next_max_inplace(s, k, ops)
        else:
            next_min_inplace(s, k, ops)


def as_state(letters) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(letters, dtype=np.int64))


def new_ops() -> np.ndarray:
    return np.zeros(1, dtype=np.int64)
