"""Timing and operation-count harness for the in-place shift rule."""

from __future__ import annotations

import statistics
import time

import numpy as np

from . import _kernels as K
from .errors import InvalidParameter


def _warm_state(n: int, k: int, warmup: int) -> np.ndarray:
    state = np.zeros(n, dtype=np.int64)
    K.run_fsr(state, k, warmup, False, K.new_ops())
    return state


def time_next_min(n: int, k: int, samples: int = 10_000, warmup: int = 1_000, repeats: int = 3) -> float:
    """Mean nanoseconds per ``next_min`` call at order ``n``.

    The FSR is run from ``0^n`` for ``warmup`` steps, then ``samples``
    consecutive steps are timed as one batch. The median over ``repeats``
    batches is returned.
    """
    if n < 1 or k < 2 or samples < 1:
        raise InvalidParameter("need n >= 1, k >= 2 and samples >= 1")
    state = _warm_state(n, k, warmup)
    ops = K.new_ops()
    means = []
    for _ in range(repeats):
        start = time.perf_counter_ns()
        K.run_fsr(state, k, samples, False, ops)
        means.append((time.perf_counter_ns() - start) / samples)
    return statistics.median(means)


def bench(k: int, n_list, samples: int = 10_000, warmup: int = 1_000) -> dict[int, float]:
    # compile outside the timed region
    K.run_fsr(np.zeros(2, dtype=np.int64), k, 1, False, K.new_ops())
    return {n: time_next_min(n, k, samples, warmup) for n in n_list}


def ops_per_call(state: np.ndarray, k: int) -> int:
    """Letter reads and writes for one in-place step on a copy of ``state``."""
    ops = K.new_ops()
    K.next_min_inplace(state.copy(), k, ops)
    return int(ops[0])
