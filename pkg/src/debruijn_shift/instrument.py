"""Letter-access counting for complexity checks.

:class:`CountingSequence` wraps a list and counts every letter read or
written through it, including letters touched by slicing and equality
tests. Algorithms written against plain indexing can be handed one of
these instead of a list to measure how many letter operations they do.
"""

from __future__ import annotations


class Counter:
    __slots__ = ("reads", "writes")

    def __init__(self):
        self.reads = 0
        self.writes = 0

    @property
    def total(self) -> int:
        return self.reads + self.writes

    def __repr__(self):
        return f"Counter(reads={self.reads}, writes={self.writes})"


class CountingSequence:
    __slots__ = ("_data", "counter")

    def __init__(self, data, counter: Counter | None = None):
        self._data = list(data)
        self.counter = counter if counter is not None else Counter()

    def __len__(self):
        return len(self._data)

    def __getitem__(self, index):
        if isinstance(index, slice):
            part = self._data[index]
            self.counter.reads += len(part)
            return CountingSequence(part, self.counter)
        self.counter.reads += 1
        return self._data[index]

    def __setitem__(self, index, value):
        if isinstance(index, slice):
            value = list(value)
            self.counter.writes += len(value)
        else:
            self.counter.writes += 1
        self._data[index] = value

    def __iter__(self):
        for c in self._data:
            self.counter.reads += 1
            yield c

    def __eq__(self, other):
        other_data = other._data if isinstance(other, CountingSequence) else list(other)
        self.counter.reads += min(len(self._data), len(other_data))
        return self._data == other_data

    def __add__(self, other):
        other_data = other._data if isinstance(other, CountingSequence) else list(other)
        self.counter.writes += len(self._data) + len(other_data)
        return CountingSequence(self._data + other_data, self.counter)

    def tolist(self) -> list:
        return list(self._data)

    def __repr__(self):
        return f"CountingSequence({self._data!r}, {self.counter!r})"
