import itertools

import pytest

from debruijn_shift.words import Word, parse_word

# every (n, k) with k^n <= 6561; n = 1 is capped at k <= 81
SMALL_CASES = [
    (n, k)
    for n in range(1, 14)
    for k in range(2, 82)
    if k**n <= 6561
]

# the grid used for stream-equivalence checks
STREAM_CASES = (
    [(n, 2) for n in range(2, 13)]
    + [(n, 3) for n in range(2, 8)]
    + [(n, 4) for n in range(2, 6)]
    + [(2, k) for k in range(3, 9)]
    + [(3, k) for k in range(3, 7)]
)


def W(text, k):
    return parse_word(text, k)


def words_of(n, k):
    for letters in itertools.product(range(k), repeat=n):
        yield Word(letters, k)


def rotations(letters):
    return [letters[i:] + letters[:i] for i in range(len(letters))]


def least_rotation_ok(letters):
    """True iff no rotation is smaller (power of a Lyndon word)."""
    return all(letters <= r for r in rotations(letters))


def strict_least_rotation(letters):
    """True iff strictly smaller than every nontrivial rotation (Lyndon)."""
    return all(letters < r for r in rotations(letters)[1:])


def brute_prenecklace(letters, k):
    """Search extensions up to ``len(letters)`` letters for a necklace."""
    for extra in range(len(letters) + 1):
        for tail in itertools.product(range(k), repeat=extra):
            if least_rotation_ok(letters + tail):
                return True
    return False


_ACCEPTANCE = []


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
