"""Reindexed Perrin sequence: values, parities, and even-term counts.

The sequence used throughout this package starts 0, 3, 0, 2, 3, 2, 5, ...
with every later term the sum of the terms two and three places back.
Indexing is fixed to this convention; the classical offset (3, 0, 2, ...)
is deliberately not offered, to avoid silent off-by-one drift.

Only parities ever reach the edge-labeling machinery, so parity queries
run on a separate mod-2 memo and never materialize the big integers.
"""

from __future__ import annotations

import enum
import threading

_SEEDS = (0, 3, 0, 2)


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1

    @classmethod
    def of(cls, value: int) -> "Parity":
        return cls(value % 2)

    def flipped(self) -> "Parity":
        return Parity(1 - self.value)


class PerrinSequence:
    """Memoized sequence values and parities, indexed from 0.

    Extension of the memo tables is lock-protected, so a shared instance
    behaves as a pure function under concurrent readers.
    """

    def __init__(self) -> None:
        self._values = list(_SEEDS)
        self._parities = [v % 2 for v in _SEEDS]
        self._lock = threading.Lock()

    def _grow_values(self, i: int) -> None:
        with self._lock:
            vals = self._values
            while len(vals) <= i:
                vals.append(vals[-2] + vals[-3])

    def _grow_parities(self, i: int) -> None:
        with self._lock:
            pars = self._parities
            while len(pars) <= i:
                pars.append((pars[-2] + pars[-3]) % 2)

    def value(self, i: int) -> int:
        if i < 0:
            raise ValueError(f"sequence index must be >= 0, got {i}")
        if i >= len(self._values):
            self._grow_values(i)
        return self._values[i]

    def parity(self, i: int) -> Parity:
        if i < 0:
            raise ValueError(f"sequence index must be >= 0, got {i}")
        if i >= len(self._parities):
            self._grow_parities(i)
        return Parity(self._parities[i])

    def even_count_scan(self, n: int) -> int:
        """Count even terms among indices 0..n by direct parity scan."""
        if n < 0:
            raise ValueError(f"count bound must be >= 0, got {n}")
        self.parity(n)
        return self._parities[: n + 1].count(0)

    def even_indices(self, n: int) -> list[int]:
        """Ascending list of indices i <= n whose term is even."""
        if n < 0:
            raise ValueError(f"count bound must be >= 0, got {n}")
        self.parity(n)
        return [i for i in range(n + 1) if self._parities[i] == 0]


_shared = PerrinSequence()


def perrin_value(i: int) -> int:
    """Term at index i of the reindexed sequence (arbitrary precision)."""
    return _shared.value(i)


def perrin_parity(i: int) -> Parity:
    """Parity of the term at index i, computed without the big value."""
    return _shared.parity(i)


def even_count(n: int) -> int:
    """Closed-form count of even terms among indices 0..n.

    Piecewise on n = 7p + r: r in {0,1} -> 3p+1; r = 2 -> 3p+2;
    r in {3,4} -> 3p+3; r in {5,6} -> 3p+4.
    """
    if n < 0:
        raise ValueError(f"count bound must be >= 0, got {n}")
    p, r = divmod(n, 7)
    if r <= 1:
        return 3 * p + 1
    if r == 2:
        return 3 * p + 2
    if r <= 4:
        return 3 * p + 3
    return 3 * p + 4


def even_count_scan(n: int) -> int:
    """Independent oracle for even_count: direct scan of parities."""
    return _shared.even_count_scan(n)


def even_indices(n: int) -> list[int]:
    return _shared.even_indices(n)


def odd_indices(n: int) -> list[int]:
    """Ascending list of indices i <= n whose term is odd."""
    if n < 0:
        raise ValueError(f"count bound must be >= 0, got {n}")
    _shared.parity(n)
    return [i for i in range(n + 1) if _shared._parities[i] == 1]
