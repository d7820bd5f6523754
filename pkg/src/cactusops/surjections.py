"""Basis elements of the surjection operad.

A basis element is a finite sequence of positive integers that is
surjective onto {1, ..., n} and has no two equal adjacent entries.  The
arity n is the number of distinct values and the degree k is the number
of "extra" entries, k = length - n.  All positions and values in the
public API are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import (
    DegenerateError,
    NonPositiveError,
    NotSurjectiveError,
    OutOfRangeError,
)

__all__ = [
    "Surjection",
    "OccurrenceInfo",
    "relative_degree",
    "occurrence_info",
    "insert_top_lobe",
    "recurrence_prefix",
]


class Surjection:
    """An immutable non-degenerate surjective sequence.

    The constructor validates; equality, hashing and ordering are by the
    underlying value sequence (lexicographic).
    """

    __slots__ = ("seq", "arity", "degree")

    seq: tuple[int, ...]
    arity: int
    degree: int

    def __init__(self, seq: Iterable[int]):
        values = tuple(seq)
        if not values:
            raise NotSurjectiveError("empty sequence")
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise NonPositiveError(f"entry {v!r} is not a positive integer")
        for a, b in zip(values, values[1:]):
            if a == b:
                raise DegenerateError(f"adjacent equal entries {a} in {values}")
        n = max(values)
        seen = set(values)
        if len(seen) != n:
            missing = min(set(range(1, n + 1)) - seen)
            raise NotSurjectiveError(f"value {missing} missing from {values}")
        object.__setattr__(self, "seq", values)
        object.__setattr__(self, "arity", n)
        object.__setattr__(self, "degree", len(values) - n)

    @classmethod
    def _unchecked(cls, seq: tuple[int, ...], arity: int, degree: int) -> "Surjection":
        # Internal fast path for sequences already known to be valid.
        obj = object.__new__(cls)
        object.__setattr__(obj, "seq", seq)
        object.__setattr__(obj, "arity", arity)
        object.__setattr__(obj, "degree", degree)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Surjection is immutable")

    def __len__(self) -> int:
        return len(self.seq)

    def value(self, i: int) -> int:
        """The entry u(i) at 1-based position i."""
        if not 1 <= i <= len(self.seq):
            raise OutOfRangeError(f"position {i} not in 1..{len(self.seq)}")
        return self.seq[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Surjection) and self.seq == other.seq

    def __hash__(self) -> int:
        return hash(self.seq)

    def __lt__(self, other: "Surjection") -> bool:
        return self.seq < other.seq

    def __le__(self, other: "Surjection") -> bool:
        return self.seq <= other.seq

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.seq) + ")"

    def __repr__(self) -> str:
        return f"Surjection({self.seq!r})"


@dataclass(frozen=True)
class OccurrenceInfo:
    """How the entry at one position relates to other occurrences of its value."""

    is_only: bool
    is_last: bool
    penultimate: Optional[int]  # previous occurrence when is_last and not is_only


def relative_degree(u: Surjection, a: int, b: int) -> int:
    """Number of positions in [a, b-1] whose value recurs later in all of u.

    "Later" means anywhere after the position, not just inside the window.
    The full window [1, len(u)] gives the degree of u.
    """
    size = len(u.seq)
    if not (1 <= a <= b <= size):
        raise OutOfRangeError(f"window [{a},{b}] not within 1..{size}")
    seq = u.seq
    count = 0
    for i in range(a - 1, b - 1):
        v = seq[i]
        for j in range(i + 1, size):
            if seq[j] == v:
                count += 1
                break
    return count


def recurrence_prefix(seq: tuple[int, ...]) -> list[int]:
    """prefix[m] = number of the first m positions whose value recurs later.

    relative_degree(u, 1, i) equals prefix[i - 1].
    """
    size = len(seq)
    recurs = [False] * size
    last_seen: dict[int, int] = {}
    for i in range(size - 1, -1, -1):
        v = seq[i]
        if v in last_seen:
            recurs[i] = True
        last_seen[v] = i
    prefix = [0] * (size + 1)
    acc = 0
    for i in range(size):
        if recurs[i]:
            acc += 1
        prefix[i + 1] = acc
    return prefix


def occurrence_info(u: Surjection, i: int) -> OccurrenceInfo:
    """Classify position i among the occurrences of its own value."""
    size = len(u.seq)
    if not 1 <= i <= size:
        raise OutOfRangeError(f"position {i} not in 1..{size}")
    v = u.seq[i - 1]
    positions = [p + 1 for p, w in enumerate(u.seq) if w == v]
    is_only = len(positions) == 1
    is_last = positions[-1] == i
    penultimate = None
    if is_last and not is_only:
        penultimate = positions[-2]
    return OccurrenceInfo(is_only=is_only, is_last=is_last, penultimate=penultimate)


def insert_top_lobe(u: Surjection, j: int) -> Surjection:
    """Replace the entry at position j by (u(j), n+1, u(j)).

    Adds one lobe above the lobe u(j); arity and degree each grow by one.
    """
    size = len(u.seq)
    if not 1 <= j <= size:
        raise OutOfRangeError(f"position {j} not in 1..{size}")
    new_value = u.arity + 1
    seq = u.seq[:j] + (new_value,) + u.seq[j - 1 :]
    return Surjection._unchecked(seq, u.arity + 1, u.degree + 1)
