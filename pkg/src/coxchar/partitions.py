"""Partitions and signed partitions.

A partition is stored as a weakly decreasing tuple of positive integers,
the empty tuple being the unique partition of 0.  A signed partition of n
is a pair (neg, pos) with neg weakly *increasing*, pos weakly decreasing
and |neg| + |pos| = n.  Signed partitions label the conjugacy classes of
the hyperoctahedral group: neg lists the lengths of the negative cycles,
pos the lengths of the positive ones.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "SignedPartition",
    "partitions",
    "signed_partitions",
    "mu_bar",
    "parse_partition",
    "parse_signed_partition",
    "format_partition",
]

Partition = tuple[int, ...]


def _is_decreasing(parts) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:]))


@dataclass(frozen=True, order=True)
class SignedPartition:
    """Class label (neg ascending, pos descending) with |neg|+|pos| = n."""

    neg: tuple[int, ...]
    pos: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.neg) or any(p <= 0 for p in self.pos):
            raise ValueError("parts must be positive")
        if not _is_decreasing(tuple(reversed(self.neg))):
            raise ValueError(f"negative parts must be ascending: {self.neg}")
        if not _is_decreasing(self.pos):
            raise ValueError(f"positive parts must be descending: {self.pos}")

    @property
    def n(self) -> int:
        return sum(self.neg) + sum(self.pos)

    def __str__(self) -> str:
        return format_signed_partition(self)


@lru_cache(maxsize=None)
def partitions(m: int) -> tuple[Partition, ...]:
    """All partitions of m, in ascending lexicographic order.

    >>> partitions(4)
    ((1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,))
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return ((),)
    result = []

    def extend(remaining, maxpart, prefix):
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for part in range(1, min(maxpart, remaining) + 1):
            extend(remaining - part, part, prefix + [part])

    extend(m, m, [])
    result.sort()
    return tuple(result)


@lru_cache(maxsize=None)
def signed_partitions(n: int) -> tuple[SignedPartition, ...]:
    """All signed partitions of n, ordered by (|neg|, neg, pos).

    The identity label ((), (1,...,1)) comes first; the label of the
    central element -1, ((1,...,1), ()), comes last among |neg| = n.
    """
    result = []
    for k in range(n + 1):
        for neg in partitions(k):
            asc = tuple(reversed(neg))
            for pos in partitions(n - k):
                result.append(SignedPartition(asc, pos))
    result.sort(key=lambda mu: (sum(mu.neg), mu.neg, mu.pos))
    return tuple(result)


def mu_bar(mu: SignedPartition) -> SignedPartition:
    """Collapse the negative parts to the single part |neg| (dropped if 0)."""
    total = sum(mu.neg)
    return SignedPartition((total,) if total else (), mu.pos)


# -- text syntax ------------------------------------------------------------
#
# Partitions print as "3+1"; signed partitions as "-1-2+3+1" with negative
# parts first (ascending) and positive parts after (descending).  The empty
# partition prints as "" and parses from "" or "()".

_TOKEN = re.compile(r"([+-]?)(\d+)")


def _tokenize(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "()"):
        return []
    parts = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if m.start() != pos:
            raise ValueError(f"bad partition syntax: {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        value = int(m.group(2))
        if value == 0:
            raise ValueError(f"zero part in {text!r}")
        parts.append(sign * value)
    if pos != len(text):
        raise ValueError(f"bad partition syntax: {text!r}")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse "3+1" into (3, 1)."""
    parts = _tokenize(text)
    if any(p < 0 for p in parts):
        raise ValueError(f"unexpected negative part in partition {text!r}")
    parts = tuple(parts)
    if not _is_decreasing(parts):
        raise ValueError(f"parts not descending in {text!r}")
    return parts


def parse_signed_partition(text: str) -> SignedPartition:
    """Parse "-1-2+3+1" into SignedPartition(neg=(1, 2), pos=(3, 1))."""
    parts = _tokenize(text)
    neg = tuple(-p for p in parts if p < 0)
    pos = tuple(p for p in parts if p > 0)
    if any(p < 0 for p in parts[len(neg):]):
        raise ValueError(f"negative parts must precede positive in {text!r}")
    return SignedPartition(neg, pos)


def format_partition(parts: Partition) -> str:
    return "+".join(str(p) for p in parts)


def format_signed_partition(mu: SignedPartition) -> str:
    out = "".join(f"-{p}" for p in mu.neg)
    if mu.pos:
        tail = "+".join(str(p) for p in mu.pos)
        out += f"+{tail}" if out else tail
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
