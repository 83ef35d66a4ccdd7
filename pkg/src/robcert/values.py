"""Totally ordered exact entry values.

Matrix entries live in one ordered domain containing the original
rationals together with "transformed" values that sit strictly below
them.  A transformed value stands in for the expression -M - j + q/M
that big-M arithmetic would produce; the constant M never materializes.
Values compare by a flat lexicographic key, which keeps the order exact
at any nesting depth.
"""

from __future__ import annotations

import operator
from fractions import Fraction

__all__ = ["EntryValue", "from_rational", "transformed"]


class EntryValue:
    """One matrix entry: an exact rational, possibly pushed below band.

    Tier-1 values are plain rationals ordered as usual.  Tier-0 values
    are transformed: they compare strictly below every tier-1 value,
    among themselves first by band (deeper bands sit lower), then by
    level, then by their source value.
    """

    __slots__ = ("_key", "_band", "_level", "_source")

    def __init__(self, key: tuple, band: int, level: int | None,
                 source: "EntryValue | None"):
        self._key = key
        self._band = band
        self._level = level
        self._source = source

    @property
    def tier(self) -> int:
        """1 for ordinary rational entries, 0 for transformed ones."""
        return 1 if self._band == 0 else 0

    @property
    def primary(self):
        """The rational for tier 1; the level for tier 0."""
        return self._key[1]

    @property
    def secondary(self):
        """0 for tier 1; the source value's primary for tier 0."""
        if self._band == 0:
            return 0
        return self._source.primary

    @property
    def band(self) -> int:
        """Nesting depth: 0 for originals, >= 1 for transformed values."""
        return self._band

    @property
    def level(self) -> int | None:
        return self._level

    @property
    def source(self) -> "EntryValue | None":
        return self._source

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EntryValue):
            return NotImplemented
        return self._key == other._key

    def __ne__(self, other: object) -> bool:
        if not isinstance(other, EntryValue):
            return NotImplemented
        return self._key != other._key

    def __lt__(self, other: "EntryValue") -> bool:
        if not isinstance(other, EntryValue):
            return NotImplemented
        return self._key < other._key

    def __le__(self, other: "EntryValue") -> bool:
        if not isinstance(other, EntryValue):
            return NotImplemented
        return self._key <= other._key

    def __gt__(self, other: "EntryValue") -> bool:
        if not isinstance(other, EntryValue):
            return NotImplemented
        return self._key > other._key

    def __ge__(self, other: "EntryValue") -> bool:
        if not isinstance(other, EntryValue):
            return NotImplemented
        return self._key >= other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self._band == 0:
            return f"EntryValue({self.primary})"
        if self._band == 1:
            return f"EntryValue(level={self._level}, source={self._source!r})"
        return (f"EntryValue(band={self._band}, level={self._level}, "
                f"source={self._source!r})")


def from_rational(q) -> EntryValue:
    """Wrap an exact rational as an ordinary (tier 1) entry.

    Accepts int, Fraction, or a string Fraction understands ("3/2",
    "1.5").  Floats are rejected: their binary expansions silently
    break exact equality.
    """
    if isinstance(q, float):
        raise TypeError("refusing float input; pass int, Fraction, or str")
    return EntryValue((0, Fraction(q)), 0, None, None)


def transformed(level: int, original: EntryValue, band: int = 1) -> EntryValue:
    """Build a value strictly below every entry of a shallower band.

    With the default band=1 the source must be an ordinary tier-1
    value.  Nested transformations pass an explicit band exceeding the
    band of every entry of the matrix the source was taken from; the
    result then compares below all of them.  Results with equal band
    are ordered by level, then by source.
    """
    level = operator.index(level)
    if not isinstance(original, EntryValue):
        raise TypeError("source must be an EntryValue")
    band = operator.index(band)
    if band < 1:
        raise ValueError("band must be >= 1")
    if original._band >= band:
        raise ValueError("source is already at band "
                         f"{original._band}; pass a deeper band")
    return EntryValue((-band, level) + original._key, band, level, original)
