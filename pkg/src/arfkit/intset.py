"""Exact arithmetic on cofinite integer sets.

A :class:`CofiniteSet` is a set of integers of the form

    {finitely many members}  union  [threshold, infinity)

stored as a bitmask of the members below ``threshold`` anchored at
``offset`` (bit ``i`` set means ``offset + i`` is a member).  Every
operation here is exact: thresholds are tracked analytically, so no
truncation bound ever leaks into a result.

Canonical form: ``threshold`` is minimal (``threshold - 1`` is not a
member), and either ``mask == 0`` with ``offset == threshold``, or bit 0
of ``mask`` is set (``offset`` is the least member) and all set bits lie
below ``threshold - offset``.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class CofiniteSet:
    __slots__ = ("offset", "mask", "threshold")

    def __init__(self, offset: int, mask: int, threshold: int):
        # Trusted constructor: arguments must already be canonical.
        # External callers should use from_members() or tail().
        self.offset = offset
        self.mask = mask
        self.threshold = threshold

    # -- constructors -------------------------------------------------

    @classmethod
    def tail(cls, start: int) -> "CofiniteSet":
        """The set [start, infinity)."""
        return cls(start, 0, start)

    @classmethod
    def from_members(cls, members: Iterable[int], tail_from: int) -> "CofiniteSet":
        """Canonicalize ``set(members) | [tail_from, inf)``."""
        below = [m for m in members if m < tail_from]
        if not below:
            return cls(tail_from, 0, tail_from)
        off = min(below)
        mask = 0
        for m in below:
            mask |= 1 << (m - off)
        return _normalize(off, mask, tail_from)

    # -- basic queries ------------------------------------------------

    @property
    def min_element(self) -> int:
        return self.offset if self.mask else self.threshold

    @property
    def elements(self) -> tuple[int, ...]:
        """The members strictly below the threshold, ascending."""
        out = []
        m = self.mask
        off = self.offset
        while m:
            low = m & -m
            out.append(off + low.bit_length() - 1)
            m ^= low
        return tuple(out)

    def __contains__(self, value: int) -> bool:
        if value >= self.threshold:
            return True
        d = value - self.offset
        return d >= 0 and (self.mask >> d) & 1 == 1

    def members_upto(self, hi: int) -> list[int]:
        """All members ``<= hi``, ascending."""
        out = list(self.elements)
        out = [x for x in out if x <= hi]
        out.extend(range(self.threshold, hi + 1))
        return out

    def iter_members(self) -> Iterator[int]:
        """All members, ascending, without end."""
        yield from self.elements
        n = self.threshold
        while True:
            yield n
            n += 1

    def window_mask(self, lo: int, hi: int) -> int:
        """Membership bitmask over [lo, hi): bit i set iff lo + i is a member."""
        span = hi - lo
        if span <= 0:
            return 0
        m = 0
        if self.mask:
            d = self.offset - lo
            m = self.mask << d if d >= 0 else self.mask >> -d
        tstart = self.threshold - lo
        if span > tstart:
            start = max(tstart, 0)
            m |= ((1 << (span - start)) - 1) << start
        return m & ((1 << span) - 1)

    # -- set relations ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, CofiniteSet):
            return NotImplemented
        return (
            self.threshold == other.threshold
            and self.offset == other.offset
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.offset, self.mask, self.threshold))

    def eq_shifted(self, other: "CofiniteSet", d: int) -> bool:
        """Whether self == other.shift(d), without building the shift."""
        return (
            self.threshold == other.threshold + d
            and self.offset == other.offset + d
            and self.mask == other.mask
        )

    def restricted_equals(self, lo: int, other: "CofiniteSet") -> bool:
        """Whether other == self.restrict_from(lo), without building the restriction.

        Restricting below the threshold cannot move it (the gap at
        threshold - 1 survives), so only the low end needs renormalizing.
        """
        if lo <= (self.offset if self.mask else self.threshold):
            return other == self
        if lo >= self.threshold:
            return other.mask == 0 and other.threshold == lo
        m = self.mask >> (lo - self.offset)
        if m == 0:
            return other.mask == 0 and other.threshold == self.threshold
        low = m & -m
        s = low.bit_length() - 1
        return (
            other.offset == lo + s
            and other.mask == m >> s
            and other.threshold == self.threshold
        )

    def issubset(self, other: "CofiniteSet") -> bool:
        # [threshold, inf) fits inside other only from other.threshold up,
        # because other.threshold is minimal.
        if self.threshold < other.threshold:
            return False
        if not self.mask:
            return True
        return self.mask & ~other.window_mask(self.offset, self.threshold) == 0

    # -- arithmetic ---------------------------------------------------

    def shift(self, d: int) -> "CofiniteSet":
        return CofiniteSet(self.offset + d, self.mask, self.threshold + d)

    def sumset(self, other: "CofiniteSet") -> "CofiniteSet":
        """{x + y : x in self, y in other}, exact.

        Everything from min(self) + other.threshold or self.threshold +
        min(other) upward is a sum, so only finite-part sums below that
        point need enumerating.
        """
        am = self.mask
        bm = other.mask
        min_a = self.offset if am else self.threshold
        min_b = other.offset if bm else other.threshold
        t0 = min(min_a + other.threshold, self.threshold + min_b)
        acc = 0
        if am and bm:
            if am.bit_count() > bm.bit_count():
                am, bm = bm, am  # shift the bigger mask by the sparser one
            while am:
                low = am & -am
                acc |= bm << (low.bit_length() - 1)
                am ^= low
        return _normalize(min_a + min_b, acc, t0)

    def colon(self, other: "CofiniteSet") -> "CofiniteSet":
        """{z : z + other is a subset of self}, exact.

        z below min(self) - min(other) is impossible; z at least
        threshold(self) - min(other) always works; in between, z needs
        z >= threshold(self) - threshold(other) (so the tail of ``other``
        lands in the tail of ``self``) plus membership of z + b for each
        finite member b of ``other``.
        """
        min_b = other.offset if other.mask else other.threshold
        lo = (self.offset if self.mask else self.threshold) - min_b
        hi = self.threshold - min_b
        width = hi - lo
        cand = (1 << width) - 1 if width > 0 else 0
        cut = (self.threshold - other.threshold) - lo
        if cut > 0:
            cand = 0 if cut >= width else cand & ~((1 << cut) - 1)
        if cand and other.mask:
            bm = other.mask
            max_b = other.offset + bm.bit_length() - 1
            span = (hi + max_b) - self.offset
            full = self.mask
            tstart = self.threshold - self.offset
            if span > tstart:
                full |= ((1 << (span - tstart)) - 1) << tstart
            while bm and cand:
                low = bm & -bm
                b = other.offset + low.bit_length() - 1
                bm ^= low
                # bit j of cand is z = lo + j; z + b sits at full bit
                # (lo + j + b - self.offset) = j + (b - min_b), as cand can
                # only be nonzero when self has finite members (offset = min).
                cand &= full >> (b - min_b)
        return _normalize(lo, cand, hi)

    def union(self, other: "CofiniteSet") -> "CofiniteSet":
        t0 = min(self.threshold, other.threshold)
        off = min(self.min_element, other.min_element)
        m = 0
        if self.mask:
            m |= self.mask << (self.offset - off)
        if other.mask:
            m |= other.mask << (other.offset - off)
        return _normalize(off, m, t0)

    def restrict_from(self, lo: int) -> "CofiniteSet":
        """{x in self : x >= lo}."""
        if lo <= self.min_element:
            return self
        if lo >= self.threshold:
            return CofiniteSet(lo, 0, lo)
        return _normalize(lo, self.mask >> (lo - self.offset), self.threshold)

    # -- display ------------------------------------------------------

    def __repr__(self) -> str:
        els = ", ".join(str(x) for x in self.elements)
        sep = ", " if els else ""
        return f"{{{els}{sep}{self.threshold}, {self.threshold + 1}, ...}}"


def _normalize(offset: int, mask: int, tail: int) -> CofiniteSet:
    """Canonicalize {offset + i : bit i of mask} | [tail, inf)."""
    if mask:
        width = tail - offset
        mask = 0 if width <= 0 else mask & ((1 << width) - 1)
    if not mask:
        return CofiniteSet(tail, 0, tail)
    width = tail - offset
    inv = ~mask & ((1 << width) - 1)
    run_start = inv.bit_length()  # bits run_start .. width-1 are all set
    t = offset + run_start
    mask &= (1 << run_start) - 1
    if not mask:
        return CofiniteSet(t, 0, t)
    low = mask & -mask
    s = low.bit_length() - 1
    return CofiniteSet(offset + s, mask >> s, t)
