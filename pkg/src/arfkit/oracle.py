"""Brute-force reference implementations over bounded windows.

These are intentionally simple quadratic/cubic loops used only for
cross-validation; they share no code with the exact threshold-arithmetic
layer.  A :class:`BoundedSet` is a truncation of an (infinite, cofinite)
integer set to the window [-bound, bound]; the caller guarantees the
table is correct up to ``valid_hi`` and that the true set is empty below
-bound and contains everything from its last in-window gap upward.
Every operation states the window on which its result is guaranteed, so
agreement checks can assert "compared region inside guaranteed region"
mechanically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundMismatch


@dataclass(frozen=True)
class BoundedSet:
    bound: int
    members: frozenset[int]
    valid_hi: int

    def __post_init__(self):
        assert all(-self.bound <= m <= self.bound for m in self.members)
        assert self.valid_hi <= self.bound

    @classmethod
    def from_values(cls, bound: int, values) -> "BoundedSet":
        return cls(bound, frozenset(v for v in values if -bound <= v <= bound), bound)

    def tail_start(self) -> int:
        """Least t with t, t+1, ..., valid_hi all members."""
        t = self.valid_hi + 1
        while (t - 1) in self.members:
            t -= 1
        return t

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


def oracle_sumset(a: BoundedSet, b: BoundedSet) -> BoundedSet:
    """All pairwise sums landing in the window.

    Guaranteed up to min(valid_hi(a) + min(b), valid_hi(b) + min(a)):
    below that, any decomposition of a sum uses only in-window summands.
    """
    if a.bound != b.bound:
        raise BoundMismatch(f"window bounds differ: {a.bound} vs {b.bound}")
    sums = set()
    for x in a.members:
        for y in b.members:
            if -a.bound <= x + y <= a.bound:
                sums.add(x + y)
    hi = a.bound
    if a.members and b.members:
        hi = min(hi, a.valid_hi + min(b.members), b.valid_hi + min(a.members))
    return BoundedSet(a.bound, frozenset(sums), hi)


def oracle_colon(a: BoundedSet, b: BoundedSet) -> BoundedSet:
    """{z : z + b inside a}, decided from the tables.

    Finite members of b below its tail are checked against the table of
    a; the tails reduce to z >= tail(a) - tail(b).  With both inputs
    valid across their windows every candidate in the window is decided
    exactly.
    """
    if a.bound != b.bound:
        raise BoundMismatch(f"window bounds differ: {a.bound} vs {b.bound}")
    ta = a.tail_start()
    tb = b.tail_start()
    finite_b = [x for x in b.members if x < tb]
    out = set()
    hi = min(a.valid_hi, b.valid_hi)
    for z in range(-a.bound, a.bound + 1):
        if z < ta - tb:
            continue
        ok = True
        for x in finite_b:
            v = z + x
            if v >= ta:
                continue
            if v not in a.members:
                ok = False
                break
        if ok:
            out.add(z)
    return BoundedSet(a.bound, frozenset(out), hi)


def oracle_pattern_saturate(s: BoundedSet) -> BoundedSet:
    """Least fixpoint of adding x + y - z for members z <= x, y, in-window.

    New values never lie below max(x, y), so the fixpoint restricted to
    the valid window is exact even though out-of-window values are
    dropped.
    """
    members = set(s.members)
    changed = True
    while changed:
        changed = False
        mem = sorted(members)
        for zi, z in enumerate(mem):
            for yi in range(zi, len(mem)):
                y = mem[yi]
                for xi in range(yi, len(mem)):
                    x = mem[xi]
                    v = x + y - z
                    if v <= s.valid_hi and v not in members:
                        members.add(v)
                        changed = True
    return BoundedSet(s.bound, frozenset(members), s.valid_hi)
