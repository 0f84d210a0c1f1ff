"""Finitary largeness detectors on windows.

A set is r-syndetic on an interval when every length-r block inside the
interval meets it (gaps are bounded by r - 1). It is L-thick when it contains
a full run of L consecutive elements. A piecewise-syndetic witness at (r, L)
is a length-L interval on which the set is r-syndetic: bounded gaps over an
arbitrarily long stretch, the finite shadow of "syndetic on a thick part".

``vdw_check`` decides whether every coloring of an initial segment forces a
monochromatic arithmetic progression, exhaustively or by pruned backtracking.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Optional

from ._bitops import longest_run, lsb_index, run_starts, smear_right
from .sets import IntSet

BUDGET_ENV_VAR = "APLIFT_BUDGET"
DEFAULT_VDW_BUDGET = 1 << 22
EXHAUSTIVE_LIMIT = 1 << 20  # colorings; above this vdw_check backtracks


@dataclass(frozen=True)
class GapProfile:
    """Exact gap bookkeeping for A within an interval I = [lo, hi].

    ``leading`` counts the misses before the first member, ``trailing`` the
    misses after the last, and ``gaps`` holds the differences between
    consecutive members, sorted ascending (each >= 1). For an empty
    intersection, leading = |I| and the rest are zero/empty. The identity
    |I| = count + leading + trailing + sum(g - 1 for g in gaps) always holds.
    """

    lo: int
    hi: int
    count: int
    leading: int
    trailing: int
    gaps: tuple[int, ...]

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1

    def max_miss_run(self) -> int:
        """Longest run of consecutive non-members inside the interval."""
        if self.count == 0:
            return self.width
        internal = max((g - 1 for g in self.gaps), default=0)
        return max(self.leading, self.trailing, internal)


def _interval_slice(A: IntSet, interval: tuple[int, int]) -> tuple[int, int, int]:
    lo, hi = interval
    w = A.window
    if not (w.lo <= lo <= hi <= w.hi):
        raise ValueError(f"interval [{lo}, {hi}] not inside window [{w.lo}, {w.hi}]")
    width = hi - lo + 1
    bits = (A.bits >> (lo - w.lo)) & ((1 << width) - 1)
    return bits, lo, width


def gap_profile(A: IntSet, interval: Optional[tuple[int, int]] = None) -> GapProfile:
    if interval is None:
        interval = (A.window.lo, A.window.hi)
    bits, lo, width = _interval_slice(A, interval)
    hi = lo + width - 1
    if bits == 0:
        return GapProfile(lo, hi, 0, width, 0, ())
    xs = [lo + i for i in _indices(bits)]
    gaps = sorted(b - a for a, b in zip(xs, xs[1:]))
    return GapProfile(lo, hi, len(xs), xs[0] - lo, hi - xs[-1], tuple(gaps))


def _indices(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def is_syndetic_on(A: IntSet, interval: tuple[int, int], r: int) -> bool:
    """True iff every length-r block fully inside the interval meets A.

    Vacuously true when r exceeds the interval width (no block fits).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    bits, _, width = _interval_slice(A, interval)
    if r > width:
        return True
    misses = ~bits & ((1 << width) - 1)
    return run_starts(misses, r) == 0


def is_thick_on(A: IntSet, interval: tuple[int, int], L: int) -> bool:
    """True iff A contains L consecutive elements inside the interval.

    Existential, so an interval too short for any length-L run gives False.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    bits, _, width = _interval_slice(A, interval)
    if L > width:
        return False
    return run_starts(bits, L) != 0


@dataclass(frozen=True)
class PwsWitness:
    """A length-`length` interval starting at `start` on which A is r-syndetic."""

    r: int
    start: int
    length: int

    def __post_init__(self) -> None:
        if self.r < 1 or self.start < 1 or self.length < 1:
            raise ValueError("witness fields must be positive")

    @property
    def interval(self) -> tuple[int, int]:
        return (self.start, self.start + self.length - 1)


def find_pws_witness(A: IntSet, r: int, L: int) -> Optional[PwsWitness]:
    """First (smallest-start) length-L interval on which A is r-syndetic.

    Scans miss runs once with bitmap smearing; returns None when every
    length-L interval contains a fully missing length-r block.
    """
    if r < 1 or L < 1:
        raise ValueError("r and L must be >= 1")
    w = A.window
    if L > w.width:
        return None  # no length-L interval fits in the window at all
    if r > L:
        return PwsWitness(r, w.lo, L)  # no length-r block fits in length L
    misses = ~A.bits & w.mask
    bad = run_starts(misses, r)
    # start index i is forbidden iff some bad run begins in [i, i + L - r]
    forbidden = smear_right(bad, L - r)
    ok = ~forbidden & ((1 << (w.width - L + 1)) - 1)
    if ok == 0:
        return None
    return PwsWitness(r, w.lo + lsb_index(ok), L)


def min_r_for_L(A: IntSet, L: int) -> Optional[int]:
    """Least r in [1, L] admitting a pws witness of length L, None if r = L fails.

    Presence is monotone in r, so binary search applies.
    """
    if find_pws_witness(A, L, L) is None:
        return None
    lo_r, hi_r = 1, L
    while lo_r < hi_r:
        mid = (lo_r + hi_r) // 2
        if find_pws_witness(A, mid, L) is not None:
            hi_r = mid
        else:
            lo_r = mid + 1
    return lo_r


def longest_member_run(A: IntSet) -> int:
    return longest_run(A.bits)


def longest_miss_run(A: IntSet) -> int:
    return longest_run(~A.bits & A.window.mask)


# --- van der Waerden checks -------------------------------------------------


@dataclass(frozen=True)
class VdwResult:
    """Outcome of a coloring search.

    verdict is "true" (every coloring has a monochromatic AP), "false"
    (coloring is a counterexample), or "unknown" (budget exhausted).
    """

    verdict: str
    coloring: Optional[tuple[int, ...]]
    strategy: str
    explored: int
    budget: int


def search_budget(default: int = DEFAULT_VDW_BUDGET) -> int:
    """Search budget, overridable through the APLIFT_BUDGET variable."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{BUDGET_ENV_VAR} must be >= 1")
    return value


def _ap_positions(n: int, k: int) -> list[tuple[int, ...]]:
    """All k-term progressions a, a+d, ..., a+(k-1)d inside [1, n], d >= 1."""
    out = []
    for d in range(1, (n - 1) // (k - 1) + 1):
        for a in range(1, n - (k - 1) * d + 1):
            out.append(tuple(range(a, a + (k - 1) * d + 1, d)))
    return out


def _mono_hit(coloring, aps) -> bool:
    for ap in aps:
        c = coloring[ap[0] - 1]
        if all(coloring[t - 1] == c for t in ap[1:]):
            return True
    return False


def _has_mono_ap(coloring, ap_len: int) -> bool:
    """Does the coloring of [1, len(coloring)] contain a monochromatic
    progression with exactly ap_len terms? ap_len = 1 is always True."""
    if ap_len == 1:
        return len(coloring) > 0
    return _mono_hit(coloring, _ap_positions(len(coloring), ap_len))


def vdw_check(
    window_len: int,
    colors: int,
    ap_len: int,
    budget: Optional[int] = None,
    strategy: Optional[str] = None,
) -> VdwResult:
    """Does every `colors`-coloring of [1, window_len] contain a
    monochromatic progression with exactly `ap_len` terms?

    Enumerates all colorings when colors**window_len is small enough,
    otherwise backtracks with pruning on completed monochromatic
    progressions. Both strategies scan colorings in the same lexicographic
    order (position 1 most significant, color 0 first), so the returned
    counterexample does not depend on the strategy. A budget bounds the
    number of colorings/nodes examined; exceeding it yields "unknown".
    """
    if window_len < 1 or colors < 1 or ap_len < 1:
        raise ValueError("window_len, colors and ap_len must be >= 1")
    if budget is None:
        budget = search_budget()
    if strategy is None:
        strategy = "exhaustive" if colors**window_len <= EXHAUSTIVE_LIMIT else "backtracking"
    elif strategy not in ("exhaustive", "backtracking"):
        raise ValueError(f"unknown strategy {strategy!r}")

    if ap_len == 1:
        # every point is a one-term progression, so any coloring has one
        return VdwResult("true", None, strategy, 0, budget)

    if strategy == "exhaustive":
        aps = _ap_positions(window_len, ap_len)
        explored = 0
        for coloring in product(range(colors), repeat=window_len):
            explored += 1
            if explored > budget:
                return VdwResult("unknown", None, strategy, explored - 1, budget)
            if not _mono_hit(coloring, aps):
                return VdwResult("false", coloring, strategy, explored, budget)
        return VdwResult("true", None, strategy, explored, budget)

    return _vdw_backtrack(window_len, colors, ap_len, budget)


def _vdw_backtrack(n: int, colors: int, k: int, budget: int) -> VdwResult:
    # aps_by_end[i]: progressions whose last term is i, checked as soon as
    # position i receives a color.
    aps_by_end: list[list[tuple[int, ...]]] = [[] for _ in range(n + 1)]
    for ap in _ap_positions(n, k):
        aps_by_end[ap[-1]].append(ap)

    coloring = [0] * n
    explored = 0

    def completes_mono(i: int) -> bool:
        ci = coloring[i - 1]
        for ap in aps_by_end[i]:
            if all(coloring[t - 1] == ci for t in ap[:-1]):
                return True
        return False

    pos = 1
    next_color = [0] * (n + 2)
    while True:
        if pos == 0:
            return VdwResult("true", None, "backtracking", explored, budget)
        if pos > n:
            return VdwResult("false", tuple(coloring), "backtracking", explored, budget)
        c = next_color[pos]
        if c >= colors:
            next_color[pos] = 0
            pos -= 1
            continue
        next_color[pos] = c + 1
        coloring[pos - 1] = c
        explored += 1
        if explored > budget:
            return VdwResult("unknown", None, "backtracking", explored - 1, budget)
        if not completes_mono(pos):
            pos += 1
