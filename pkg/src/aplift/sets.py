"""Windowed subsets of the positive integers.

Every set lives on an inclusive window [lo, hi] with 1 <= lo <= hi and is
stored as an integer bitmap: bit i of ``bits`` holds membership of ``lo + i``.
Values are immutable and all operations are pure functions, so results are
safe to share and compare.

Ground set convention: the positive integers {1, 2, 3, ...}. Zero is never a
member and generator parameters must be >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from ._bitops import iter_bit_indices

_MASK64 = (1 << 64) - 1
_GOLDEN64 = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    # splitmix64 output stage; fixed public constants keep draws identical
    # across machines and Python versions.
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class Window:
    """Inclusive range [lo, hi] of positive integers."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not (isinstance(self.lo, int) and isinstance(self.hi, int)):
            raise TypeError("window bounds must be integers")
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"invalid window [{self.lo}, {self.hi}]")

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1

    @property
    def mask(self) -> int:
        return (1 << self.width) - 1

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class IntSet:
    """Immutable subset of a window, backed by an integer bitmap."""

    window: Window
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.window.width:
            raise ValueError("membership bits fall outside the window")

    @classmethod
    def from_members(cls, window: Window, members) -> "IntSet":
        bits = 0
        for x in members:
            if x not in window:
                raise ValueError(f"member {x} outside window [{window.lo}, {window.hi}]")
            bits |= 1 << (x - window.lo)
        return cls(window, bits)

    @classmethod
    def full(cls, window: Window) -> "IntSet":
        return cls(window, window.mask)

    def __contains__(self, x: int) -> bool:
        if not isinstance(x, int) or x < self.window.lo or x > self.window.hi:
            return False
        return bool((self.bits >> (x - self.window.lo)) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def members(self) -> Iterator[int]:
        """Members in strictly increasing order."""
        lo = self.window.lo
        for i in iter_bit_indices(self.bits):
            yield lo + i

    def density(self) -> float:
        return self.bits.bit_count() / self.window.width

    def _require_same_window(self, other: "IntSet") -> None:
        if self.window != other.window:
            raise ValueError("window mismatch")

    def union(self, other: "IntSet") -> "IntSet":
        self._require_same_window(other)
        return IntSet(self.window, self.bits | other.bits)

    def intersect(self, other: "IntSet") -> "IntSet":
        self._require_same_window(other)
        return IntSet(self.window, self.bits & other.bits)

    def complement(self) -> "IntSet":
        """Complement relative to the window."""
        return IntSet(self.window, self.window.mask ^ self.bits)

    def is_subset_of(self, other: "IntSet") -> bool:
        self._require_same_window(other)
        return self.bits & ~other.bits == 0


# --- set expressions -------------------------------------------------------
#
# Expression trees are plain frozen dataclasses; ``evaluate(expr, window)``
# produces the IntSet of the expression clipped to the window. Generators
# whose values leave the window are clipped, never an error; malformed
# parameters (d = 0, p outside [0, 1], ...) raise ValueError at construction.


def _check_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class Ap:
    """Arithmetic progression a, a+d, a+2d, ... (upward only)."""

    a: int
    d: int

    def __post_init__(self) -> None:
        _check_positive("start", self.a)
        _check_positive("step", self.d)


@dataclass(frozen=True)
class Interval:
    lo: int
    hi: int

    def __post_init__(self) -> None:
        _check_positive("interval lo", self.lo)
        _check_positive("interval hi", self.hi)
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class Multiples:
    k: int

    def __post_init__(self) -> None:
        _check_positive("modulus", self.k)


@dataclass(frozen=True)
class IpSet:
    """All sums over nonempty subsets of the generator list."""

    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValueError("ipset needs at least one generator")
        for g in self.generators:
            _check_positive("generator", g)


@dataclass(frozen=True)
class ThickBlocks:
    """Union of inclusive blocks [lo, hi] from an explicit schedule."""

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("thick needs at least one block")
        for blo, bhi in self.blocks:
            _check_positive("block lo", blo)
            _check_positive("block hi", bhi)
            if blo > bhi:
                raise ValueError(f"empty block [{blo}, {bhi}]")


@dataclass(frozen=True)
class Bernoulli:
    """Each window element kept independently with probability p.

    Membership of x is decided by the splitmix64 mix of (seed + x * golden),
    compared against floor(p * 2^64); identical (p, seed) always yield the
    identical set, on any machine.
    """

    p: float
    seed: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", float(self.p))
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"probability must lie in [0, 1], got {self.p!r}")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool) or self.seed < 0:
            raise ValueError(f"seed must be a nonnegative integer, got {self.seed!r}")


@dataclass(frozen=True)
class Shift:
    """Forward translate: every member m of the child becomes m + c."""

    child: "SetExpr"
    c: int

    def __post_init__(self) -> None:
        if not isinstance(self.c, int) or isinstance(self.c, bool) or self.c < 0:
            raise ValueError(f"shift amount must be a nonnegative integer, got {self.c!r}")


@dataclass(frozen=True)
class Union:
    children: tuple["SetExpr", ...]

    def __post_init__(self) -> None:
        if not self.children:
            raise ValueError("union needs at least one operand")


@dataclass(frozen=True)
class Intersect:
    children: tuple["SetExpr", ...]

    def __post_init__(self) -> None:
        if not self.children:
            raise ValueError("intersect needs at least one operand")


@dataclass(frozen=True)
class Complement:
    """Complement relative to the evaluation window."""

    child: "SetExpr"


SetExpr = (
    Ap
    | Interval
    | Multiples
    | IpSet
    | ThickBlocks
    | Bernoulli
    | Shift
    | Union
    | Intersect
    | Complement
)


def _ap_bits(a: int, d: int, w: Window) -> int:
    if a > w.hi:
        return 0
    start = a if a >= w.lo else a + ((w.lo - a + d - 1) // d) * d
    bits = 0
    for v in range(start, w.hi + 1, d):
        bits |= 1 << (v - w.lo)
    return bits


def bernoulli_member(x: int, p: float, seed: int) -> bool:
    """Deterministic membership draw for the Bernoulli generator."""
    threshold = int(Fraction(p) * (1 << 64))
    return _mix64((seed + x * _GOLDEN64) & _MASK64) < threshold


def _bernoulli_bits(p: float, seed: int, w: Window) -> int:
    threshold = int(Fraction(p) * (1 << 64))
    bits = 0
    for x in range(w.lo, w.hi + 1):
        if _mix64((seed + x * _GOLDEN64) & _MASK64) < threshold:
            bits |= 1 << (x - w.lo)
    return bits


def ip_set(generators: Sequence[int], w: Window) -> IntSet:
    """Sums over nonempty subsets of the generators, clipped to the window.

    Sums only grow, so partial sums above w.hi are dropped as they appear;
    the result has at most 2^k - 1 members before clipping.
    """
    expr = IpSet(tuple(generators))
    sums = {0}
    for g in expr.generators:
        sums |= {s + g for s in sums if s + g <= w.hi}
    sums.discard(0)
    bits = 0
    for s in sums:
        if s >= w.lo:
            bits |= 1 << (s - w.lo)
    return IntSet(w, bits)


def evaluate(expr: SetExpr, w: Window) -> IntSet:
    """Evaluate a set expression on a window. Deterministic, clips to w."""
    match expr:
        case Ap(a=a, d=d):
            return IntSet(w, _ap_bits(a, d, w))
        case Interval(lo=lo, hi=hi):
            s, e = max(lo, w.lo), min(hi, w.hi)
            bits = ((1 << (e - s + 1)) - 1) << (s - w.lo) if s <= e else 0
            return IntSet(w, bits)
        case Multiples(k=k):
            return IntSet(w, _ap_bits(k, k, w))
        case IpSet(generators=gens):
            return ip_set(gens, w)
        case ThickBlocks(blocks=blocks):
            bits = 0
            for blo, bhi in blocks:
                s, e = max(blo, w.lo), min(bhi, w.hi)
                if s <= e:
                    bits |= ((1 << (e - s + 1)) - 1) << (s - w.lo)
            return IntSet(w, bits)
        case Bernoulli(p=p, seed=seed):
            return IntSet(w, _bernoulli_bits(p, seed, w))
        case Shift(child=child, c=c):
            if w.hi - c < 1:
                return IntSet(w, 0)
            inner = evaluate(child, Window(max(1, w.lo - c), w.hi - c))
            delta = inner.window.lo + c - w.lo
            return IntSet(w, (inner.bits << delta) & w.mask)
        case Union(children=children):
            bits = 0
            for child in children:
                bits |= evaluate(child, w).bits
            return IntSet(w, bits)
        case Intersect(children=children):
            bits = w.mask
            for child in children:
                bits &= evaluate(child, w).bits
            return IntSet(w, bits)
        case Complement(child=child):
            return evaluate(child, w).complement()
    raise TypeError(f"not a set expression: {expr!r}")


def shift_set(A: IntSet, x: int) -> IntSet:
    """The translate -x + A = {y >= 1 : x + y in A} on its truncated window.

    The result window is [max(1, lo - x), hi - x]. When hi - x < 1 the whole
    translate leaves the positive integers and the explicit empty set on the
    degenerate window [1, 1] is returned. x = 0 is the identity.
    """
    if not isinstance(x, int) or isinstance(x, bool) or x < 0:
        raise ValueError(f"shift amount must be a nonnegative integer, got {x!r}")
    w = A.window
    new_hi = w.hi - x
    if new_hi < 1:
        return IntSet(Window(1, 1), 0)
    new_w = Window(max(1, w.lo - x), new_hi)
    shift = new_w.lo + x - w.lo  # >= 0 because new_lo >= lo - x
    return IntSet(new_w, (A.bits >> shift) & new_w.mask)
