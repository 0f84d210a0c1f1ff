"""Decreasing chains and their translate / largeness checks.

A chain is a decreasing tower C_1 >= C_2 >= ... >= C_k of nonempty sets on a
common window. The translate property asks, for each probed member x of C_n,
for a deeper level m whose set lands inside the translate -x + C_n (checked
on the window truncated by x). Quasi-central candidates must in addition be
piecewise syndetic at (r, L) on every level; c-set candidates must admit a
J-set witness for every supplied family on every level.

``ap_translate_level_search`` is the pair-level analogue: given a
progression a, a+b, ..., a+l*b inside C_n, it finds the least deeper level N
whose set (suitably truncated) is contained in the intersection of all l+1
translates -(a+i*b) + C_n. ``verify_lifted_translate`` then confirms the
consequence for lifted pair sets: B_N shifted by (a, b) lands inside B_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ._bitops import iter_bit_indices
from .jsets import FuncFamily, JWitness, jset_witness
from .largeness import PwsWitness, find_pws_witness
from .lift import Box2D, Set2D, lift
from .sets import IntSet, Window

KIND_QUASI_CENTRAL = "quasi-central-candidate"
KIND_C_SET = "c-set-candidate"
CHAIN_KINDS = (KIND_QUASI_CENTRAL, KIND_C_SET)


@dataclass(frozen=True)
class Chain:
    levels: tuple[IntSet, ...]
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in CHAIN_KINDS:
            raise ValueError(f"unknown chain kind {self.kind!r}")
        if not self.levels:
            raise ValueError("chain needs at least one level")
        w = self.levels[0].window
        for i, level in enumerate(self.levels):
            if level.window != w:
                raise ValueError("levels must share one window")
            if level.bits == 0:
                raise ValueError(f"level {i + 1} is empty")
            if i and level.bits & ~self.levels[i - 1].bits:
                raise ValueError(f"level {i + 1} is not contained in level {i}")

    @property
    def window(self) -> Window:
        return self.levels[0].window

    @property
    def depth(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class Chain2D:
    """Levelwise lift of a chain; empty lifted levels are allowed."""

    levels: tuple[Set2D, ...]
    l: int

    def __post_init__(self) -> None:
        if not self.levels:
            raise ValueError("chain needs at least one level")
        box = self.levels[0].box
        for i, level in enumerate(self.levels):
            if level.box != box:
                raise ValueError("levels must share one box")
            if i and not level.is_subset_of(self.levels[i - 1]):
                raise ValueError(f"level {i + 1} is not contained in level {i}")

    @property
    def box(self) -> Box2D:
        return self.levels[0].box

    @property
    def depth(self) -> int:
        return len(self.levels)


@dataclass(frozen=True)
class TranslateProbe:
    """Outcome for one probed member x of level n."""

    level: int
    x: int
    found_level: Optional[int]


@dataclass(frozen=True)
class ChainReport:
    kind: str
    x_max: int
    probes: tuple[TranslateProbe, ...]
    # per-level piecewise-syndetic evidence (quasi-central candidates)
    pws_witnesses: Optional[tuple[Optional[PwsWitness], ...]] = None
    # per-level, per-family J-set evidence (c-set candidates)
    jset_witnesses: Optional[tuple[tuple[Optional[JWitness], ...], ...]] = None

    @property
    def translate_ok(self) -> bool:
        return all(p.found_level is not None for p in self.probes)

    @property
    def evidence_ok(self) -> bool:
        if self.pws_witnesses is not None and any(
            w is None for w in self.pws_witnesses
        ):
            return False
        if self.jset_witnesses is not None and any(
            w is None for per_level in self.jset_witnesses for w in per_level
        ):
            return False
        return True

    @property
    def passed(self) -> bool:
        return self.translate_ok and self.evidence_ok


def translate_inclusion_holds(chain: Chain, m: int, n: int, x: int) -> bool:
    """Does C_m, truncated to [1, hi - x], land inside -x + C_n?"""
    w = chain.window
    top = w.hi - x
    if top < w.lo:
        return True  # empty truncation
    tmask = (1 << (top - w.lo + 1)) - 1
    target = chain.levels[n - 1].bits >> x  # bit y-lo <-> x+y in C_n
    return chain.levels[m - 1].bits & tmask & ~target == 0


def _find_absorbing_level(chain: Chain, n: int, x: int) -> Optional[int]:
    for m in range(n, chain.depth + 1):
        if translate_inclusion_holds(chain, m, n, x):
            return m
    return None


def check_translate_property(chain: Chain, x_max: int) -> ChainReport:
    """Probe every member x <= x_max of every level for an absorbing level.

    The search for m runs over [n, depth] only; with decreasing levels a
    deeper hit would persist, so nothing shallower is ever needed.
    """
    w = chain.window
    if not 1 <= x_max <= w.hi:
        raise ValueError(f"x_max must lie in [1, {w.hi}]")
    probes = []
    for n, level in enumerate(chain.levels, start=1):
        cap = min(x_max, w.hi) - w.lo
        if cap < 0:
            continue
        low_bits = level.bits & ((1 << (cap + 1)) - 1)
        for i in iter_bit_indices(low_bits):
            x = w.lo + i
            probes.append(TranslateProbe(n, x, _find_absorbing_level(chain, n, x)))
    return ChainReport(kind=chain.kind, x_max=x_max, probes=tuple(probes))


def check_quasicentral(chain: Chain, r: int, L: int, x_max: int) -> ChainReport:
    """Translate property plus a pws witness at (r, L) on every level."""
    if chain.kind != KIND_QUASI_CENTRAL:
        raise ValueError(f"chain kind is {chain.kind!r}, not {KIND_QUASI_CENTRAL!r}")
    base = check_translate_property(chain, x_max)
    wits = tuple(find_pws_witness(level, r, L) for level in chain.levels)
    return ChainReport(
        kind=chain.kind, x_max=x_max, probes=base.probes, pws_witnesses=wits
    )


def check_cset(
    chain: Chain, families: Sequence[FuncFamily], a_max: int, x_max: int
) -> ChainReport:
    """Translate property plus a J-set witness per family on every level.

    An empty family list degenerates to the translate check alone.
    """
    if chain.kind != KIND_C_SET:
        raise ValueError(f"chain kind is {chain.kind!r}, not {KIND_C_SET!r}")
    base = check_translate_property(chain, x_max)
    wits = tuple(
        tuple(jset_witness(level, F, a_max) for F in families)
        for level in chain.levels
    )
    return ChainReport(
        kind=chain.kind, x_max=x_max, probes=base.probes, jset_witnesses=wits
    )


def lift_chain(chain: Chain, l: int, box: Box2D) -> Chain2D:
    """Lift every level; inclusion is preserved, empty levels are fine."""
    return Chain2D(tuple(lift(level, l, box) for level in chain.levels), l)


def ap_translate_level_search(
    chain: Chain, n: int, a: int, b: int, l: int
) -> Optional[int]:
    """Least level N in [n, depth] with C_N (truncated to [1, hi - a - l*b])
    inside the intersection of -(a + i*b) + C_n over i in [0, l].

    Requires the whole probe progression a, a+b, ..., a+l*b inside C_n; a
    missing term is reported by value. Returns None when no level within the
    chain's depth works.
    """
    if not 1 <= n <= chain.depth:
        raise ValueError(f"level {n} outside [1, {chain.depth}]")
    if a < 1 or b < 1 or l < 1:
        raise ValueError("a, b and l must be >= 1")
    Cn = chain.levels[n - 1]
    for i in range(l + 1):
        term = a + i * b
        if term not in Cn:
            raise ValueError(
                f"progression term a + {i}*b = {term} is not in level {n}"
            )
    w = chain.window
    top = w.hi - (a + l * b)
    if top < w.lo:
        return n  # empty truncation: inclusion is vacuous at every level
    tmask = (1 << (top - w.lo + 1)) - 1
    target = Cn.bits
    acc = -1
    for i in range(l + 1):
        acc &= target >> (a + i * b)
    for N in range(n, chain.depth + 1):
        if chain.levels[N - 1].bits & tmask & ~acc == 0:
            return N
    return None


def verify_lifted_translate(
    chain2d: Chain2D, n: int, N: int, a: int, b: int
) -> bool:
    """Every member (a1, b1) of B_N whose translate (a1+a, b1+b) stays inside
    the box must land in B_n. Members whose translate leaves the box are out
    of scope; an empty B_N passes vacuously.
    """
    if not 1 <= n <= N <= chain2d.depth:
        raise ValueError("need 1 <= n <= N <= depth")
    if a < 1 or b < 1:
        raise ValueError("a and b must be >= 1")
    BN = chain2d.levels[N - 1]
    Bn = chain2d.levels[n - 1]
    box = chain2d.box
    if box.a_hi - a < box.a_lo:
        return True  # every translate leaves the box on the a axis
    amask = (1 << (box.a_hi - a - box.a_lo + 1)) - 1
    for j, row in enumerate(BN.rows):
        if not row:
            continue
        d2 = box.d_lo + j + b
        if d2 > box.d_hi:
            continue
        target = Bn.rows[d2 - box.d_lo]
        if row & amask & ~(target >> a):
            return False
    return True
