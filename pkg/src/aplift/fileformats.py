"""Plain-text exchange formats for sets, pair sets, families and chains.

Set files come in two forms:

  * element list: whitespace-separated positive integers; the window is
    taken to be [1, max element];
  * bitmap: a header line ``window LO HI`` followed by one 0/1 string of
    length HI - LO + 1 (leftmost character = LO).

Pair-set files: header ``box ALO AHI DLO DHI`` followed by one 0/1 row per
step value d from DLO to DHI (leftmost character = ALO).

Family files: header ``family M T`` followed by M rows of T positive ints;
``family2d M T`` followed by 2M rows, alternating first/second table of each
pair. Chain files: header ``chain K KIND`` followed by K bitmap set blocks.

Writers emit the canonical form; reading back what was written reproduces
the value bit-exactly.
"""

from __future__ import annotations

from .jsets import FuncFamily, FuncFamily2D
from .lift import Box2D, Set2D
from .sets import IntSet, Window
from .towers import Chain


def _bitstring(bits: int, width: int) -> str:
    return "".join("1" if (bits >> i) & 1 else "0" for i in range(width))


def _parse_bitstring(s: str, width: int, what: str) -> int:
    if len(s) != width:
        raise ValueError(f"{what}: expected {width} bits, got {len(s)}")
    bits = 0
    for i, ch in enumerate(s):
        if ch == "1":
            bits |= 1 << i
        elif ch != "0":
            raise ValueError(f"{what}: invalid character {ch!r}")
    return bits


def _int_fields(parts: list[str], what: str) -> list[int]:
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise ValueError(f"{what}: not an integer: {p!r}")
    return out


def write_intset(A: IntSet, form: str = "bitmap") -> str:
    if form == "bitmap":
        w = A.window
        return f"window {w.lo} {w.hi}\n{_bitstring(A.bits, w.width)}\n"
    if form == "elements":
        if A.bits == 0:
            raise ValueError("the element-list form cannot hold an empty set")
        return " ".join(str(x) for x in A.members()) + "\n"
    raise ValueError(f"unknown set form {form!r}")


def read_intset(text: str) -> IntSet:
    tokens = text.split()
    if not tokens:
        raise ValueError("empty set file")
    if tokens[0] == "window":
        if len(tokens) != 4:
            raise ValueError("bitmap set file needs: window LO HI and one bit row")
        lo, hi = _int_fields(tokens[1:3], "set window")
        w = Window(lo, hi)
        return IntSet(w, _parse_bitstring(tokens[3], w.width, "set bits"))
    xs = _int_fields(tokens, "set elements")
    if min(xs) < 1:
        raise ValueError("set elements must be positive")
    return IntSet.from_members(Window(1, max(xs)), xs)


def write_set2d(B: Set2D) -> str:
    box = B.box
    lines = [f"box {box.a_lo} {box.a_hi} {box.d_lo} {box.d_hi}"]
    lines.extend(_bitstring(row, box.a_width) for row in B.rows)
    return "\n".join(lines) + "\n"


def read_set2d(text: str) -> Set2D:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("box"):
        raise ValueError("pair-set file must start with: box ALO AHI DLO DHI")
    head = lines[0].split()
    if len(head) != 5:
        raise ValueError("pair-set header needs four bounds")
    a_lo, a_hi, d_lo, d_hi = _int_fields(head[1:], "box bounds")
    box = Box2D(a_lo, a_hi, d_lo, d_hi)
    rows = lines[1:]
    if len(rows) != box.d_width:
        raise ValueError(f"expected {box.d_width} rows, got {len(rows)}")
    return Set2D(
        box,
        tuple(_parse_bitstring(r, box.a_width, f"row {i}") for i, r in enumerate(rows)),
    )


def write_family(F: FuncFamily) -> str:
    lines = [f"family {F.size} {F.horizon}"]
    lines.extend(" ".join(str(v) for v in tab) for tab in F.tables)
    return "\n".join(lines) + "\n"


def read_family(text: str) -> FuncFamily:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].split()[:1] != ["family"]:
        raise ValueError("family file must start with: family M T")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError("family header needs M and T")
    m, T = _int_fields(head[1:], "family header")
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} table rows, got {len(lines) - 1}")
    tables = []
    for ln in lines[1:]:
        vals = _int_fields(ln.split(), "family table")
        if len(vals) != T:
            raise ValueError(f"table row has {len(vals)} values, expected {T}")
        tables.append(tuple(vals))
    return FuncFamily(tuple(tables))


def write_family2d(F: FuncFamily2D) -> str:
    lines = [f"family2d {F.size} {F.horizon}"]
    for first, second in F.pairs:
        lines.append(" ".join(str(v) for v in first))
        lines.append(" ".join(str(v) for v in second))
    return "\n".join(lines) + "\n"


def read_family2d(text: str) -> FuncFamily2D:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].split()[:1] != ["family2d"]:
        raise ValueError("family file must start with: family2d M T")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError("family2d header needs M and T")
    m, T = _int_fields(head[1:], "family2d header")
    if len(lines) - 1 != 2 * m:
        raise ValueError(f"expected {2 * m} table rows, got {len(lines) - 1}")
    pairs = []
    for i in range(m):
        row_pair = []
        for ln in lines[1 + 2 * i : 3 + 2 * i]:
            vals = _int_fields(ln.split(), "family2d table")
            if len(vals) != T:
                raise ValueError(f"table row has {len(vals)} values, expected {T}")
            row_pair.append(tuple(vals))
        pairs.append((row_pair[0], row_pair[1]))
    return FuncFamily2D(tuple(pairs))


def write_chain(chain: Chain) -> str:
    parts = [f"chain {chain.depth} {chain.kind}\n"]
    parts.extend(write_intset(level) for level in chain.levels)
    return "".join(parts)


def read_chain(text: str) -> Chain:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0].split()[:1] != ["chain"]:
        raise ValueError("chain file must start with: chain K KIND")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError("chain header needs a depth and a kind")
    (k,) = _int_fields(head[1:2], "chain depth")
    kind = head[2]
    if len(lines) - 1 != 2 * k:
        raise ValueError(f"expected {2 * k} block lines for {k} levels")
    levels = []
    for i in range(k):
        block = "\n".join(lines[1 + 2 * i : 3 + 2 * i])
        levels.append(read_intset(block))
    return Chain(tuple(levels), kind)
