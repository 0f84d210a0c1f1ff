"""Text serialization round-trips for sets, pair sets, families, and chains."""

import pytest

from aplift.fileformats import (
    read_chain,
    read_family,
    read_family2d,
    read_intset,
    read_set2d,
    write_chain,
    write_family,
    write_family2d,
    write_intset,
    write_set2d,
)
from aplift.jsets import FuncFamily, FuncFamily2D
from aplift.lift import Box2D, lift
from aplift.sets import Bernoulli, IntSet, Multiples, Window, evaluate
from aplift.towers import KIND_C_SET, KIND_QUASI_CENTRAL, Chain


def test_intset_bitmap_roundtrip():
    A = evaluate(Bernoulli(0.4, 19), Window(3, 130))
    text = write_intset(A)
    B = read_intset(text)
    assert B.window == A.window and B.bits == A.bits


def test_intset_elements_roundtrip():
    A = IntSet.from_members(Window(1, 50), [2, 3, 5, 7, 11, 13])
    text = write_intset(A, form="elements")
    B = read_intset(text)
    assert list(B.members()) == [2, 3, 5, 7, 11, 13]
    # elements form normalizes the window to [1, max]
    assert B.window == Window(1, 13)


def test_intset_empty():
    A = IntSet(Window(1, 9), 0)
    B = read_intset(write_intset(A))
    assert B.bits == 0 and B.window == A.window
    with pytest.raises(ValueError):
        write_intset(A, form="elements")  # no elements to carry the window


def test_intset_bad_input():
    with pytest.raises(ValueError):
        read_intset("")
    with pytest.raises(ValueError):
        read_intset("window 5 2\n0\n")
    with pytest.raises(ValueError):
        read_intset("window 1 4\n10\n")  # bitmap row wrong width
    with pytest.raises(ValueError):
        read_intset("0 3 5\n")  # elements must be positive


def test_set2d_roundtrip_bit_exact():
    A = evaluate(Bernoulli(0.55, 77), Window(1, 120))
    box = Box2D(2, 50, 1, 16)
    B = lift(A, 2, box)
    C = read_set2d(write_set2d(B))
    assert C.box == B.box
    assert C.rows == B.rows


def test_set2d_bad_shape():
    with pytest.raises(ValueError):
        read_set2d("box 1 4 1 2\n0000\n")  # d_width = 2 rows expected, got 1


def test_family_roundtrip():
    F = FuncFamily(((1, 2, 3), (4, 5, 6)))
    G = read_family(write_family(F))
    assert G.tables == F.tables


def test_family2d_roundtrip():
    F = FuncFamily2D((((1, 2), (3, 4)), ((2, 2), (5, 1))))
    G = read_family2d(write_family2d(F))
    assert G.pairs == F.pairs


def test_family_bad_header():
    with pytest.raises(ValueError):
        read_family("family 2 3\n1 2 3\n")  # promised two rows
    with pytest.raises(ValueError):
        read_family("family2d 1 2\n1 2\n3 4\n")  # wrong reader


def test_chain_roundtrip():
    w = Window(1, 64)
    chain = Chain(
        tuple(evaluate(Multiples(2 ** n), w) for n in (1, 2, 3)),
        KIND_QUASI_CENTRAL,
    )
    back = read_chain(write_chain(chain))
    assert back.kind == chain.kind
    assert back.window == chain.window
    assert [lvl.bits for lvl in back.levels] == [lvl.bits for lvl in chain.levels]


def test_chain_kind_preserved():
    w = Window(1, 32)
    chain = Chain((evaluate(Multiples(3), w),), KIND_C_SET)
    assert read_chain(write_chain(chain)).kind == KIND_C_SET


def test_chain_rejects_nondecreasing_text():
    w = Window(1, 16)
    a = write_intset(evaluate(Multiples(4), w)).strip().splitlines()
    b = write_intset(evaluate(Multiples(2), w)).strip().splitlines()
    text = "chain 2 quasi-central-candidate\n" + "\n".join(a + b) + "\n"
    with pytest.raises(ValueError):
        read_chain(text)  # level 2 is not a subset of level 1
