"""Simultaneous sum witnesses and the pair-space transfer.

The embedded brute oracle replicates the documented search order with plain
loops; frozen constants were produced by a standalone run of the same logic.
"""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from aplift.jsets import (
    FuncFamily,
    FuncFamily2D,
    JWitness,
    JWitness2D,
    build_transfer_family,
    jset_witness,
    transfer_witness,
    verify_jwitness,
    verify_transfer_witness,
)
from aplift.sets import Bernoulli, IntSet, Multiples, Window, evaluate


def jset_brute(A, tables, a_max):
    """Ascending |H|, lex H over [1, T], then ascending base a."""
    mem = set(A.members())
    T = len(tables[0])
    for k in range(1, T + 1):
        for H in itertools.combinations(range(1, T + 1), k):
            for a in range(1, a_max + 1):
                if all(a + sum(tab[t - 1] for t in H) in mem for tab in tables):
                    return (a, H)
    return None


def test_family_validation():
    F = FuncFamily(((1, 2, 3), (2, 4, 6)))
    assert F.size == 2 and F.horizon == 3
    with pytest.raises(ValueError):
        FuncFamily(())
    with pytest.raises(ValueError):
        FuncFamily(((1, 2), (1, 2, 3)))  # ragged horizons
    with pytest.raises(ValueError):
        FuncFamily(((0, 2),))  # values must be >= 1
    with pytest.raises(ValueError):
        FuncFamily2D((((1, 2), (1,)),))  # pair horizons must match


def test_jwitness_validation():
    w = JWitness(3, (1, 4, 5))
    assert w.a == 3 and w.H == (1, 4, 5)
    with pytest.raises(ValueError):
        JWitness(0, (1,))
    with pytest.raises(ValueError):
        JWitness(3, ())
    with pytest.raises(ValueError):
        JWitness(3, (2, 2))
    with pytest.raises(ValueError):
        JWitness(3, (4, 1))


def test_jset_witness_frozen():
    # brute oracle: multiples of 3 with {t, 2t} at horizon 4 gives (3, {3})
    A = evaluate(Multiples(3), Window(1, 300))
    F = FuncFamily(((1, 2, 3, 4), (2, 4, 6, 8)))
    wit = jset_witness(A, F, 10)
    assert wit is not None
    assert (wit.a, wit.H) == (3, (3,))
    assert verify_jwitness(A, F, wit)


def test_jset_witness_none():
    # multiples of 9 with {t, 2t} at horizon 2: sums too small to align
    A = evaluate(Multiples(9), Window(1, 300))
    F = FuncFamily(((1, 2), (2, 4)))
    assert jset_witness(A, F, 50) is None


def test_jset_search_order():
    # order: |H| ascending, H lex, a ascending; craft a set where the
    # singleton H = {2} works only with larger a than H = {1}
    A = IntSet.from_members(Window(1, 50), [4, 6, 11, 13])
    F = FuncFamily(((1, 2, 3), (3, 6, 9)))
    wit = jset_witness(A, F, 40)
    # H={1}: need a+1, a+3 in A -> a=3 gives 4, 6. first hit
    assert (wit.a, wit.H) == (3, (1,))


@settings(max_examples=40)
@given(st.floats(0.3, 0.9), st.integers(0, 300),
       st.integers(1, 3), st.integers(1, 4))
def test_jset_matches_brute(p, seed, m, T):
    A = evaluate(Bernoulli(p, seed), Window(1, 120))
    tables = tuple(
        tuple((i + 1) * t % 7 + 1 for t in range(1, T + 1)) for i in range(m)
    )
    F = FuncFamily(tables)
    wit = jset_witness(A, F, 30)
    expect = jset_brute(A, tables, 30)
    if expect is None:
        assert wit is None
    else:
        assert (wit.a, wit.H) == expect
        assert verify_jwitness(A, F, wit)


def test_verify_jwitness_bounds():
    A = evaluate(Multiples(3), Window(1, 300))
    F = FuncFamily(((1, 2, 3, 4), (2, 4, 6, 8)))
    with pytest.raises(ValueError):
        verify_jwitness(A, F, JWitness(3, (5,)))  # beyond horizon
    # sums leaving the window simply fail the check
    big = JWitness(299, (4,))
    assert verify_jwitness(A, F, big) is False


def test_build_transfer_family_shape():
    # one pair (t, 2t+1) at horizon 2, offset 2, depth 2:
    # j = 0 -> g1; j = 1 -> g1 + (b + g2); j = 2 -> g1 + 2(b + g2)
    F2D = FuncFamily2D((((1, 2), (3, 5)),))
    G = build_transfer_family(F2D, b=2, l=2)
    assert G.tables == ((1, 2), (6, 9), (11, 16))
    assert G.size == 3  # m * (l + 1)


def test_build_transfer_family_two_pairs():
    F2D = FuncFamily2D((((1,), (1,)), ((2,), (3,))))
    G = build_transfer_family(F2D, b=1, l=1)
    # pair 1: (1,), (1+1+1,) ; pair 2: (2,), (2+1+3,)
    assert G.tables == ((1,), (3,), (2,), (6,))


def test_transfer_witness_frozen_evens():
    # brute oracle: base (1, 1) with H = {1}; the pair certifies {2, 4}
    A = evaluate(Multiples(2), Window(1, 200))
    F2D = FuncFamily2D((((1,), (1,)),))
    wit = transfer_witness(A, F2D, b=1, l=1, a_max=64)
    assert wit is not None
    assert (wit.a1, wit.a2, wit.H) == (1, 1, (1,))
    assert verify_transfer_witness(A, F2D, wit, 1)
    start = wit.a1 + 1          # f1 summed over H = {1}
    step = wit.a2 + 1           # f2 summed over H = {1}
    assert (start, step) == (2, 2)
    assert {start, start + step} <= set(A.members())


def test_transfer_witness_step_binding():
    # a2 is pinned to b * |H| by construction
    A = evaluate(Multiples(2), Window(1, 400))
    F2D = FuncFamily2D((((2, 4), (2, 4)),))
    wit = transfer_witness(A, F2D, b=2, l=2, a_max=64)
    assert wit is not None
    assert wit.a2 == 2 * len(wit.H)
    assert verify_transfer_witness(A, F2D, wit, 2)


def test_transfer_witness_none_when_absent():
    A = IntSet.from_members(Window(1, 60), [1])
    F2D = FuncFamily2D((((1,), (1,)),))
    assert transfer_witness(A, F2D, b=1, l=1, a_max=20) is None


@settings(max_examples=30)
@given(st.integers(2, 5), st.integers(1, 3), st.integers(1, 3),
       st.integers(1, 3), st.integers(0, 10 ** 6))
def test_transfer_self_check_never_trips(q, m, T, l, salt):
    # witnesses returned by the transfer always verify on the pair side
    import random
    rng = random.Random(salt)
    A = evaluate(Multiples(q), Window(1, 2000))
    pairs = tuple(
        (tuple(rng.randint(1, 10) for _ in range(T)),
         tuple(rng.randint(1, 10) for _ in range(T)))
        for _ in range(m)
    )
    F2D = FuncFamily2D(pairs)
    b = rng.randint(1, 3)
    wit = transfer_witness(A, F2D, b=b, l=l, a_max=50)
    if wit is not None:
        assert verify_transfer_witness(A, F2D, wit, l)
