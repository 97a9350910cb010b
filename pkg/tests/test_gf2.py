from __future__ import annotations

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from homcode import gf2
from oracle import rank2

matrices = arrays(np.uint8, st.tuples(st.integers(1, 7), st.integers(1, 9)), elements=st.integers(0, 1))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_matches_integer_elimination(M):
    assert gf2.rank(M) == rank2(M)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_nullspace_is_kernel_of_full_dimension(M):
    N = gf2.nullspace(M)
    assert N.shape[0] == M.shape[1] - gf2.rank(M)
    if N.size:
        assert not ((M.astype(int) @ N.T.astype(int)) % 2).any()
        assert gf2.rank(N) == N.shape[0]


@settings(max_examples=60, deadline=None)
@given(matrices, st.integers(0, 2**9 - 1))
def test_in_span_agrees_with_rank(M, bits):
    v = gf2.int_to_bits(bits % (1 << M.shape[1]), M.shape[1])
    expected = rank2(np.vstack([M, v])) == rank2(M)
    assert gf2.in_span(M, v) == expected


def test_int_echelon_membership():
    ech = gf2.IntEchelon()
    assert ech.add(0b101)
    assert ech.add(0b011)
    assert not ech.add(0b110)
    assert ech.contains(0b110)
    assert not ech.contains(0b001)


def test_bits_round_trip():
    v = np.array([1, 0, 1, 1, 0], dtype=np.uint8)
    assert np.array_equal(gf2.int_to_bits(gf2.bits_to_int(v), 5), v)


def test_same_span_and_complement():
    A = np.array([[1, 1, 0], [0, 1, 1]], dtype=np.uint8)
    B = np.array([[1, 0, 1], [1, 1, 0]], dtype=np.uint8)
    assert gf2.same_span(A, B)
    C = gf2.complement_basis(A, np.eye(3, dtype=np.uint8))
    assert C.shape[0] == 1
    assert gf2.rank(np.vstack([A, C])) == 3
