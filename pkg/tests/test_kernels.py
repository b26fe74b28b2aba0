"""Both kernel backends must agree with each other and with independent references."""

from itertools import permutations
from math import comb

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import exponent_matrices
from oracles import brute_force_chain_classes
from qclift import ChainTable, MotherMatrix, expand, mother_matrix
from qclift._kernels import BACKEND, _pykernels

try:
    from qclift._kernels import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def _args(bits):
    t = ChainTable(MotherMatrix(bits))
    return (t.edge_check, t.edge_var, t.check_ptr, t.check_edges, t.var_ptr, t.var_edges)


mother_bits = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=m, max_size=m)
    )
)


def test_backend_reported():
    assert BACKEND in {"cython", "python"}


@given(mother_bits)
@settings(max_examples=60, deadline=None)
def test_python_walks_match_brute_force(bits):
    walks = _pykernels.closed_walks(*_args(bits), 8)
    for length in (4, 6, 8):
        if length == 8 and len(bits) * len(bits[0]) > 9:
            continue  # brute force too slow
        assert len(walks[length]) == len(brute_force_chain_classes(bits, length))


@needs_c
@given(mother_bits)
@settings(max_examples=60, deadline=None)
def test_backends_identical(bits):
    py = _pykernels.closed_walks(*_args(bits), 10)
    c = _ckernels.closed_walks(*_args(bits), 10)
    assert py.keys() == c.keys()
    for length in py:
        assert np.array_equal(py[length], c[length])


@needs_c
def test_backends_identical_dense():
    bits = np.ones((3, 5), dtype=int)
    py = _pykernels.closed_walks(*_args(bits), 10)
    c = _ckernels.closed_walks(*_args(bits), 10)
    for length in py:
        assert np.array_equal(py[length], c[length])


def test_walks_are_canonical_and_distinct():
    walks = _pykernels.closed_walks(*_args(np.ones((3, 3), int)), 8)
    for length, W in walks.items():
        seen = set()
        for w in W.tolist():
            variants = {tuple(w[k:] + w[:k]) for k in range(length)}
            variants |= {tuple(reversed(v)) for v in variants}
            assert tuple(w) == min(variants)
            assert tuple(w) not in seen
            seen.add(tuple(w))


@pytest.mark.parametrize("max_len", [0, 2, 3])
def test_short_max_len_yields_nothing(max_len):
    assert all(len(v) == 0 for v in _pykernels.closed_walks(*_args(np.ones((2, 2), int)), max_len).values())


@given(exponent_matrices(max_rows=3, max_cols=4, max_L=6))
@settings(max_examples=80, deadline=None)
def test_bfs_girth_matches_networkx(E):
    H = expand(E)
    indptr, indices = H.tanner_csr()
    G = nx.Graph()
    G.add_nodes_from(range(len(indptr) - 1))
    for u in range(len(indptr) - 1):
        G.add_edges_from((u, int(w)) for w in indices[indptr[u]:indptr[u + 1]])
    expected = nx.girth(G)
    expected = 0 if expected == float("inf") or expected > 12 else expected
    assert _pykernels.bfs_girth(indptr, indices, 12) == expected
    if _ckernels is not None:
        assert _ckernels.bfs_girth(indptr, indices, 12) == expected


def _count_simple_cycles_4_6(bits):
    """4- and 6-cycles of the Tanner graph counted from neighbourhood intersections."""
    rows = [set(np.nonzero(r)[0]) for r in bits]
    m = len(rows)
    four = sum(comb(len(rows[a] & rows[b]), 2) for a in range(m) for b in range(a + 1, m))
    six = 0
    for a, b, c in permutations(range(m), 3):
        ab, bc, ca = rows[a] & rows[b], rows[b] & rows[c], rows[c] & rows[a]
        six += sum(1 for v0 in ab for v1 in bc for v2 in ca if len({v0, v1, v2}) == 3)
    return four, six // 6


def test_closed_walks_on_wimax_mother(wimax):
    bits = mother_matrix(wimax).bits
    args = _args(bits)
    py = _pykernels.closed_walks(*args, 6)
    four, six = _count_simple_cycles_4_6(bits)
    assert (len(py[4]), len(py[6])) == (four, six)
    if _ckernels is not None:
        c = _ckernels.closed_walks(*args, 6)
        assert all(np.array_equal(py[k], c[k]) for k in py)
