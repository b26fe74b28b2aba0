"""Exponent chains, short-cycle census and girth.

The Tanner graph of the expanded matrix covers the Tanner graph of the mother
matrix. A cycle of length ``2l`` upstairs projects to a tailless,
backtrack-free closed walk of length ``2l`` downstairs whose alternating
exponent sum vanishes mod ``L``, and every such walk lifts to a closed walk
that contains a cycle. The girth of ``H`` is therefore the shortest such walk.

From length 8 on, these walks include non-simple ones (a 4-cycle traversed
twice, two 4-cycles glued at a node). They can close upstairs even when the
underlying simple cycles do not, so they are enumerated too.

Walks are counted once per equivalence class under rotation and reversal.
Counts are block-level. They are not multiplied by ``L``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from ._kernels import bfs_girth, closed_walks
from .exponent import (
    BinaryParityMatrix,
    ExponentMatrix,
    MotherMatrix,
    alternating_sum_is_cycle,
    mother_matrix,
)

__all__ = [
    "DEFAULT_MAX_LEN",
    "ChainTable",
    "CycleCensus",
    "ExponentChain",
    "census",
    "enumerate_chains",
    "graph_girth_oracle",
]

DEFAULT_MAX_LEN = 12


def _check_max_len(max_len: int) -> None:
    if max_len < 4 or max_len % 2:
        raise ValueError(f"max_len must be an even integer >= 4, got {max_len}")


class ChainTable:
    """Closed walks of a mother matrix, enumerated lazily by length.

    Walks are stored as int32 arrays of edge indices, edges being the ones of
    the mother matrix in row-major order. The table depends only on the mother
    matrix, so it can be shared by every lifting of the same base matrix.
    """

    def __init__(self, M: MotherMatrix):
        self.mother = M
        rows, cols = np.nonzero(M.bits)
        self.edge_check = rows.astype(np.int32)
        self.edge_var = cols.astype(np.int32)
        self.check_ptr, self.check_edges = self._csr(self.edge_check, M.rows)
        self.var_ptr, self.var_edges = self._csr(self.edge_var, M.cols)
        self._walks: dict[int, np.ndarray] = {}
        self._enumerated_to = 2
        self._lock = threading.Lock()

    @staticmethod
    def _csr(owner, count):
        order = np.argsort(owner, kind="stable").astype(np.int32)
        ptr = np.zeros(count + 1, dtype=np.int32)
        ptr[1:] = np.cumsum(np.bincount(owner, minlength=count))
        return ptr, order

    @property
    def n_edges(self) -> int:
        return len(self.edge_check)

    def edge_exponents(self, E: ExponentMatrix) -> np.ndarray:
        return E.entries[self.edge_check, self.edge_var]

    def ensure(self, max_len: int) -> None:
        with self._lock:
            if max_len <= self._enumerated_to:
                return
            self._walks = closed_walks(
                self.edge_check, self.edge_var,
                self.check_ptr, self.check_edges,
                self.var_ptr, self.var_edges,
                max_len,
            )
            self._enumerated_to = max_len

    def walks(self, length: int) -> np.ndarray:
        """All walk classes of exactly ``length`` edges, shape ``(count, length)``."""
        self.ensure(length)
        with self._lock:
            return self._walks[length]

    def closing(self, exponents: np.ndarray, L: int, length: int) -> np.ndarray:
        """Boolean mask over ``walks(length)``: which ones close for these edge exponents."""
        W = self.walks(length)
        if not len(W):
            return np.zeros(0, dtype=bool)
        signs = np.where(np.arange(length) % 2 == 0, -1, 1)
        return (exponents[W] @ signs) % L == 0


@dataclass(frozen=True)
class ExponentChain:
    """A closed walk in the mother matrix together with the exponents it reads.

    ``blocks[i]`` is the ``(row, col)`` block traversed at step ``i``; the walk
    starts at the check node ``blocks[0][0]``.
    """

    blocks: tuple[tuple[int, int], ...]
    exponents: tuple[int, ...]

    def __len__(self):
        return len(self.blocks)

    @property
    def nodes(self) -> tuple[tuple[str, int], ...]:
        out = [("check", self.blocks[0][0])]
        for i, (r, c) in enumerate(self.blocks):
            out.append(("var", c) if i % 2 == 0 else ("check", r))
        return tuple(out)

    def is_cycle(self, L: int) -> bool:
        return alternating_sum_is_cycle(self.exponents, L)


def enumerate_chains(M: MotherMatrix, E: ExponentMatrix, max_len: int = DEFAULT_MAX_LEN,
                     table: ChainTable | None = None) -> Iterator[ExponentChain]:
    """Yield every exponent chain of length 4..max_len once, shortest first."""
    _check_max_len(max_len)
    if mother_matrix(E) != M:
        raise ValueError("mother matrix does not match the exponent matrix")
    table = table or ChainTable(M)
    ex = table.edge_exponents(E)
    for length in range(4, max_len + 1, 2):
        for walk in table.walks(length):
            w = walk.tolist()
            # present the walk from a check node: if the first two edges meet at
            # a check, the first edge was traversed variable -> check
            if table.edge_check[w[0]] == table.edge_check[w[1]]:
                w = w[1:] + w[:1]
            yield ExponentChain(
                tuple((int(table.edge_check[e]), int(table.edge_var[e])) for e in w),
                tuple(int(ex[e]) for e in w),
            )


@dataclass(frozen=True)
class CycleCensus:
    """Per-length counts of exponent chains and of those that close into cycles.

    ``girth`` is ``None`` when no inspected length closes ("at least
    ``max_len + 2``"). With ``stop_at_girth`` the census stops at the first
    closing length, so lengths beyond the girth are absent.
    """

    circulant_size: int
    max_len: int
    totals: dict[int, int] = field(default_factory=dict)
    cycles: dict[int, int] = field(default_factory=dict)

    @property
    def lengths(self) -> list[int]:
        return sorted(self.totals)

    @property
    def girth(self) -> int | None:
        for length in self.lengths:
            if self.cycles[length]:
                return length
        return None

    @property
    def girth_label(self) -> str:
        g = self.girth
        return str(g) if g is not None else f">={self.max_len + 2}"

    @property
    def count_at_girth(self) -> int:
        g = self.girth
        return self.cycles[g] if g is not None else 0

    def split(self, length: int = 4) -> tuple[int, int]:
        """``(x, y)``: chains of ``length`` that do and do not form cycles."""
        x = self.cycles.get(length, 0)
        return x, self.totals.get(length, 0) - x

    def key(self) -> tuple[float, int]:
        """Sort key, smaller is better: larger girth first, then fewer cycles at girth."""
        g = self.girth
        return (-(g if g is not None else float("inf")), self.count_at_girth)


def census(E: ExponentMatrix, max_len: int = DEFAULT_MAX_LEN, *, stop_at_girth: bool = False,
           table: ChainTable | None = None) -> CycleCensus:
    """Count exponent chains of every even length up to ``max_len`` and classify them."""
    _check_max_len(max_len)
    M = mother_matrix(E)
    if table is None:
        table = ChainTable(M)
    elif table.mother != M:
        raise ValueError("chain table was built for a different mother matrix")
    ex = table.edge_exponents(E)
    totals, cycles = {}, {}
    for length in range(4, max_len + 1, 2):
        closing = table.closing(ex, E.circulant_size, length)
        totals[length] = int(len(closing))
        cycles[length] = int(closing.sum())
        if stop_at_girth and cycles[length]:
            break
    return CycleCensus(E.circulant_size, max_len, totals, cycles)


def graph_girth_oracle(H: BinaryParityMatrix, cap: int = DEFAULT_MAX_LEN) -> int | None:
    """Girth of the Tanner graph of ``H`` by breadth-first search; ``None`` if above ``cap``."""
    if cap < 4:
        raise ValueError(f"cap must be >= 4, got {cap}")
    indptr, indices = H.tanner_csr()
    g = bfs_girth(indptr, indices, cap)
    return int(g) or None
