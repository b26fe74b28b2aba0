"""Exponent matrices of QC-LDPC codes and their circulant expansion.

An exponent matrix of circulant size ``L`` is an ``m x n`` integer array with
entries in ``{-1, 0, ..., L-1}``. Entry ``k >= 0`` stands for the ``L x L``
circulant permutation matrix ``P^k`` with ones at ``(u, (u + k) mod L)``;
``-1`` stands for the zero block.

Text format (``.em``)::

    # comment
    m n L
    a11 a12 ... a1n
    ...
    am1 am2 ... amn
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

__all__ = [
    "BinaryParityMatrix",
    "ExponentFormatError",
    "ExponentMatrix",
    "MotherMatrix",
    "alternating_sum",
    "alternating_sum_is_cycle",
    "expand",
    "format_exponent_matrix",
    "mother_matrix",
    "parse_exponent_matrix",
    "read_alist",
    "read_exponent_matrix",
    "write_alist",
]


class ExponentFormatError(ValueError):
    """Malformed exponent-matrix text; ``lineno`` is 1-based (0 if unknown)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


@dataclass(frozen=True)
class ExponentMatrix:
    """Shift values of a QC-LDPC parity-check matrix.

    Parameters
    ----------
    entries : array_like
        ``m x n`` integers in ``[-1, circulant_size - 1]``.
    circulant_size : int
        Size ``L`` of each circulant block.
    """

    entries: np.ndarray
    circulant_size: int

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"exponent matrix must be a non-empty 2-D array, got shape {arr.shape}")
        L = int(self.circulant_size)
        if L < 1:
            raise ValueError(f"circulant size must be >= 1, got {L}")
        bad = np.argwhere((arr < -1) | (arr > L - 1))
        if len(bad):
            i, j = bad[0]
            raise ValueError(f"entry ({i}, {j}) = {arr[i, j]} out of range [-1, {L - 1}]")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "circulant_size", L)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __eq__(self, other):
        if not isinstance(other, ExponentMatrix):
            return NotImplemented
        return self.circulant_size == other.circulant_size and np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash((self.circulant_size, self.entries.shape, self.entries.tobytes()))

    def __repr__(self):
        return f"ExponentMatrix({self.tolist()!r}, circulant_size={self.circulant_size})"


@dataclass(frozen=True)
class MotherMatrix:
    """Binary ``m x n`` matrix marking the non-zero blocks."""

    bits: np.ndarray

    def __post_init__(self):
        bits = np.array(self.bits, dtype=np.uint8)
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @property
    def rows(self) -> int:
        return self.bits.shape[0]

    @property
    def cols(self) -> int:
        return self.bits.shape[1]

    def tolist(self) -> list[list[int]]:
        return self.bits.tolist()

    def __eq__(self, other):
        if not isinstance(other, MotherMatrix):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.bits.shape, self.bits.tobytes()))


@dataclass(frozen=True)
class BinaryParityMatrix:
    """Sparse binary matrix stored as sorted ``(row, col)`` positions of its ones."""

    row_count: int
    col_count: int
    positions: tuple[tuple[int, int], ...]

    @property
    def nnz(self) -> int:
        return len(self.positions)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.row_count, self.col_count), dtype=np.uint8)
        if self.positions:
            r, c = np.array(self.positions).T
            dense[r, c] = 1
        return dense

    def row_indices(self) -> list[list[int]]:
        out = [[] for _ in range(self.row_count)]
        for r, c in self.positions:
            out[r].append(c)
        return out

    def col_indices(self) -> list[list[int]]:
        out = [[] for _ in range(self.col_count)]
        for r, c in self.positions:
            out[c].append(r)
        return out

    def tanner_csr(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR adjacency of the Tanner graph; checks first, then variables offset by ``row_count``."""
        m = self.row_count
        adj = [[m + c for c in cols] for cols in self.row_indices()]
        adj += [list(rows) for rows in self.col_indices()]
        indptr = np.zeros(len(adj) + 1, dtype=np.int32)
        indptr[1:] = np.cumsum([len(a) for a in adj])
        indices = np.fromiter((v for a in adj for v in a), dtype=np.int32, count=int(indptr[-1]))
        return indptr, indices


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_exponent_matrix(text: str | TextIO) -> ExponentMatrix:
    """Parse the ``.em`` text format, reporting errors with their line number."""
    if not isinstance(text, str):
        text = text.read()
    lines = [(no, _strip(raw)) for no, raw in enumerate(text.splitlines(), start=1)]
    lines = [(no, s) for no, s in lines if s]
    if not lines:
        raise ExponentFormatError("missing header 'm n L'")

    no, header = lines[0]
    fields = header.split()
    try:
        m, n, L = (int(v) for v in fields)
    except ValueError:
        raise ExponentFormatError(f"malformed header {header!r}, expected 'm n L'", no) from None
    if m < 1 or n < 1 or L < 1:
        raise ExponentFormatError(f"header values must be positive, got {header!r}", no)

    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else no)
        raise ExponentFormatError(f"expected {m} matrix rows, found {len(body)}", where)

    entries = []
    for no, line in body:
        try:
            row = [int(v) for v in line.split()]
        except ValueError:
            raise ExponentFormatError(f"non-integer entry in {line!r}", no) from None
        if len(row) != n:
            raise ExponentFormatError(f"expected {n} entries, found {len(row)}", no)
        for e in row:
            if not -1 <= e <= L - 1:
                raise ExponentFormatError(f"entry {e} out of range [-1, {L - 1}] for L={L}", no)
        entries.append(row)
    return ExponentMatrix(entries, L)


def read_exponent_matrix(path) -> ExponentMatrix:
    with open(path, encoding="ascii") as fh:
        return parse_exponent_matrix(fh)


def format_exponent_matrix(E: ExponentMatrix) -> str:
    """Render ``E`` in the ``.em`` text format, columns right-aligned."""
    width = max(len(str(v)) for v in E.entries.flat)
    lines = [f"{E.rows} {E.cols} {E.circulant_size}"]
    lines += [" ".join(str(v).rjust(width) for v in row) for row in E.tolist()]
    return "\n".join(lines) + "\n"


def mother_matrix(E: ExponentMatrix) -> MotherMatrix:
    return MotherMatrix((E.entries != -1).astype(np.uint8))


def expand(E: ExponentMatrix) -> BinaryParityMatrix:
    """Replace every entry by its ``L x L`` circulant block.

    Block ``(i, j)`` with shift ``k`` has ones at ``(i*L + u, j*L + (u + k) mod L)``.
    """
    L = E.circulant_size
    u = np.arange(L)
    rows, cols = [], []
    for i, j in zip(*np.nonzero(E.entries != -1)):
        rows.append(i * L + u)
        cols.append(j * L + (u + E.entries[i, j]) % L)
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
        order = np.lexsort((c, r))
        positions = tuple(zip(r[order].tolist(), c[order].tolist()))
    else:
        positions = ()
    return BinaryParityMatrix(E.rows * L, E.cols * L, positions)


def alternating_sum(chain_exponents: Sequence[int]) -> int:
    """``sum_i (-1)^i a_i`` with 1-based ``i``: odd positions negative, even positive."""
    return sum(a if i % 2 else -a for i, a in enumerate(chain_exponents))


def alternating_sum_is_cycle(chain_exponents: Sequence[int], L: int) -> bool:
    """Whether an exponent chain closes into a cycle of the expanded matrix.

    The chain ``a_1, ..., a_2l`` closes iff its alternating sum is divisible by ``L``.
    """
    if len(chain_exponents) < 4 or len(chain_exponents) % 2:
        raise ValueError(f"exponent chain must have even length >= 4, got {len(chain_exponents)}")
    return alternating_sum(chain_exponents) % L == 0


def write_alist(H: BinaryParityMatrix, stream: TextIO | None = None) -> str:
    """Write ``H`` in MacKay's alist format; returns the text (and writes it to ``stream`` if given)."""
    cols = H.col_indices()
    rows = H.row_indices()
    max_col = max((len(c) for c in cols), default=0)
    max_row = max((len(r) for r in rows), default=0)

    def padded(lists: Iterable[list[int]], width: int) -> list[str]:
        return [" ".join(str(v + 1) for v in idx + [-1] * (width - len(idx))) for idx in lists]

    out = [
        f"{H.col_count} {H.row_count}",
        f"{max_col} {max_row}",
        " ".join(str(len(c)) for c in cols),
        " ".join(str(len(r)) for r in rows),
        *padded(cols, max_col),
        *padded(rows, max_row),
    ]
    text = "\n".join(out) + "\n"
    if stream is not None:
        stream.write(text)
    return text


def read_alist(text: str | TextIO) -> BinaryParityMatrix:
    """Inverse of :func:`write_alist` (zero padding ignored, row lists cross-checked)."""
    if not isinstance(text, str):
        text = text.read()
    lines = [list(map(int, ln.split())) for ln in io.StringIO(text) if ln.strip()]
    n, m = lines[0]
    positions = set()
    for c, idx in enumerate(lines[4:4 + n]):
        positions.update((r - 1, c) for r in idx if r > 0)
    from_rows = set()
    for r, idx in enumerate(lines[4 + n:4 + n + m]):
        from_rows.update((r, c - 1) for c in idx if c > 0)
    if from_rows and from_rows != positions:
        raise ValueError("alist column and row lists disagree")
    return BinaryParityMatrix(m, n, tuple(sorted(positions)))
