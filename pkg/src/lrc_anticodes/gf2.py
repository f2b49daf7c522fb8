"""Dense GF(2) linear algebra on bit-packed rows.

A row is a Python ``int`` whose bit ``j`` is the entry in column ``j``.
A column, read top to bottom, is an ``int`` whose bit ``i`` is the entry
in row ``i`` (row 0 is the least significant bit).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ColumnNotFound,
    DuplicateTarget,
    IndexOutOfRange,
    MatrixFormatError,
    NotStandardForm,
    RankDeficient,
)

ColumnIndexSet = tuple[int, ...]


def popcount(x: int) -> int:
    return x.bit_count()


def support(x: int) -> tuple[int, ...]:
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return tuple(out)


def from_support(indices: Iterable[int]) -> int:
    v = 0
    for i in indices:
        v |= 1 << i
    return v


def column_order_key(col: int) -> tuple[int, tuple[int, ...]]:
    """Sort key placing columns by Hamming weight, then lexicographically by support.

    For columns of length 4 this gives 1000, 0100, 0010, 0001, 1100, 1010,
    1001, 0110, ... (rows listed top to bottom), i.e. the order in which
    ``itertools.combinations`` produces supports.
    """
    s = support(col)
    return (len(s), s)


@dataclass(frozen=True)
class BitMatrix:
    nrows: int
    ncols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.data) != self.nrows:
            raise ValueError(f"expected {self.nrows} rows, got {len(self.data)}")
        limit = 1 << self.ncols
        for r in self.data:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond the last column")

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[int], ncols: int) -> BitMatrix:
        rows = tuple(rows)
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> BitMatrix:
        if not rows:
            return cls(0, 0, ())
        ncols = len(rows[0])
        packed = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            packed.append(from_support(j for j, b in enumerate(r) if b & 1))
        return cls(len(rows), ncols, tuple(packed))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> BitMatrix:
        """Build from strings like ``"1100"``; whitespace inside a row is ignored."""
        return cls.from_lists([[int(ch) for ch in r if ch in "01"] for r in rows])

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> BitMatrix:
        rows = [0] * nrows
        for j, c in enumerate(columns):
            if c >> nrows:
                raise ValueError(f"column {j} does not fit in {nrows} rows")
            for i in support(c):
                rows[i] |= 1 << j
        return cls(nrows, len(columns), tuple(rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> BitMatrix:
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, k: int) -> BitMatrix:
        return cls(k, k, tuple(1 << i for i in range(k)))

    # access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> int:
        return self.data[i]

    def bit(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def column(self, j: int) -> int:
        c = 0
        for i, r in enumerate(self.data):
            c |= ((r >> j) & 1) << i
        return c

    def columns(self) -> list[int]:
        cols = [0] * self.ncols
        for i, r in enumerate(self.data):
            for j in support(r):
                cols[j] |= 1 << i
        return cols

    def row_weights(self) -> list[int]:
        return [popcount(r) for r in self.data]

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.data]

    def row_string(self, i: int) -> str:
        r = self.data[i]
        return "".join("1" if (r >> j) & 1 else "0" for j in range(self.ncols))

    # combination --------------------------------------------------------

    def transpose(self) -> BitMatrix:
        return BitMatrix(self.ncols, self.nrows, tuple(self.columns()))

    def vstack(self, other: BitMatrix) -> BitMatrix:
        if other.ncols != self.ncols:
            raise ValueError("column counts differ")
        return BitMatrix(self.nrows + other.nrows, self.ncols, self.data + other.data)

    def hstack(self, other: BitMatrix) -> BitMatrix:
        if other.nrows != self.nrows:
            raise ValueError("row counts differ")
        rows = tuple(a | (b << self.ncols) for a, b in zip(self.data, other.data))
        return BitMatrix(self.nrows, self.ncols + other.ncols, rows)

    def permute_columns(self, perm: Sequence[int]) -> BitMatrix:
        """Return M' with column ``j`` of M' equal to column ``perm[j]`` of M."""
        if sorted(perm) != list(range(self.ncols)):
            raise ValueError("not a permutation of the column indices")
        cols = self.columns()
        return BitMatrix.from_columns([cols[p] for p in perm], self.nrows)

    def row_set(self) -> frozenset[int]:
        return frozenset(self.data)

    # text format --------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.nrows} {self.ncols}"]
        lines.extend(self.row_string(i) for i in range(self.nrows))
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return "\n".join(self.row_string(i) for i in range(self.nrows))


def parse_matrix(lines: Sequence[str], start: int = 0) -> tuple[BitMatrix, int]:
    """Parse one matrix block in the text format beginning at ``lines[start]``.

    Returns the matrix and the index of the first line after the block.
    """
    try:
        header = lines[start].split()
        nrows, ncols = int(header[0]), int(header[1])
    except (IndexError, ValueError) as exc:
        raise MatrixFormatError(f"bad matrix header at line {start + 1}") from exc
    if len(header) != 2 or nrows < 0 or ncols < 0:
        raise MatrixFormatError(f"bad matrix header at line {start + 1}")
    body = lines[start + 1 : start + 1 + nrows]
    if len(body) != nrows:
        raise MatrixFormatError("matrix block truncated")
    rows = []
    for offset, text in enumerate(body):
        text = text.rstrip("\r\n")
        if len(text) != ncols or set(text) - {"0", "1"}:
            raise MatrixFormatError(
                f"line {start + 2 + offset}: expected {ncols} characters from {{0,1}}"
            )
        rows.append(from_support(j for j, ch in enumerate(text) if ch == "1"))
    return BitMatrix(nrows, ncols, tuple(rows)), start + 1 + nrows


def read_matrix(text: str) -> BitMatrix:
    lines = text.splitlines()
    m, end = parse_matrix(lines)
    if any(line.strip() for line in lines[end:]):
        raise MatrixFormatError("trailing content after matrix")
    return m


# linear algebra -----------------------------------------------------------


def rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of packed rows.

    Returns the nonzero reduced rows (one per pivot) and the pivot columns.
    """
    work = list(rows)
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        mask = 1 << col
        pivot = next((r for r in range(top, len(work)) if work[r] & mask), None)
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        p = work[top]
        for r in range(len(work)):
            if r != top and work[r] & mask:
                work[r] ^= p
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(m: BitMatrix) -> int:
    return len(rref(m.data, m.ncols)[1])


def to_standard_form(g: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Row-reduce ``g`` to ``(I_k | A)``, permuting columns only where needed.

    The returned permutation ``perm`` satisfies: column ``j`` of the result
    came from column ``perm[j]`` of the row-reduced input. It is the
    identity when the pivots already occupy the first ``k`` columns.
    """
    reduced, pivots = rref(g.data, g.ncols)
    if len(pivots) < g.nrows:
        raise RankDeficient(f"rank {len(pivots)} < {g.nrows} rows")
    pivot_set = set(pivots)
    perm = tuple(pivots) + tuple(j for j in range(g.ncols) if j not in pivot_set)
    out = BitMatrix(g.nrows, g.ncols, tuple(reduced))
    if perm != tuple(range(g.ncols)):
        out = out.permute_columns(perm)
    return out, perm


def is_standard_form(g: BitMatrix) -> bool:
    k = g.nrows
    if k > g.ncols:
        return False
    low = (1 << k) - 1
    return all((r & low) == 1 << i for i, r in enumerate(g.data))


def derive_parity_check(g: BitMatrix) -> BitMatrix:
    """Parity-check matrix ``(A^T | I_{n-k})`` of a generator ``(I_k | A)``."""
    if not is_standard_form(g):
        raise NotStandardForm("leading k x k block is not the identity")
    k, n = g.shape
    rows = []
    for i in range(n - k):
        col = k + i
        r = 1 << col
        for j in range(k):
            if (g.data[j] >> col) & 1:
                r |= 1 << j
        rows.append(r)
    return BitMatrix(n - k, n, tuple(rows))


def parity_check_for(g: BitMatrix) -> BitMatrix:
    """Parity-check matrix for any full-rank generator, in ``g``'s coordinate order."""
    std, perm = to_standard_form(g)
    h = derive_parity_check(std)
    inverse = [0] * len(perm)
    for j, p in enumerate(perm):
        inverse[p] = j
    return h.permute_columns(inverse)


def nullspace(m: BitMatrix) -> BitMatrix:
    """Basis of ``{x : m x^T = 0}`` as the rows of a matrix."""
    reduced, pivots = rref(m.data, m.ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for r, p in zip(reduced, pivots):
            if (r >> free) & 1:
                v |= 1 << p
        basis.append(v)
    return BitMatrix(len(basis), m.ncols, tuple(basis))


def add_row(m: BitMatrix, src: int, dst: int) -> BitMatrix:
    """Return ``m`` with row ``dst`` replaced by ``row dst XOR row src``."""
    for i in (src, dst):
        if not 0 <= i < m.nrows:
            raise IndexOutOfRange(f"row index {i} outside 0..{m.nrows - 1}")
    if src == dst:
        raise IndexOutOfRange("cannot add a row to itself")
    rows = list(m.data)
    rows[dst] ^= rows[src]
    return BitMatrix(m.nrows, m.ncols, tuple(rows))


def _check_index_set(idx: Iterable[int], ncols: int) -> ColumnIndexSet:
    out = tuple(sorted(set(idx)))
    for j in out:
        if not 0 <= j < ncols:
            raise IndexOutOfRange(f"column index {j} outside 0..{ncols - 1}")
    return out


def delete_columns(m: BitMatrix, idx: Iterable[int]) -> BitMatrix:
    drop = set(_check_index_set(idx, m.ncols))
    if not drop:
        return m
    keep = [j for j in range(m.ncols) if j not in drop]
    cols = m.columns()
    return BitMatrix.from_columns([cols[j] for j in keep], m.nrows)


def insert_columns(m: BitMatrix, idx: Sequence[int], columns: Sequence[int]) -> BitMatrix:
    """Inverse of :func:`delete_columns`: place ``columns`` at final positions ``idx``."""
    if len(idx) != len(columns):
        raise ValueError("index and column counts differ")
    total = m.ncols + len(idx)
    positions = dict(zip(_check_index_set(idx, total), (c for _, c in sorted(zip(idx, columns)))))
    if len(positions) != len(idx):
        raise ValueError("duplicate insertion index")
    existing = iter(m.columns())
    cols = [positions[j] if j in positions else next(existing) for j in range(total)]
    return BitMatrix.from_columns(cols, m.nrows)


def find_columns(m: BitMatrix, targets: Sequence[int]) -> ColumnIndexSet:
    """Indices of the columns of ``m`` equal to the given column vectors."""
    if len(set(targets)) != len(targets):
        raise DuplicateTarget("target list contains a repeated column")
    where: dict[int, int] = {}
    for j, c in enumerate(m.columns()):
        where.setdefault(c, j)
    found = []
    for t in targets:
        if t not in where:
            raise ColumnNotFound(f"column {t:#x} not present")
        found.append(where[t])
    return tuple(sorted(found))


def mul_vec(m: BitMatrix, v: int) -> int:
    """Syndrome ``m v^T`` packed with bit ``i`` for row ``i``."""
    s = 0
    for i, r in enumerate(m.data):
        if popcount(r & v) & 1:
            s |= 1 << i
    return s


def rows_orthogonal(a: BitMatrix, b: BitMatrix) -> bool:
    """True if every row of ``a`` has even overlap with every row of ``b``."""
    return all(popcount(x & y) % 2 == 0 for x in a.data for y in b.data)


def gray_flips(k: int):
    """Yield the row index to toggle at each step of a reflected Gray-code walk.

    Starting from the all-zero combination, applying the ``2^k - 1`` yielded
    toggles visits every subset of ``k`` rows exactly once.
    """
    for step in range(1, 1 << k):
        yield (step & -step).bit_length() - 1
