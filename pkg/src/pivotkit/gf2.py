"""Dense linear algebra over GF(2) with bit-packed rows.

Rows are stored as Python ints, bit j of a row being column j.  Addition
is XOR, so subtraction equals addition.  All operations return fresh
values; nothing mutates its inputs.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ._text import content_lines
from .errors import DimensionMismatch, FormatError, PivotOnZero


class BitMatrix:
    """A binary matrix with bit-packed rows.

    Empty matrices (0 rows or 0 columns) are legal and have rank 0.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = [0] * nrows
        else:
            if len(rows) != nrows:
                raise ValueError("row count does not match nrows")
            mask = (1 << ncols) - 1
            for r in rows:
                if r & ~mask:
                    raise ValueError("row has bits outside the column range")
            self.rows = list(rows)

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence[int]], ncols: int | None = None) -> "BitMatrix":
        """Build from a list of 0/1 lists."""
        nrows = len(entries)
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        rows = []
        for e in entries:
            if len(e) != ncols:
                raise ValueError("ragged rows")
            bits = 0
            for j, v in enumerate(e):
                if v not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                bits |= v << j
            rows.append(bits)
        return cls(nrows, ncols, rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols)

    @classmethod
    def ones(cls, nrows: int, ncols: int) -> "BitMatrix":
        full = (1 << ncols) - 1
        return cls(nrows, ncols, [full] * nrows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError("matrix index out of range")
        return (self.rows[i] >> j) & 1

    def set(self, i: int, j: int, value: int) -> None:
        if value not in (0, 1):
            raise ValueError("entries must be 0 or 1")
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError("matrix index out of range")
        if value:
            self.rows[i] |= 1 << j
        else:
            self.rows[i] &= ~(1 << j)

    def copy(self) -> "BitMatrix":
        return BitMatrix(self.nrows, self.ncols, self.rows)

    def column_bits(self, j: int) -> int:
        """The j-th column as an int, bit i being row i."""
        if not (0 <= j < self.ncols):
            raise IndexError("column index out of range")
        bits = 0
        for i, row in enumerate(self.rows):
            bits |= ((row >> j) & 1) << i
        return bits

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.ncols, self.nrows,
                         [self.column_bits(j) for j in range(self.ncols)])

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> "BitMatrix":
        cols = list(col_idx)
        rows = []
        for i in row_idx:
            src = self.rows[i]
            bits = 0
            for k, j in enumerate(cols):
                bits |= ((src >> j) & 1) << k
            rows.append(bits)
        return BitMatrix(len(rows), len(cols), rows)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch(
                f"{self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")
        return BitMatrix(self.nrows, self.ncols,
                         [a ^ b for a, b in zip(self.rows, other.rows)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.rows) == (other.nrows, other.ncols, other.rows)

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, tuple(self.rows)))

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"


def rank_bits(rows: Iterable[int]) -> int:
    """Rank over GF(2) of rows given as bit-packed ints."""
    lead: dict[int, int] = {}
    for row in rows:
        while row:
            hb = row.bit_length() - 1
            if hb in lead:
                row ^= lead[hb]
            else:
                lead[hb] = row
                break
    return len(lead)


def rank(m: BitMatrix) -> int:
    """Dimension of the row space of m over GF(2)."""
    return rank_bits(m.rows)


def matrix_pivot(m: BitMatrix, x: int, y: int) -> BitMatrix:
    """Pivot m at entry (x, y), which must be 1.

    Row x and column y are kept; every other entry (i, j) becomes
    m[i][j] XOR m[i][y]*m[x][j].  The operation is an involution.
    """
    if m.get(x, y) != 1:
        raise PivotOnZero(f"entry ({x},{y}) is 0")
    xrow_off = m.rows[x] & ~(1 << y)
    rows = []
    for i, row in enumerate(m.rows):
        if i != x and (row >> y) & 1:
            rows.append(row ^ xrow_off)
        else:
            rows.append(row)
    return BitMatrix(m.nrows, m.ncols, rows)


def xor_rank(m1: BitMatrix, m2: BitMatrix) -> int:
    """Rank of m1 XOR m2; the perturbation order between two matrices."""
    return rank(m1 ^ m2)


def format_matrix(m: BitMatrix) -> str:
    lines = [f"matrix {m.nrows} {m.ncols}"]
    for r in m.rows:
        lines.append("".join(str((r >> j) & 1) for j in range(m.ncols)))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> BitMatrix:
    lines = content_lines(text)
    if not lines:
        raise FormatError("empty matrix document")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "matrix":
        raise FormatError(f"bad matrix header: {lines[0]!r}")
    try:
        nrows, ncols = int(head[1]), int(head[2])
    except ValueError as exc:
        raise FormatError("matrix dimensions must be integers") from exc
    if len(lines) != 1 + nrows:
        raise FormatError(f"expected {nrows} matrix rows, got {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        if len(line) != ncols or set(line) - {"0", "1"}:
            raise FormatError(f"bad matrix row: {line!r}")
        bits = 0
        for j, ch in enumerate(line):
            if ch == "1":
                bits |= 1 << j
        rows.append(bits)
    return BitMatrix(nrows, ncols, rows)
