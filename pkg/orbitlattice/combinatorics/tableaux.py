"""Shapes, standard Young tableaux and the two-column tableaux that index orbital varieties.

Shapes are partitions written by row lengths. A two-column tableau of
dual shape (n-k, k) therefore has shape (2,...,2,1,...,1) with k twos.
"""

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from orbitlattice.errors import DomainError, ParseError, TableauValidationError

logger = logging.getLogger(__name__)


def _parse_int_list(text: str, what: str) -> Tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"{what}: expected comma-separated integers, got '{text}'") from exc


@dataclass(frozen=True)
class Shape:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise DomainError("shape must have at least one row")
        if any(p <= 0 for p in parts):
            raise DomainError(f"shape {parts} has a non-positive part")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"shape {parts} is not weakly decreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def dual(self) -> "Shape":
        return Shape(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

    def cells(self) -> Iterator[Tuple[int, int]]:
        for r, length in enumerate(self.parts):
            for c in range(length):
                yield r, c

    @classmethod
    def two_column(cls, n: int, k: int) -> "Shape":
        """The shape whose dual partition is (n-k, k)."""
        _check_two_column_params(n, k)
        return cls((2,) * k + (1,) * (n - 2 * k))

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def _check_two_column_params(n: int, k: int) -> None:
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if k < 0 or 2 * k > n:
        raise DomainError(f"need 0 <= 2k <= n, got n={n}, k={k}")


def partitions(n: int) -> List[Shape]:
    """All partitions of n, largest first part first."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")

    def _gen(remaining: int, bound: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in _gen(remaining - first, first):
                yield (first,) + rest

    return [Shape(p) for p in _gen(n, n)]


def hook_count(shape: Shape) -> int:
    """Number of standard tableaux of *shape* by the hook-length formula."""
    dual = shape.dual().parts
    hooks = math.prod(
        (shape.parts[r] - c - 1) + (dual[c] - r - 1) + 1
        for r, c in shape.cells()
    )
    return math.factorial(shape.n) // hooks


@dataclass(frozen=True)
class StandardTableau:
    """A standard Young tableau stored by rows."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(not row for row in rows):
            raise TableauValidationError("tableau rows must be non-empty")
        lengths = [len(row) for row in rows]
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
            raise TableauValidationError(f"row lengths {lengths} are not weakly decreasing")
        entries = sorted(v for row in rows for v in row)
        if entries != list(range(1, len(entries) + 1)):
            raise TableauValidationError(f"entries are not exactly 1..{len(entries)}")
        for r, row in enumerate(rows):
            for c in range(len(row) - 1):
                if row[c] >= row[c + 1]:
                    raise TableauValidationError(f"row {r + 1} is not increasing at column {c + 1}")
        for r in range(len(rows) - 1):
            for c in range(len(rows[r + 1])):
                if rows[r][c] >= rows[r + 1][c]:
                    raise TableauValidationError(f"column {c + 1} is not increasing at row {r + 1}")

    @cached_property
    def shape(self) -> Shape:
        return Shape(tuple(len(row) for row in self.rows))

    @property
    def n(self) -> int:
        return self.shape.n

    @cached_property
    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(
            tuple(row[c] for row in self.rows if len(row) > c)
            for c in range(len(self.rows[0]))
        )

    def position(self, value: int) -> Tuple[int, int]:
        for r, row in enumerate(self.rows):
            if value in row:
                return r, row.index(value)
        raise ValueError(f"{value} is not in the tableau")

    def sort_key(self) -> Tuple[Tuple[int, ...], ...]:
        # The columns after the first determine the tableau.
        return self.columns[1:]

    @property
    def text(self) -> str:
        if len(self.rows[0]) <= 2:
            return TwoColumnTableau.from_standard(self).text
        return "/".join(",".join(str(v) for v in row) for row in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "StandardTableau":
        """Parses "1,3/2/4" (rows) or the two-column encoding "1,2,4|3"."""
        if "|" in text:
            return parse_two_column(text).to_standard()
        rows = [_parse_int_list(chunk, "tableau row") for chunk in text.split("/")]
        return cls(tuple(rows))

    def __str__(self):
        width = len(str(self.n))
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows)


@dataclass(frozen=True)
class TwoColumnTableau:
    """Standard tableau with at most two columns, encoded by its columns (T1, T2)."""

    col1: Tuple[int, ...]
    col2: Tuple[int, ...]

    def __post_init__(self):
        col1 = tuple(int(v) for v in self.col1)
        col2 = tuple(int(v) for v in self.col2)
        object.__setattr__(self, "col1", col1)
        object.__setattr__(self, "col2", col2)
        for name, col in (("col1", col1), ("col2", col2)):
            for idx in range(len(col) - 1):
                if col[idx] >= col[idx + 1]:
                    raise TableauValidationError(
                        f"{name} is not increasing at position {idx + 1} ({col[idx]} >= {col[idx + 1]})"
                    )
        n = len(col1) + len(col2)
        if n == 0:
            raise TableauValidationError("tableau is empty")
        if sorted(col1 + col2) != list(range(1, n + 1)):
            raise TableauValidationError(f"columns do not partition {{1..{n}}}")
        if len(col2) > len(col1):
            raise TableauValidationError(
                f"col2 has {len(col2)} entries but col1 only {len(col1)}"
            )
        for idx, (a, b) in enumerate(zip(col1, col2), start=1):
            if a >= b:
                raise TableauValidationError(
                    f"row condition col1[{idx}] < col2[{idx}] fails ({a} >= {b})"
                )

    @property
    def n(self) -> int:
        return len(self.col1) + len(self.col2)

    @property
    def k(self) -> int:
        return len(self.col2)

    @property
    def shape(self) -> Shape:
        return Shape.two_column(self.n, self.k)

    def column_of(self, value: int) -> int:
        """c_T(value): 1 or 2."""
        return 2 if value in self.col2 else 1

    def to_standard(self) -> StandardTableau:
        rows = [
            (a, self.col2[idx]) if idx < self.k else (a,)
            for idx, a in enumerate(self.col1)
        ]
        return StandardTableau(tuple(rows))

    @classmethod
    def from_standard(cls, tableau: StandardTableau) -> "TwoColumnTableau":
        columns = tableau.columns
        if len(columns) > 2:
            raise DomainError(f"tableau of shape {tableau.shape} has more than two columns")
        return cls(columns[0], columns[1] if len(columns) == 2 else ())

    @property
    def text(self) -> str:
        return ",".join(map(str, self.col1)) + "|" + ",".join(map(str, self.col2))

    def __str__(self):
        return self.text


def tableau_from_columns(col1: Sequence[int], col2: Sequence[int]) -> TwoColumnTableau:
    """Validated two-column tableau; raises TableauValidationError naming the broken rule."""
    return TwoColumnTableau(tuple(col1), tuple(col2))


def parse_two_column(text: str) -> TwoColumnTableau:
    """Parses "c11,c12,...|c21,c22,..."; a missing bar means an empty second column."""
    left, _, right = text.partition("|")
    return tableau_from_columns(
        _parse_int_list(left, "first column"),
        _parse_int_list(right, "second column"),
    )


def enumerate_two_column(n: int, k: int) -> List[TwoColumnTableau]:
    """All standard tableaux of dual shape (n-k, k), ordered lexicographically by col2."""
    _check_two_column_params(n, k)
    result = []
    for col2 in combinations(range(1, n + 1), k):
        chosen = set(col2)
        col1 = tuple(v for v in range(1, n + 1) if v not in chosen)
        # Ballot condition: the s-th entry of col2 exceeds the s-th entry of col1.
        if all(col1[s] < col2[s] for s in range(k)):
            result.append(TwoColumnTableau(col1, col2))
    logger.debug("enumerate_two_column(n=%d, k=%d): %d tableaux", n, k, len(result))
    return result


def enumerate_standard(shape: Shape) -> List[StandardTableau]:
    """All standard tableaux of *shape*, sorted by StandardTableau.sort_key."""
    parts = list(shape.parts)
    found: List[StandardTableau] = []

    def _fill(rows: List[List[int]], value: int):
        if value > shape.n:
            found.append(StandardTableau(tuple(tuple(row) for row in rows)))
            return
        for r, row in enumerate(rows):
            if len(row) == parts[r]:
                continue
            if r > 0 and len(rows[r - 1]) <= len(row):
                continue
            row.append(value)
            _fill(rows, value + 1)
            row.pop()

    _fill([[] for _ in parts], 1)
    found.sort(key=StandardTableau.sort_key)
    return found
