from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from cohexp.exceptions import ContractError

Entry = tuple[int, int]


@dataclass(frozen=True)
class IntegerMatrix:
    """
    An exact integer matrix stored as a sparse map (row, col) -> nonzero value.

    Entries are Python ints, so there is no overflow however large the
    intermediate values of an elimination grow.
    """

    rows: int
    cols: int
    entries: Mapping[Entry, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ContractError(f"negative shape {self.rows}x{self.cols}")
        clean = {}
        for (i, j), value in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ContractError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            if value:
                clean[(i, j)] = int(value)
        object.__setattr__(self, "entries", clean)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int, cols: int) -> "IntegerMatrix":
        if len(values) > min(rows, cols):
            raise ContractError(f"{len(values)} diagonal values do not fit {rows}x{cols}")
        return cls(rows, cols, {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = len(data)
        width = cols if cols is not None else (len(data[0]) if rows else 0)
        for r in data:
            if len(r) != width:
                raise ContractError(f"ragged rows: expected width {width}, got {len(r)}")
        return cls(
            rows,
            width,
            {(i, j): int(v) for i, r in enumerate(data) for j, v in enumerate(r) if v},
        )

    @classmethod
    def from_triplets(
        cls, rows: int, cols: int, triplets: Iterable[tuple[int, int, int]]
    ) -> "IntegerMatrix":
        """Duplicate positions are summed."""
        acc: dict[Entry, int] = defaultdict(int)
        for i, j, v in triplets:
            acc[(i, j)] += v
        return cls(rows, cols, acc)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def __getitem__(self, key: Entry) -> int:
        return self.entries.get(key, 0)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def row_dicts(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = defaultdict(dict)
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return dict(out)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ContractError(f"cannot multiply {self.shape} by {other.shape}")
        right = other.row_dicts()
        acc: dict[Entry, int] = defaultdict(int)
        for (i, k), a in self.entries.items():
            for j, b in right.get(k, {}).items():
                acc[(i, j)] += a * b
        return IntegerMatrix(self.rows, other.cols, acc)

    def is_zero(self) -> bool:
        return not self.entries

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self.entries)

    def diagonal_values(self) -> list[int]:
        return [self[(i, i)] for i in range(min(self.rows, self.cols))]

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols}, nnz={self.nnz})"
