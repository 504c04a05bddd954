"""Integer partitions, staircase shapes, and their diagonal structure.

Ferrers diagrams use the convention with the longest row at the bottom:
cell (a, b) sits in column a of row b, both 0-based, rows numbered from
the bottom, so row b holds parts[b] cells.  For the staircase
(l, l-1, ..., 1) the cells are exactly {(a, b) : a + b <= l - 1} and the
anti-diagonal a + b = d holds l - d cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import DomainError
from .report import Report, check


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        for i, p in enumerate(self.parts):
            if p < 1:
                raise DomainError(f"parts must be positive, got {p}")
            if i and self.parts[i - 1] < p:
                raise DomainError(f"parts must weakly decrease, got {self.parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def cells(self) -> tuple[tuple[int, int], ...]:
        """All (column, row) cells, row 0 at the bottom holding parts[0]."""
        return tuple(
            (a, b) for b, row_len in enumerate(self.parts) for a in range(row_len)
        )

    def contains_cell(self, a: int, b: int) -> bool:
        return 0 <= b < len(self.parts) and 0 <= a < self.parts[b]

    def transpose(self) -> Partition:
        """Column lengths of the diagram, largest first."""
        if not self.parts:
            return self
        return Partition(
            tuple(
                sum(1 for p in self.parts if p > a) for a in range(self.parts[0])
            )
        )

    def is_self_conjugate(self) -> bool:
        return self.transpose() == self

    def hook_length(self, a: int, b: int) -> int:
        """Arm plus leg plus one for the cell (a, b)."""
        if not self.contains_cell(a, b):
            raise DomainError(f"cell ({a}, {b}) not in {self.parts}")
        arm = self.parts[b] - 1 - a
        leg = sum(1 for b2 in range(b + 1, len(self.parts)) if self.parts[b2] > a)
        return arm + leg + 1

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __iter__(self):
        return iter(self.parts)


def make_partition(parts) -> Partition:
    return Partition(tuple(parts))


def staircase(ell: int) -> Partition:
    """The partition (ell, ell-1, ..., 1)."""
    if ell < 1:
        raise DomainError(f"staircase index must be positive, got {ell}")
    return Partition(tuple(range(ell, 0, -1)))


def is_staircase(p: Partition) -> bool:
    return p == staircase(p.length) if p.parts else False


def is_triangular(n: int) -> int | None:
    """The ell with ell(ell+1)/2 == n, or None.

    >>> is_triangular(21)
    6
    >>> is_triangular(20) is None
    True
    """
    if n < 1:
        return None
    ell = (isqrt(8 * n + 1) - 1) // 2
    return ell if ell * (ell + 1) // 2 == n else None


def distinct_odd_parts(p: Partition) -> Partition:
    """Diagonal hook lengths of a self-conjugate partition.

    Self-conjugacy makes every diagonal hook odd and strictly
    decreasing down the diagonal, so the result is a partition into
    distinct odd parts of the same total size.

    >>> distinct_odd_parts(staircase(5)).parts
    (9, 5, 1)
    >>> distinct_odd_parts(staircase(6)).parts
    (11, 7, 3)
    """
    if not p.is_self_conjugate():
        raise DomainError(f"{p.parts} is not self-conjugate")
    hooks = []
    i = 0
    while p.contains_cell(i, i):
        hooks.append(p.hook_length(i, i))
        i += 1
    return Partition(tuple(hooks))


def triangular_gf_report(upto: int = 10) -> Report:
    """Coefficients of z / (1 - z)^3 against the triangular numbers.

    Index 0 is included but flagged degenerate: the series and the
    closed form both vanish there, so it carries no information.
    """
    if upto < 0:
        raise DomainError("need a nonnegative truncation order")
    # 1/(1-z)^3 expanded by three rounds of prefix sums, then one shift.
    series = [1] * (upto + 1)
    for _ in range(2):
        for i in range(1, upto + 1):
            series[i] += series[i - 1]
    coeffs = [0] + series[:upto]

    rep = Report(f"triangular generating function through index {upto}")
    for r in range(upto + 1):
        note = "degenerate index" if r == 0 else ""
        rep.add(check(f"coefficient of z^{r}", coeffs[r], r * (r + 1) // 2, note=note))
    return rep


BLACK = "B"
RED = "R"


@dataclass(frozen=True)
class Colouring:
    """A two-colouring of Ferrers cells by diagonal parity."""

    partition: Partition
    black: tuple[tuple[int, int], ...]
    red: tuple[tuple[int, int], ...]

    @property
    def black_count(self) -> int:
        return len(self.black)

    @property
    def red_count(self) -> int:
        return len(self.red)

    def colour_of(self, a: int, b: int) -> str:
        return BLACK if (a + b) % 2 == 0 else RED

    def ascii_diagram(self) -> str:
        """Rows top to bottom, one letter per cell."""
        rows = []
        for b in range(len(self.partition.parts) - 1, -1, -1):
            rows.append(
                "".join(self.colour_of(a, b) for a in range(self.partition.parts[b]))
            )
        return "\n".join(rows)

    def to_json(self) -> dict:
        return {
            "partition": self.partition.to_json(),
            "black": [list(c) for c in self.black],
            "red": [list(c) for c in self.red],
        }


def checkerboard(p: Partition) -> Colouring:
    """Colour each cell by the parity of a + b; the corner (0, 0) is black.

    >>> c = checkerboard(staircase(5))
    >>> c.black_count, c.red_count
    (9, 6)
    """
    black = tuple(c for c in p.cells() if sum(c) % 2 == 0)
    red = tuple(c for c in p.cells() if sum(c) % 2 == 1)
    return Colouring(p, black, red)
