# Copyright 2026 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from dataclasses import field
import logging
from typing import Iterable, Optional

from gardner.queens.enums import Slope
from gardner.queens.enums import Symmetry
from gardner.queens.exceptions import PlacementError
from gardner.queens.exceptions import ThreeInLineError
from gardner.queens.exceptions import UnsupportedBoardError

logger = logging.getLogger(name=__name__)


@dataclass(frozen=True, order=True)
class Square:
    """A square of the n x n board in zero-based (col, row) coordinates.

    ``col`` is the file index (a = 0) and ``row`` the rank index (1 = 0).
    """

    col: int
    row: int

    def on_board(self, n: int) -> bool:
        return 0 <= self.col < n and 0 <= self.row < n

    def centered(self, n: int) -> tuple[int, int]:
        """Returns the (x, y) coordinates with the central square at (0, 0).

        Raises:
            UnsupportedBoardError: The board has no central square (n even).
        """
        half = _half(n)
        return (self.col - half, self.row - half)

    def frame(self, n: int) -> tuple[int, int]:
        """Coordinates used for line intercepts: centered on odd boards,
        zero-based on even boards."""
        if n % 2:
            return self.centered(n)
        return (self.col, self.row)

    @classmethod
    def from_centered(cls, x: int, y: int, n: int) -> Square:
        half = _half(n)
        return cls(x + half, y + half)


def _half(n: int) -> int:
    if n % 2 == 0:
        raise UnsupportedBoardError(
            f"Centered coordinates need an odd board side, got n={n}."
        )
    return (n - 1) // 2


def _require_on_board(s: Square, n: int) -> None:
    if not s.on_board(n):
        raise PlacementError(f"Square ({s.col},{s.row}) is not on the {n}x{n} board.")


@dataclass(frozen=True)
class Line:
    """A queen line: x = a, y = b, x - y = gamma or x + y = delta.

    The intercept lives in the frame given by :meth:`Square.frame`.
    """

    slope: Slope
    intercept: int
    n: int

    def covers(self, s: Square) -> bool:
        return _intercept(self.slope, s, self.n) == self.intercept

    def squares(self) -> list[Square]:
        """Board squares on this line in row-major order."""
        return [s for s in board_squares(self.n) if self.covers(s)]

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.slope.order, self.intercept)

    def __str__(self) -> str:
        return f"{self.slope.value}:{self.intercept}"


def _intercept(slope: Slope, s: Square, n: int) -> int:
    u, v = s.frame(n)
    if slope is Slope.VERTICAL:
        return u
    if slope is Slope.HORIZONTAL:
        return v
    if slope is Slope.DIAG_PLUS:
        return u - v
    return u + v


def board_squares(n: int) -> list[Square]:
    """All squares of the board in row-major order (rank 1 first)."""
    return [Square(col, row) for row in range(n) for col in range(n)]


def lines_through(s: Square, n: int) -> list[Line]:
    """Returns the vertical, horizontal, +1 and -1 lines through ``s``.

    Raises:
        PlacementError: ``s`` is not on the board.
    """
    _require_on_board(s, n)
    return [Line(slope, _intercept(slope, s, n), n) for slope in Slope]


def all_lines(n: int) -> list[Line]:
    """Every line meeting the board, ordered by (slope, intercept)."""
    lines = {line for s in board_squares(n) for line in lines_through(s, n)}
    return sorted(lines, key=lambda line: line.sort_key)


@dataclass(frozen=True)
class Placement:
    """An immutable set of queens on the n x n board."""

    n: int
    queens: frozenset[Square] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise PlacementError(f"Board side must be at least 1, got n={self.n}.")
        for s in self.queens:
            _require_on_board(s, self.n)

    @classmethod
    def of(cls, n: int, squares: Iterable[Square]) -> Placement:
        """Builds a placement, rejecting a square listed twice."""
        counts = Counter(squares)
        for s, count in counts.items():
            if count > 1:
                raise PlacementError(f"Duplicate queen at ({s.col},{s.row}).")
        return cls(n, frozenset(counts))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Placement:
        return cls.of(n, (Square(c, r) for c, r in pairs))

    @classmethod
    def from_centered(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Placement:
        return cls.of(n, (Square.from_centered(x, y, n) for x, y in pairs))

    @property
    def size(self) -> int:
        return len(self.queens)

    def sorted_queens(self) -> list[Square]:
        """Queens in row-major order."""
        return sorted(self.queens, key=lambda s: (s.row, s.col))

    def pairs(self) -> list[tuple[int, int]]:
        return [(s.col, s.row) for s in self.sorted_queens()]

    def centered_pairs(self) -> list[tuple[int, int]]:
        return [s.centered(self.n) for s in self.sorted_queens()]


@dataclass(frozen=True)
class RegionU:
    """Squares left uncovered by the defined vertical and horizontal lines.

    Extremal indices are centered column (a, b) and row (a_prime, b_prime)
    indices and are None when the region is empty.
    """

    squares: frozenset[Square]
    a: Optional[int]
    b: Optional[int]
    a_prime: Optional[int]
    b_prime: Optional[int]
    perimeter: frozenset[Square]

    @property
    def is_empty(self) -> bool:
        return not self.squares


def line_counts(p: Placement) -> Counter[Line]:
    """Number of queens on every line meeting at least one queen."""
    counts: Counter[Line] = Counter()
    for s in p.queens:
        counts.update(lines_through(s, p.n))
    return counts


def defined_lines(p: Placement) -> set[Line]:
    """Lines covering at least two queens."""
    return {line for line, count in line_counts(p).items() if count >= 2}


def defined_intercepts(p: Placement) -> dict[Slope, list[int]]:
    """Sorted intercepts of the defined lines, per slope."""
    by_slope: dict[Slope, list[int]] = {slope: [] for slope in Slope}
    for line in defined_lines(p):
        by_slope[line.slope].append(line.intercept)
    return {slope: sorted(values) for slope, values in by_slope.items()}


def has_three_in_line(p: Placement) -> bool:
    return any(count >= 3 for count in line_counts(p).values())


def addable_squares(p: Placement) -> set[Square]:
    """Empty squares that can take a queen without making three in a line.

    Raises:
        ThreeInLineError: ``p`` already has three queens on a line.
    """
    counts = line_counts(p)
    if any(count >= 3 for count in counts.values()):
        raise ThreeInLineError(
            f"['n={p.n} q={p.size}']: placement already has three queens on a line."
        )
    return {
        s
        for s in board_squares(p.n)
        if s not in p.queens
        and all(counts[line] <= 1 for line in lines_through(s, p.n))
    }


def is_good(p: Placement) -> bool:
    """A placement is good when it has no three queens on a line and no
    queen can be added without creating such a line."""
    if has_three_in_line(p):
        return False
    return not addable_squares(p)


def lonely_queens(p: Placement) -> set[Square]:
    counts = line_counts(p)
    return {
        s for s in p.queens if all(counts[line] == 1 for line in lines_through(s, p.n))
    }


def region_U(p: Placement) -> RegionU:
    """Computes the region U of squares on no defined vertical or horizontal
    line, with its extremal indices and perimeter.

    Raises:
        UnsupportedBoardError: ``p`` is on an even board.
    """
    _half(p.n)
    intercepts = defined_intercepts(p)
    columns = set(intercepts[Slope.VERTICAL])
    rows = set(intercepts[Slope.HORIZONTAL])
    squares = frozenset(
        s
        for s in board_squares(p.n)
        if s.centered(p.n)[0] not in columns and s.centered(p.n)[1] not in rows
    )
    if not squares:
        return RegionU(frozenset(), None, None, None, None, frozenset())
    xs = [s.centered(p.n)[0] for s in squares]
    ys = [s.centered(p.n)[1] for s in squares]
    a, b, a_prime, b_prime = min(xs), max(xs), min(ys), max(ys)
    perimeter = frozenset(
        s
        for s in squares
        if s.centered(p.n)[0] in (a, b) or s.centered(p.n)[1] in (a_prime, b_prime)
    )
    logger.debug(
        f"['n={p.n}']: region U has {len(squares)} squares, "
        f"perimeter {len(perimeter)}"
    )
    return RegionU(squares, a, b, a_prime, b_prime, perimeter)


def transform_square(s: Square, g: Symmetry, n: int) -> Square:
    m = n - 1
    c, r = s.col, s.row
    if g is Symmetry.IDENTITY:
        return s
    if g is Symmetry.ROT90:
        return Square(m - r, c)
    if g is Symmetry.ROT180:
        return Square(m - c, m - r)
    if g is Symmetry.ROT270:
        return Square(r, m - c)
    if g is Symmetry.FLIP_H:
        return Square(m - c, r)
    if g is Symmetry.FLIP_V:
        return Square(c, m - r)
    if g is Symmetry.FLIP_D:
        return Square(r, c)
    return Square(m - r, m - c)


def transform(p: Placement, g: Symmetry | str) -> Placement:
    """Applies a dihedral symmetry of the board to ``p``.

    Args:
        p (Placement): The placement to move.
        g (Symmetry | str): The symmetry, or its string value (e.g. "r90").
    Returns:
        Placement: The image placement on the same board.
    """
    if isinstance(g, str):
        g = Symmetry(g.lower())
    return Placement(p.n, frozenset(transform_square(s, g, p.n) for s in p.queens))


def canonical_key(p: Placement) -> tuple[tuple[int, int], ...]:
    """Smallest sorted queen list over the eight images of ``p``."""
    return min(tuple(sorted(transform(p, g).pairs())) for g in Symmetry)


def case2_violation(p: Placement) -> Optional[str]:
    """Returns the first Case 2 condition ``p`` violates, or None.

    A Case 2 placement has n = 4k+1 queens on the (4k+1)-board, no three in
    a line, exactly one lonely queen, and every other queen on a defined line
    of each of the four slopes.
    """
    if p.n % 4 != 1 or p.n < 5:
        return f"board side must be 4k+1 with k >= 1, got n={p.n}"
    if p.size != p.n:
        return f"queen count must equal n={p.n}, got q={p.size}"
    counts = line_counts(p)
    if any(count >= 3 for count in counts.values()):
        return "placement has three queens on a line"
    lonely = [
        s for s in p.queens if all(counts[line] == 1 for line in lines_through(s, p.n))
    ]
    if len(lonely) != 1:
        return f"exactly one lonely queen required, got {len(lonely)}"
    for s in p.sorted_queens():
        if s in lonely:
            continue
        for line in lines_through(s, p.n):
            if counts[line] < 2:
                return (
                    f"queen ({s.col},{s.row}) is on no defined line of slope "
                    f"{line.slope.value}"
                )
    return None
