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

"""Products of linear forms in (x, y) and their exact coefficients.

All arithmetic is on Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
import logging
from math import comb
from typing import Iterator, Optional, Sequence

from gardner.queens.board import board_squares
from gardner.queens.board import defined_intercepts
from gardner.queens.board import lines_through
from gardner.queens.board import lonely_queens
from gardner.queens.board import Placement
from gardner.queens.board import Square
from gardner.queens.enums import CaseTwoPolynomial
from gardner.queens.enums import Slope
from gardner.queens.enums import Variant4k3
from gardner.queens.exceptions import CaseOneError
from gardner.queens.exceptions import FactorError
from gardner.queens.exceptions import UnsupportedBoardError

logger = logging.getLogger(name=__name__)

LonelyConstants = tuple[int, int, int, int]
InterceptSums = tuple[int, int, int, int]


@dataclass(frozen=True)
class LinearFactor:
    """The linear form cx*x + cy*y + c0."""

    cx: int
    cy: int
    c0: int

    def __post_init__(self) -> None:
        if self.cx == 0 and self.cy == 0:
            raise FactorError("Linear factor needs a nonzero x or y coefficient.")

    @classmethod
    def vertical(cls, alpha: int) -> LinearFactor:
        return cls(1, 0, -alpha)

    @classmethod
    def horizontal(cls, beta: int) -> LinearFactor:
        return cls(0, 1, -beta)

    @classmethod
    def diag_plus(cls, gamma: int) -> LinearFactor:
        return cls(1, -1, -gamma)

    @classmethod
    def diag_minus(cls, delta: int) -> LinearFactor:
        return cls(1, 1, -delta)

    @classmethod
    def for_slope(cls, slope: Slope, intercept: int) -> LinearFactor:
        return _FACTOR_BY_SLOPE[slope](intercept)

    def evaluate(self, x: int, y: int) -> int:
        return self.cx * x + self.cy * y + self.c0

    def __str__(self) -> str:
        return f"({self.cx}*x + {self.cy}*y + {self.c0})"


_FACTOR_BY_SLOPE = {
    Slope.VERTICAL: LinearFactor.vertical,
    Slope.HORIZONTAL: LinearFactor.horizontal,
    Slope.DIAG_PLUS: LinearFactor.diag_plus,
    Slope.DIAG_MINUS: LinearFactor.diag_minus,
}


@dataclass(frozen=True)
class FactorProduct:
    """A product of linear factors, kept unexpanded."""

    factors: tuple[LinearFactor, ...]

    @property
    def degree(self) -> int:
        return len(self.factors)

    def evaluate(self, x: int, y: int) -> int:
        value = 1
        for factor in self.factors:
            value *= factor.evaluate(x, y)
            if value == 0:
                return 0
        return value

    def coeff(self, a: int, b: int) -> int:
        """Exact coefficient of x^a y^b.

        The product is built one factor at a time on the table of
        bidegrees (i, j) with i <= a and j <= b; higher terms never feed
        lower ones. Returns 0 when a + b exceeds the degree.
        """
        if a < 0 or b < 0:
            raise ValueError(f"Exponents must be non-negative, got ({a}, {b}).")
        if a + b > self.degree:
            return 0
        table = [[0] * (b + 1) for _ in range(a + 1)]
        table[0][0] = 1
        for f in self.factors:
            # descending so each cell still reads the previous factor's values
            for i in range(a, -1, -1):
                row = table[i]
                below = table[i - 1] if i > 0 else None
                for j in range(b, -1, -1):
                    value = f.c0 * row[j]
                    if below is not None and f.cx:
                        value += f.cx * below[j]
                    if j > 0 and f.cy:
                        value += f.cy * row[j - 1]
                    row[j] = value
        return table[a][b]

    def expand(self) -> dict[tuple[int, int], int]:
        """All nonzero coefficients, keyed by (x exponent, y exponent)."""
        terms: dict[tuple[int, int], int] = {(0, 0): 1}
        for f in self.factors:
            nxt: dict[tuple[int, int], int] = {}
            for (i, j), c in terms.items():
                steps = (((i + 1, j), f.cx), ((i, j + 1), f.cy), ((i, j), f.c0))
                for key, mult in steps:
                    if mult:
                        nxt[key] = nxt.get(key, 0) + c * mult
            terms = {key: c for key, c in nxt.items() if c}
        return terms


def coeff(fp: FactorProduct, a: int, b: int) -> int:
    return fp.coeff(a, b)


def omega(k: int) -> int:
    """(-1)^k * C(2k, k), the top coefficient of the Case 1 polynomial."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}.")
    return (-1) ** k * comb(2 * k, k)


def case1_top_coefficient(k: int) -> int:
    return omega(k)


def _half_omega(k: int) -> int:
    return (-1) ** k * comb(2 * k - 1, k - 1)


def _blocks(
    alphas: Sequence[int],
    betas: Sequence[int],
    gammas: Sequence[int],
    deltas: Sequence[int],
) -> list[LinearFactor]:
    return (
        [LinearFactor.vertical(a) for a in alphas]
        + [LinearFactor.horizontal(b) for b in betas]
        + [LinearFactor.diag_plus(g) for g in gammas]
        + [LinearFactor.diag_minus(d) for d in deltas]
    )


def _case_k(*lists: Sequence[int]) -> int:
    lengths = {len(values) for values in lists}
    if len(lengths) != 1:
        raise FactorError(
            f"Intercept lists must have equal lengths, got "
            f"{[len(values) for values in lists]}."
        )
    length = lengths.pop()
    if length < 2 or length % 2:
        raise FactorError(f"Intercept lists must have length 2k >= 2, got {length}.")
    return length // 2


def build_case1(
    alphas: Sequence[int],
    betas: Sequence[int],
    gammas: Sequence[int],
    deltas: Sequence[int],
) -> FactorProduct:
    """The degree-8k product of 2k lines of each slope, in vertical,
    horizontal, +1, -1 block order."""
    _case_k(alphas, betas, gammas, deltas)
    return FactorProduct(tuple(_blocks(alphas, betas, gammas, deltas)))


def lonely_constants(s: Square, n: int) -> LonelyConstants:
    """Intercepts (x, y, x - y, x + y) of the four lines through a queen,
    in centered coordinates."""
    x, y = s.centered(n)
    return (x, y, x - y, x + y)


def build_case2(
    which: CaseTwoPolynomial | str,
    lonely: LonelyConstants,
    alphas: Sequence[int],
    betas: Sequence[int],
    gammas: Sequence[int],
    deltas: Sequence[int],
) -> FactorProduct:
    """The degree-(8k+1) product: the artificial line through the lonely
    queen first, then the 2k defined lines of each slope.

    Args:
        which (CaseTwoPolynomial | str): f1 (vertical lonely line), f2
            (horizontal), f3 (+1) or f4 (-1).
        lonely (tuple): (alpha0, beta0, gamma0, delta0).
    """
    if isinstance(which, str):
        which = CaseTwoPolynomial(which.lower())
    _case_k(alphas, betas, gammas, deltas)
    slope = which.lonely_slope
    first = LinearFactor.for_slope(slope, lonely[slope.order])
    return FactorProduct((first, *_blocks(alphas, betas, gammas, deltas)))


def closed_form_case2(
    which: CaseTwoPolynomial | str,
    k: int,
    lonely: LonelyConstants,
    sums: InterceptSums,
    as_printed: bool = False,
) -> int:
    """Coefficient of x^4k y^4k in a Case 2 polynomial from the lonely
    constants and the four intercept sums alone.

    With w = (-1)^k C(2k, k) and h = (-1)^k C(2k-1, k-1) = w/2:

        f1: w(-a0 - Sa) + h(-Sg) + h(-Sd)
        f2: w(-b0 - Sb) + h(+Sg) + h(-Sd)
        f3: w(-Sa) - w(-Sb) + w(-g0 - Sg)
        f4: w(-Sa) + w(-Sb) + w(-d0 - Sd)

    ``as_printed`` gives the historical f2 formula with h(-Sg), which
    disagrees with the expansion whenever Sg != 0.
    """
    if isinstance(which, str):
        which = CaseTwoPolynomial(which.lower())
    w, h = omega(k), _half_omega(k)
    a0, b0, g0, d0 = lonely
    sa, sb, sg, sd = sums
    if which is CaseTwoPolynomial.F1:
        return w * (-a0 - sa) + h * -sg + h * -sd
    if which is CaseTwoPolynomial.F2:
        gamma_term = h * -sg if as_printed else h * sg
        return w * (-b0 - sb) + gamma_term + h * -sd
    if which is CaseTwoPolynomial.F3:
        return w * -sa - w * -sb + w * (-g0 - sg)
    return w * -sa + w * -sb + w * (-d0 - sd)


def build_4k3(
    variant: Variant4k3 | str,
    alphas: Sequence[int],
    betas: Sequence[int],
    gammas: Sequence[int],
    deltas: Sequence[int],
) -> FactorProduct:
    """Degree-(8k+4) products for boards of side 4k+3.

    g takes 2k+2 vertical and horizontal lines and 2k diagonal lines of each
    slope; h takes 2k+1 lines of every slope.
    """
    if isinstance(variant, str):
        variant = Variant4k3(variant.lower())
    lengths = [len(alphas), len(betas), len(gammas), len(deltas)]
    if variant is Variant4k3.G:
        k = lengths[2] // 2
        ok = lengths[2] == lengths[3] == 2 * k
        ok = ok and lengths[0] == lengths[1] == 2 * k + 2
    else:
        k = (lengths[0] - 1) // 2
        ok = len(set(lengths)) == 1 and lengths[0] == 2 * k + 1
    if not ok or k < 1:
        raise FactorError(
            f"Intercept list lengths {lengths} do not fit variant {variant.value}."
        )
    return FactorProduct(tuple(_blocks(alphas, betas, gammas, deltas)))


@dataclass(frozen=True)
class Grid:
    """The finite grid S1 x S2, scanned with S1 as the outer index."""

    s1: tuple[int, ...]
    s2: tuple[int, ...]

    @classmethod
    def of(cls, s1: Sequence[int], s2: Sequence[int]) -> Grid:
        return cls(tuple(sorted(set(s1))), tuple(sorted(set(s2))))

    @property
    def is_zero_sum(self) -> bool:
        return sum(self.s1) == 0 and sum(self.s2) == 0

    def points(self) -> Iterator[tuple[int, int]]:
        for a in self.s1:
            for b in self.s2:
                yield (a, b)


@dataclass(frozen=True)
class ZeroSumGrid(Grid):
    def __post_init__(self) -> None:
        if not self.is_zero_sum:
            raise ValueError(
                f"Grid sets must each sum to zero, got sums "
                f"{sum(self.s1)} and {sum(self.s2)}."
            )

    @classmethod
    def symmetric(cls, m: int) -> ZeroSumGrid:
        """The grid {-m, ..., m}^2."""
        values = tuple(range(-m, m + 1))
        return cls(values, values)


def find_nonvanishing(fp: FactorProduct, grid: Grid) -> Optional[tuple[int, int]]:
    """First grid point where ``fp`` is nonzero, or None."""
    for x, y in grid.points():
        if fp.evaluate(x, y) != 0:
            return (x, y)
    return None


def nullstellensatz_hypotheses(
    fp: FactorProduct, t1: int, t2: int, grid: Grid, zero_sum: bool
) -> list[str]:
    """Hypotheses of the grid nonvanishing theorems that fail for ``fp``.

    The plain form needs deg fp = t1 + t2; the zero-sum form allows
    deg fp = 1 + t1 + t2 on grids whose sets sum to zero. Both need a
    nonzero coefficient of x^t1 y^t2 and |S1| > t1, |S2| > t2. An empty
    list means a nonvanishing point must exist.
    """
    failed = []
    want = t1 + t2 + (1 if zero_sum else 0)
    if fp.degree != want:
        failed.append(f"degree is {fp.degree}, want {want}")
    if fp.coeff(t1, t2) == 0:
        failed.append(f"coefficient of x^{t1} y^{t2} is zero")
    if len(grid.s1) <= t1:
        failed.append(f"|S1| = {len(grid.s1)} is not above {t1}")
    if len(grid.s2) <= t2:
        failed.append(f"|S2| = {len(grid.s2)} is not above {t2}")
    if zero_sum and not grid.is_zero_sum:
        failed.append("grid sets do not sum to zero")
    return failed


def balanced_slopes(p: Placement) -> list[Slope]:
    """Slopes for the artificial lines through the lonely queens, sorted in
    row-major order: each takes the slope with the fewest lines so far."""
    counts = {slope: len(v) for slope, v in defined_intercepts(p).items()}
    slopes = []
    for _ in sorted(lonely_queens(p), key=lambda s: (s.row, s.col)):
        slope = min(counts, key=lambda s: (counts[s], s.order))
        counts[slope] += 1
        slopes.append(slope)
    return slopes


def _line_intercepts(
    p: Placement, lonely_slopes: Optional[Sequence[Slope]]
) -> dict[Slope, list[int]]:
    lonely = sorted(lonely_queens(p), key=lambda s: (s.row, s.col))
    if lonely_slopes is None:
        lonely_slopes = balanced_slopes(p)
    if len(lonely_slopes) != len(lonely):
        raise ValueError(
            f"Need one slope per lonely queen: {len(lonely)} queens, "
            f"{len(lonely_slopes)} slopes."
        )
    intercepts = defined_intercepts(p)
    for s, slope in zip(lonely, lonely_slopes):
        line = lines_through(s, p.n)[Slope(slope).order]
        intercepts[line.slope].append(line.intercept)
    return {slope: sorted(values) for slope, values in intercepts.items()}


def vanishing_polynomial(
    p: Placement, lonely_slopes: Optional[Sequence[Slope]] = None
) -> FactorProduct:
    """Product of the defined lines of ``p`` and one line through each lonely
    queen. It vanishes on every square of the board when ``p`` is good."""
    intercepts = _line_intercepts(p, lonely_slopes)
    return FactorProduct(
        tuple(
            LinearFactor.for_slope(slope, value)
            for slope in Slope
            for value in intercepts[slope]
        )
    )


def case1_polynomial(
    p: Placement, lonely_slopes: Optional[Sequence[Slope]] = None
) -> FactorProduct:
    """The Case 1 product for a placement on the (4k+1)-board.

    Each slope gets the defined lines of ``p``, the lines through the
    lonely queens assigned to it, and then unused lines nearest the centre
    until it has exactly 2k lines.

    Raises:
        UnsupportedBoardError: n is not 4k+1 with k >= 1.
        CaseOneError: A slope already has more than 2k lines.
    """
    n = p.n
    if n % 4 != 1 or n < 5:
        raise UnsupportedBoardError(f"Case 1 needs n = 4k+1 with k >= 1, got n={n}.")
    k = (n - 1) // 4
    intercepts = _line_intercepts(p, lonely_slopes)
    for slope, values in intercepts.items():
        if len(values) > 2 * k:
            raise CaseOneError(
                f"['n={n}']: slope {slope.value} carries {len(values)} lines, "
                f"more than 2k = {2 * k}."
            )
        spare = sorted(
            (v for v in range(-(n - 1), n) if v not in values),
            key=lambda v: (abs(v), v),
        )
        values.extend(spare[: 2 * k - len(values)])
    return build_case1(
        intercepts[Slope.VERTICAL],
        intercepts[Slope.HORIZONTAL],
        intercepts[Slope.DIAG_PLUS],
        intercepts[Slope.DIAG_MINUS],
    )


def vanishes_on_board(fp: FactorProduct, n: int) -> bool:
    """Whether ``fp`` is zero on every square, in the frame of Square.frame."""
    return all(fp.evaluate(*s.frame(n)) == 0 for s in board_squares(n))
