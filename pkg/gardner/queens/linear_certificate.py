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

"""Exact rational linear algebra for the eight-variable Case 2 system."""

from __future__ import annotations

from dataclasses import dataclass
import logging
from typing import Any, Optional, Sequence

import sympy

from gardner.queens.board import case2_violation
from gardner.queens.board import defined_intercepts
from gardner.queens.board import lonely_queens
from gardner.queens.board import Placement
from gardner.queens.enums import CaseTwoPolynomial
from gardner.queens.enums import ClassificationKind
from gardner.queens.enums import Slope
from gardner.queens.exceptions import CaseTwoError
from gardner.queens.nullstellensatz import build_case2
from gardner.queens.nullstellensatz import lonely_constants
from gardner.queens.nullstellensatz import omega

logger = logging.getLogger(name=__name__)

VECTOR_LABELS = (
    "alpha0",
    "beta0",
    "gamma0",
    "delta0",
    "sum_alpha",
    "sum_beta",
    "sum_gamma",
    "sum_delta",
)

# rows 5-8: lonely queen on her own diagonals, and the diagonal sums
_GEOMETRIC_ROWS = (
    (1, -1, -1, 0, 0, 0, 0, 0),
    (1, 1, 0, -1, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, -1, -1, 0),
    (0, 0, 0, 0, 1, 1, 0, -1),
)


class RationalMatrix:
    """An immutable matrix of exact rationals backed by ``sympy.Matrix``."""

    def __init__(self, entries: Sequence[Sequence[Any]]) -> None:
        self._m = sympy.ImmutableMatrix(
            [[sympy.Rational(value) for value in row] for row in entries]
        )

    @classmethod
    def _wrap(cls, m: sympy.MatrixBase) -> RationalMatrix:
        return cls(m.tolist())

    @classmethod
    def identity(cls, size: int) -> RationalMatrix:
        return cls._wrap(sympy.eye(size))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> RationalMatrix:
        return cls._wrap(sympy.zeros(rows, cols))

    @property
    def rows(self) -> int:
        return self._m.rows

    @property
    def cols(self) -> int:
        return self._m.cols

    def __getitem__(self, key: tuple[int, int]) -> sympy.Rational:
        return self._m[key]

    def row(self, i: int) -> list[sympy.Rational]:
        return list(self._m.row(i))

    def tolist(self) -> list[list[sympy.Rational]]:
        return self._m.tolist()

    def as_strings(self) -> list[list[str]]:
        return [[str(value) for value in row] for row in self.tolist()]

    def apply(self, v: Sequence[Any]) -> list[sympy.Rational]:
        """Matrix-vector product."""
        column = sympy.Matrix([sympy.Rational(value) for value in v])
        return list(self._m * column)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._m == other._m

    def __hash__(self) -> int:
        return hash(self._m)

    def __repr__(self) -> str:
        return f"RationalMatrix({self.as_strings()})"


def build_A(k: int) -> RationalMatrix:
    """The 8 x 8 coefficient matrix in its historical printed form.

    Rows 1-4 hold minus the x^4k y^4k coefficients of f1..f4 as linear forms
    in (alpha0, beta0, gamma0, delta0, Sa, Sb, Sg, Sd); rows 5-8 are the
    geometric relations. Row 2 carries +w/2 on Sg, the sign of the printed
    f2 formula.
    """
    w = sympy.Integer(omega(k))
    h = w / 2
    return RationalMatrix(
        [
            [w, 0, 0, 0, w, 0, h, h],
            [0, w, 0, 0, 0, w, h, h],
            [0, 0, w, 0, w, -w, w, 0],
            [0, 0, 0, w, w, w, 0, w],
            *_GEOMETRIC_ROWS,
        ]
    )


def derive_A(k: int) -> RationalMatrix:
    """The coefficient matrix re-derived from the polynomials themselves.

    Each entry of rows 1-4 is minus the change in the DP coefficient of
    x^4k y^4k when one lonely constant or one intercept is set to 1.
    """
    base = [0] * (2 * k)
    unit = [1] + [0] * (2 * k - 1)
    rows = []
    for which in CaseTwoPolynomial:
        row = []
        for position in range(8):
            lonely = [0, 0, 0, 0]
            lists = [list(base) for _ in range(4)]
            if position < 4:
                lonely[position] = 1
            else:
                lists[position - 4] = list(unit)
            fp = build_case2(which, tuple(lonely), *lists)  # type: ignore[arg-type]
            row.append(-fp.coeff(4 * k, 4 * k))
        rows.append(row)
    return RationalMatrix([*rows, *_GEOMETRIC_ROWS])


def rref(m: RationalMatrix) -> RationalMatrix:
    return RationalMatrix._wrap(m._m.rref()[0])


def pivot_columns(m: RationalMatrix) -> tuple[int, ...]:
    return tuple(m._m.rref()[1])


def _scale_leading(v: Sequence[sympy.Rational]) -> list[sympy.Rational]:
    lead = next(value for value in v if value != 0)
    return [sympy.Rational(value) / lead for value in v]


def nullspace(m: RationalMatrix) -> list[list[sympy.Rational]]:
    """Basis of the kernel, each vector scaled so that its first nonzero
    entry is 1."""
    return [_scale_leading(list(v)) for v in m._m.nullspace()]


@dataclass(frozen=True)
class CaseTwoVector:
    """(alpha0, beta0, gamma0, delta0, Sa, Sb, Sg, Sd) of a Case 2 placement."""

    alpha0: sympy.Rational
    beta0: sympy.Rational
    gamma0: sympy.Rational
    delta0: sympy.Rational
    sum_alpha: sympy.Rational
    sum_beta: sympy.Rational
    sum_gamma: sympy.Rational
    sum_delta: sympy.Rational

    @classmethod
    def of(cls, values: Sequence[Any]) -> CaseTwoVector:
        if len(values) != 8:
            raise ValueError(f"Case 2 vector needs 8 entries, got {len(values)}.")
        return cls(*(sympy.Rational(value) for value in values))

    def as_list(self) -> list[sympy.Rational]:
        return [getattr(self, label) for label in VECTOR_LABELS]

    def is_zero(self) -> bool:
        return all(value == 0 for value in self.as_list())

    def to_dict(self) -> dict[str, str]:
        return {label: str(getattr(self, label)) for label in VECTOR_LABELS}


def case2_constants(
    p: Placement,
) -> tuple[tuple[int, int, int, int], dict[Slope, list[int]]]:
    """Lonely constants and the defined-line intercepts of a Case 2
    placement.

    Raises:
        CaseTwoError: ``p`` is not a Case 2 placement; the message names the
            first violated condition.
    """
    violation = case2_violation(p)
    if violation is not None:
        raise CaseTwoError(f"Not a Case 2 placement: {violation}.")
    (lonely,) = lonely_queens(p)
    return lonely_constants(lonely, p.n), defined_intercepts(p)


def extract_case2_vector(p: Placement) -> CaseTwoVector:
    lonely, intercepts = case2_constants(p)
    sums = [sum(intercepts[slope]) for slope in Slope]
    vector = CaseTwoVector.of([*lonely, *sums])
    logger.debug(f"['n={p.n}']: Case 2 vector {vector.to_dict()}")
    return vector


@dataclass(frozen=True)
class Classification:
    """Where a Case 2 vector fails the system, if anywhere.

    ``row`` is the first violated row (1-based), ``violated_rows`` all of
    them, and ``residuals`` the full product A*v.
    """

    kind: ClassificationKind
    row: Optional[int]
    violated_rows: tuple[int, ...]
    residuals: tuple[sympy.Rational, ...]

    def __str__(self) -> str:
        if self.row is None:
            return self.kind.value
        return f"{self.kind.value}({self.row})"

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "row": self.row,
            "label": str(self),
            "violated_rows": list(self.violated_rows),
            "residuals": [str(value) for value in self.residuals],
        }


def classify(v: CaseTwoVector, k: int, printed: bool = False) -> Classification:
    """Multiplies ``v`` by the coefficient matrix and reports the first
    nonzero row: rows 1-4 are coefficient equations, rows 5-8 geometric
    ones.

    Args:
        v (CaseTwoVector): The vector to classify.
        k (int): Board parameter, n = 4k+1.
        printed (bool): Use the printed matrix instead of the re-derived
            one. Default: False.
    """
    m = build_A(k) if printed else derive_A(k)
    residuals = tuple(m.apply(v.as_list()))
    violated = tuple(i + 1 for i, value in enumerate(residuals) if value != 0)
    if not violated:
        return Classification(ClassificationKind.IN_NULL_SPACE, None, (), residuals)
    first = violated[0]
    kind = (
        ClassificationKind.VIOLATES_COEFFICIENT_EQ
        if first <= 4
        else ClassificationKind.VIOLATES_GEOMETRIC_EQ
    )
    return Classification(kind, first, violated, residuals)
