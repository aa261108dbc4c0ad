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

"""Octagon placements on boards of side 8k+1.

Each seed square (x, y) contributes its eight images under the symmetries
of the board, (+-x, +-y) and (+-y, +-x); a lonely queen sits in the centre.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import logging
from typing import Optional

from gardner.queens.board import has_three_in_line
from gardner.queens.board import Placement
from gardner.queens.certificate import CertificateReport
from gardner.queens.exceptions import CaseTwoError
from gardner.queens.exceptions import ConstructionError
from gardner.queens.exceptions import UnsupportedBoardError
from gardner.queens.linear_certificate import extract_case2_vector
from gardner.queens.linear_certificate import VECTOR_LABELS
from gardner.queens.solver import enumerate_case2_candidates

logger = logging.getLogger(name=__name__)


@dataclass(frozen=True)
class SeedSet:
    """k seed squares in centered coordinates."""

    seeds: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.seeds)

    def violation(self, n: int) -> Optional[str]:
        """First seed condition broken for the n x n board, or None."""
        bound = (n - 1) // 2
        for x, y in self.seeds:
            if not 0 < y < x <= bound:
                return f"seed ({x},{y}) must satisfy 0 < y < x <= {bound}"
        values = [v for seed in self.seeds for v in seed]
        if len(set(values)) != len(values):
            return "seed coordinates must be pairwise distinct"
        for (x1, y1), (x2, y2) in combinations(self.seeds, 2):
            if y1 * x2 == y2 * x1:
                return f"seeds ({x1},{y1}) and ({x2},{y2}) have the same ratio"
        return None

    def __str__(self) -> str:
        return ";".join(f"{x},{y}" for x, y in self.seeds)

    @classmethod
    def parse(cls, text: str) -> SeedSet:
        """Parses "x,y" pairs separated by ';', e.g. "4,1" or "5,1;7,3"."""
        try:
            seeds = tuple(
                (int(x), int(y))
                for x, y in (part.split(",") for part in text.split(";") if part)
            )
        except ValueError as e:
            raise ConstructionError(f"Malformed seed list '{text}'.") from e
        return cls(seeds)


def _side_k(n: int) -> int:
    if n % 8 != 1 or n < 9:
        raise UnsupportedBoardError(
            f"Octagon constructions need n = 8k+1 with k >= 1, got n={n}."
        )
    return (n - 1) // 8


def _orbit(x: int, y: int) -> set[tuple[int, int]]:
    return {
        (sx * a, sy * b)
        for a, b in ((x, y), (y, x))
        for sx in (1, -1)
        for sy in (1, -1)
    }


def octagon_placement(seed: SeedSet, n: int) -> Placement:
    """The 8k+1 queens of the seed orbits plus the centre.

    Raises:
        ConstructionError: ``seed`` breaks a seed condition or the orbits
            overlap.
    """
    k = _side_k(n)
    if seed.k != k:
        raise ConstructionError(f"Need {k} seeds for n={n}, got {seed.k}.")
    violation = seed.violation(n)
    if violation is not None:
        raise ConstructionError(f"Invalid seed set {seed}: {violation}.")
    squares = {(0, 0)}
    for x, y in seed.seeds:
        squares |= _orbit(x, y)
    if len(squares) != 8 * k + 1:
        raise ConstructionError(
            f"Seed orbits of {seed} cover {len(squares)} squares, want {8 * k + 1}."
        )
    return Placement.from_centered(n, sorted(squares))


def enumerate_seeds(n: int, require_no_three: bool = False) -> list[SeedSet]:
    """All seed sets for the (8k+1)-board, ordered by (y, x) of the seeds.

    Args:
        n (int): Board side, 8k+1.
        require_no_three (bool): Also drop seed sets whose octagon placement
            has three queens on a line, which the seed conditions alone allow
            once k >= 2. Default: False.
    """
    k = _side_k(n)
    bound = (n - 1) // 2
    squares = [(x, y) for y in range(1, bound + 1) for x in range(y + 1, bound + 1)]
    found = []
    for chosen in combinations(squares, k):
        seed = SeedSet(chosen)
        if seed.violation(n) is not None:
            continue
        if require_no_three and has_three_in_line(octagon_placement(seed, n)):
            continue
        found.append(seed)
    logger.debug(f"['n={n}']: {len(found)} seed sets")
    return found


def validate_nullA(p: Placement) -> CertificateReport:
    """Checks that the eight Case 2 quantities of ``p`` all vanish.

    A placement outside Case 2 gives a report with ``error`` set.
    """
    report = CertificateReport(f"zero vector check, n={p.n}, q={p.size}")
    try:
        vector = extract_case2_vector(p)
    except CaseTwoError as e:
        report.error = str(e)
        return report
    for label, value in zip(VECTOR_LABELS, vector.as_list()):
        report.add(label, value, 0)
    return report


def search_zero_vector_placements(n: int) -> list[Placement]:
    """Case 2 placements whose vector is zero, on boards of side 8k+5.

    Only searches the boards Case 2 enumeration supports; an empty result
    says nothing about larger boards.
    """
    if n % 8 != 5:
        raise UnsupportedBoardError(f"Zero vector search targets n = 8k+5, got n={n}.")
    return [
        p for p in enumerate_case2_candidates(n) if extract_case2_vector(p).is_zero()
    ]
