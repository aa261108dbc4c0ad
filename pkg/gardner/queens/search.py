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

"""Depth-first search for good placements of a fixed size.

The board is filled one rank at a time. A rank takes zero, one or two
queens, and per-line counters keep every line at two queens or fewer.
Completed ranks are checked against the queens still to come: each empty
square there must end up on some line holding two queens.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import logging
import time
from typing import Optional

from gardner.queens.exceptions import SearchBudgetExceeded

logger = logging.getLogger(name=__name__)

# number of nodes between two wall-clock checks
_CLOCK_STRIDE = 64


@dataclass(frozen=True)
class Branch:
    """A root of the search tree: ranks below ``top`` are empty and rank
    ``top`` holds queens in ``cols``."""

    top: int
    cols: tuple[int, ...]


@dataclass(frozen=True)
class BranchOutcome:
    witness: Optional[tuple[tuple[int, int], ...]]
    nodes: int


def root_branches(n: int, q: int, use_symmetry: bool) -> list[Branch]:
    """Splits the search for size ``q`` by its first nonempty rank.

    With symmetry breaking the first nonempty rank is at most as far from
    its edge as the queens are from the other three edges, and the queens
    on it lean left (min + max <= n - 1). Every placement has an image
    under the dihedral group that satisfies both.

    Branches come in the order a single depth-first search visits them.
    """
    branches = []
    tops = range((n - 1) // 2 + 1) if use_symmetry else range(n)
    for top in tops:
        lo, hi = (top, n - 1 - top) if use_symmetry else (0, n - 1)
        cols = list(range(lo, hi + 1))
        for size in (2, 1):
            if size > q:
                continue
            for chosen in combinations(cols, size):
                if use_symmetry and chosen[0] + chosen[-1] > n - 1:
                    continue
                branches.append(Branch(top, chosen))
    return branches


class _RankSearch:
    def __init__(
        self,
        n: int,
        q: int,
        use_symmetry: bool,
        deadline: Optional[float],
    ) -> None:
        self.n = n
        self.q = q
        self.use_symmetry = use_symmetry
        self.deadline = deadline
        self.cols = [0] * n
        self.ranks = [0] * n
        self.diags = [0] * (2 * n - 1)
        self.antis = [0] * (2 * n - 1)
        self.occupied = [[False] * n for _ in range(n)]
        self.queens: list[tuple[int, int]] = []
        self.nodes = 0
        self.lo = 0
        self.hi = n - 1
        self.last_rank = n - 1

    def _place(self, c: int, r: int) -> None:
        n = self.n
        self.cols[c] += 1
        self.ranks[r] += 1
        self.diags[c - r + n - 1] += 1
        self.antis[c + r] += 1
        self.occupied[r][c] = True
        self.queens.append((c, r))

    def _remove(self, c: int, r: int) -> None:
        n = self.n
        self.cols[c] -= 1
        self.ranks[r] -= 1
        self.diags[c - r + n - 1] -= 1
        self.antis[c + r] -= 1
        self.occupied[r][c] = False
        self.queens.pop()

    def _placeable(self, c: int, r: int) -> bool:
        n = self.n
        return (
            self.cols[c] < 2
            and self.diags[c - r + n - 1] < 2
            and self.antis[c + r] < 2
        )

    def _blocked(self, c: int, r: int) -> bool:
        n = self.n
        return (
            self.ranks[r] == 2
            or self.cols[c] == 2
            or self.diags[c - r + n - 1] == 2
            or self.antis[c + r] == 2
        )

    def _all_blocked(self) -> bool:
        n = self.n
        for r in range(n):
            if self.ranks[r] == 2:
                continue
            for c in range(n):
                if not self.occupied[r][c] and not self._blocked(c, r):
                    return False
        return True

    @staticmethod
    def _capacity(
        first: int, last: int, lo: int, hi: int, offset: int, step: int
    ) -> int:
        # ranks t in [first, last] whose square c = offset + step * t lies in [lo, hi]
        if step == 0:
            return last - first + 1 if lo <= offset <= hi else 0
        if step == 1:
            start, stop = lo - offset, hi - offset
        else:
            start, stop = offset - hi, offset - lo
        start, stop = max(start, first), min(stop, last)
        return max(0, stop - start + 1)

    def _bound_ok(self, done: int) -> bool:
        """Checks that the ranks 0..done can still all be blocked by the
        queens left to place in ranks done+1..last_rank."""
        n = self.n
        remaining = self.q - len(self.queens)
        first, last = done + 1, self.last_rank
        lo, hi = self.lo, self.hi
        for r in range(done + 1):
            if self.ranks[r] == 2:
                continue
            need = 0
            for c in range(n):
                if self.occupied[r][c] or self._blocked(c, r):
                    continue
                best = 3
                count = self.cols[c]
                if count + self._capacity(first, last, lo, hi, c, 0) >= 2:
                    best = min(best, 2 - count)
                d = c - r
                count = self.diags[d + n - 1]
                if count + self._capacity(first, last, lo, hi, d, 1) >= 2:
                    best = min(best, 2 - count)
                a = c + r
                count = self.antis[a]
                if count + self._capacity(first, last, lo, hi, a, -1) >= 2:
                    best = min(best, 2 - count)
                if best == 3:
                    return False
                need += best
            # a later queen meets rank r on at most three of its squares
            if need > 3 * remaining:
                return False
        return True

    def _tick(self) -> None:
        self.nodes += 1
        if (
            self.deadline is not None
            and self.nodes % _CLOCK_STRIDE == 0
            and time.time() > self.deadline
        ):
            raise SearchBudgetExceeded(
                f"['n={self.n} q={self.q}']: budget exhausted after "
                f"{self.nodes} nodes"
            )

    def _choices(self, r: int, remaining: int) -> list[tuple[int, ...]]:
        free = [c for c in range(self.lo, self.hi + 1) if self._placeable(c, r)]
        choices: list[tuple[int, ...]] = []
        if remaining >= 2:
            choices.extend(combinations(free, 2))
        if remaining >= 1:
            choices.extend((c,) for c in free)
        choices.append(())
        return choices

    def _descend(self, r: int) -> bool:
        self._tick()
        remaining = self.q - len(self.queens)
        if remaining == 0:
            return self._all_blocked()
        if r > self.last_rank or remaining > 2 * (self.last_rank - r + 1):
            return False
        for chosen in self._choices(r, remaining):
            for c in chosen:
                self._place(c, r)
            if self._bound_ok(r) and self._descend(r + 1):
                return True
            for c in reversed(chosen):
                self._remove(c, r)
        return False

    def run(self, branch: Branch) -> bool:
        if self.use_symmetry:
            self.lo = branch.top
            self.hi = self.n - 1 - branch.top
            self.last_rank = self.n - 1 - branch.top
        for c in branch.cols:
            self._place(c, branch.top)
        self._tick()
        if not self._bound_ok(branch.top):
            return False
        return self._descend(branch.top + 1)


def run_branch(
    n: int,
    q: int,
    branch: Branch,
    use_symmetry: bool = True,
    deadline: Optional[float] = None,
) -> BranchOutcome:
    """Searches one branch for a good placement of exactly ``q`` queens.

    Module-level so that it can be shipped to worker processes.

    Args:
        n (int): Board side.
        q (int): Placement size.
        branch (Branch): The root to explore.
        use_symmetry (bool): Whether ``branch`` came from a symmetry-reduced
            split.
        deadline (float | None): POSIX timestamp after which the search
            raises SearchBudgetExceeded.
    Returns:
        BranchOutcome: The first witness in search order (zero-based
        (col, row) pairs) or None, and the number of nodes expanded.
    """
    search = _RankSearch(n, q, use_symmetry, deadline)
    found = search.run(branch)
    witness: Optional[tuple[tuple[int, int], ...]] = None
    if found:
        witness = tuple(sorted(search.queens, key=lambda s: (s[1], s[0])))
    logger.debug(
        f"['n={n} q={q}']: branch top={branch.top} cols={branch.cols} "
        f"{'found a witness' if found else 'exhausted'} after {search.nodes} nodes"
    )
    return BranchOutcome(witness, search.nodes)
