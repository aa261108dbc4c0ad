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

import asyncio
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime
from itertools import combinations
import logging
import time
from typing import Any, Optional

from gardner.queens import budget_utils
from gardner.queens.board import board_squares
from gardner.queens.board import canonical_key
from gardner.queens.board import case2_violation
from gardner.queens.board import is_good
from gardner.queens.board import Placement
from gardner.queens.exceptions import SearchBudgetExceeded
from gardner.queens.exceptions import UnsupportedBoardError
from gardner.queens.search import BranchOutcome
from gardner.queens.search import root_branches
from gardner.queens.search import run_branch

logger = logging.getLogger(name=__name__)

# All known values of m3(n) for n = 1..27.
KNOWN_M3: dict[int, int] = {
    n: value
    for n, value in enumerate(
        [1, 4, 4, 4, 6, 6, 8, 9, 10, 10, 12, 12, 14, 15, 16, 17, 18, 18, 20, 21]
        + [22, 23, 24, 25, 26, 26, 28],
        start=1,
    )
}

# largest board the exhaustive search is meant for
MAX_SEARCH_N = 11

CASE2_SIDES = (5, 9)


def theorem_lower_bound(n: int) -> int:
    """Admissible starting size for the search on an n x n board.

    m3(n) >= n, except m3(n) >= n - 1 when n = 3 (mod 4); and m3(n) >= n + 1
    when n = 1 (mod 4) and n >= 5.
    """
    if n % 4 == 3:
        return n - 1
    if n % 4 == 1 and n >= 5:
        return n + 1
    return n


@dataclass(frozen=True)
class SearchConfig:
    """Configuration of a search for m3(n).

    Args:
        n (int): Board side, at least 1.
        max_size (int): Largest size tried. Defaults to n * n.
        use_symmetry (bool): Restrict the search to one representative per
            dihedral orbit of the first nonempty rank. Default: True.
        lower_bound_hint (int): First size tried. Defaults to
            theorem_lower_bound(n).
        time_budget (float): Wall-clock budget in seconds, or None.
        workers (int): Worker processes for branch exploration. Default: 1.
    """

    n: int
    max_size: Optional[int] = None
    use_symmetry: bool = True
    lower_bound_hint: Optional[int] = None
    time_budget: Optional[float] = None
    workers: int = 1

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"Board side must be at least 1, got n={self.n}.")
        if self.max_size is None:
            object.__setattr__(self, "max_size", self.n * self.n)
        if self.lower_bound_hint is None:
            object.__setattr__(self, "lower_bound_hint", theorem_lower_bound(self.n))
        assert self.max_size is not None and self.lower_bound_hint is not None
        if not 1 <= self.max_size <= self.n * self.n:
            raise ValueError(
                f"max_size must be in 1..{self.n * self.n}, got {self.max_size}."
            )
        if self.lower_bound_hint < 1:
            raise ValueError(
                f"lower_bound_hint must be at least 1, got {self.lower_bound_hint}."
            )
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}.")


@dataclass
class SearchResult:
    """Outcome of a search for m3(n).

    ``exhausted`` is True when every size below ``m3`` is ruled out: sizes
    from the starting bound by search, smaller ones by the lower-bound
    theorems. ``proven_lower_bound`` is the smallest size not yet ruled out.
    """

    n: int
    m3: Optional[int]
    witness: Optional[Placement]
    nodes_expanded: int
    elapsed: float
    exhausted: bool
    proven_lower_bound: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "m3": self.m3,
            "witness": (
                [list(pair) for pair in self.witness.pairs()] if self.witness else None
            ),
            "nodes_expanded": self.nodes_expanded,
            "elapsed": self.elapsed,
            "exhausted": self.exhausted,
            "proven_lower_bound": self.proven_lower_bound,
        }


class _BranchRunner:
    """Runs root branches in order, inline or on a process pool."""

    def __init__(self, workers: int) -> None:
        self._pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None

    async def decide(
        self, n: int, q: int, use_symmetry: bool, deadline: Optional[datetime]
    ) -> BranchOutcome:
        branches = root_branches(n, q, use_symmetry)
        timestamp = budget_utils._deadline_timestamp(deadline)
        if self._pool is None:
            nodes = 0
            for branch in branches:
                outcome = run_branch(n, q, branch, use_symmetry, timestamp)
                nodes += outcome.nodes
                if outcome.witness is not None:
                    return BranchOutcome(outcome.witness, nodes)
            return BranchOutcome(None, nodes)
        loop = asyncio.get_running_loop()
        futures = [
            loop.run_in_executor(
                self._pool, run_branch, n, q, branch, use_symmetry, timestamp
            )
            for branch in branches
        ]
        nodes = 0
        try:
            # settle in branch order so the witness matches the inline search
            for i, future in enumerate(futures):
                outcome = await future
                nodes += outcome.nodes
                if outcome.witness is not None:
                    logger.debug(
                        f"['n={n} q={q}']: witness in branch {i + 1}/"
                        f"{len(futures)}; dropping later branches"
                    )
                    return BranchOutcome(outcome.witness, nodes)
            return BranchOutcome(None, nodes)
        finally:
            for future in futures:
                future.cancel()
            # collect dropped branches so their errors are not reported
            await asyncio.gather(*futures, return_exceptions=True)

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown(wait=True, cancel_futures=True)


async def find_min_good_async(cfg: SearchConfig) -> SearchResult:
    """Finds the least q with a good placement of size q.

    Sizes are tried upwards from ``cfg.lower_bound_hint``. A hint above
    theorem_lower_bound(n) leaves the sizes between them unsearched: the
    first size found is then reported with ``exhausted=False`` and
    ``proven_lower_bound`` stays at the theorem bound. Running out of budget
    returns a result with ``m3=None`` and ``exhausted=False``.
    """
    assert cfg.max_size is not None and cfg.lower_bound_hint is not None
    floor = theorem_lower_bound(cfg.n)
    # every size below the first one tried is ruled out
    covered = cfg.lower_bound_hint <= floor
    start = time.perf_counter()
    deadline = budget_utils._deadline_from_budget(cfg.time_budget)
    runner = _BranchRunner(cfg.workers)
    nodes = 0
    try:
        for q in range(cfg.lower_bound_hint, cfg.max_size + 1):
            try:
                outcome = await runner.decide(cfg.n, q, cfg.use_symmetry, deadline)
            except SearchBudgetExceeded as e:
                logger.info(f"['n={cfg.n}']: {e}")
                return SearchResult(
                    cfg.n,
                    None,
                    None,
                    nodes,
                    time.perf_counter() - start,
                    False,
                    q if covered else floor,
                )
            nodes += outcome.nodes
            if outcome.witness is None:
                logger.debug(f"['n={cfg.n} q={q}']: no good placement")
                continue
            witness = Placement.from_pairs(cfg.n, outcome.witness)
            if not is_good(witness):
                raise RuntimeError(
                    f"['n={cfg.n} q={q}']: search returned a placement that is "
                    "not good"
                )
            if covered:
                logger.debug(f"['n={cfg.n}']: m3 = {q} after {nodes} nodes")
            else:
                logger.info(
                    f"['n={cfg.n}']: found size {q}; sizes {floor}.."
                    f"{cfg.lower_bound_hint - 1} were not searched"
                )
            return SearchResult(
                cfg.n,
                q,
                witness,
                nodes,
                time.perf_counter() - start,
                covered,
                q if covered else floor,
            )
    finally:
        runner.close()
    return SearchResult(
        cfg.n,
        None,
        None,
        nodes,
        time.perf_counter() - start,
        False,
        cfg.max_size + 1 if covered else floor,
    )


def find_min_good(cfg: SearchConfig) -> SearchResult:
    return asyncio.run(find_min_good_async(cfg))


async def exists_good_of_size_async(
    n: int,
    q: int,
    use_symmetry: bool = True,
    time_budget: Optional[float] = None,
    workers: int = 1,
) -> Optional[Placement]:
    """Decides whether a good placement of exactly q queens exists.

    Returns:
        Placement | None: A witness, or None when the search proved that
        none exists.
    Raises:
        SearchBudgetExceeded: The budget ran out before a decision.
    """
    if n < 1 or not 1 <= q <= n * n:
        raise ValueError(f"Need n >= 1 and 1 <= q <= n*n, got n={n}, q={q}.")
    deadline = budget_utils._deadline_from_budget(time_budget)
    runner = _BranchRunner(workers)
    try:
        outcome = await runner.decide(n, q, use_symmetry, deadline)
    finally:
        runner.close()
    if outcome.witness is None:
        return None
    return Placement.from_pairs(n, outcome.witness)


def exists_good_of_size(
    n: int,
    q: int,
    use_symmetry: bool = True,
    time_budget: Optional[float] = None,
    workers: int = 1,
) -> Optional[Placement]:
    return asyncio.run(
        exists_good_of_size_async(n, q, use_symmetry, time_budget, workers)
    )


def brute_force_good_sizes(n: int) -> dict[int, Placement]:
    """Subset enumeration oracle: first good placement of every size that
    has one, for boards up to 4 x 4."""
    if not 1 <= n <= 4:
        raise UnsupportedBoardError(f"Subset enumeration needs n <= 4, got n={n}.")
    squares = board_squares(n)
    found: dict[int, Placement] = {}
    for q in range(1, n * n + 1):
        for chosen in combinations(squares, q):
            p = Placement(n, frozenset(chosen))
            if is_good(p):
                found[q] = p
                break
    return found


def brute_force_min_good(n: int) -> int:
    return min(brute_force_good_sizes(n))


def is_case2_placement(p: Placement) -> bool:
    return case2_violation(p) is None


def _two_regular_patterns(m: int) -> list[tuple[tuple[int, int], ...]]:
    """0/1 m x m patterns with two ones per row and per column, as the
    column pair used by each row."""
    patterns: list[tuple[tuple[int, int], ...]] = []

    def extend(rows: list[tuple[int, int]], used: list[int]) -> None:
        if len(rows) == m:
            patterns.append(tuple(rows))
            return
        for a, b in combinations(range(m), 2):
            if used[a] < 2 and used[b] < 2:
                used[a] += 1
                used[b] += 1
                extend(rows + [(a, b)], used)
                used[a] -= 1
                used[b] -= 1

    extend([], [0] * m)
    return patterns


def _structured_case2(n: int) -> list[Placement]:
    m = (n - 1) // 2
    patterns = _two_regular_patterns(m)
    found = []
    for cols in combinations(range(n), m):
        for rows in combinations(range(n), m):
            for pattern in patterns:
                queens = [
                    (cols[j], rows[i]) for i, pair in enumerate(pattern) for j in pair
                ]
                diags = Counter(c - r for c, r in queens)
                if any(v != 2 for v in diags.values()):
                    continue
                antis = Counter(c + r for c, r in queens)
                if any(v != 2 for v in antis.values()):
                    continue
                for r in range(n):
                    if r in rows:
                        continue
                    for c in range(n):
                        if c in cols or (c - r) in diags or (c + r) in antis:
                            continue
                        found.append(Placement.from_pairs(n, queens + [(c, r)]))
    return found


def enumerate_case2_candidates(
    n: int, use_symmetry: bool = False, exhaustive: bool = False
) -> list[Placement]:
    """Lists the Case 2 placements on the n x n board.

    The default scan builds the non-lonely queens column by column: 2k
    columns and 2k ranks with two queens each, every diagonal through them
    holding exactly two, then adds the lonely queen off all their lines.
    ``exhaustive`` instead tests every n-subset of the board (n = 5 only).

    Args:
        n (int): Board side, 5 or 9.
        use_symmetry (bool): Keep one placement per dihedral orbit.
        exhaustive (bool): Scan all n-subsets.
    Raises:
        UnsupportedBoardError: ``n`` is outside the supported range.
    """
    if n not in CASE2_SIDES:
        raise UnsupportedBoardError(
            f"Case 2 enumeration supports n in {CASE2_SIDES}, got n={n}."
        )
    if exhaustive:
        if n != 5:
            raise UnsupportedBoardError(
                f"Exhaustive Case 2 scan supports n=5 only, got n={n}."
            )
        candidates = [
            p
            for p in (
                Placement(n, frozenset(chosen))
                for chosen in combinations(board_squares(n), n)
            )
            if case2_violation(p) is None
        ]
    else:
        candidates = _structured_case2(n)
    if use_symmetry:
        candidates = [
            p for p in candidates if canonical_key(p) == tuple(sorted(p.pairs()))
        ]
    logger.debug(f"['n={n}']: {len(candidates)} Case 2 placements")
    return candidates
