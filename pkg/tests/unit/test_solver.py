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

from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from mock import patch
import pytest

from gardner.queens.board import is_good
from gardner.queens.board import Placement
from gardner.queens.exceptions import SearchBudgetExceeded
from gardner.queens.exceptions import UnsupportedBoardError
from gardner.queens.search import Branch
from gardner.queens.search import BranchOutcome
from gardner.queens.search import root_branches
from gardner.queens.search import run_branch
from gardner.queens.solver import _BranchRunner
from gardner.queens.solver import brute_force_good_sizes
from gardner.queens.solver import brute_force_min_good
from gardner.queens.solver import enumerate_case2_candidates
from gardner.queens.solver import exists_good_of_size
from gardner.queens.solver import exists_good_of_size_async
from gardner.queens.solver import find_min_good
from gardner.queens.solver import find_min_good_async
from gardner.queens.solver import is_case2_placement
from gardner.queens.solver import KNOWN_M3
from gardner.queens.solver import SearchConfig
from gardner.queens.solver import theorem_lower_bound


@pytest.mark.parametrize(
    "n, bound", [(1, 1), (2, 2), (3, 2), (5, 6), (7, 6), (8, 8), (9, 10)]
)
def test_theorem_lower_bound(n: int, bound: int) -> None:
    assert theorem_lower_bound(n) == bound
    assert bound <= KNOWN_M3[n]


def test_search_config_defaults() -> None:
    cfg = SearchConfig(n=5)
    assert cfg.max_size == 25
    assert cfg.lower_bound_hint == 6
    assert cfg.use_symmetry is True
    assert cfg.time_budget is None
    assert cfg.workers == 1


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n": 0},
        {"n": 3, "max_size": 10},
        {"n": 3, "max_size": 0},
        {"n": 3, "lower_bound_hint": 0},
        {"n": 3, "workers": 0},
    ],
)
def test_search_config_rejects(kwargs: dict) -> None:
    with pytest.raises(ValueError):
        SearchConfig(**kwargs)


def test_root_branches_single_square() -> None:
    assert root_branches(1, 1, True) == [Branch(0, (0,))]


def test_root_branches_3x3() -> None:
    assert root_branches(3, 4, True) == [
        Branch(0, (0, 1)),
        Branch(0, (0, 2)),
        Branch(0, (0,)),
        Branch(0, (1,)),
        Branch(1, (1,)),
    ]
    # without symmetry: every rank with every pair and every single square
    assert len(root_branches(3, 4, False)) == 18


def test_run_branch_counts_nodes() -> None:
    outcome = run_branch(2, 4, Branch(0, (0, 1)))
    assert outcome.witness == ((0, 0), (1, 0), (0, 1), (1, 1))
    assert outcome.nodes > 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_find_min_good_small_boards(n: int) -> None:
    result = find_min_good(SearchConfig(n=n))
    assert result.m3 == KNOWN_M3[n]
    assert result.exhausted
    assert result.proven_lower_bound == result.m3
    assert result.witness is not None
    assert result.witness.size == result.m3
    assert is_good(result.witness)


def test_find_min_good_single_square() -> None:
    result = find_min_good(SearchConfig(n=1))
    assert result.witness == Placement.from_pairs(1, [(0, 0)])


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_find_min_good_without_symmetry(n: int) -> None:
    result = find_min_good(SearchConfig(n=n, use_symmetry=False))
    assert result.m3 == KNOWN_M3[n]


def test_find_min_good_from_size_one() -> None:
    result = find_min_good(SearchConfig(n=4, lower_bound_hint=1))
    assert result.m3 == 4
    assert result.exhausted


def test_find_min_good_hint_above_theorem_bound() -> None:
    """Sizes 6 and 7 are skipped, so size 8 is not claimed as the minimum."""
    result = find_min_good(SearchConfig(n=5, lower_bound_hint=8))
    assert result.m3 == 8
    assert result.witness is not None and is_good(result.witness)
    assert not result.exhausted
    assert result.proven_lower_bound == theorem_lower_bound(5) == 6


def test_find_min_good_max_size_too_small() -> None:
    result = find_min_good(SearchConfig(n=5, max_size=5))
    assert result.m3 is None
    assert not result.exhausted
    assert result.proven_lower_bound == 6


async def test_find_min_good_workers_agree() -> None:
    inline = await find_min_good_async(SearchConfig(n=5))
    pooled = await find_min_good_async(SearchConfig(n=5, workers=2))
    assert pooled.m3 == inline.m3
    assert pooled.witness == inline.witness


def test_find_min_good_budget_exceeded() -> None:
    with patch("gardner.queens.search._CLOCK_STRIDE", 1), patch(
        "gardner.queens.search.time.time", return_value=1e12
    ):
        result = find_min_good(SearchConfig(n=7, time_budget=60))
    assert result.m3 is None
    assert result.witness is None
    assert not result.exhausted
    assert result.proven_lower_bound == 6


def test_find_min_good_budget_exceeded_with_high_hint() -> None:
    with patch("gardner.queens.search._CLOCK_STRIDE", 1), patch(
        "gardner.queens.search.time.time", return_value=1e12
    ):
        result = find_min_good(SearchConfig(n=7, lower_bound_hint=9, time_budget=60))
    assert result.m3 is None
    assert not result.exhausted
    assert result.proven_lower_bound == 6


def test_search_result_to_dict() -> None:
    data = find_min_good(SearchConfig(n=2)).to_dict()
    assert data["m3"] == 4
    assert data["witness"] == [[0, 0], [1, 0], [0, 1], [1, 1]]
    assert data["exhausted"] is True


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exists_good_of_size_matches_brute_force(n: int) -> None:
    sizes = brute_force_good_sizes(n)
    for q in range(1, n * n + 1):
        for use_symmetry in (True, False):
            witness = exists_good_of_size(n, q, use_symmetry=use_symmetry)
            assert (witness is not None) == (q in sizes)
            if witness is not None:
                assert witness.size == q
                assert is_good(witness)


async def test_exists_good_of_size_async() -> None:
    assert await exists_good_of_size_async(5, 5) is None
    assert await exists_good_of_size_async(5, 6) is not None


@pytest.mark.parametrize("n, q", [(0, 1), (3, 0), (3, 10)])
def test_exists_good_of_size_rejects(n: int, q: int) -> None:
    with pytest.raises(ValueError):
        exists_good_of_size(n, q)


def test_exists_good_of_size_budget_exceeded() -> None:
    with patch("gardner.queens.search._CLOCK_STRIDE", 1), patch(
        "gardner.queens.search.time.time", return_value=1e12
    ):
        with pytest.raises(SearchBudgetExceeded):
            exists_good_of_size(7, 6, time_budget=60)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_brute_force_min_good(n: int) -> None:
    assert brute_force_min_good(n) == KNOWN_M3[n]


def test_brute_force_rejects_large_board() -> None:
    with pytest.raises(UnsupportedBoardError):
        brute_force_good_sizes(5)


def test_no_case2_placement_on_5x5() -> None:
    assert enumerate_case2_candidates(5) == []
    assert enumerate_case2_candidates(5, exhaustive=True) == []


@pytest.mark.parametrize("n", [6, 7, 13])
def test_case2_enumeration_rejects(n: int) -> None:
    with pytest.raises(UnsupportedBoardError):
        enumerate_case2_candidates(n)


def test_exhaustive_case2_scan_needs_5x5() -> None:
    with pytest.raises(UnsupportedBoardError):
        enumerate_case2_candidates(9, exhaustive=True)


def test_is_case2_placement(figure1: Placement, figure3: Placement) -> None:
    assert is_case2_placement(figure3)
    assert not is_case2_placement(figure1)
    assert not is_case2_placement(Placement(7))


async def test_pooled_runner_keeps_earlier_witness() -> None:
    """A later branch running out of budget does not discard a witness
    already found in an earlier branch."""
    first = root_branches(3, 4, True)[0]
    witness = ((0, 0), (1, 0), (0, 1), (1, 1))

    def fake_run_branch(
        n: int, q: int, branch: Branch, use_symmetry: bool, timestamp: Optional[float]
    ) -> BranchOutcome:
        if branch == first:
            return BranchOutcome(witness, 7)
        raise SearchBudgetExceeded("out of time")

    runner = _BranchRunner(1)
    runner._pool = ThreadPoolExecutor(max_workers=2)
    try:
        with patch("gardner.queens.solver.run_branch", side_effect=fake_run_branch):
            outcome = await runner.decide(3, 4, True, None)
    finally:
        runner.close()
    assert outcome == BranchOutcome(witness, 7)


async def test_pooled_runner_raises_before_witness() -> None:
    last = root_branches(3, 4, True)[-1]

    def fake_run_branch(
        n: int, q: int, branch: Branch, use_symmetry: bool, timestamp: Optional[float]
    ) -> BranchOutcome:
        if branch == last:
            return BranchOutcome(((1, 1),), 1)
        raise SearchBudgetExceeded("out of time")

    runner = _BranchRunner(1)
    runner._pool = ThreadPoolExecutor(max_workers=2)
    try:
        with patch("gardner.queens.solver.run_branch", side_effect=fake_run_branch):
            with pytest.raises(SearchBudgetExceeded):
                await runner.decide(3, 4, True, None)
    finally:
        runner.close()
