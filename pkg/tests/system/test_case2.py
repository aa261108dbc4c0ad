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

from gardner.queens.board import canonical_key
from gardner.queens.board import case2_violation
from gardner.queens.board import transform
from gardner.queens.constructions import enumerate_seeds
from gardner.queens.constructions import octagon_placement
from gardner.queens.constructions import validate_nullA
from gardner.queens.enums import Symmetry
from gardner.queens.linear_certificate import classify
from gardner.queens.linear_certificate import extract_case2_vector
from gardner.queens.placement_io import load_fixture
from gardner.queens.solver import enumerate_case2_candidates


def test_case2_candidates_on_9x9() -> None:
    candidates = enumerate_case2_candidates(9)
    assert load_fixture("figure3") in candidates
    for seed in enumerate_seeds(9):
        assert octagon_placement(seed, 9) in candidates
    for p in candidates:
        assert case2_violation(p) is None
        assert str(classify(extract_case2_vector(p), 1)) in (
            "InNullSpace",
            "ViolatesCoefficientEq(1)",
            "ViolatesCoefficientEq(2)",
            "ViolatesCoefficientEq(3)",
            "ViolatesCoefficientEq(4)",
        )


def test_case2_candidates_are_closed_under_symmetry() -> None:
    candidates = set(enumerate_case2_candidates(9))
    for p in candidates:
        for g in Symmetry:
            assert transform(p, g) in candidates
    reduced = enumerate_case2_candidates(9, use_symmetry=True)
    assert {canonical_key(p) for p in reduced} == {
        canonical_key(p) for p in candidates
    }
    assert len(reduced) == len({canonical_key(p) for p in candidates})


def test_strict_constructions_on_17x17() -> None:
    seeds = enumerate_seeds(17, require_no_three=True)
    assert seeds
    for seed in seeds:
        assert validate_nullA(octagon_placement(seed, 17)).passed
