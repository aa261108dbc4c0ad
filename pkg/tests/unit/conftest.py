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

import pytest

from gardner.queens.board import Placement
from gardner.queens.placement_io import load_fixture

# centered squares marked with a cross on the figure 3 board
FIGURE3_CROSSES = [
    (-3, -3),
    (3, -3),
    (-2, -2),
    (0, -2),
    (2, -2),
    (-2, 0),
    (2, 0),
    (-2, 2),
    (0, 2),
    (2, 2),
    (-3, 3),
    (3, 3),
]


@pytest.fixture(scope="session")
def figure1() -> Placement:
    return load_fixture("figure1")


@pytest.fixture(scope="session")
def figure2() -> Placement:
    return load_fixture("figure2")


@pytest.fixture(scope="session")
def figure3() -> Placement:
    return load_fixture("figure3")
