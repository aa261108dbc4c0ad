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
from gardner.queens.board import addable_squares
from gardner.queens.board import defined_lines
from gardner.queens.board import has_three_in_line
from gardner.queens.board import is_good
from gardner.queens.board import Line
from gardner.queens.board import lines_through
from gardner.queens.board import lonely_queens
from gardner.queens.board import Placement
from gardner.queens.board import region_U
from gardner.queens.board import RegionU
from gardner.queens.board import Square
from gardner.queens.board import transform
from gardner.queens.enums import CaseTwoPolynomial
from gardner.queens.enums import Slope
from gardner.queens.enums import Symmetry
from gardner.queens.enums import Variant4k3
from gardner.queens.solver import find_min_good
from gardner.queens.solver import SearchConfig
from gardner.queens.solver import SearchResult
from gardner.queens.version import __version__

__all__ = [
    "__version__",
    "addable_squares",
    "CaseTwoPolynomial",
    "defined_lines",
    "find_min_good",
    "has_three_in_line",
    "is_good",
    "Line",
    "lines_through",
    "lonely_queens",
    "Placement",
    "region_U",
    "RegionU",
    "SearchConfig",
    "SearchResult",
    "Slope",
    "Square",
    "Symmetry",
    "transform",
    "Variant4k3",
]
