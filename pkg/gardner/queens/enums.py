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

from enum import Enum


class Slope(Enum):
    """
    Enum for the four queen-line families.
    """

    VERTICAL = "v"
    HORIZONTAL = "h"
    DIAG_PLUS = "d+"
    DIAG_MINUS = "d-"

    @classmethod
    def _missing_(cls, value: object) -> None:
        raise ValueError(
            f"Incorrect value for slope, got '{value}'. Want one of: "
            f"{', '.join([repr(m.value) for m in cls])}."
        )

    @property
    def order(self) -> int:
        return _SLOPE_ORDER.index(self)


_SLOPE_ORDER = [Slope.VERTICAL, Slope.HORIZONTAL, Slope.DIAG_PLUS, Slope.DIAG_MINUS]


class Symmetry(Enum):
    """
    Enum for the eight elements of the dihedral group of the square.

    Rotations are counter-clockwise. FLIP_H mirrors left-right, FLIP_V
    mirrors top-bottom, FLIP_D swaps files and ranks and FLIP_A reflects in
    the other diagonal.
    """

    IDENTITY = "id"
    ROT90 = "r90"
    ROT180 = "r180"
    ROT270 = "r270"
    FLIP_H = "fh"
    FLIP_V = "fv"
    FLIP_D = "fd"
    FLIP_A = "fa"

    @classmethod
    def _missing_(cls, value: object) -> None:
        raise ValueError(
            f"Incorrect value for symmetry, got '{value}'. Want one of: "
            f"{', '.join([repr(m.value) for m in cls])}."
        )


class Coords(Enum):
    """
    Enum for the coordinate frame of a serialized placement.
    """

    ZERO_BASED = "zero-based"
    CENTERED = "centered"
    ALGEBRAIC = "algebraic"

    @classmethod
    def _missing_(cls, value: object) -> None:
        raise ValueError(
            f"Incorrect value for coords, got '{value}'. Want one of: "
            f"{', '.join([repr(m.value) for m in cls])}."
        )


class CaseTwoPolynomial(Enum):
    """
    Enum for the four Case 2 polynomials, named after the slope of the
    artificial line through the lonely queen (vertical for f1, horizontal
    for f2, +1 for f3 and -1 for f4).
    """

    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"

    @classmethod
    def _missing_(cls, value: object) -> None:
        raise ValueError(
            f"Incorrect value for polynomial, got '{value}'. Want one of: "
            f"{', '.join([repr(m.value) for m in cls])}."
        )

    @property
    def lonely_slope(self) -> Slope:
        return _SLOPE_ORDER[int(self.value[1]) - 1]


class Variant4k3(Enum):
    """
    Enum for the two polynomials tried on boards of side 4k+3.
    """

    G = "g"
    H = "h"

    @classmethod
    def _missing_(cls, value: object) -> None:
        raise ValueError(
            f"Incorrect value for variant, got '{value}'. Want one of: "
            f"{', '.join([repr(m.value) for m in cls])}."
        )


class ClassificationKind(Enum):
    IN_NULL_SPACE = "InNullSpace"
    VIOLATES_COEFFICIENT_EQ = "ViolatesCoefficientEq"
    VIOLATES_GEOMETRIC_EQ = "ViolatesGeometricEq"


class RowTag(Enum):
    COMPUTED = "computed"
    KNOWN_REFERENCE = "known-reference"
    TIMEOUT = "timeout"


class CommandStatus(Enum):
    """
    Enum for the outcome of a CLI command.
    """

    OK = "ok"
    FAIL = "fail"
    UNSUPPORTED = "unsupported"
    BUDGET_EXCEEDED = "budget-exceeded"

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self]


_EXIT_CODES = {
    CommandStatus.OK: 0,
    CommandStatus.FAIL: 1,
    CommandStatus.UNSUPPORTED: 2,
    CommandStatus.BUDGET_EXCEEDED: 3,
}
