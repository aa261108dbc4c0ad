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

import pathlib

import pytest

from gardner.queens.enums import CaseTwoPolynomial
from gardner.queens.enums import CommandStatus
from gardner.queens.enums import Slope
from gardner.queens.enums import Symmetry
from gardner.queens.utils import _read_text
from gardner.queens.utils import _write_text
from gardner.queens.utils import fingerprint


def test_fingerprint_sha256() -> None:
    assert (
        fingerprint("abc")
        == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
    )


async def test_write_then_read_text(tmp_path: pathlib.Path) -> None:
    path = str(tmp_path / "out.cnf")
    assert await _write_text(path, "p cnf 0 0\n") == path
    assert await _read_text(path) == "p cnf 0 0\n"


def test_slope_invalid_value() -> None:
    with pytest.raises(ValueError) as exc_info:
        Slope("x")
    assert exc_info.value.args[0] == (
        "Incorrect value for slope, got 'x'. Want one of: 'v', 'h', 'd+', 'd-'."
    )


def test_symmetry_invalid_value() -> None:
    with pytest.raises(ValueError):
        Symmetry("r45")


def test_slope_order() -> None:
    assert [s.order for s in Slope] == [0, 1, 2, 3]


def test_polynomial_lonely_slope() -> None:
    assert [f.lonely_slope for f in CaseTwoPolynomial] == list(Slope)


def test_command_status_exit_codes() -> None:
    assert [s.exit_code for s in CommandStatus] == [0, 1, 2, 3]
