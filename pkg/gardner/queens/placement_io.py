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

import json
import logging
import os
import string
from typing import Any, Optional

from gardner.queens.board import addable_squares
from gardner.queens.board import has_three_in_line
from gardner.queens.board import Placement
from gardner.queens.board import Square
from gardner.queens.enums import Coords
from gardner.queens.exceptions import PlacementError
from gardner.queens.exceptions import PlacementFormatError
from gardner.queens.exceptions import UnsupportedBoardError
from gardner.queens.utils import _read_text

logger = logging.getLogger(name=__name__)

FIXTURES_DIR = os.path.join(os.path.dirname(__file__), "fixtures")
FIXTURE_NAMES = ("figure1", "figure2", "figure3")

_FILES = string.ascii_lowercase


def parse_algebraic(token: str, n: int) -> Square:
    """Parses a square such as "e5" or "Qe5" (file letter, then rank).

    Raises:
        PlacementFormatError: The token is not a square of the n x n board.
    """
    text = token.strip()
    if text[:1] == "Q":
        text = text[1:]
    if len(text) < 2 or text[0] not in _FILES or not text[1:].isdigit():
        raise PlacementFormatError(f"Malformed square '{token}'.")
    col = _FILES.index(text[0])
    row = int(text[1:]) - 1
    if not (0 <= col < n and 0 <= row < n):
        raise PlacementFormatError(f"Square '{token}' is off the {n}x{n} board.")
    return Square(col, row)


def to_algebraic(s: Square) -> str:
    return f"{_FILES[s.col]}{s.row + 1}"


def placement_from_algebraic(n: int, tokens: list[str]) -> Placement:
    return Placement.of(n, (parse_algebraic(t, n) for t in tokens))


def load_placement(data: Any) -> Placement:
    """Builds a placement from its JSON object form.

    The object is {"n": int, "coords": "zero-based" | "centered" |
    "algebraic", "queens": [...]}; "coords" defaults to "zero-based".

    Raises:
        PlacementFormatError: The object does not follow the format.
    """
    if not isinstance(data, dict):
        raise PlacementFormatError("Placement JSON must be an object.")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise PlacementFormatError(f"Field 'n' must be an integer, got {n!r}.")
    try:
        coords = Coords(data.get("coords", Coords.ZERO_BASED.value))
    except ValueError as e:
        raise PlacementFormatError(str(e)) from e
    queens = data.get("queens")
    if not isinstance(queens, list):
        raise PlacementFormatError("Field 'queens' must be a list.")
    try:
        if coords is Coords.ALGEBRAIC:
            if not all(isinstance(q, str) for q in queens):
                raise PlacementFormatError("Algebraic queens must be strings.")
            return placement_from_algebraic(n, queens)
        pairs = [_pair(q) for q in queens]
        if coords is Coords.CENTERED:
            return Placement.from_centered(n, pairs)
        return Placement.from_pairs(n, pairs)
    except (PlacementError, UnsupportedBoardError) as e:
        raise PlacementFormatError(str(e)) from e


def _pair(item: Any) -> tuple[int, int]:
    if (
        not isinstance(item, list)
        or len(item) != 2
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
    ):
        raise PlacementFormatError(f"Queen must be a pair of integers, got {item!r}.")
    return (item[0], item[1])


def dump_placement(p: Placement, coords: Coords | str = Coords.ZERO_BASED) -> dict:
    """JSON object form of ``p`` in the requested frame."""
    if isinstance(coords, str):
        coords = Coords(coords.lower())
    queens: list[Any]
    if coords is Coords.ALGEBRAIC:
        queens = [to_algebraic(s) for s in p.sorted_queens()]
    elif coords is Coords.CENTERED:
        queens = [list(pair) for pair in p.centered_pairs()]
    else:
        queens = [list(pair) for pair in p.pairs()]
    return {"n": p.n, "coords": coords.value, "queens": queens}


def placement_from_json(text: str) -> Placement:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PlacementFormatError(f"Invalid JSON: {e}") from e
    return load_placement(data)


def placement_to_json(p: Placement, coords: Coords | str = Coords.ZERO_BASED) -> str:
    return json.dumps(dump_placement(p, coords))


async def read_placement(path: str) -> Placement:
    """Reads a JSON placement file."""
    try:
        text = await _read_text(path)
    except OSError as e:
        raise PlacementFormatError(f"Cannot read '{path}': {e}") from e
    logger.debug(f"['{path}']: read {len(text)} bytes")
    return placement_from_json(text)


def load_fixture(name: str) -> Placement:
    """Loads one of the bundled placements ("figure1", "figure2", "figure3")."""
    if name not in FIXTURE_NAMES:
        raise PlacementFormatError(
            f"Unknown fixture '{name}'. Want one of: {', '.join(FIXTURE_NAMES)}."
        )
    with open(os.path.join(FIXTURES_DIR, f"{name}.json")) as f:
        return placement_from_json(f.read())


def render_ascii(p: Placement, addable: Optional[set[Square]] = None) -> str:
    """Draws the board with the top rank first.

    Queens are 'Q', squares that can still take a queen are 'x' and all
    other squares are '.'. Crosses are omitted when the placement already
    has three in a line.
    """
    if addable is None:
        addable = set() if has_three_in_line(p) else addable_squares(p)
    lines = []
    for row in reversed(range(p.n)):
        cells = []
        for col in range(p.n):
            s = Square(col, row)
            if s in p.queens:
                cells.append("Q")
            elif s in addable:
                cells.append("x")
            else:
                cells.append(".")
        lines.append("".join(cells))
    return "\n".join(lines)
