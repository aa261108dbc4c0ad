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

"""DIMACS CNF encoding of "a good placement of exactly q queens exists".

Variables, in order: one queen variable per square (row-major), one
blocking variable t(L, s) per line L with at least three squares and square
s on L (lines by slope then intercept, squares row-major), then the
sequential counter s(i, j) = "at least j of the first i queen variables are
true" for j <= min(i, q + 1).

Clause groups, in order:
    at-most-two   no three queens on a line
    maximality    every square holds a queen or is blocked by a line
    blocking      t(L, s) implies two queens on L besides s
    cardinality   exactly q queens
"""

from __future__ import annotations

from dataclasses import dataclass
from dataclasses import field
from itertools import combinations
import logging
import re
from typing import Mapping, Optional, Sequence

from gardner.queens.board import all_lines
from gardner.queens.board import board_squares
from gardner.queens.board import Line
from gardner.queens.board import lines_through
from gardner.queens.board import Placement
from gardner.queens.board import Square
from gardner.queens.exceptions import CnfFormatError
from gardner.queens.exceptions import CnfInputError
from gardner.queens.exceptions import ModelDecodeError

logger = logging.getLogger(name=__name__)

GROUPS = ("at-most-two", "maximality", "blocking", "cardinality")


@dataclass
class CnfInstance:
    """A CNF formula with the meaning of every variable."""

    n: int
    q: int
    var_map: dict[Square, int] = field(default_factory=dict)
    aux_map: dict[tuple[Line, Square], int] = field(default_factory=dict)
    counter_map: dict[tuple[int, int], int] = field(default_factory=dict)
    clauses: list[list[int]] = field(default_factory=list)
    # name, first clause index, end clause index (exclusive)
    groups: list[tuple[str, int, int]] = field(default_factory=list)

    @property
    def num_vars(self) -> int:
        return len(self.var_map) + len(self.aux_map) + len(self.counter_map)

    def group_of(self, index: int) -> str:
        return next(name for name, lo, hi in self.groups if lo <= index < hi)


class _Builder:
    def __init__(self, n: int, q: int) -> None:
        self.inst = CnfInstance(n, q)
        self.next_var = 1
        self._group: Optional[tuple[str, int]] = None

    def new_var(self) -> int:
        var = self.next_var
        self.next_var += 1
        return var

    def begin(self, name: str) -> None:
        self._group = (name, len(self.inst.clauses))

    def end(self) -> None:
        assert self._group is not None
        name, lo = self._group
        self.inst.groups.append((name, lo, len(self.inst.clauses)))

    def add(self, clause: list[int]) -> None:
        self.inst.clauses.append(clause)


def encode(n: int, q: int) -> CnfInstance:
    """Encodes the existence of a good placement of exactly ``q`` queens.

    Raises:
        CnfInputError: ``q`` is outside 1..n*n.
    """
    if n < 1 or not 1 <= q <= n * n:
        raise CnfInputError(f"Need n >= 1 and 1 <= q <= n*n, got n={n}, q={q}.")
    b = _Builder(n, q)
    inst = b.inst
    squares = board_squares(n)
    for s in squares:
        inst.var_map[s] = b.new_var()
    lines = [line for line in all_lines(n) if len(line.squares()) >= 3]
    line_squares = {line: line.squares() for line in lines}
    for line in lines:
        for s in line_squares[line]:
            inst.aux_map[(line, s)] = b.new_var()
    total = len(squares)
    for i in range(1, total + 1):
        for j in range(1, min(i, q + 1) + 1):
            inst.counter_map[(i, j)] = b.new_var()

    x = inst.var_map
    b.begin("at-most-two")
    for line in lines:
        for trio in combinations(line_squares[line], 3):
            b.add([-x[s] for s in trio])
    b.end()

    b.begin("maximality")
    for s in squares:
        blockers = [
            inst.aux_map[(line, s)]
            for line in lines_through(s, n)
            if (line, s) in inst.aux_map
        ]
        b.add([x[s], *blockers])
    b.end()

    b.begin("blocking")
    for line in lines:
        for s in line_squares[line]:
            t = inst.aux_map[(line, s)]
            others = [o for o in line_squares[line] if o != s]
            # at least two of the others: every subset missing one holds a queen
            for dropped in others:
                b.add([-t, *(x[o] for o in others if o != dropped)])
    b.end()

    b.begin("cardinality")
    _sequential_counter(b, [x[s] for s in squares], q)
    b.end()

    logger.debug(
        f"['n={n} q={q}']: {inst.num_vars} variables, {len(inst.clauses)} clauses"
    )
    return inst


def _sequential_counter(b: _Builder, xs: Sequence[int], q: int) -> None:
    s = b.inst.counter_map
    total = len(xs)
    for i in range(1, total + 1):
        xi = xs[i - 1]
        for j in range(1, min(i, q + 1) + 1):
            here = s[(i, j)]
            prev_same = s.get((i - 1, j))
            prev_less = s.get((i - 1, j - 1)) if j > 1 else None
            # s(i-1, j) -> s(i, j)
            if prev_same is not None:
                b.add([-prev_same, here])
            # x_i and s(i-1, j-1) -> s(i, j)
            if j == 1:
                b.add([-xi, here])
            elif prev_less is not None:
                b.add([-xi, -prev_less, here])
            # s(i, j) -> s(i-1, j) or x_i
            if prev_same is not None:
                b.add([-here, prev_same, xi])
            else:
                b.add([-here, xi])
            # s(i, j) -> s(i-1, j-1)
            if j > 1:
                if prev_less is None:
                    b.add([-here])
                else:
                    b.add([-here, prev_less])
    b.add([s[(total, q)]])
    if (total, q + 1) in s:
        b.add([-s[(total, q + 1)]])


def to_dimacs(inst: CnfInstance) -> str:
    """Renders ``inst`` as DIMACS text; the same instance always renders to
    the same bytes."""
    out = [f"c gardner-queens good placement n={inst.n} q={inst.q}"]
    for s, var in inst.var_map.items():
        out.append(f"c var {var} = queen {s.col},{s.row}")
    for (line, s), var in inst.aux_map.items():
        out.append(f"c var {var} = blocked {s.col},{s.row} by {line}")
    for (i, j), var in inst.counter_map.items():
        out.append(f"c var {var} = count {i} >= {j}")
    for name, lo, hi in inst.groups:
        out.append(f"c group {name} clauses {lo + 1}..{hi}")
    out.append(f"p cnf {inst.num_vars} {len(inst.clauses)}")
    out.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in inst.clauses)
    return "\n".join(out) + "\n"


_HEADER = re.compile(r"^c gardner-queens good placement n=(\d+) q=(\d+)$")


def parse_dimacs(text: str) -> CnfInstance:
    """Rebuilds the instance from DIMACS text written by :func:`to_dimacs`.

    The instance is re-encoded from its header and the clause body must
    match it exactly.

    Raises:
        CnfFormatError: The text was not written by this encoder or was
            altered.
    """
    lines = text.splitlines()
    match = _HEADER.match(lines[0]) if lines else None
    if match is None:
        raise CnfFormatError("Missing 'c gardner-queens' header line.")
    try:
        inst = encode(int(match.group(1)), int(match.group(2)))
    except CnfInputError as e:
        raise CnfFormatError(str(e)) from e
    if to_dimacs(inst) != text:
        raise CnfFormatError(
            f"['n={inst.n} q={inst.q}']: DIMACS body does not match the encoding."
        )
    return inst


def derive_assignment(inst: CnfInstance, p: Placement) -> dict[int, bool]:
    """Total assignment induced by ``p``: its queen variables, t(L, s) true
    exactly when L holds two queens besides s, and the exact counters."""
    if p.n != inst.n:
        raise CnfInputError(f"Placement is for n={p.n}, instance for n={inst.n}.")
    assignment = {var: s in p.queens for s, var in inst.var_map.items()}
    for (line, s), var in inst.aux_map.items():
        assignment[var] = sum(1 for o in p.queens if o != s and line.covers(o)) >= 2
    prefix = [0]
    for s in inst.var_map:
        prefix.append(prefix[-1] + (s in p.queens))
    for (i, j), var in inst.counter_map.items():
        assignment[var] = prefix[i] >= j
    return assignment


def _require_total(inst: CnfInstance, assignment: Mapping[int, bool]) -> None:
    missing = [v for v in range(1, inst.num_vars + 1) if v not in assignment]
    if missing:
        raise CnfInputError(
            f"Assignment misses {len(missing)} variables, first {missing[0]}."
        )


def _satisfied(clause: list[int], assignment: Mapping[int, bool]) -> bool:
    return any(assignment[abs(lit)] == (lit > 0) for lit in clause)


def check_assignment(inst: CnfInstance, assignment: Mapping[int, bool]) -> bool:
    """Whether a total assignment satisfies every clause.

    Raises:
        CnfInputError: Some variable has no value.
    """
    _require_total(inst, assignment)
    return all(_satisfied(clause, assignment) for clause in inst.clauses)


def violated_clauses(
    inst: CnfInstance, assignment: Mapping[int, bool]
) -> list[tuple[int, str]]:
    """Indices and group names of the clauses ``assignment`` falsifies."""
    _require_total(inst, assignment)
    return [
        (i, inst.group_of(i))
        for i, clause in enumerate(inst.clauses)
        if not _satisfied(clause, assignment)
    ]


def parse_model(text: str) -> Optional[list[int]]:
    """Reads a SAT solver's output.

    Accepts competition output ("s SATISFIABLE" with "v" lines) and plain
    literal lists ("SAT" then literals). Returns None for an unsatisfiable
    verdict.

    Raises:
        CnfFormatError: The output holds neither a verdict nor literals.
    """
    literals: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line in ("s UNSATISFIABLE", "UNSAT", "UNSATISFIABLE"):
            return None
        if line.startswith("s ") or line in ("SAT", "SATISFIABLE"):
            continue
        if line.startswith("v"):
            line = line[1:]
        try:
            literals.extend(int(tok) for tok in line.split())
        except ValueError as e:
            raise CnfFormatError(f"Unexpected model line '{raw}'.") from e
    return [lit for lit in literals if lit != 0]


def decode_model(inst: CnfInstance, model: Sequence[int]) -> Placement:
    """The placement of the true queen variables of ``model``.

    Raises:
        ModelDecodeError: A queen variable is missing from the model, or the
            number of queens is not q.
    """
    values = {abs(lit): lit > 0 for lit in model}
    queens = []
    for s, var in inst.var_map.items():
        if var not in values:
            raise ModelDecodeError(f"Model has no value for queen variable {var}.")
        if values[var]:
            queens.append(s)
    if len(queens) != inst.q:
        raise ModelDecodeError(
            f"Model places {len(queens)} queens, the instance requires {inst.q}."
        )
    return Placement.of(inst.n, queens)
