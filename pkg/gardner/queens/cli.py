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

"""Command-line entry point: ``gardner-queens <command> [options]``."""

from __future__ import annotations

import argparse
import asyncio
from dataclasses import dataclass
from dataclasses import field
import json
import logging
import sys
from typing import Any, Awaitable, Callable, Optional, Sequence

from gardner.queens import budget_utils
from gardner.queens.board import addable_squares
from gardner.queens.board import defined_intercepts
from gardner.queens.board import has_three_in_line
from gardner.queens.board import is_good
from gardner.queens.board import lonely_queens
from gardner.queens.board import Square
from gardner.queens.certificate import certify_case1
from gardner.queens.certificate import certify_case2
from gardner.queens.cnf import decode_model
from gardner.queens.cnf import encode
from gardner.queens.cnf import parse_dimacs
from gardner.queens.cnf import parse_model
from gardner.queens.cnf import to_dimacs
from gardner.queens.constructions import enumerate_seeds
from gardner.queens.constructions import octagon_placement
from gardner.queens.constructions import SeedSet
from gardner.queens.constructions import validate_nullA
from gardner.queens.enums import CommandStatus
from gardner.queens.enums import RowTag
from gardner.queens.enums import Slope
from gardner.queens.exceptions import CaseTwoError
from gardner.queens.exceptions import CnfFormatError
from gardner.queens.exceptions import CnfInputError
from gardner.queens.exceptions import ConstructionError
from gardner.queens.exceptions import ModelDecodeError
from gardner.queens.exceptions import PlacementError
from gardner.queens.exceptions import PlacementFormatError
from gardner.queens.exceptions import ThreeInLineError
from gardner.queens.exceptions import UnsupportedBoardError
from gardner.queens.linear_certificate import build_A
from gardner.queens.linear_certificate import classify
from gardner.queens.linear_certificate import derive_A
from gardner.queens.linear_certificate import extract_case2_vector
from gardner.queens.linear_certificate import nullspace
from gardner.queens.linear_certificate import pivot_columns
from gardner.queens.linear_certificate import RationalMatrix
from gardner.queens.linear_certificate import rref
from gardner.queens.placement_io import dump_placement
from gardner.queens.placement_io import read_placement
from gardner.queens.placement_io import render_ascii
from gardner.queens.solver import brute_force_min_good
from gardner.queens.solver import find_min_good_async
from gardner.queens.solver import KNOWN_M3
from gardner.queens.solver import MAX_SEARCH_N
from gardner.queens.solver import SearchConfig
from gardner.queens.utils import _read_text
from gardner.queens.utils import _write_text
from gardner.queens.utils import fingerprint
from gardner.queens.version import __version__

logger = logging.getLogger(name=__name__)

# subset enumeration cross-check is only run on boards this small
_ORACLE_MAX_N = 4


@dataclass
class CommandResult:
    """Outcome of one command: a status, a JSON payload and diagnostics.

    ``text`` is the human-readable rendering printed without --json.
    """

    status: CommandStatus
    payload: dict[str, Any] = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)
    text: str = ""

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "payload": self.payload,
            "diagnostics": self.diagnostics,
        }


def _fail(message: str) -> CommandResult:
    return CommandResult(CommandStatus.FAIL, diagnostics=[message], text=message)


def _unsupported(message: str) -> CommandResult:
    return CommandResult(CommandStatus.UNSUPPORTED, diagnostics=[message], text=message)


def _square_dict(s: Square, n: int) -> dict[str, Any]:
    data: dict[str, Any] = {"col": s.col, "row": s.row}
    if n % 2:
        data["centered"] = list(s.centered(n))
    return data


def _matrix_payload(m: RationalMatrix) -> dict[str, Any]:
    return {
        "matrix": m.as_strings(),
        "rref": rref(m).as_strings(),
        "pivots": [c + 1 for c in pivot_columns(m)],
        "nullspace": [[str(v) for v in vector] for vector in nullspace(m)],
    }


def _format_rows(rows: list[list[str]]) -> str:
    if not rows:
        return "  (none)"
    width = max(len(v) for row in rows for v in row)
    return "\n".join(
        "  [" + " ".join(v.rjust(width) for v in row) + "]" for row in rows
    )


async def cmd_verify(args: argparse.Namespace) -> CommandResult:
    p = await read_placement(args.placement)
    three = has_three_in_line(p)
    addable = None
    if not three:
        addable = sorted(addable_squares(p), key=lambda s: (s.row, s.col))
    lonely = sorted(lonely_queens(p), key=lambda s: (s.row, s.col))
    counts = {slope.value: len(v) for slope, v in defined_intercepts(p).items()}
    payload = {
        "n": p.n,
        "size": p.size,
        "no_three_in_line": not three,
        "maximal": None if addable is None else not addable,
        "good": is_good(p),
        "lonely_queens": [_square_dict(s, p.n) for s in lonely],
        "defined_lines": counts,
        "addable_squares": (
            None if addable is None else [_square_dict(s, p.n) for s in addable]
        ),
        "board": render_ascii(p),
    }
    text = "\n".join(
        [
            f"n={p.n} q={p.size}",
            f"no three in a line: {not three}",
            f"good: {payload['good']}",
            f"lonely queens: {[(s.col, s.row) for s in lonely]}",
            f"defined lines per slope: {counts}",
            f"addable squares: {len(addable) if addable is not None else 'n/a'}",
            payload["board"],
        ]
    )
    return CommandResult(CommandStatus.OK, payload, text=text)


async def cmd_solve(args: argparse.Namespace) -> CommandResult:
    cfg = SearchConfig(
        n=args.n,
        max_size=args.max_size,
        use_symmetry=not args.no_symmetry,
        time_budget=args.budget,
        workers=args.threads,
    )
    result = await find_min_good_async(cfg)
    payload = result.to_dict()
    if result.witness is not None:
        payload["board"] = render_ascii(result.witness)
        text = f"m3({args.n}) = {result.m3}\n{payload['board']}"
        return CommandResult(CommandStatus.OK, payload, text=text)
    assert cfg.max_size is not None
    if result.proven_lower_bound <= cfg.max_size:
        # the search stopped early, which only the budget does
        message = f"budget exceeded; sizes below {result.proven_lower_bound} ruled out"
        return CommandResult(
            CommandStatus.BUDGET_EXCEEDED, payload, [message], text=message
        )
    message = f"no good placement of size at most {cfg.max_size}"
    return CommandResult(CommandStatus.FAIL, payload, [message], text=message)


async def cmd_table(args: argparse.Namespace) -> CommandResult:
    if not 1 <= args.max_n <= max(KNOWN_M3):
        return _unsupported(
            f"--max-n must be in 1..{max(KNOWN_M3)}, got {args.max_n}."
        )
    compute_up_to = min(args.compute_up_to, MAX_SEARCH_N)
    deadline = budget_utils._deadline_from_budget(args.budget)
    rows = []
    for n in range(1, args.max_n + 1):
        row: dict[str, Any] = {"n": n, "m3": None, "reference": KNOWN_M3.get(n)}
        if n > compute_up_to:
            row["tag"] = RowTag.KNOWN_REFERENCE.value
            rows.append(row)
            continue
        if budget_utils._is_expired(deadline):
            row["tag"] = RowTag.TIMEOUT.value
            rows.append(row)
            continue
        cfg = SearchConfig(
            n=n,
            time_budget=budget_utils._seconds_remaining(deadline),
            workers=args.threads,
        )
        result = await find_min_good_async(cfg)
        if result.m3 is None:
            logger.info(f"['n={n}']: table row timed out")
            row["tag"] = RowTag.TIMEOUT.value
        else:
            row["m3"] = result.m3
            row["tag"] = RowTag.COMPUTED.value
            row["elapsed"] = round(result.elapsed, 3)
            row["nodes_expanded"] = result.nodes_expanded
            if args.oracle and n <= _ORACLE_MAX_N:
                row["oracle"] = brute_force_min_good(n)
        rows.append(row)
    timed_out = [r["n"] for r in rows if r["tag"] == RowTag.TIMEOUT.value]
    disagree = [r["n"] for r in rows if r.get("oracle", r["m3"]) != r["m3"]]
    diagnostics = [f"rows timed out: {timed_out}"] if timed_out else []
    if disagree:
        status = CommandStatus.FAIL
        diagnostics.append(f"search and subset enumeration disagree: {disagree}")
    elif timed_out:
        status = CommandStatus.BUDGET_EXCEEDED
    else:
        status = CommandStatus.OK
    text = "\n".join(
        f"{r['n']:>3} {r['m3'] if r['m3'] is not None else '-':>4} "
        f"{r['reference'] if r['reference'] is not None else '-':>4}  {r['tag']}"
        for r in rows
    )
    return CommandResult(
        status,
        {"rows": rows},
        diagnostics,
        text="  n   m3  ref  tag\n" + text,
    )


async def cmd_certify(args: argparse.Namespace) -> CommandResult:
    p = await read_placement(args.placement)
    if args.case == 1:
        slopes = [Slope(s) for s in args.slope] if args.slope else None
        report = certify_case1(p, slopes)
    else:
        report = certify_case2(p)
    payload = report.to_dict()
    payload["fingerprint"] = report.fingerprint
    status = CommandStatus.OK if report.passed else CommandStatus.FAIL
    diagnostics = [report.error] if report.error else []
    return CommandResult(status, payload, diagnostics, text=report.render())


async def cmd_nullspace(args: argparse.Namespace) -> CommandResult:
    if args.k < 1:
        return _unsupported(f"--k must be at least 1, got {args.k}.")
    printed = _matrix_payload(build_A(args.k))
    derived = _matrix_payload(derive_A(args.k))
    payload = {"k": args.k, "printed": printed, "derived": derived}
    text = "\n".join(
        [
            f"A (k={args.k}):",
            _format_rows(printed["matrix"]),
            "RREF:",
            _format_rows(printed["rref"]),
            "null space basis:",
            _format_rows(printed["nullspace"]),
            "re-derived A null space basis:",
            _format_rows(derived["nullspace"]),
        ]
    )
    return CommandResult(CommandStatus.OK, payload, text=text)


async def cmd_classify(args: argparse.Namespace) -> CommandResult:
    p = await read_placement(args.placement)
    vector = extract_case2_vector(p)
    result = classify(vector, (p.n - 1) // 4, printed=args.printed)
    payload = {"vector": vector.to_dict(), "classification": result.to_dict()}
    text = f"vector: {vector.to_dict()}\nclass: {result}"
    return CommandResult(CommandStatus.OK, payload, text=text)


async def cmd_construct(args: argparse.Namespace) -> CommandResult:
    if args.seed:
        seeds = [SeedSet.parse(args.seed)]
    else:
        seeds = enumerate_seeds(args.n, require_no_three=args.strict)
        if not args.all:
            seeds = seeds[:1]
    placements = []
    texts = []
    ok = True
    for seed in seeds:
        p = octagon_placement(seed, args.n)
        report = validate_nullA(p)
        ok = ok and report.passed
        board = render_ascii(p)
        placements.append(
            {
                "seed": str(seed),
                "placement": dump_placement(p),
                "zero_vector": report.passed,
                "good": is_good(p),
                "board": board,
            }
        )
        texts.append(f"seed {seed}: zero vector {report.passed}\n{board}")
    status = CommandStatus.OK if ok else CommandStatus.FAIL
    return CommandResult(
        status, {"n": args.n, "placements": placements}, text="\n\n".join(texts)
    )


async def cmd_encode(args: argparse.Namespace) -> CommandResult:
    inst = encode(args.n, args.q)
    dimacs = to_dimacs(inst)
    payload: dict[str, Any] = {
        "n": args.n,
        "q": args.q,
        "variables": inst.num_vars,
        "clauses": len(inst.clauses),
        "sha256": fingerprint(dimacs),
    }
    if args.out:
        payload["out"] = await _write_text(args.out, dimacs)
        text = (
            f"wrote {args.out}: {inst.num_vars} variables, "
            f"{len(inst.clauses)} clauses"
        )
    else:
        text = dimacs.rstrip("\n")
    return CommandResult(CommandStatus.OK, payload, text=text)


async def cmd_check_model(args: argparse.Namespace) -> CommandResult:
    inst = parse_dimacs(await _read_text(args.cnf))
    model = parse_model(await _read_text(args.model))
    if model is None:
        payload = {"n": inst.n, "q": inst.q, "satisfiable": False}
        text = f"no good placement of size {inst.q} on the {inst.n}x{inst.n} board"
        return CommandResult(CommandStatus.OK, payload, text=text)
    p = decode_model(inst, model)
    good = is_good(p)
    payload = {
        "n": inst.n,
        "q": inst.q,
        "satisfiable": True,
        "placement": dump_placement(p),
        "good": good,
        "board": render_ascii(p),
    }
    if not good:
        message = "decoded placement is not good"
        return CommandResult(CommandStatus.FAIL, payload, [message], text=message)
    return CommandResult(CommandStatus.OK, payload, text=f"good\n{payload['board']}")


_COMMANDS: dict[str, Callable[[argparse.Namespace], Awaitable[CommandResult]]] = {
    "verify": cmd_verify,
    "solve": cmd_solve,
    "table": cmd_table,
    "certify": cmd_certify,
    "nullspace": cmd_nullspace,
    "classify": cmd_classify,
    "construct": cmd_construct,
    "encode-cnf": cmd_encode,
    "check-model": cmd_check_model,
}


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool = False) -> None:
    """Adds the flags every command accepts, before or after its name.

    Subcommand copies use SUPPRESS defaults so they never overwrite a value
    given before the subcommand.
    """

    def default(value: Any) -> Any:
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--json", action="store_true", default=default(False), help="print JSON output"
    )
    parser.add_argument(
        "--budget",
        type=float,
        default=default(None),
        help="wall-clock budget in seconds",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=default(1),
        help="worker processes for the search",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        default=default(False),
        help="debug logging",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gardner-queens",
        description="Exact search and certificates for minimal good queen "
        "placements with no three in a line.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    _add_global_flags(parser)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a placement", parents=[common])
    p.add_argument("--placement", required=True)

    p = sub.add_parser("solve", help="compute m3(n)", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-size", type=int)
    p.add_argument("--no-symmetry", action="store_true")

    p = sub.add_parser("table", help="reproduce the table of m3(n)", parents=[common])
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument(
        "--compute-up-to",
        type=int,
        default=8,
        help=f"largest n searched (at most {MAX_SEARCH_N}); larger rows "
        "show the known reference value",
    )
    p.add_argument(
        "--oracle",
        action="store_true",
        help=f"cross-check rows n <= {_ORACLE_MAX_N} by subset enumeration",
    )

    p = sub.add_parser(
        "certify", help="polynomial certificate for a placement", parents=[common]
    )
    p.add_argument("--placement", required=True)
    p.add_argument("--case", type=int, choices=(1, 2), required=True)
    p.add_argument(
        "--slope",
        action="append",
        choices=[s.value for s in Slope],
        help="slope of the line through each lonely queen (case 1, repeatable)",
    )

    p = sub.add_parser(
        "nullspace", help="matrix, RREF and null space for k", parents=[common]
    )
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("classify", help="classify a Case 2 placement", parents=[common])
    p.add_argument("--placement", required=True)
    p.add_argument("--printed", action="store_true", help="use the printed matrix")

    p = sub.add_parser(
        "construct", help="octagon placements for n = 8k+1", parents=[common]
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", help='seed squares, e.g. "4,1" or "5,1;7,3"')
    p.add_argument("--all", action="store_true")
    p.add_argument(
        "--strict", action="store_true", help="skip seeds giving three in a line"
    )

    p = sub.add_parser(
        "encode-cnf", help="DIMACS CNF for a good placement of size q", parents=[common]
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--out")

    p = sub.add_parser(
        "check-model", help="decode and verify a SAT solver model", parents=[common]
    )
    p.add_argument("--cnf", required=True)
    p.add_argument("--model", required=True)
    return parser


async def run(args: argparse.Namespace) -> CommandResult:
    """Runs one parsed command, turning library errors into results."""
    try:
        return await _COMMANDS[args.command](args)
    except UnsupportedBoardError as e:
        return _unsupported(str(e))
    except (
        PlacementError,
        PlacementFormatError,
        ThreeInLineError,
        CnfInputError,
        CnfFormatError,
        ModelDecodeError,
        CaseTwoError,
        ConstructionError,
        ValueError,
        OSError,
    ) as e:
        logger.debug(f"['{args.command}']: {type(e).__name__}: {e}")
        return _fail(str(e))


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    result = asyncio.run(run(args))
    if args.json:
        print(json.dumps(result.to_dict(), indent=2))
    else:
        print(result.text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
