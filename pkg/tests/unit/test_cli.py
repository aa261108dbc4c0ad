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

import json
import os
import pathlib
from typing import Any

import pytest

from gardner.queens.cli import main
from gardner.queens.constructions import octagon_placement
from gardner.queens.constructions import SeedSet
from gardner.queens.placement_io import FIXTURES_DIR
from gardner.queens.placement_io import load_placement
from gardner.queens.utils import fingerprint


def _fixture(name: str) -> str:
    return os.path.join(FIXTURES_DIR, f"{name}.json")


def _run_json(capsys: pytest.CaptureFixture, *argv: str) -> tuple[int, dict[str, Any]]:
    code = main(["--json", *argv])
    return code, json.loads(capsys.readouterr().out)


def test_verify_figure1(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "verify", "--placement", _fixture("figure1"))
    assert code == 0
    assert out["status"] == "ok"
    payload = out["payload"]
    assert payload["good"] is True
    assert payload["size"] == 10
    assert payload["lonely_queens"] == []
    assert payload["addable_squares"] == []


def test_verify_figure2(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "verify", "--placement", _fixture("figure2"))
    assert code == 0
    payload = out["payload"]
    assert payload["good"] is True
    assert [q["centered"] for q in payload["lonely_queens"]] == [[0, 2]]
    assert payload["defined_lines"] == {"v": 4, "h": 4, "d+": 2, "d-": 2}


def test_verify_figure3(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "verify", "--placement", _fixture("figure3"))
    assert code == 0
    payload = out["payload"]
    assert payload["good"] is False
    assert payload["maximal"] is False
    assert len(payload["addable_squares"]) == 12
    assert payload["board"].splitlines()[0] == "...Q.Q..."


def test_verify_text_output(capsys: pytest.CaptureFixture) -> None:
    assert main(["verify", "--placement", _fixture("figure2")]) == 0
    out = capsys.readouterr().out
    assert "good: True" in out
    assert "lonely queens: [(2, 4)]" in out


def test_verify_malformed_file(
    capsys: pytest.CaptureFixture, tmp_path: pathlib.Path
) -> None:
    path = tmp_path / "bad.json"
    path.write_text('{"n": 3, "queens": [[0, 0], [0, 0]]}')
    code, out = _run_json(capsys, "verify", "--placement", str(path))
    assert code == 1
    assert out["status"] == "fail"
    assert "Duplicate" in out["diagnostics"][0]


def test_verify_missing_file(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "verify", "--placement", "no-such-file.json")
    assert code == 1


def test_solve(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "solve", "--n", "5")
    assert code == 0
    assert out["payload"]["m3"] == 6
    assert len(out["payload"]["witness"]) == 6


def test_solve_size_cap(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "solve", "--n", "4", "--max-size", "3")
    assert code == 1
    assert out["payload"]["m3"] is None


def test_solve_bad_board(capsys: pytest.CaptureFixture) -> None:
    code, _ = _run_json(capsys, "solve", "--n", "0")
    assert code == 1


def test_table(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "table", "--max-n", "5")
    assert code == 0
    rows = out["payload"]["rows"]
    assert [r["m3"] for r in rows] == [1, 4, 4, 4, 6]
    assert {r["tag"] for r in rows} == {"computed"}


def test_table_reference_rows(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(
        capsys, "table", "--max-n", "10", "--compute-up-to", "4"
    )
    assert code == 0
    rows = out["payload"]["rows"]
    assert [r["tag"] for r in rows[4:]] == ["known-reference"] * 6
    assert [r["reference"] for r in rows[4:]] == [6, 6, 8, 9, 10, 10]
    assert all(r["m3"] is None for r in rows[4:])


def test_table_oracle(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "table", "--max-n", "3", "--oracle")
    assert code == 0
    assert [r["oracle"] for r in out["payload"]["rows"]] == [1, 4, 4]


@pytest.mark.parametrize("max_n", ["0", "28"])
def test_table_max_n_out_of_range(capsys: pytest.CaptureFixture, max_n: str) -> None:
    code, out = _run_json(capsys, "table", "--max-n", max_n)
    assert code == 2
    assert out["status"] == "unsupported"


def test_table_budget_exceeded(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "--budget", "0", "table", "--max-n", "3")
    assert code == 3
    assert out["status"] == "budget-exceeded"
    assert {r["tag"] for r in out["payload"]["rows"]} == {"timeout"}


def test_global_flags_after_command(capsys: pytest.CaptureFixture) -> None:
    assert main(["solve", "--n", "3", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["payload"]["m3"] == 4
    assert main(["nullspace", "--k", "3", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "ok"
    assert main(["solve", "--n", "4", "--threads", "2", "-v", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["payload"]["m3"] == 4


def test_budget_after_command(capsys: pytest.CaptureFixture) -> None:
    code = main(["table", "--max-n", "3", "--budget", "0", "--json"])
    assert code == 3
    assert json.loads(capsys.readouterr().out)["status"] == "budget-exceeded"


def test_flags_before_command_survive(capsys: pytest.CaptureFixture) -> None:
    code = main(["--json", "--budget", "0", "table", "--max-n", "2"])
    assert code == 3
    assert json.loads(capsys.readouterr().out)["status"] == "budget-exceeded"


def test_certify_case2_figure3(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(
        capsys, "certify", "--placement", _fixture("figure3"), "--case", "2"
    )
    assert code == 0
    payload = out["payload"]
    assert payload["status"] == "PASS"
    values = {c["name"]: c["value"] for c in payload["checks"]}
    assert [values[f"f{i} coefficient"] for i in range(1, 5)] == [0, 0, 0, 0]
    assert values["classification"] == "InNullSpace"
    assert len(payload["fingerprint"]) == 64


def test_certify_case2_not_applicable(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(
        capsys, "certify", "--placement", _fixture("figure1"), "--case", "2"
    )
    assert code == 1
    assert out["diagnostics"][0].startswith("Not a Case 2 placement")


def test_certify_case1_with_slope(
    capsys: pytest.CaptureFixture, tmp_path: pathlib.Path
) -> None:
    path = tmp_path / "single.json"
    path.write_text('{"n": 5, "coords": "centered", "queens": [[0, 0]]}')
    code, out = _run_json(
        capsys, "certify", "--placement", str(path), "--case", "1", "--slope", "d-"
    )
    assert code == 0
    assert out["payload"]["status"] == "PASS"


def test_certify_case1_even_board(
    capsys: pytest.CaptureFixture, tmp_path: pathlib.Path
) -> None:
    path = tmp_path / "even.json"
    path.write_text('{"n": 4, "queens": [[0, 0]]}')
    code, _ = _run_json(capsys, "certify", "--placement", str(path), "--case", "1")
    assert code == 2


def test_nullspace(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "nullspace", "--k", "2")
    assert code == 0
    printed = out["payload"]["printed"]
    assert printed["pivots"] == [1, 2, 3, 4, 5, 6, 7]
    assert printed["nullspace"] == [["1", "1", "0", "2", "-1/2", "-1/2", "0", "-1"]]
    assert printed["matrix"][0] == ["6", "0", "0", "0", "6", "0", "3", "3"]
    assert len(out["payload"]["derived"]["nullspace"]) == 2


def test_nullspace_bad_k(capsys: pytest.CaptureFixture) -> None:
    code, _ = _run_json(capsys, "nullspace", "--k", "0")
    assert code == 2


def test_classify(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "classify", "--placement", _fixture("figure3"))
    assert code == 0
    assert out["payload"]["classification"]["label"] == "InNullSpace"
    code, out = _run_json(capsys, "classify", "--placement", _fixture("figure1"))
    assert code == 1


def test_construct_all(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "construct", "--n", "9", "--all")
    assert code == 0
    placements = out["payload"]["placements"]
    assert [p["seed"] for p in placements] == [
        "2,1",
        "3,1",
        "4,1",
        "3,2",
        "4,2",
        "4,3",
    ]
    assert all(p["zero_vector"] and not p["good"] for p in placements)
    assert load_placement(placements[2]["placement"]) == octagon_placement(
        SeedSet(((4, 1),)), 9
    )


def test_construct_seed(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "construct", "--n", "17", "--seed", "5,1;6,2")
    assert code == 1
    assert out["payload"]["placements"][0]["zero_vector"] is False


def test_construct_bad_seed(capsys: pytest.CaptureFixture) -> None:
    code, _ = _run_json(capsys, "construct", "--n", "9", "--seed", "1,1")
    assert code == 1


def test_construct_unsupported_board(capsys: pytest.CaptureFixture) -> None:
    code, out = _run_json(capsys, "construct", "--n", "5")
    assert code == 2
    assert out["status"] == "unsupported"


def test_encode_cnf_is_reproducible(
    capsys: pytest.CaptureFixture, tmp_path: pathlib.Path
) -> None:
    digests = []
    for name in ("a.cnf", "b.cnf"):
        out_path = tmp_path / name
        code, out = _run_json(
            capsys, "encode-cnf", "--n", "3", "--q", "4", "--out", str(out_path)
        )
        assert code == 0
        assert out["payload"]["sha256"] == fingerprint(out_path.read_text())
        digests.append(out["payload"]["sha256"])
    assert digests[0] == digests[1]
    assert (tmp_path / "a.cnf").read_bytes() == (tmp_path / "b.cnf").read_bytes()


def test_encode_cnf_bad_size(capsys: pytest.CaptureFixture) -> None:
    code, _ = _run_json(capsys, "encode-cnf", "--n", "3", "--q", "10")
    assert code == 1


@pytest.mark.parametrize(
    "model, code, satisfiable",
    [("SAT\n1 2 0\n", 0, True), ("s UNSATISFIABLE\n", 0, False)],
)
def test_check_model(
    capsys: pytest.CaptureFixture,
    tmp_path: pathlib.Path,
    model: str,
    code: int,
    satisfiable: bool,
) -> None:
    cnf = tmp_path / "one.cnf"
    main(["encode-cnf", "--n", "1", "--q", "1", "--out", str(cnf)])
    capsys.readouterr()
    model_path = tmp_path / "model.txt"
    model_path.write_text(model)
    result, out = _run_json(
        capsys, "check-model", "--cnf", str(cnf), "--model", str(model_path)
    )
    assert result == code
    assert out["payload"]["satisfiable"] is satisfiable


def test_check_model_undecodable(
    capsys: pytest.CaptureFixture, tmp_path: pathlib.Path
) -> None:
    cnf = tmp_path / "one.cnf"
    main(["encode-cnf", "--n", "1", "--q", "1", "--out", str(cnf)])
    capsys.readouterr()
    model_path = tmp_path / "model.txt"
    model_path.write_text("SAT\n")
    code, out = _run_json(
        capsys, "check-model", "--cnf", str(cnf), "--model", str(model_path)
    )
    assert code == 1
    assert out["status"] == "fail"


def test_check_model_not_good(
    capsys: pytest.CaptureFixture, tmp_path: pathlib.Path
) -> None:
    cnf = tmp_path / "two.cnf"
    main(["encode-cnf", "--n", "2", "--q", "2", "--out", str(cnf)])
    capsys.readouterr()
    model_path = tmp_path / "model.txt"
    model_path.write_text("SAT\n1 2 -3 -4 0\n")
    code, out = _run_json(
        capsys, "check-model", "--cnf", str(cnf), "--model", str(model_path)
    )
    assert code == 1
    assert out["payload"]["good"] is False
