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

import os
import pathlib
import subprocess
import sys


def test_namespace_package_compat(tmp_path: pathlib.PosixPath) -> None:
    # The ``gardner`` namespace package should not be masked
    # by the presence of ``gardner-queens``.
    gardner = tmp_path / "gardner"
    gardner.mkdir()
    gardner.joinpath("othermod.py").write_text("")
    env = dict(os.environ, PYTHONPATH=str(tmp_path))
    cmd = [sys.executable, "-m", "gardner.othermod"]
    subprocess.check_call(cmd, env=env)


def test_module_entry_point() -> None:
    cmd = [sys.executable, "-m", "gardner.queens", "--version"]
    out = subprocess.check_output(cmd, text=True)
    assert out.strip()


def test_setup_metadata() -> None:
    root = pathlib.Path(__file__).resolve().parents[2]
    cmd = [sys.executable, "setup.py", "--name", "--description"]
    out = subprocess.check_output(cmd, cwd=root, text=True)
    assert out.splitlines()[-2:] == [
        "gardner-queens",
        "Exact search and certificates for minimal good queen placements.",
    ]
