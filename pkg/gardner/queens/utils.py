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

import aiofiles
from cryptography.hazmat.primitives import hashes


async def _read_text(path: str) -> str:
    async with aiofiles.open(path, "r") as f:
        return await f.read()


async def _write_text(path: str, text: str) -> str:
    """
    Helper function to write emitted text (DIMACS, JSON reports) to a file.
    """
    async with aiofiles.open(path, "w+") as out:
        await out.write(text)
    return path


def fingerprint(text: str) -> str:
    """SHA-256 hex digest of ``text`` encoded as UTF-8."""
    digest = hashes.Hash(hashes.SHA256())
    digest.update(text.encode("utf-8"))
    return digest.finalize().hex()
