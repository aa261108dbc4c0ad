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

from dataclasses import dataclass
from dataclasses import field
import json
import logging
from typing import Any, Optional, Sequence

from gardner.queens.board import has_three_in_line
from gardner.queens.board import is_good
from gardner.queens.board import Placement
from gardner.queens.enums import CaseTwoPolynomial
from gardner.queens.enums import Slope
from gardner.queens.exceptions import CaseOneError
from gardner.queens.exceptions import CaseTwoError
from gardner.queens.exceptions import ThreeInLineError
from gardner.queens.linear_certificate import case2_constants
from gardner.queens.linear_certificate import classify
from gardner.queens.linear_certificate import derive_A
from gardner.queens.linear_certificate import extract_case2_vector
from gardner.queens.nullstellensatz import build_case2
from gardner.queens.nullstellensatz import case1_polynomial
from gardner.queens.nullstellensatz import case1_top_coefficient
from gardner.queens.nullstellensatz import closed_form_case2
from gardner.queens.nullstellensatz import find_nonvanishing
from gardner.queens.nullstellensatz import vanishes_on_board
from gardner.queens.nullstellensatz import ZeroSumGrid
from gardner.queens.utils import fingerprint

logger = logging.getLogger(name=__name__)


@dataclass(frozen=True)
class CertificateCheck:
    """One identity checked for a placement. ``passed`` is None for purely
    informational entries."""

    name: str
    value: Any
    expected: Any = None
    passed: Optional[bool] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "value": _jsonable(self.value),
            "expected": _jsonable(self.expected),
            "passed": self.passed,
        }


def _jsonable(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


@dataclass
class CertificateReport:
    """Record of which identities a placement or parameter set satisfies.

    A report with ``error`` set describes an input the certificate does not
    apply to.
    """

    subject: str
    checks: list[CertificateCheck] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed is not False for c in self.checks)

    def add(
        self, name: str, value: Any, expected: Any = None, compare: bool = True
    ) -> CertificateCheck:
        check = CertificateCheck(
            name, value, expected, (value == expected) if compare else None
        )
        self.checks.append(check)
        return check

    def value_of(self, name: str) -> Any:
        return next(c.value for c in self.checks if c.name == name)

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "status": "PASS" if self.passed else "FAIL",
            "error": self.error,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @property
    def fingerprint(self) -> str:
        return fingerprint(self.to_json())

    def render(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        if self.error:
            lines.append(f"  error: {self.error}")
        for c in self.checks:
            mark = {True: "PASS", False: "FAIL", None: "info"}[c.passed]
            expected = "" if c.expected is None else f" (expected {c.expected})"
            lines.append(f"  [{mark}] {c.name} = {_jsonable(c.value)}{expected}")
        return "\n".join(lines)


def certify_case1(
    p: Placement, lonely_slopes: Optional[Sequence[Slope]] = None
) -> CertificateReport:
    """Builds the Case 1 product for ``p`` and checks its top coefficient
    against (-1)^k C(2k, k), then looks for a square of the centred grid
    where the product does not vanish.

    Raises:
        UnsupportedBoardError: n is not 4k+1.
        ThreeInLineError: ``p`` has three queens on a line.
    """
    report = CertificateReport(f"case 1 certificate, n={p.n}, q={p.size}")
    if has_three_in_line(p):
        raise ThreeInLineError(f"['n={p.n}']: placement has three queens on a line.")
    try:
        fp = case1_polynomial(p, lonely_slopes)
    except CaseOneError as e:
        report.error = str(e)
        return report
    k = (p.n - 1) // 4
    report.add("degree", fp.degree, 8 * k)
    report.add(
        f"coefficient x^{4 * k} y^{4 * k}",
        fp.coeff(4 * k, 4 * k),
        case1_top_coefficient(k),
    )
    good = is_good(p)
    report.add("good", good, compare=False)
    report.add("vanishes on board", vanishes_on_board(fp, p.n), compare=False)
    point = find_nonvanishing(fp, ZeroSumGrid.symmetric(2 * k))
    # a nonzero top coefficient forces a point where the product is nonzero
    report.add("nonvanishing point found", point is not None, True)
    report.add("nonvanishing point", point, compare=False)
    logger.debug(f"['n={p.n}']: case 1 certificate {report.passed}")
    return report


def certify_case2(p: Placement) -> CertificateReport:
    """Checks the four Case 2 coefficients of ``p`` three ways: expanded
    exactly, from the closed forms, and from the rows of the re-derived
    matrix applied to the Case 2 vector.

    A placement outside Case 2 gives a report with ``error`` set.
    """
    report = CertificateReport(f"case 2 certificate, n={p.n}, q={p.size}")
    try:
        lonely, intercepts = case2_constants(p)
        vector = extract_case2_vector(p)
    except CaseTwoError as e:
        report.error = str(e)
        return report
    k = (p.n - 1) // 4
    lists = [intercepts[slope] for slope in Slope]
    sa, sb, sg, sd = (sum(values) for values in lists)
    sums = (sa, sb, sg, sd)
    residuals = derive_A(k).apply(vector.as_list())
    for i, which in enumerate(CaseTwoPolynomial):
        fp = build_case2(which, lonely, *lists)
        value = fp.coeff(4 * k, 4 * k)
        report.add(f"{which.value} coefficient", value, compare=False)
        report.add(
            f"{which.value} closed form",
            closed_form_case2(which, k, lonely, sums),
            value,
        )
        report.add(
            f"{which.value} printed closed form",
            closed_form_case2(which, k, lonely, sums, as_printed=True),
            compare=False,
        )
        report.add(f"{which.value} matrix row", -residuals[i], value)
    report.add("case 2 vector", [str(v) for v in vector.as_list()], compare=False)
    report.add("classification", str(classify(vector, k)), compare=False)
    return report
