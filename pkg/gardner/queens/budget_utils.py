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

from datetime import datetime
from datetime import timedelta
from datetime import timezone
import logging
from typing import Optional

logger = logging.getLogger(name=__name__)


def _deadline_from_budget(budget: Optional[float]) -> Optional[datetime]:
    """
    Converts a wall-clock budget in seconds into a UTC deadline.

    Args:
        budget (float | None): Seconds allowed, or None for no limit.
    Returns:
        datetime.datetime | None: The deadline, or None for no limit.
    """
    if budget is None:
        return None
    if budget < 0:
        raise ValueError(f"Budget must be non-negative, got {budget}.")
    return datetime.now(timezone.utc) + timedelta(seconds=budget)


def _seconds_remaining(deadline: Optional[datetime]) -> Optional[float]:
    """
    Calculates the seconds left before ``deadline``, never negative.
    """
    if deadline is None:
        return None
    return max(0.0, (deadline - datetime.now(timezone.utc)).total_seconds())


def _is_expired(deadline: Optional[datetime]) -> bool:
    if deadline is None:
        return False
    expired = datetime.now(timezone.utc) >= deadline
    if expired:
        logger.debug(f"Deadline {deadline.isoformat()} has passed.")
    return expired


def _deadline_timestamp(deadline: Optional[datetime]) -> Optional[float]:
    """POSIX timestamp of ``deadline``, the form handed to worker processes."""
    if deadline is None:
        return None
    return deadline.timestamp()
