"""
Thread-safe log of verification results.

Workers add rows in whatever order they finish; rows() hands them back in
canonical order so emitted output does not depend on scheduling.
"""

import logging
import threading
from typing import List, Tuple

from app.output import VerifyRow

logger = logging.getLogger(__name__)

AGREE = "agree"
DOCUMENTED = "documented-discrepancy"
DISCREPANCY = "discrepancy"

SortKey = Tuple[int, ...]


class VerificationLog:
    """
    Collects VerifyRow records from concurrent workers.

    Each row is stored with a sort key; rows() returns them sorted by key.
    """

    def __init__(self) -> None:
        """Initialize an empty log."""
        self._entries: List[Tuple[SortKey, VerifyRow]] = []
        self._lock = threading.Lock()

    def add(self, key: SortKey, row: VerifyRow) -> None:
        """
        Record one check.

        Args:
            key: Canonical position of the row
            row: The check result
        """
        with self._lock:
            self._entries.append((key, row))
        if row.status == DISCREPANCY:
            logger.error(
                f"[VERIFY] Mismatch {row.stat} n={row.n} k={row.k} param={row.param}: "
                f"oracle={row.oracle} closedform={row.closedform} series={row.series}"
            )
        elif row.status == DOCUMENTED:
            logger.warning(
                f"[VERIFY] Known mismatch {row.stat} n={row.n} k={row.k}: "
                f"closedform={row.closedform} oracle={row.oracle}"
            )

    def rows(self) -> List[VerifyRow]:
        """All rows in canonical order."""
        with self._lock:
            return [row for _, row in sorted(self._entries, key=lambda entry: entry[0])]

    def count(self, status: str) -> int:
        with self._lock:
            return sum(1 for _, row in self._entries if row.status == status)
