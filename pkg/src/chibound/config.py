"""Size caps for the exponential exact solvers.

Exceeding a cap is a hard error (:class:`~chibound.errors.CapExceededError`),
never a silent switch to a heuristic. Adjust ``caps`` to trade time for size.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import CapExceededError, SearchTimeout


@dataclass
class Caps:
    chromatic: int = 40
    chi_upto: int = 14
    perfect: int = 16
    k_perfect: int = 12
    tidy: int = 20
    willow_search_vertices: int = 12
    willow_search_steiner: int = 6
    direction_changes: int = 14
    descartes_vertices: int = 100_000


caps = Caps()


def require(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise CapExceededError(f"{what}: size {size} exceeds cap {cap}")


class Deadline:
    """Cheap deadline check for long searches; ``None`` means no limit."""

    __slots__ = ("at", "_tick")

    def __init__(self, timeout: float | None):
        self.at = None if timeout is None else time.monotonic() + timeout
        self._tick = 0

    def check(self) -> None:
        if self.at is None:
            return
        self._tick += 1
        if self._tick & 1023 == 0 and time.monotonic() > self.at:
            raise SearchTimeout("search deadline exceeded")
