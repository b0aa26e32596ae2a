from __future__ import annotations

import os
from dataclasses import dataclass, field


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Bounds:
    """Enumeration guards.

    ``max_weyl_n`` caps brute force over S_n (8! = 40320 elements);
    ``BZ_MAX_N`` overrides it.  ``max_partition_rank`` caps exhaustive
    partition sweeps in the support analyzer.
    """

    max_weyl_n: int = field(default_factory=lambda: _env_int("BZ_MAX_N", 8))
    max_partition_rank: int = 30


class BoundExceeded(ValueError):
    """Raised when a request would enumerate past a configured bound."""


def check_weyl_bound(n: int, bounds: Bounds | None = None) -> None:
    bounds = bounds or Bounds()
    if n > bounds.max_weyl_n:
        raise BoundExceeded(
            f"n = {n} exceeds the brute-force bound {bounds.max_weyl_n} "
            f"({n}! permutations); raise BZ_MAX_N to override")
