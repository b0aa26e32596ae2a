"""Whittaker support and Eulerianity verdicts.

The support of an expression is decided partition by partition through
:func:`compose`; vanishing at the standard pair of ``lam`` is taken to
propagate to every pair attached to ``lam``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .combinatorics import Partition, dominance_maxima, partitions
from .config import BoundExceeded, Bounds
from .derivatives import (
    Cusp, Expr, IsobaricEis, ResidueEis, Speh, Trivial, compose, expr_from_json,
    expr_to_json, rank,
)

__all__ = [
    "EULERIAN", "UNKNOWN", "Verdict", "SupportReport", "whittaker_support",
    "orbit_sum", "residue_support", "proved_case", "eulerianity",
    "report_to_json", "report_from_json", "report_table",
]

EULERIAN = "eulerian"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    status: str
    reasons: tuple[str, ...] = ()


@dataclass(frozen=True)
class SupportReport:
    expr: Expr
    nonzero_lambdas: tuple[Partition, ...]
    maxima: tuple[Partition, ...]
    eulerian_flags: dict = field(default_factory=dict, compare=False)

    @property
    def co_maximal(self) -> bool:
        """More than one dominance-maximal partition was found."""
        return len(self.maxima) > 1

    @property
    def maximum(self) -> Partition | None:
        return self.maxima[0] if len(self.maxima) == 1 else None


def orbit_sum(p: Partition, q: Partition) -> Partition:
    """Entrywise sum after zero padding."""
    length = max(len(p), len(q))
    return Partition.from_parts([a + b for a, b in zip(p.padded(length), q.padded(length))])


def residue_support(a: int, n1: int, n2: int, alpha: int) -> Partition:
    """``[a^(n-alpha)] + [a^alpha]`` with ``n = n1 + n2``."""
    if n1 < 1 or n2 < 1 or a < 1:
        raise ValueError("a, n1, n2 must be positive")
    if not 0 <= alpha <= min(n1, n2) - 1:
        raise ValueError(f"alpha must lie in [0, {min(n1, n2) - 1}], got {alpha}")
    n = n1 + n2
    return orbit_sum(Partition.rectangle(a, n - alpha), Partition.rectangle(a, alpha))


def proved_case(e: Expr, lam: Partition, maxima: Iterable[Partition]) -> tuple[str, ...]:
    """Reasons, from the proved cases, for the coefficient at ``lam`` to be Eulerian."""
    reasons = []
    if isinstance(e, (Speh, Cusp, Trivial)):
        reasons.append("discrete spectrum")
    if isinstance(e, IsobaricEis) and e.tau1.a != e.tau2.a:
        reasons.append("isobaric with a1 != a2")
    if lam in set(maxima):
        reasons.append("top coefficient")
    return tuple(reasons)


def _check_rank(e: Expr, bounds: Bounds | None) -> int:
    bounds = bounds or Bounds()
    n = rank(e)
    if n > bounds.max_partition_rank:
        raise BoundExceeded(
            f"rank {n} exceeds the partition-enumeration bound {bounds.max_partition_rank}")
    return n


def whittaker_support(e: Expr, bounds: Bounds | None = None, drop_orders: Iterable[int] = (),
                      strict_residue: bool = False, verdicts: bool = True) -> SupportReport:
    n = _check_rank(e, bounds)
    drop = tuple(drop_orders)
    results = {lam: compose(e, lam, drop, strict_residue, collect_branches=verdicts)
               for lam in partitions(n)}
    nonzero = tuple(lam for lam, r in results.items() if r.nonzero)
    maxima = tuple(dominance_maxima(nonzero))
    flags = {}
    if verdicts:
        for lam in nonzero:
            reasons = proved_case(e, lam, maxima)
            if results[lam].single_branch:
                reasons += ("single branch",)
            flags[lam] = Verdict(EULERIAN if reasons else UNKNOWN, reasons)
    return SupportReport(e, nonzero, maxima, flags)


def eulerianity(e: Expr, lam: Partition, report: SupportReport | None = None) -> Verdict:
    """Eulerian when a proved case applies or the branch tree is single;
    otherwise unknown.  Never reports non-Eulerianity."""
    if not isinstance(lam, Partition):
        lam = Partition.from_parts(lam)
    report = report or whittaker_support(e)
    if lam not in report.eulerian_flags:
        if lam.size != rank(e):
            raise ValueError(f"{lam} is not a partition of rank {rank(e)}")
        raise ValueError(f"the coefficient attached to {lam} vanishes")
    return report.eulerian_flags[lam]


def report_to_json(r: SupportReport) -> dict:
    return {
        "expr": expr_to_json(r.expr),
        "nonzero": [list(p.parts) for p in r.nonzero_lambdas],
        "maxima": [list(p.parts) for p in r.maxima],
        "co_maximal": r.co_maximal,
        "eulerian": [{"lambda": list(p.parts), "verdict": v.status, "reasons": list(v.reasons)}
                     for p, v in r.eulerian_flags.items()],
    }


def report_from_json(obj: dict) -> SupportReport:
    flags = {Partition(tuple(x["lambda"])): Verdict(x["verdict"], tuple(x["reasons"]))
             for x in obj.get("eulerian", [])}
    return SupportReport(
        expr_from_json(obj["expr"]),
        tuple(Partition(tuple(p)) for p in obj["nonzero"]),
        tuple(Partition(tuple(p)) for p in obj["maxima"]),
        flags)


def report_table(r: SupportReport) -> str:
    rows = [("lambda", "max", "verdict", "reasons")]
    for p in r.nonzero_lambdas:
        v = r.eulerian_flags.get(p, Verdict(UNKNOWN))
        rows.append((str(p), "*" if p in r.maxima else "", v.status, ", ".join(v.reasons)))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    if r.co_maximal:
        lines.append(f"note: {len(r.maxima)} incomparable maximal partitions")
    return "\n".join(lines)
