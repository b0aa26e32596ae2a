"""Symbolic derivative calculus ``D^(m)`` on automorphic expressions.

Each rewrite turns an expression on GL(n) into a list of terms
``rest ⊗ W_m`` with ``rest`` on GL(n-m).  Composing derivatives along a
partition ``lam = (lam_1 >= ... >= lam_r)`` applies ``D^(lam_r)`` first and
``D^(lam_1)`` last; the coefficient is nonzero iff some branch of the
resulting tree reaches the trivial representation.

Exponents are never evaluated; the only analytic datum carried is an
integer pole order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .combinatorics import Partition

__all__ = [
    "NotCovered", "Trivial", "Cusp", "Speh", "DegenEis", "IsobaricEis",
    "ResidueEis", "RegularEis", "Expr", "WhittakerAtom", "DerivativeTerm",
    "CharacterSpec", "CoefficientResult", "rank", "allowed_orders",
    "derivative", "compose", "psi_partition_character",
    "normalization_pole_order", "expr_to_json", "expr_from_json",
    "term_to_json", "result_to_json",
]


class NotCovered(ValueError):
    """Expression shape outside the implemented derivative rules."""


def _positive(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def _nonneg(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value!r}")


@dataclass(frozen=True)
class Trivial:
    """The trivial representation of GL(0)."""


@dataclass(frozen=True)
class Cusp:
    label: str
    a: int

    def __post_init__(self):
        _positive("a", self.a)


@dataclass(frozen=True)
class Speh:
    label: str
    a: int
    n: int

    def __post_init__(self):
        _positive("a", self.a)
        _positive("n", self.n)

    @property
    def tau(self) -> Cusp:
        return Cusp(self.label, self.a)


@dataclass(frozen=True)
class DegenEis:
    """Eisenstein series induced from the trivial character of ``L_[n1,n2]``."""

    n1: int
    n2: int

    def __post_init__(self):
        _nonneg("n1", self.n1)
        _nonneg("n2", self.n2)
        if self.n1 + self.n2 == 0:
            raise ValueError("DegenEis needs n1 + n2 >= 1")


@dataclass(frozen=True)
class IsobaricEis:
    """Eisenstein series from ``Delta(tau1, n1) ⊗ Delta(tau2, n2)``, tau1 ≇ tau2."""

    tau1: Cusp
    tau2: Cusp
    n1: int
    n2: int

    def __post_init__(self):
        _positive("n1", self.n1)
        _positive("n2", self.n2)
        if self.tau1.label == self.tau2.label:
            if self.tau1.a != self.tau2.a:
                raise ValueError(f"label {self.tau1.label!r} used with two ranks")
            raise NotCovered(
                "isobaric series with tau1 ≅ tau2 is not covered by the derivative rules "
                "off the residue points; use ResidueEis or RegularEis")


@dataclass(frozen=True)
class ResidueEis:
    """Residue at ``s1 - s2 = (n1+n2)/2 - alpha`` of the series from
    ``Delta(tau, n1) ⊗ Delta(tau, n2)``."""

    tau: Cusp
    n1: int
    n2: int
    alpha: int

    def __post_init__(self):
        _positive("n1", self.n1)
        _positive("n2", self.n2)
        if not isinstance(self.alpha, int) or not 0 <= self.alpha <= min(self.n1, self.n2) - 1:
            raise ValueError(
                f"alpha must lie in [0, {min(self.n1, self.n2) - 1}], got {self.alpha!r}")


@dataclass(frozen=True)
class RegularEis:
    """The series from ``Delta(tau, n1) ⊗ Delta(tau, n2)`` at a regular point.

    Arises from the ``alpha = n1 - 1`` residue branch, where the residue
    point is no longer a pole of the smaller series.
    """

    tau: Cusp
    n1: int
    n2: int

    def __post_init__(self):
        _positive("n1", self.n1)
        _positive("n2", self.n2)


Expr = Union[Trivial, Cusp, Speh, DegenEis, IsobaricEis, ResidueEis, RegularEis]


def rank(e: Expr) -> int:
    if isinstance(e, Trivial):
        return 0
    if isinstance(e, Cusp):
        return e.a
    if isinstance(e, Speh):
        return e.a * e.n
    if isinstance(e, DegenEis):
        return e.n1 + e.n2
    if isinstance(e, IsobaricEis):
        return e.tau1.a * e.n1 + e.tau2.a * e.n2
    if isinstance(e, (ResidueEis, RegularEis)):
        return e.tau.a * (e.n1 + e.n2)
    raise NotCovered(f"unknown expression {e!r}")


def _speh(tau: Cusp, n: int) -> Expr:
    return Trivial() if n == 0 else Speh(tau.label, tau.a, n)


def _degen(n1: int, n2: int) -> Expr:
    return Trivial() if n1 + n2 == 0 else DegenEis(n1, n2)


def _two_block(tau1: Cusp, tau2: Cusp, n1: int, n2: int, same: bool) -> Expr:
    if n1 == 0:
        return _speh(tau2, n2)
    if n2 == 0:
        return _speh(tau1, n1)
    if same:
        return RegularEis(tau1, n1, n2)
    return IsobaricEis(tau1, tau2, n1, n2)


@dataclass(frozen=True)
class WhittakerAtom:
    """``W_m``: a generic Whittaker coefficient on GL(m), or a character."""

    order: int
    kind: str = "whittaker"
    eulerian: bool = True


@dataclass(frozen=True)
class DerivativeTerm:
    rest: Expr
    order: int
    atom: WhittakerAtom
    pole_order: int = 0
    scalar_unknown: bool = False
    proof_sourced: bool = False


def normalization_pole_order(n1: int, n2: int, alpha: int, case: str = "single") -> int:
    """Pole order at ``t = 0`` of the normalizing ratio of L-functions.

    ``single``: ``L(n1-alpha+t) / L(n1+n2-alpha+t)``;
    ``double``: ``L(n1+1-alpha+t) / L(n1+n2-alpha+t)``.  ``L`` is modelled
    with one simple pole at 1 and no zeros on the real ray; the
    denominator argument is always at least 2.
    """
    _positive("n1", n1)
    _positive("n2", n2)
    if not 0 <= alpha <= min(n1, n2) - 1:
        raise ValueError(f"alpha must lie in [0, {min(n1, n2) - 1}], got {alpha}")
    if case == "single":
        return int(n1 - alpha == 1)
    if case == "double":
        return int(n1 + 1 - alpha == 1)
    raise ValueError(f"case must be 'single' or 'double', got {case!r}")


def allowed_orders(e: Expr, strict_residue: bool = False) -> frozenset[int]:
    """Orders ``m`` for which ``D^(m) e`` is possibly nonzero.

    With ``strict_residue`` the residue at ``alpha = 0`` with ``n2 = 1``
    gets no allowed order.  That shape is the Speh representation
    ``Delta(tau, n1+1)``, whose ``D^(a)`` is nonzero, so the default engine
    does not apply the rule.
    """
    if isinstance(e, Trivial):
        return frozenset()
    if isinstance(e, (Cusp, Speh)):
        return frozenset({e.a})
    if isinstance(e, DegenEis):
        return frozenset({1, 2}) if e.n1 and e.n2 else frozenset({1})
    if isinstance(e, IsobaricEis):
        return frozenset({e.tau1.a, e.tau2.a, e.tau1.a + e.tau2.a})
    if isinstance(e, RegularEis):
        return frozenset({e.tau.a, 2 * e.tau.a})
    if isinstance(e, ResidueEis):
        if strict_residue and e.alpha == 0 and e.n2 == 1:
            return frozenset()
        a = e.tau.a
        return frozenset({a, 2 * a}) if e.alpha > 0 else frozenset({a})
    raise NotCovered(f"no derivative rules for {type(e).__name__}")


def _two_block_terms(tau1: Cusp, tau2: Cusp, n1: int, n2: int, m: int,
                     same: bool) -> list[DerivativeTerm]:
    # terms indexed by (r1, r2) in {0,1}^2 with r1*a1 + r2*a2 = m
    proof_sourced = same or tau1.a == tau2.a
    out = []
    for r1, r2 in ((1, 0), (0, 1), (1, 1)):
        if r1 > n1 or r2 > n2 or r1 * tau1.a + r2 * tau2.a != m:
            continue
        rest = _two_block(tau1, tau2, n1 - r1, n2 - r2, same)
        out.append(DerivativeTerm(rest, m, WhittakerAtom(m),
                                  proof_sourced=proof_sourced and (r1, r2) != (1, 1)))
    return out


def _residue_terms(e: ResidueEis, m: int) -> list[DerivativeTerm]:
    a, n1, n2, alpha = e.tau.a, e.n1, e.n2, e.alpha
    out = []
    if m == a:
        # (r1, r2) = (1, 0)
        if alpha < n1 - 1:
            out.append(DerivativeTerm(ResidueEis(e.tau, n1 - 1, n2, alpha), m, WhittakerAtom(m)))
        else:
            out.append(DerivativeTerm(
                _two_block(e.tau, e.tau, n1 - 1, n2, same=True), m, WhittakerAtom(m),
                pole_order=normalization_pole_order(n1, n2, alpha, "single"),
                scalar_unknown=True))
        # (r1, r2) = (0, 1): killed by the residue when alpha = 0
        if alpha > 0:
            out.append(DerivativeTerm(ResidueEis(e.tau, n1, n2 - 1, alpha - 1), m, WhittakerAtom(m)))
    elif m == 2 * a and alpha > 0:
        out.append(DerivativeTerm(
            ResidueEis(e.tau, n1 - 1, n2 - 1, alpha - 1), m, WhittakerAtom(m),
            pole_order=normalization_pole_order(n1, n2, alpha, "double")))
    return out


def _rewrite(e: Expr, m: int) -> list[DerivativeTerm]:
    if isinstance(e, Trivial):
        return []
    if isinstance(e, Cusp):
        return [DerivativeTerm(Trivial(), m, WhittakerAtom(m))] if m == e.a else []
    if isinstance(e, Speh):
        return [DerivativeTerm(_speh(e.tau, e.n - 1), m, WhittakerAtom(m))] if m == e.a else []
    if isinstance(e, DegenEis):
        out = []
        if m == 1:
            if e.n1:
                out.append(DerivativeTerm(_degen(e.n1 - 1, e.n2), 1, WhittakerAtom(1, "character")))
            if e.n2:
                out.append(DerivativeTerm(_degen(e.n1, e.n2 - 1), 1, WhittakerAtom(1, "character")))
        elif m == 2 and e.n1 and e.n2:
            out.append(DerivativeTerm(_degen(e.n1 - 1, e.n2 - 1), 2, WhittakerAtom(2)))
        return out
    if isinstance(e, IsobaricEis):
        return _two_block_terms(e.tau1, e.tau2, e.n1, e.n2, m, same=False)
    if isinstance(e, RegularEis):
        return _two_block_terms(e.tau, e.tau, e.n1, e.n2, m, same=True)
    if isinstance(e, ResidueEis):
        return _residue_terms(e, m)
    raise NotCovered(f"no derivative rules for {type(e).__name__}")


def derivative(e: Expr, m: int, strict_residue: bool = False) -> list[DerivativeTerm]:
    """``D^(m) e`` as a list of terms; ``m`` must be an allowed order."""
    if m not in allowed_orders(e, strict_residue):
        raise ValueError(f"D^({m}) is not an allowed derivative of {e}")
    return _rewrite(e, m)


@dataclass(frozen=True)
class CharacterSpec:
    lam: Partition
    psi_pattern: tuple[int, ...]


def psi_partition_character(lam: Partition, n: int | None = None) -> CharacterSpec:
    """Superdiagonal pattern of the character attached to ``lam``: ``1``
    everywhere except at the partial sums ``lam_1 + ... + lam_j``."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    n = lam.size if n is None else n
    if lam.size != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    cuts = set(itertools.accumulate(lam.parts[:-1]))
    return CharacterSpec(lam, tuple(0 if p in cuts else 1 for p in range(1, n)))


@dataclass(frozen=True)
class CoefficientResult:
    expr: Expr
    lam: Partition
    nonzero: bool
    character: CharacterSpec
    branches: tuple[tuple[DerivativeTerm, ...], ...] = ()
    input_order: tuple[int, ...] = ()
    permutation: tuple[int, ...] = ()

    @property
    def single_branch(self) -> bool:
        """Exactly one surviving term at every step."""
        return len(self.branches) == 1

    @property
    def atoms_eulerian(self) -> bool:
        return self.nonzero and all(t.atom.eulerian for b in self.branches for t in b)

    @property
    def scalar_unknown(self) -> bool:
        return any(t.scalar_unknown for b in self.branches for t in b)

    @property
    def proof_sourced(self) -> bool:
        return any(t.proof_sourced for b in self.branches for t in b)


@lru_cache(maxsize=None)
def _survives(e: Expr, parts: tuple[int, ...], drop: frozenset, strict: bool) -> bool:
    if not parts:
        return rank(e) == 0
    m = parts[-1]
    if m not in allowed_orders(e, strict) or m in drop:
        return False
    return any(_survives(t.rest, parts[:-1], drop, strict) for t in _rewrite(e, m))


def _paths(e: Expr, parts: tuple[int, ...], drop: frozenset, strict: bool):
    if not parts:
        yield ()
        return
    m = parts[-1]
    if m not in allowed_orders(e, strict) or m in drop:
        return
    for t in _rewrite(e, m):
        if _survives(t.rest, parts[:-1], drop, strict):
            for tail in _paths(t.rest, parts[:-1], drop, strict):
                yield (t,) + tail


def compose(e: Expr, lam: Partition | Sequence[int], drop_orders: Iterable[int] = (),
            strict_residue: bool = False, collect_branches: bool = True) -> CoefficientResult:
    """The coefficient ``D^(lam_1) ∘ ... ∘ D^(lam_r)`` applied to ``e``.

    ``lam`` may be given in any order; it is sorted decreasingly and the
    sorting permutation is recorded.  ``drop_orders`` removes derivative
    orders from every rule (fault injection).
    """
    raw = tuple(lam.parts if isinstance(lam, Partition) else lam)
    perm = tuple(sorted(range(len(raw)), key=lambda i: (-raw[i], i)))
    part = Partition(tuple(raw[i] for i in perm))
    n = rank(e)
    if part.size != n:
        raise ValueError(f"{part} sums to {part.size}, expected rank {n}")
    drop = frozenset(drop_orders)
    alive = _survives(e, part.parts, drop, strict_residue)
    branches = tuple(_paths(e, part.parts, drop, strict_residue)) if alive and collect_branches else ()
    return CoefficientResult(e, part, alive, psi_partition_character(part, n),
                             branches, raw, perm)


# JSON ------------------------------------------------------------------

def _cusp_json(c: Cusp) -> dict:
    return {"label": c.label, "a": c.a}


def expr_to_json(e: Expr) -> dict:
    kind = type(e).__name__
    if isinstance(e, Trivial):
        return {"type": kind}
    if isinstance(e, Cusp):
        return {"type": kind, "label": e.label, "a": e.a}
    if isinstance(e, Speh):
        return {"type": kind, "label": e.label, "a": e.a, "n": e.n}
    if isinstance(e, DegenEis):
        return {"type": kind, "n1": e.n1, "n2": e.n2}
    if isinstance(e, IsobaricEis):
        return {"type": kind, "tau1": _cusp_json(e.tau1), "tau2": _cusp_json(e.tau2),
                "n1": e.n1, "n2": e.n2}
    if isinstance(e, ResidueEis):
        return {"type": kind, "tau": _cusp_json(e.tau), "n1": e.n1, "n2": e.n2, "alpha": e.alpha}
    if isinstance(e, RegularEis):
        return {"type": kind, "tau": _cusp_json(e.tau), "n1": e.n1, "n2": e.n2}
    raise NotCovered(f"cannot serialize {e!r}")


def _int(obj: dict, key: str) -> int:
    if key not in obj:
        raise ValueError(f"missing field {key!r}")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"field {key!r} must be an integer, got {v!r}")
    return v


def _cusp(obj) -> Cusp:
    if not isinstance(obj, dict):
        raise ValueError(f"expected a cuspidal datum {{label, a}}, got {obj!r}")
    return Cusp(str(obj.get("label", "tau")), _int(obj, "a"))


def expr_from_json(obj) -> Expr:
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValueError("expression must be an object with a 'type' field")
    kind = obj["type"]
    if kind == "Trivial":
        return Trivial()
    if kind == "Cusp":
        return Cusp(str(obj.get("label", "tau")), _int(obj, "a"))
    if kind == "Speh":
        return Speh(str(obj.get("label", "tau")), _int(obj, "a"), _int(obj, "n"))
    if kind == "DegenEis":
        return DegenEis(_int(obj, "n1"), _int(obj, "n2"))
    if kind == "IsobaricEis":
        return IsobaricEis(_cusp(obj.get("tau1")), _cusp(obj.get("tau2")),
                           _int(obj, "n1"), _int(obj, "n2"))
    if kind == "ResidueEis":
        return ResidueEis(_cusp(obj.get("tau")), _int(obj, "n1"), _int(obj, "n2"),
                          _int(obj, "alpha"))
    if kind == "RegularEis":
        return RegularEis(_cusp(obj.get("tau")), _int(obj, "n1"), _int(obj, "n2"))
    raise NotCovered(f"expression type {kind!r} is not covered by the derivative rules")


def term_to_json(t: DerivativeTerm) -> dict:
    return {
        "rest": expr_to_json(t.rest),
        "order": t.order,
        "atom": {"kind": t.atom.kind, "order": t.atom.order, "eulerian": t.atom.eulerian},
        "pole_order": t.pole_order,
        "scalar_unknown": t.scalar_unknown,
        "proof_sourced": t.proof_sourced,
    }


def result_to_json(r: CoefficientResult) -> dict:
    return {
        "expr": expr_to_json(r.expr),
        "lambda": list(r.lam.parts),
        "nonzero": r.nonzero,
        "psi_pattern": list(r.character.psi_pattern),
        "single_branch": r.single_branch,
        "branches": [[term_to_json(t) for t in b] for b in r.branches],
    }
