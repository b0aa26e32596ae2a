"""Whittaker pairs in gl(n) with exact rational gradings.

Conventions
-----------
``E_ij`` has ``ad(S)``-grade ``S_i - S_j``.  A nilpotent functional ``phi``
is stored through its *support*: the positions ``(i, j)`` it reads, so a
Jordan block of size ``b`` contributes the superdiagonal positions
``(o+1, o+2), ..., (o+b-1, o+b)``.  The element ``f_phi`` representing
``phi`` under the trace form is the transpose, with unit entries at
``(j, i)``; hence ``(S, phi)`` is a pair exactly when ``S_j - S_i = -2`` on
the support.  ``g_phi`` is the centralizer of ``f_phi``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .combinatorics import Partition
from .linalg import Vector, nullspace, restrict_to_coordinates

__all__ = [
    "SemisimpleElement", "NilpotentElement", "WhittakerPair", "NotAWhittakerPair",
    "standard_H", "neutral_h", "is_whittaker_pair", "graded_piece",
    "centralizer_basis", "dominates", "nilradical_of_pair", "NilradicalData",
    "permute_blocks", "pair_to_json", "pair_from_json",
]

Position = tuple[int, int]


class NotAWhittakerPair(ValueError):
    """Raised when an operation requires a Whittaker pair and gets something else."""


def _fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class SemisimpleElement:
    diag: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(_fraction(x) for x in self.diag))

    @property
    def n(self) -> int:
        return len(self.diag)

    def grade(self, i: int, j: int) -> Fraction:
        return self.diag[i - 1] - self.diag[j - 1]

    def __sub__(self, other: SemisimpleElement) -> SemisimpleElement:
        _same_size(self.n, other.n)
        return SemisimpleElement(tuple(a - b for a, b in zip(self.diag, other.diag)))

    @classmethod
    def zero(cls, n: int) -> SemisimpleElement:
        return cls((Fraction(0),) * n)


def _chains(n: int, support: Iterable[Position]) -> list[int]:
    succ, pred = {}, {}
    for i, j in support:
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise ValueError(f"support position {(i, j)} invalid for gl({n})")
        if i in succ or j in pred:
            raise ValueError("support positions must form disjoint chains")
        succ[i], pred[j] = j, i
    lengths, seen = [], set()
    for start in range(1, n + 1):
        if start in pred:
            continue
        length, i = 1, start
        seen.add(i)
        while i in succ:
            i = succ[i]
            seen.add(i)
            length += 1
        lengths.append(length)
    if len(seen) != n:
        raise ValueError("support positions contain a cycle")
    return lengths


@dataclass(frozen=True)
class NilpotentElement:
    """A nilpotent functional given by unit entries on disjoint chains.

    ``block_order`` lists indices into ``jordan_type.parts`` in the order
    the blocks appear along the diagonal; it is ``None`` for a support that
    is not block-diagonal.
    """

    jordan_type: Partition
    support: frozenset
    block_order: tuple[int, ...] | None = None

    def __post_init__(self):
        support = frozenset((int(i), int(j)) for i, j in self.support)
        object.__setattr__(self, "support", support)
        found = Partition.from_parts(_chains(self.n, support))
        if found != self.jordan_type:
            raise ValueError(f"support realizes Jordan type {found}, not {self.jordan_type}")
        if self.block_order is not None:
            order = tuple(self.block_order)
            object.__setattr__(self, "block_order", order)
            if sorted(order) != list(range(len(self.jordan_type))):
                raise ValueError(f"block order {order} is not a permutation of the blocks")

    @property
    def n(self) -> int:
        return self.jordan_type.size

    @classmethod
    def standard(cls, lam: Partition, block_order: Sequence[int] | None = None) -> NilpotentElement:
        order = tuple(range(len(lam))) if block_order is None else tuple(block_order)
        if sorted(order) != list(range(len(lam))):
            raise ValueError(f"block order {order} is not a permutation of {len(lam)} blocks")
        support, offset = set(), 0
        for idx in order:
            b = lam[idx]
            support.update((offset + t, offset + t + 1) for t in range(1, b))
            offset += b
        return cls(lam, frozenset(support), order)

    @classmethod
    def zero(cls, n: int) -> NilpotentElement:
        return cls.standard(Partition((1,) * n))

    def block_sizes(self) -> tuple[int, ...]:
        if self.block_order is None:
            raise ValueError("support is not in block form")
        return tuple(self.jordan_type[i] for i in self.block_order)

    def f_matrix(self) -> list[list[Fraction]]:
        n = self.n
        f = [[Fraction(0)] * n for _ in range(n)]
        for i, j in self.support:
            f[j - 1][i - 1] = Fraction(1)
        return f


@dataclass(frozen=True)
class WhittakerPair:
    S: SemisimpleElement
    phi: NilpotentElement

    def __post_init__(self):
        if not is_whittaker_pair(self.S, self.phi):
            raise NotAWhittakerPair("phi does not lie in grade -2 of S")


def _same_size(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"size mismatch: {a} vs {b}")


def standard_H(n: int) -> SemisimpleElement:
    """``diag(n-1, n-3, ..., 1-n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    return SemisimpleElement(tuple(Fraction(n - 1 - 2 * i) for i in range(n)))


def neutral_h(lam: Partition, block_order: Sequence[int] | None = None) -> SemisimpleElement:
    """Neutral element of the sl2-triple through the standard ``f_lam``."""
    order = tuple(range(len(lam))) if block_order is None else tuple(block_order)
    diag: list[Fraction] = []
    for idx in order:
        b = lam[idx]
        diag.extend(Fraction(b - 1 - 2 * t) for t in range(b))
    return SemisimpleElement(tuple(diag))


def is_whittaker_pair(S: SemisimpleElement, phi: NilpotentElement) -> bool:
    _same_size(S.n, phi.n)
    return all(S.grade(j, i) == -2 for i, j in phi.support)


_COMPARATORS = {
    "=": lambda g, t: g == t,
    ">": lambda g, t: g > t,
    ">=": lambda g, t: g >= t,
}


def graded_piece(S: SemisimpleElement, threshold, comparator: str = "=") -> set[Position]:
    """Off-diagonal positions whose grade compares to ``threshold``."""
    try:
        cmp = _COMPARATORS[comparator.replace("≥", ">=")]
    except KeyError:
        raise ValueError(f"comparator must be one of =, >, >=; got {comparator!r}") from None
    t = _fraction(threshold)
    return {(i, j) for i in range(1, S.n + 1) for j in range(1, S.n + 1)
            if i != j and cmp(S.grade(i, j), t)}


def _index(n: int, i: int, j: int) -> int:
    return (i - 1) * n + (j - 1)


def centralizer_basis(phi: NilpotentElement) -> list[Vector]:
    """Basis of ``{X : [X, f_phi] = 0}`` as flattened row-major vectors."""
    n, f = phi.n, phi.f_matrix()
    rows = []
    for a in range(n):
        for b in range(n):
            # ([X, f])_{ab} = sum_c X_ac f_cb - f_ac X_cb
            row = [Fraction(0)] * (n * n)
            for c in range(n):
                if f[c][b]:
                    row[a * n + c] += f[c][b]
                if f[a][c]:
                    row[c * n + b] -= f[a][c]
            if any(row):
                rows.append(row)
    return nullspace(rows, n * n)


def _span_positions(n: int, positions: Iterable[Position], with_diagonal: bool) -> set[int]:
    idx = {_index(n, i, j) for i, j in positions}
    if with_diagonal:
        idx.update(_index(n, i, i) for i in range(1, n + 1))
    return idx


def dominates(H: SemisimpleElement, S: SemisimpleElement, phi: NilpotentElement) -> bool:
    """``g_phi ∩ g^H_{>=1}  ⊆  g^{S-H}_{>=0}``."""
    _same_size(H.n, phi.n)
    _same_size(S.n, phi.n)
    if not is_whittaker_pair(H, phi):
        raise NotAWhittakerPair("(H, phi) is not a Whittaker pair")
    if not is_whittaker_pair(S, phi):
        raise NotAWhittakerPair("(S, phi) is not a Whittaker pair")
    n = phi.n
    inter = restrict_to_coordinates(
        centralizer_basis(phi), _span_positions(n, graded_piece(H, 1, ">="), False))
    target = _span_positions(n, graded_piece(S - H, 0, ">="), True)
    return all(v[k] == 0 for v in inter for k in range(n * n) if k not in target)


@dataclass(frozen=True)
class NilradicalData:
    positions: frozenset
    grade_one_basis: tuple[Vector, ...] = field(default=())

    @property
    def dimension(self) -> int:
        return len(self.positions) + len(self.grade_one_basis)


def nilradical_of_pair(S: SemisimpleElement, phi: NilpotentElement) -> NilradicalData:
    """``g^S_{>1}`` as positions, plus a basis of ``g^S_1 ∩ g_phi``."""
    if not is_whittaker_pair(S, phi):
        raise NotAWhittakerPair("(S, phi) is not a Whittaker pair")
    n = phi.n
    grade_one = restrict_to_coordinates(
        centralizer_basis(phi), _span_positions(n, graded_piece(S, 1, "="), False))
    return NilradicalData(frozenset(graded_piece(S, 1, ">")), tuple(grade_one))


def permute_blocks(phi: NilpotentElement, new_order: Sequence[int]) -> NilpotentElement:
    """Rearrange the diagonal blocks: block ``t`` of the result is block
    ``new_order[t]`` of ``phi``."""
    if phi.block_order is None:
        raise ValueError("support is not in block form")
    if len(new_order) != len(phi.block_order):
        raise ValueError(f"order of length {len(new_order)} for {len(phi.block_order)} blocks")
    if sorted(new_order) != list(range(len(phi.block_order))):
        raise ValueError(f"{tuple(new_order)} is not a permutation of the blocks")
    return NilpotentElement.standard(phi.jordan_type,
                                     tuple(phi.block_order[t] for t in new_order))


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def pair_to_json(S: SemisimpleElement, phi: NilpotentElement) -> dict:
    return {
        "diag": [_fmt(x) for x in S.diag],
        "jordan_type": list(phi.jordan_type.parts),
        "support": sorted([i, j] for i, j in phi.support),
    }


def pair_from_json(obj: dict) -> tuple[SemisimpleElement, NilpotentElement]:
    S = SemisimpleElement(tuple(Fraction(x) for x in obj["diag"]))
    phi = NilpotentElement(Partition(tuple(obj["jordan_type"])),
                           frozenset(tuple(p) for p in obj["support"]))
    _same_size(S.n, phi.n)
    return S, phi
