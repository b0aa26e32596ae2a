"""Double cosets of the Weyl group of GL(n) via Young subdiagrams.

A subdiagram of the ``n2 x n1`` rectangle is given by its k-vector
``0 <= k_1 <= ... <= k_{n2} <= n1``; its rows have lengths ``n1 - k_j``.
The rectangle is filled with ``content(r, c) = n - r - c + 1`` (row ``r``
counted from the bottom, column ``c`` from the left), so the bottom row
reads ``n-1 .. n-n1`` and the top-right cell is ``1``.  Subdiagrams sit in
the top-left corner (the cell of content ``n1``), longest row on top.

The interlacing word of a subdiagram carries ``n1 + j`` in slot
``k_j + j``; its inverse is the word obtained by reading the columns of
the filled subdiagram top to bottom, left to right, each column giving a
run ``s_l s_{l+1} .. s_k`` of simple reflections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .combinatorics import (
    Composition, Partition, PermutationWord, Root, _cycle, act_on_root,
    all_permutations, lex_root_geq, root_poset_geq, transpose,
)
from .config import Bounds, check_weyl_bound

__all__ = [
    "FilledRectangle", "YoungSubdiagram", "CosetDescriptor",
    "all_subdiagrams", "subdiagram_to_word", "word_via_cycles",
    "inverse_via_columns", "column_readings", "double_coset_reps_bruteforce",
    "double_coset", "same_double_coset", "levi_weyl_group",
    "surviving_reps", "rect_word", "admissible_widths", "admissible_set",
    "admissible_set_literal", "levi_partition", "levi_from_word",
    "tail_condition_bruteforce", "tail_condition_literal",
    "admissible_bruteforce", "interval_decomposition", "pivots",
    "describe", "descriptor_to_json", "descriptor_from_json",
]


@dataclass(frozen=True)
class FilledRectangle:
    n1: int
    n2: int

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    def content(self, r: int, c: int) -> int:
        if not (1 <= r <= self.n2 and 1 <= c <= self.n1):
            raise ValueError(f"cell ({r}, {c}) outside the {self.n2}x{self.n1} rectangle")
        return self.n - r - c + 1

    def rows(self) -> list[list[int]]:
        """Contents row by row, top row first."""
        return [[self.content(r, c) for c in range(1, self.n1 + 1)]
                for r in range(self.n2, 0, -1)]


@dataclass(frozen=True)
class YoungSubdiagram:
    k: tuple[int, ...]
    n1: int
    n2: int

    def __post_init__(self):
        k = tuple(int(x) for x in self.k)
        object.__setattr__(self, "k", k)
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError("rectangle sides must be non-negative")
        if len(k) != self.n2:
            raise ValueError(f"k-vector needs {self.n2} entries, got {len(k)}")
        if any(not 0 <= x <= self.n1 for x in k) or list(k) != sorted(k):
            raise ValueError(f"k-vector must satisfy 0 <= k_1 <= ... <= {self.n1}: {k}")

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def rectangle(self) -> FilledRectangle:
        return FilledRectangle(self.n1, self.n2)

    def row_lengths(self) -> tuple[int, ...]:
        return tuple(self.n1 - x for x in self.k)

    def shape(self) -> Partition:
        return Partition.from_parts(self.row_lengths())

    def column_heights(self) -> tuple[int, ...]:
        lengths = self.row_lengths()
        return tuple(sum(1 for L in lengths if L >= c) for c in range(1, self.n1 + 1))

    def __contains__(self, cell) -> bool:
        r, c = cell
        if not (1 <= r <= self.n2 and 1 <= c <= self.n1):
            return False
        return c <= self.n1 - self.k[self.n2 - r]

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r in range(self.n2, 0, -1) for c in range(1, self.n1 + 1)
                if (r, c) in self]

    def column_contents(self, c: int) -> list[int]:
        """Contents of column ``c`` of the subdiagram, top to bottom."""
        rect = self.rectangle
        h = self.column_heights()[c - 1]
        return [rect.content(r, c) for r in range(self.n2, self.n2 - h, -1)]

    def render(self, empty: str = ".") -> str:
        rect = self.rectangle
        width = max(2, len(str(max(self.n - 1, 1))))
        lines = []
        for r in range(self.n2, 0, -1):
            cells = [str(rect.content(r, c)) if (r, c) in self else empty
                     for c in range(1, self.n1 + 1)]
            lines.append(" ".join(x.rjust(width) for x in cells))
        return "\n".join(lines)


def all_subdiagrams(n1: int, n2: int) -> list[YoungSubdiagram]:
    """All binomial(n1+n2, n2) subdiagrams, largest first."""
    return [YoungSubdiagram(k, n1, n2)
            for k in itertools.combinations_with_replacement(range(n1 + 1), n2)]


def subdiagram_to_word(d: YoungSubdiagram) -> PermutationWord:
    """Interlacing word: ``n1 + j`` in slot ``k_j + j``, ``1..n1`` elsewhere."""
    word = [0] * d.n
    for j, kj in enumerate(d.k, 1):
        word[kj + j - 1] = d.n1 + j
    small = iter(range(1, d.n1 + 1))
    return PermutationWord(tuple(a if a else next(small) for a in word))


def word_via_cycles(d: YoungSubdiagram) -> PermutationWord:
    """The same word as the cycle product ``c_{n2+k_{n2}, n-1} ... c_{1+k_1, n1}``."""
    w = PermutationWord.identity(d.n)
    for j in range(d.n2, 0, -1):
        w = w * _cycle(j + d.k[j - 1], d.n1 + j - 1, d.n)
    return w


def _l_vector(d: YoungSubdiagram) -> list[int]:
    # [l_{n1}, ..., l_1] is the transpose of [k_{n2}, ..., k_1], padded to n1
    lt = transpose(Partition.from_parts(d.k)).parts
    lt = lt + (0,) * (d.n1 - len(lt))
    return list(reversed(lt))  # l[0] = l_1


def inverse_via_columns(d: YoungSubdiagram) -> PermutationWord:
    """``c_{n-n2, n-1-l_1} c_{n-n2-1, n-2-l_2} ... c_{1, n-n1-l_{n1}}``."""
    n, l = d.n, _l_vector(d)
    w = PermutationWord.identity(n)
    for i in range(1, d.n1 + 1):
        w = w * _cycle(n - d.n2 - i + 1, n - i - l[i - 1], n)
    return w


def column_readings(d: YoungSubdiagram) -> list[list[int]]:
    """Contents read top to bottom along each column, left to right."""
    return [d.column_contents(c) for c in range(1, d.n1 + 1)]


def levi_weyl_group(alpha: Composition) -> list[PermutationWord]:
    """All permutations preserving every block of ``alpha``."""
    ranges = alpha.block_ranges()
    out = []
    for pieces in itertools.product(*(itertools.permutations(r) for r in ranges)):
        out.append(PermutationWord(tuple(itertools.chain.from_iterable(pieces))))
    return out


def double_coset_reps_bruteforce(alpha: Composition, beta: Composition,
                                 bounds: Bounds | None = None) -> list[PermutationWord]:
    """Permutations sending positive roots of ``M_alpha`` to positive roots
    and whose inverse does the same for ``M_beta``, sorted by word."""
    if alpha.n != beta.n:
        raise ValueError(f"compositions of different n: {alpha.n} vs {beta.n}")
    check_weyl_bound(alpha.n, bounds)
    roots_a, roots_b = alpha.positive_roots(), beta.positive_roots()
    out = []
    for w in all_permutations(alpha.n):
        if not all(act_on_root(w, r).is_positive for r in roots_a):
            continue
        winv = w.inverse()
        if all(act_on_root(winv, r).is_positive for r in roots_b):
            out.append(w)
    return out


def double_coset(w: PermutationWord, alpha: Composition, beta: Composition) -> frozenset:
    """``W_beta w W_alpha`` (composition of maps), as a set of words."""
    wa, wb = levi_weyl_group(alpha), levi_weyl_group(beta)
    # b∘w∘a is a * w * b under the right-action product
    return frozenset((a * w * b).word for a in wa for b in wb)


def same_double_coset(u: PermutationWord, v: PermutationWord,
                      alpha: Composition, beta: Composition) -> bool:
    return v.word in double_coset(u, alpha, beta)


def surviving_reps(n1: int, n2: int, m: int) -> list[YoungSubdiagram]:
    """Subdiagrams with no column filled only from ``{1, .., n-m-1}``.

    These index ``P_[n1,n2] \\ G / Q_[n-m, 1^m]``: their words are exactly
    the interlacings whose first ``n - m`` letters increase.
    """
    n = n1 + n2
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= {n}, got {m}")
    ceiling = n - m - 1
    out = []
    for d in all_subdiagrams(n1, n2):
        cols = (d.column_contents(c) for c in range(1, n1 + 1))
        if not any(col and all(1 <= x <= ceiling for x in col) for col in cols):
            out.append(d)
    return out


def rect_word(j: int, n1: int, n2: int) -> PermutationWord:
    """``w(j)``: the word of the full-height rectangle of width ``j``."""
    if not 0 <= j <= n1:
        raise ValueError(f"rectangle width must lie in [0, {n1}], got {j}")
    return subdiagram_to_word(YoungSubdiagram((n1 - j,) * n2, n1, n2))


def _check_s(n1: int, n2: int, s: int) -> None:
    if not 1 <= s <= n1 + n2:
        raise ValueError(f"need 1 <= s <= {n1 + n2}, got {s}")


def admissible_widths(n1: int, n2: int, s: int) -> list[int]:
    """Widths ``j`` with ``w(j)`` surviving the order-``s`` derivative.

    The tail of ``w(j)`` holds ``j`` letters of the first block and
    ``s - j`` of the second, hence ``max(0, s-n2) <= j <= min(s, n1)``.
    """
    _check_s(n1, n2, s)
    return list(range(max(0, s - n2), min(s, n1) + 1))


def admissible_set(n1: int, n2: int, s: int) -> list[PermutationWord]:
    return [rect_word(j, n1, n2) for j in admissible_widths(n1, n2, s)]


def admissible_set_literal(n1: int, n2: int, s: int) -> list[PermutationWord]:
    """The three-case list in its min/max form.

    Agrees with :func:`admissible_set` when ``n1 <= n2``; for ``n1 > n2``
    it is the image of the verified set under ``j -> s - j``.
    """
    _check_s(n1, n2, s)
    lo, hi = min(n1, n2), max(n1, n2)
    if s <= lo:
        js = range(0, s + 1)
    elif s <= hi:
        js = range(0, lo + 1)
    else:
        js = range(s - hi, lo + 1)
    return [rect_word(j, n1, n2) for j in js]


def levi_partition(j: int, n1: int, n2: int, s: int) -> Composition:
    """Levi of ``M_[n-s] ∩ w(j)^-1 P_[n1,n2] w(j)`` inside GL(n-s)."""
    if j not in admissible_widths(n1, n2, s):
        raise ValueError(f"w({j}) is not admissible for (n1, n2, s) = ({n1}, {n2}, {s})")
    return Composition.from_blocks((n1 - j, n2 - s + j))


def levi_from_word(w: PermutationWord, n1: int, s: int) -> Composition:
    """Run lengths of first-block / second-block letters in the first
    ``n - s`` slots of ``w``."""
    prefix = w.word[:w.n - s]
    runs = [len(list(g)) for _, g in itertools.groupby(prefix, key=lambda a: a <= n1)]
    return Composition(tuple(runs))


def tail_condition_bruteforce(w: PermutationWord, n1: int, n2: int, s: int) -> bool:
    """True iff no root ``w alpha_p`` (``n-s < p < n``) is ``>= alpha_{n1}``.

    A root above ``alpha_{n1}`` lies in the unipotent radical of
    ``P_[n1,n2]``, where the generic character of the GL(s) block is
    integrated against an invariant function; True means the summand
    survives.  Empty tails (``s = 1``) survive vacuously.
    """
    n = n1 + n2
    if w.n != n:
        raise ValueError(f"word of rank {w.n}, expected {n}")
    if n1 == 0 or n2 == 0:
        return True
    target = Root.simple(n1, n)
    return not any(root_poset_geq(act_on_root(w, Root.simple(p, n)), target)
                   for p in range(n - s + 1, n))


def tail_condition_literal(w: PermutationWord, s: int) -> bool:
    """Lexicographic comparison against ``alpha_{n-s}``, kept for reference."""
    n = w.n
    if not 1 <= n - s <= n - 1:
        return True
    target = Root.simple(n - s, n)
    return not any(lex_root_geq(act_on_root(w, Root.simple(p, n)), target)
                   for p in range(n - s + 1, n))


def admissible_bruteforce(n1: int, n2: int, s: int) -> list[PermutationWord]:
    """Words of :func:`surviving_reps` that pass the tail condition."""
    _check_s(n1, n2, s)
    words = (subdiagram_to_word(d) for d in surviving_reps(n1, n2, s))
    return sorted((w for w in words if tail_condition_bruteforce(w, n1, n2, s)),
                  key=lambda w: w.word)


def interval_decomposition(w: PermutationWord, n1: int):
    """Split ``w`` as ``u_0 v_1 u_1 v_2 u_2 ...``.

    ``u_i`` are maximal runs of letters ``<= n1``, ``v_i`` of letters
    ``> n1``.  Returns ``(u_0, [(v_1, u_1), (v_2, u_2), ...])``; the last
    ``u`` may be empty.
    """
    runs = [(small, tuple(g)) for small, g in
            itertools.groupby(w.word, key=lambda a: a <= n1)]
    u0 = ()
    if runs and runs[0][0]:
        u0 = runs.pop(0)[1]
    pairs = []
    for idx in range(0, len(runs), 2):
        v = runs[idx][1]
        u = runs[idx + 1][1] if idx + 1 < len(runs) else ()
        pairs.append((v, u))
    return u0, pairs


def pivots(d: YoungSubdiagram) -> list[tuple[int, int]]:
    """Outer corners of the subdiagram, top to bottom.

    Each entry is ``(content at the corner, top-row content above it)``.
    The corner of row ``j`` has content ``k_j + j`` (the slot where the
    last letter of a run ``v_i`` lands); the number above it in the top
    row is ``k_j + 1``, the first letter of the following ``u_i``.
    """
    out = []
    for j in range(1, d.n2 + 1):
        last_of_run = j == d.n2 or d.k[j] > d.k[j - 1]
        if last_of_run and d.k[j - 1] < d.n1:
            r, c = d.n2 - j + 1, d.n1 - d.k[j - 1]
            out.append((d.rectangle.content(r, c), d.rectangle.content(d.n2, c)))
    return out


@dataclass(frozen=True)
class CosetDescriptor:
    w: PermutationWord
    diagram: YoungSubdiagram
    pivots: tuple[tuple[int, int], ...]


def describe(d: YoungSubdiagram) -> CosetDescriptor:
    return CosetDescriptor(subdiagram_to_word(d), d, tuple(pivots(d)))


def descriptor_to_json(desc: CosetDescriptor) -> dict:
    return {
        "word": list(desc.w.word),
        "k_vector": list(desc.diagram.k),
        "n1": desc.diagram.n1,
        "n2": desc.diagram.n2,
        "pivots": [list(p) for p in desc.pivots],
    }


def descriptor_from_json(obj: dict) -> CosetDescriptor:
    d = YoungSubdiagram(tuple(obj["k_vector"]), obj["n1"], obj["n2"])
    desc = describe(d)
    if list(desc.w.word) != list(obj["word"]):
        raise ValueError("word does not match the k-vector")
    if [list(p) for p in desc.pivots] != [list(p) for p in obj["pivots"]]:
        raise ValueError("pivot data does not match the k-vector")
    return desc


def _words(ws: Sequence[PermutationWord]) -> list[tuple[int, ...]]:
    return [w.word for w in ws]


def iter_rectangles(max_n: int) -> Iterator[tuple[int, int]]:
    """All ``(n1, n2)`` with ``n1 + n2 <= max_n``."""
    for n in range(0, max_n + 1):
        for n1 in range(0, n + 1):
            yield n1, n - n1
