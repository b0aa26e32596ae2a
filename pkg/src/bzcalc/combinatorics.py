"""Partitions, permutation words and type-A root data for GL(n).

Permutations are stored in one-line notation: ``word[i - 1]`` is the image
of ``i``.  Products use the right-action convention ``i^(u*v) = (i^u)^v``,
so ``s(1, 3) * s(2, 3)`` first swaps 1,2 and then 2,3.  Under this
convention ``cycle_perm(l, k, n) = s_l s_{l+1} ... s_k`` is the cycle
``(k+1, k, ..., l)`` and moves the letter ``k+1`` of a word to slot ``l``.

>>> cycle_perm(1, 2, 3)
PermutationWord(word=(3, 1, 2))
>>> transpose(Partition((3, 1)))
Partition(parts=(2, 1, 1))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "Partition", "Composition", "PermutationWord", "Root",
    "partitions", "transpose", "dominance_leq", "dominance_maxima",
    "simple_reflection", "cycle_perm", "act_on_root", "lex_root_geq",
    "root_poset_geq", "positive_roots", "all_permutations",
]


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive integers (no trailing zeros)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> Partition:
        """Sort and drop zeros, then build."""
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    @classmethod
    def rectangle(cls, part: int, times: int) -> Partition:
        return cls((part,) * times if part else ())

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ValueError("cannot pad to a shorter length")
        return self.parts + (0,) * (length - len(self.parts))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Composition:
    """Ordered block sizes of a standard Levi subgroup of GL(n)."""

    blocks: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if any(b < 1 for b in blocks):
            raise ValueError(f"composition blocks must be positive: {blocks}")

    @classmethod
    def from_blocks(cls, blocks: Sequence[int]) -> Composition:
        """Drop zero blocks."""
        return cls(tuple(b for b in blocks if b))

    @property
    def n(self) -> int:
        return sum(self.blocks)

    def block_ranges(self) -> list[range]:
        out, start = [], 1
        for b in self.blocks:
            out.append(range(start, start + b))
            start += b
        return out

    def positive_roots(self) -> list[Root]:
        """Positive roots of the Levi ``M`` (pairs inside one block)."""
        n = self.n
        return [Root(i, j, n) for r in self.block_ranges()
                for i, j in itertools.combinations(r, 2)]


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n``, in reverse lexicographic order."""
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, cap), 0, -1):
            for tail in rec(rest - k, k):
                yield (k,) + tail
    if n < 0:
        raise ValueError("n must be non-negative")
    for parts in rec(n, n if max_part is None else max_part):
        yield Partition(parts)


def transpose(p: Partition) -> Partition:
    """Column lengths of the Young diagram of ``p``."""
    if not p.parts:
        return p
    return Partition(tuple(sum(1 for x in p.parts if x >= i)
                           for i in range(1, p.parts[0] + 1)))


def dominance_leq(p: Partition, q: Partition) -> bool:
    """Prefix-sum comparison; the closure order on nilpotent orbits."""
    if p.size != q.size:
        raise ValueError(f"size mismatch: {p} has {p.size}, {q} has {q.size}")
    length = max(len(p), len(q))
    sp = itertools.accumulate(p.padded(length))
    sq = itertools.accumulate(q.padded(length))
    return all(a <= b for a, b in zip(sp, sq))


def dominance_maxima(ps) -> list[Partition]:
    ps = sorted(set(ps), reverse=True)
    return [p for p in ps
            if not any(q != p and dominance_leq(p, q) for q in ps)]


@dataclass(frozen=True)
class PermutationWord:
    """A permutation of ``1..n`` in one-line notation."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(a) for a in self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word}")

    @classmethod
    def identity(cls, n: int) -> PermutationWord:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __mul__(self, other: PermutationWord) -> PermutationWord:
        if other.n != self.n:
            raise ValueError("rank mismatch")
        return PermutationWord(tuple(other(a) for a in self.word))

    def inverse(self) -> PermutationWord:
        inv = [0] * self.n
        for i, a in enumerate(self.word, 1):
            inv[a - 1] = i
        return PermutationWord(tuple(inv))

    def is_identity(self) -> bool:
        return self.word == tuple(range(1, self.n + 1))

    def position(self, letter: int) -> int:
        return self.word.index(letter) + 1

    def length(self) -> int:
        """Number of inversions."""
        return sum(1 for a, b in itertools.combinations(self.word, 2) if a > b)

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest element."""
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self):
        return "".join(map(str, self.word)) if self.n < 10 else " ".join(map(str, self.word))


def all_permutations(n: int) -> Iterator[PermutationWord]:
    """All of S_n in lexicographic order of words."""
    for w in itertools.permutations(range(1, n + 1)):
        yield PermutationWord(w)


def simple_reflection(i: int, n: int) -> PermutationWord:
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple reflection s_{i} does not exist in S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return PermutationWord(tuple(w))


def _cycle(l: int, k: int, n: int) -> PermutationWord:
    # s_l s_{l+1} ... s_k; the empty product (l > k) is the identity
    w = list(range(1, n + 1))
    if l <= k:
        w[l - 1:k + 1] = [k + 1] + list(range(l, k + 1))
    return PermutationWord(tuple(w))


def cycle_perm(l: int, k: int, n: int) -> PermutationWord:
    """The product ``s_l s_{l+1} ... s_k`` in ``S_n``.

    Equal to the cycle ``(k+1, k, ..., l)``; as a word it reads
    ``1 .. l-1, k+1, l, .., k, k+2 .. n``.
    """
    if not 1 <= l <= k <= n - 1:
        raise ValueError(f"need 1 <= l <= k <= n-1, got l={l}, k={k}, n={n}")
    return _cycle(l, k, n)


@dataclass(frozen=True)
class Root:
    """The root ``e_i - e_j`` of GL(n)."""

    i: int
    j: int
    n: int

    def __post_init__(self):
        if not (1 <= self.i <= self.n and 1 <= self.j <= self.n) or self.i == self.j:
            raise ValueError(f"invalid root e_{self.i} - e_{self.j} for GL({self.n})")

    @classmethod
    def simple(cls, p: int, n: int) -> Root:
        return cls(p, p + 1, n)

    @property
    def is_positive(self) -> bool:
        return self.i < self.j

    def coords(self) -> tuple[int, ...]:
        """Coordinates over the simple roots alpha_1..alpha_{n-1}."""
        lo, hi = sorted((self.i, self.j))
        sign = 1 if self.is_positive else -1
        return tuple(sign if lo <= t < hi else 0 for t in range(1, self.n))

    def __neg__(self):
        return Root(self.j, self.i, self.n)

    def __str__(self):
        return f"e{self.i}-e{self.j}"


def positive_roots(n: int) -> list[Root]:
    return [Root(i, j, n) for i, j in itertools.combinations(range(1, n + 1), 2)]


def act_on_root(w: PermutationWord, r: Root) -> Root:
    """``e_i - e_j  ->  e_{w(i)} - e_{w(j)}``."""
    if w.n != r.n:
        raise ValueError(f"rank mismatch: permutation of {w.n}, root of GL({r.n})")
    return Root(w(r.i), w(r.j), r.n)


def lex_root_geq(r: Root, s: Root) -> bool:
    """Lexicographic comparison of simple-root coordinate vectors."""
    if r.n != s.n:
        raise ValueError("rank mismatch")
    return r.coords() >= s.coords()


def root_poset_geq(r: Root, s: Root) -> bool:
    """``r - s`` is a non-negative combination of simple roots."""
    if r.n != s.n:
        raise ValueError("rank mismatch")
    return all(a >= b for a, b in zip(r.coords(), s.coords()))
