"""Derivative calculus for automorphic representations of GL(n).

Submodules: ``combinatorics`` (partitions, permutation words, roots),
``cosets`` (Young-subdiagram double cosets), ``whittaker`` (Whittaker
pairs), ``derivatives`` (the ``D^(m)`` rewrite engine), ``support``
(Whittaker support and Eulerianity) and ``cli``.
"""

from .combinatorics import Composition, Partition, PermutationWord, Root
from .config import BoundExceeded, Bounds
from .derivatives import (
    Cusp, DegenEis, IsobaricEis, NotCovered, RegularEis, ResidueEis, Speh, Trivial,
    compose, derivative,
)
from .support import whittaker_support

__all__ = [
    "Composition", "Partition", "PermutationWord", "Root", "Bounds", "BoundExceeded",
    "Cusp", "DegenEis", "IsobaricEis", "NotCovered", "RegularEis", "ResidueEis",
    "Speh", "Trivial", "compose", "derivative", "whittaker_support",
]
