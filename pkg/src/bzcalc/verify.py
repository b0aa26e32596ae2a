"""Oracle sweeps comparing constructive formulas with brute force."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .combinatorics import Composition, Partition, partitions
from .config import Bounds, check_weyl_bound
from .cosets import (
    admissible_bruteforce, admissible_set, admissible_widths, all_subdiagrams,
    double_coset_reps_bruteforce, interval_decomposition, inverse_via_columns,
    iter_rectangles, levi_from_word, levi_partition, pivots, rect_word,
    same_double_coset, subdiagram_to_word, word_via_cycles,
)
from .derivatives import (
    Cusp, DegenEis, Expr, IsobaricEis, RegularEis, ResidueEis, Speh,
)
from .support import residue_support, proved_case, whittaker_support
from .whittaker import (
    NilpotentElement, centralizer_basis, dominates, is_whittaker_pair,
    neutral_h, nilradical_of_pair, standard_H,
)

__all__ = ["VerifyResult", "SUITES", "run_suite", "covered_expressions",
           "distinct_block_orders"]


@dataclass
class VerifyResult:
    suite: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, message: Callable[[], str]) -> None:
        self.checked += 1
        if not cond:
            self.failures.append(message())


def verify_cosets(bound: int) -> VerifyResult:
    res = VerifyResult("cosets")
    for n1, n2 in iter_rectangles(bound):
        if n1 + n2 == 0:
            continue
        alpha = Composition.from_blocks((n1, n2))
        beta = Composition((1,) * (n1 + n2))
        brute = double_coset_reps_bruteforce(alpha, beta, Bounds(max_weyl_n=bound))
        constructive = [subdiagram_to_word(d).inverse() for d in all_subdiagrams(n1, n2)]
        # match every constructive rep to the brute-force rep of its double coset
        matched = []
        for w in constructive:
            hits = [v for v in brute if same_double_coset(w, v, alpha, beta)]
            res.check(len(hits) == 1, lambda: f"({n1},{n2}): {w} meets {len(hits)} brute-force cosets")
            matched.extend(hits)
        res.check(sorted(v.word for v in matched) == [v.word for v in brute],
                  lambda: f"({n1},{n2}): constructive reps do not biject with brute force")
    return res


def verify_inverse(bound: int) -> VerifyResult:
    res = VerifyResult("inverse")
    for n1 in range(bound + 1):
        for n2 in range(bound + 1):
            seen = set()
            for d in all_subdiagrams(n1, n2):
                w = subdiagram_to_word(d)
                seen.add(w.word)
                res.check(inverse_via_columns(d) == w.inverse(),
                          lambda: f"{d.k} in {n2}x{n1}: column reading {inverse_via_columns(d)} "
                                  f"!= inverse {w.inverse()}")
                res.check(word_via_cycles(d) == w,
                          lambda: f"{d.k} in {n2}x{n1}: cycle product {word_via_cycles(d)} != {w}")
                u0, runs = interval_decomposition(w, n1)
                expected, pos = [], len(u0)
                for v, u in runs:
                    pos += len(v)
                    if u:
                        expected.append((pos, u[0]))
                    pos += len(u)
                res.check(pivots(d) == expected,
                          lambda: f"{d.k} in {n2}x{n1}: pivots {pivots(d)} != {expected}")
            res.check(len(seen) == len(all_subdiagrams(n1, n2)),
                      lambda: f"{n2}x{n1}: subdiagram words are not distinct")
    return res


def verify_admissible(bound: int) -> VerifyResult:
    res = VerifyResult("admissible")
    for n1, n2 in iter_rectangles(bound):
        for s in range(1, n1 + n2 + 1):
            brute = [w.word for w in admissible_bruteforce(n1, n2, s)]
            formula = sorted(w.word for w in admissible_set(n1, n2, s))
            res.check(brute == formula,
                      lambda: f"({n1},{n2},s={s}): tail filter {brute} != formula {formula}")
            for j in admissible_widths(n1, n2, s):
                levi = levi_partition(j, n1, n2, s)
                word_levi = levi_from_word(rect_word(j, n1, n2), n1, s)
                res.check(levi == word_levi,
                          lambda: f"({n1},{n2},s={s},j={j}): levi {levi} != {word_levi}")
    return res


def distinct_block_orders(lam: Partition) -> Iterator[tuple[int, ...]]:
    """One index order per distinct arrangement of block sizes."""
    seen = set()
    for order in itertools.permutations(range(len(lam))):
        sizes = tuple(lam[i] for i in order)
        if sizes not in seen:
            seen.add(sizes)
            yield order


def centralizer_dimension_formula(lam: Partition) -> int:
    """``sum_i (2i - 1) lam_i``, equivalently ``sum_i (lam^T_i)^2``."""
    return sum((2 * i - 1) * p for i, p in enumerate(lam.parts, 1))


def verify_pairs(bound: int) -> VerifyResult:
    res = VerifyResult("pairs")
    for n in range(1, bound + 1):
        for lam in partitions(n):
            for order in distinct_block_orders(lam):
                phi = NilpotentElement.standard(lam, order)
                res.check(is_whittaker_pair(neutral_h(lam, order), phi),
                          lambda: f"{lam} order {order}: neutral h is not a pair")
            phi = NilpotentElement.standard(lam)
            h = neutral_h(lam)
            dim = len(centralizer_basis(phi))
            res.check(dim == centralizer_dimension_formula(lam),
                      lambda: f"{lam}: centralizer dim {dim} != {centralizer_dimension_formula(lam)}")
            res.check(dominates(h, h, phi), lambda: f"{lam}: dominance is not reflexive")
        reg = NilpotentElement.standard(Partition((n,)))
        dim = nilradical_of_pair(standard_H(n), reg).dimension
        res.check(dim == n * (n - 1) // 2, lambda: f"n={n}: nilradical dim {dim}")
    return res


def covered_expressions(max_n: int) -> Iterator[Expr]:
    """Every covered expression shape of rank at most ``max_n``."""
    for n in range(1, max_n + 1):
        for n1 in range(n + 1):
            yield DegenEis(n1, n - n1)
    for a in range(1, max_n + 1):
        for n in range(1, max_n // a + 1):
            yield Speh("tau", a, n)
    for a1, a2, n1, n2 in itertools.product(range(1, max_n + 1), repeat=4):
        if a1 * n1 + a2 * n2 <= max_n:
            yield IsobaricEis(Cusp("tau1", a1), Cusp("tau2", a2), n1, n2)
    for a, n1, n2 in itertools.product(range(1, max_n + 1), repeat=3):
        if a * (n1 + n2) <= max_n:
            tau = Cusp("tau", a)
            yield RegularEis(tau, n1, n2)
            for alpha in range(min(n1, n2)):
                yield ResidueEis(tau, n1, n2, alpha)


def verify_support(bound: int) -> VerifyResult:
    res = VerifyResult("support")
    for n in range(1, bound + 1):
        for n2 in range(n // 2 + 1):
            r = whittaker_support(DegenEis(n - n2, n2), verdicts=False)
            top = Partition((2,) * n2 + (1,) * (n - 2 * n2))
            res.check(r.maxima == (top,) and all(p[0] <= 2 for p in r.nonzero_lambdas),
                      lambda: f"DegenEis({n - n2},{n2}): maxima {r.maxima}")
    for e in covered_expressions(bound):
        r = whittaker_support(e)
        if isinstance(e, Speh):
            res.check(r.nonzero_lambdas == (Partition.rectangle(e.a, e.n),),
                      lambda: f"{e}: support {r.nonzero_lambdas}")
        if isinstance(e, IsobaricEis) and e.n1 >= e.n2:
            top = Partition.from_parts((e.tau1.a + e.tau2.a,) * e.n2 + (e.tau1.a,) * (e.n1 - e.n2))
            res.check(r.maxima == (top,), lambda: f"{e}: maxima {r.maxima} != {top}")
        if isinstance(e, ResidueEis):
            top = residue_support(e.tau.a, e.n1, e.n2, e.alpha)
            res.check(r.maxima == (top,), lambda: f"{e}: maxima {r.maxima} != {top}")
        for lam, v in r.eulerian_flags.items():
            if "single branch" in v.reasons:
                res.check(bool(proved_case(e, lam, r.maxima)),
                          lambda: f"{e} at {lam}: single branch outside the proved cases")
    return res


SUITES = {
    "cosets": verify_cosets,
    "inverse": verify_inverse,
    "admissible": verify_admissible,
    "pairs": verify_pairs,
    "support": verify_support,
}


def run_suite(suite: str, bound: int, bounds: Bounds | None = None) -> list[VerifyResult]:
    """Run one suite (or ``all``) after checking ``bound`` against the guard."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
    if bound < 1:
        raise ValueError("bound must be positive")
    check_weyl_bound(bound, bounds)
    names = sorted(SUITES) if suite == "all" else [suite]
    return [SUITES[name](bound) for name in names]
