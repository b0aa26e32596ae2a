"""Count where alternative readings of four statements disagree with the
brute-force or direct computations.

Readings compared:
  tail      lexicographic test against alpha_{n-s}, "false survives"
  three     min/max three-case admissible list
  residue   no allowed derivative at alpha = 0, n2 = 1
  central   centralizer dimension sum (2i-1) lam^T_i

    python scripts/literal_readings.py --max-n 7
"""

from __future__ import annotations

import argparse
import sys

from bzcalc.combinatorics import Partition, partitions, transpose
from bzcalc.cosets import (
    admissible_set, admissible_set_literal, subdiagram_to_word, surviving_reps,
    tail_condition_literal,
)
from bzcalc.derivatives import Cusp, ResidueEis
from bzcalc.support import residue_support, whittaker_support
from bzcalc.whittaker import NilpotentElement, centralizer_basis


def words(ws):
    return sorted(w.word for w in ws)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args(argv)

    tail_bad = three_bad = cases = 0
    for n in range(1, args.max_n + 1):
        for n1 in range(n + 1):
            n2 = n - n1
            for s in range(1, n + 1):
                cases += 1
                target = words(admissible_set(n1, n2, s))
                lit = [subdiagram_to_word(d) for d in surviving_reps(n1, n2, s)
                       if not tail_condition_literal(subdiagram_to_word(d), s)]
                tail_bad += words(lit) != target
                three_bad += words(admissible_set_literal(n1, n2, s)) != target
    print(f"tail     {tail_bad}/{cases} (n1,n2,s) cases differ from the admissible set")
    print(f"three    {three_bad}/{cases} (n1,n2,s) cases differ (all with n1 > n2)")

    res_bad = res_cases = 0
    for a in (1, 2):
        for n1 in range(1, 5):
            for n2 in range(1, 5):
                for alpha in range(min(n1, n2)):
                    res_cases += 1
                    r = whittaker_support(ResidueEis(Cusp("tau", a), n1, n2, alpha),
                                          strict_residue=True, verdicts=False)
                    res_bad += r.maxima != (residue_support(a, n1, n2, alpha),)
    print(f"residue  {res_bad}/{res_cases} residue supports change when the rule is applied")

    cen_bad = cen_cases = 0
    for n in range(1, min(args.max_n, 8) + 1):
        for lam in partitions(n):
            cen_cases += 1
            dim = len(centralizer_basis(NilpotentElement.standard(lam)))
            cen_bad += dim != sum((2 * i - 1) * p for i, p in enumerate(transpose(lam).parts, 1))
    print(f"central  {cen_bad}/{cen_cases} Jordan types disagree with the direct solve")
    return 0


if __name__ == "__main__":
    sys.exit(main())
