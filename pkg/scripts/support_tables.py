"""Print Whittaker-support maxima and Eulerianity counts for every covered
expression up to a rank bound.

    python scripts/support_tables.py --max-n 8 [--csv out.csv]
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections import Counter

from bzcalc.derivatives import expr_to_json, rank
from bzcalc.support import EULERIAN, whittaker_support
from bzcalc.verify import covered_expressions


def describe(e) -> str:
    obj = expr_to_json(e)
    kind = obj.pop("type")
    flat = []
    for k, v in obj.items():
        flat.append(f"{k}={v['a']}" if isinstance(v, dict) else f"{k}={v}")
    return f"{kind}({', '.join(flat)})"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--csv", help="also write rows to this file")
    args = ap.parse_args(argv)

    rows = []
    for e in covered_expressions(args.max_n):
        r = whittaker_support(e)
        verdicts = Counter(v.status for v in r.eulerian_flags.values())
        rows.append({
            "expr": describe(e),
            "rank": rank(e),
            "nonzero": len(r.nonzero_lambdas),
            "maxima": " ".join(str(m) for m in r.maxima),
            "eulerian": verdicts[EULERIAN],
            "unknown": sum(verdicts.values()) - verdicts[EULERIAN],
        })
    width = max(len(row["expr"]) for row in rows)
    print(f"{'expression':<{width}}  rank  #nonzero  maxima           eulerian/unknown")
    for row in rows:
        print(f"{row['expr']:<{width}}  {row['rank']:>4}  {row['nonzero']:>8}  "
              f"{row['maxima']:<15}  {row['eulerian']}/{row['unknown']}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
