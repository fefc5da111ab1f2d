"""Tabulate solution-space dimensions for every system up to a degree cap.

    python scripts/dimension_table.py --max-degree 3 > dims.csv
"""

import argparse
import sys

from octoreg.regspace import DimRow, SystemId, dimension_row, to_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--systems", nargs="*", default=[s.value for s in SystemId])
    args = ap.parse_args()
    rows: list[DimRow] = []
    for s in args.systems:
        # the Clifford-valued systems have 128 rows per monomial; keep them cheap
        top = min(args.max_degree, 2) if s in ("SPINOR_KERNEL", "CLIFFORD_RIESZ") else args.max_degree
        rows.extend(dimension_row(s, k) for k in range(top + 1))
    sys.stdout.write(to_csv(rows))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
