"""Tabulate the alternating T(0,a,b) relation in every orientation over the default grid.

Prints a residual table and the orientation summary.  Exits 0 either way: this
is a measurement, not a check.
"""

import argparse
import json

from tornheim_lab.series import SummationConfig
from tornheim_lab.verifier import DEFAULT_GRIDS, ORIENTATIONS, GridSpec, format_number, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-diagonal", type=int, default=SummationConfig().max_diagonal)
    ap.add_argument("--json", help="write the full reports here")
    args = ap.parse_args()

    base = DEFAULT_GRIDS["prop1"]
    grid = GridSpec(base.identity, base.params, options={"orientations": ORIENTATIONS})
    res = run_suite(grid, SummationConfig(max_diagonal=args.max_diagonal))

    rows = {}
    for r in res.reports:
        key = tuple(str(v) for v in r.params.values())
        rows.setdefault(key, {})[r.orientation] = r
    print(f"{'a':>2} {'b':>2} {'x':>6} {'y':>6}  " + "  ".join(f"{o:>17}" for o in ORIENTATIONS))
    for key, by in rows.items():
        cells = []
        for o in ORIENTATIONS:
            r = by[o]
            cells.append(f"{format_number(r.residual):>15}{'*' if r.passed else ' ':>2}")
        print(f"{key[0]:>2} {key[1]:>2} {key[2]:>6} {key[3]:>6}  " + "  ".join(cells))
    print("(* = passes)")
    print(json.dumps(res.summary, sort_keys=True))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(res.to_dict(), fh, indent=2)


if __name__ == "__main__":
    main()
