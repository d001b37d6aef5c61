"""Run the default theorem1 grid and write JSON/CSV reports.

    python3 scripts/theorem1_grid.py --out results/ --max-diagonal 8000
"""

import argparse
import json
import time
from pathlib import Path

from tornheim_lab.series import SummationConfig
from tornheim_lab.verifier import DEFAULT_GRIDS, run_suite, write_csv, write_json


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", type=Path, default=Path("results"))
    ap.add_argument("--max-diagonal", type=int, default=SummationConfig().max_diagonal)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    cfg = SummationConfig(max_diagonal=args.max_diagonal)
    start = time.perf_counter()
    res = run_suite(DEFAULT_GRIDS["theorem1"], cfg, workers=args.workers)
    elapsed = time.perf_counter() - start

    args.out.mkdir(parents=True, exist_ok=True)
    write_json(res.reports, args.out / "theorem1.json")
    write_csv(res.reports, args.out / "theorem1.csv")
    worst = max(res.reports, key=lambda r: r.residual)
    print(json.dumps(res.summary, sort_keys=True), f"{elapsed:.1f} s")
    print("largest residual:", worst.line())


if __name__ == "__main__":
    main()
