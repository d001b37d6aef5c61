"""Compare reported and true errors on the closed-form series suite, per accelerator."""

import argparse

from tornheim_lab.honesty import run_honesty
from tornheim_lab.series import Accel, SummationConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--accel", nargs="*", default=[a.value for a in Accel], choices=[a.value for a in Accel])
    ap.add_argument("--max-diagonal", type=int, default=SummationConfig().max_diagonal)
    args = ap.parse_args()

    for name in args.accel:
        cfg = SummationConfig(max_diagonal=args.max_diagonal, accel=Accel(name))
        results = run_honesty(cfg)
        print(f"\naccel={name}: {sum(r.honest for r in results)}/{len(results)} honest")
        for r in results:
            flag = "ok " if r.honest else ("NC " if not r.converged else "BAD")
            print(f"  {flag} {r.name:24s} true={r.true_error:9.2e} reported={r.reported:9.2e}")


if __name__ == "__main__":
    main()
