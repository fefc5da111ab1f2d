"""Run the verification suite over several seeds and summarize failures per lemma."""

import argparse
from collections import Counter

from octoreg import verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, nargs="*", default=[0, 1, 2, 3, 4])
    ap.add_argument("--samples", type=int, default=20)
    args = ap.parse_args()
    failures: Counter = Counter()
    checks: Counter = Counter()
    for seed in args.seeds:
        for r in verify.run(seed, args.samples):
            checks[r.lemma] += r.checks
            failures[r.lemma] += r.failures
            for m in r.messages:
                print(f"seed {seed} {r.lemma}: {m}")
    width = max(map(len, checks))
    for lemma in checks:
        print(f"{lemma:<{width}}  checks={checks[lemma]:>6}  failures={failures[lemma]}")
    return 1 if sum(failures.values()) else 0


if __name__ == "__main__":
    raise SystemExit(main())
