"""Compare two quaternion-form splittings of the B-regularity system.

The six-equation form that isolates only the 3-dimensional curls is compared
with B-regularity decided by ``D_x f = f D_x = 0`` on random maps drawn from
the LEFT, B and R solution spaces, and the disagreements are counted in both
directions.
"""

import argparse
import random

from octoreg import operators, sampling
from octoreg.polyfun import render


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=300)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    counts = {"agree": 0, "split rejects B-regular": 0, "split accepts non-B": 0, "corrected wrong": 0}
    examples = {}
    for _ in range(args.samples):
        f = sampling.mixed_octonion_map(rng, max_degree=2)
        b = operators.classify(f).b_regular
        split = operators.biaxial_b_system_curl_split(f)
        counts["corrected wrong"] += operators.biaxial_b_system(f) != b
        if split == b:
            counts["agree"] += 1
            continue
        key = "split rejects B-regular" if b else "split accepts non-B"
        counts[key] += 1
        examples.setdefault(key, render(f))
    for k, v in counts.items():
        print(f"{k:<24} {v}")
    for k, f in examples.items():
        print(f"example ({k}): {f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
