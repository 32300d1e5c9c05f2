"""Survey genetic codes of random integer length vectors.

Draws random generic n-gons, computes their genetic codes, and reports how
often each code appears and which model spaces (RP^k, T^k, K_k) show up.
Ends with the three hexagon chambers worked out explicitly.

Usage:
    python scripts/genetic_codes_demo.py --n 6 --samples 2000 --seed 1
"""

import argparse
import collections
import random
import sys

from kleinforge import polygon_genetics as pg


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--max-length", type=int, default=12)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    counts: collections.Counter[str] = collections.Counter()
    spaces: collections.Counter[str] = collections.Counter()
    degenerate = 0
    for _ in range(args.samples):
        lengths = [str(rng.randint(1, args.max_length)) for _ in range(args.n)]
        prep = pg.prepare_lengths(lengths)
        if not pg.is_generic(prep):
            degenerate += 1
            continue
        code = pg.genetic_code(prep)
        counts[code.text()] += 1
        for s in pg.classify(code).spaces:
            spaces[s] += 1

    total = args.samples - degenerate
    print(f"{total} generic vectors of {args.samples} sampled (n={args.n})")
    for text, c in counts.most_common(12):
        print(f"  {c:>6}  {text}")
    if len(counts) > 12:
        print(f"  ... {len(counts) - 12} more codes")
    if spaces:
        print("model spaces hit:", dict(spaces))

    print("\nhexagon chambers:")
    for lengths in (
        ("1", "1", "1", "1", "1", "4"),
        ("1/24", "1/24", "1/24", "1", "1", "1"),
        ("1/24", "1/24", "1", "1", "1", "2"),
    ):
        code = pg.genetic_code(lengths)
        cls = pg.classify(code)
        tc = f", TC in [{cls.tc.lower}, {cls.tc.upper}]" if cls.tc else ""
        print(f"  {','.join(lengths):>24} -> {code.text()} {cls.spaces}{tc}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
