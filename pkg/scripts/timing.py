"""Time the heavier checks: the random decomposition suite and the thickening suite."""
import argparse
import time

from alexmod.fixtures import fixture_thickenings
from alexmod.verify import DEFAULT_SEED, decomposition_suite, thickening_suite


def timed(label, fn):
    start = time.perf_counter()
    checks = fn()
    failed = sum(not c.passed for c in checks)
    print(f"{label:<28}{time.perf_counter() - start:8.2f} s  {len(checks)} checks, {failed} failed")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--modules", type=int, default=200)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--max-m", type=int, default=5)
    args = ap.parse_args(argv)
    timed(f"decomposition ({args.modules})", lambda: decomposition_suite(args.modules, args.seed))
    timed("thickening fixtures", lambda: thickening_suite(args.seed, fixture_thickenings(), max_m=args.max_m))


if __name__ == "__main__":
    main()
