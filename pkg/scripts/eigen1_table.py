"""Print eigen1 next to the Betti formula for the standard line and point families."""
import argparse

from alexmod import arrangements as arr

FAMILIES = {
    "points": arr.points_in_line,
    "concurrent": arr.concurrent_lines,
    "generic": arr.generic_lines,
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-d", type=int, default=3)
    ap.add_argument("--max-d", type=int, default=5)
    ap.add_argument("--family", choices=sorted(FAMILIES), action="append")
    args = ap.parse_args(argv)
    print(f"{'family':<12}{'d':>3}  {'betti':<14}{'j':>2}{'eigen1':>8}{'formula':>9}{'m':>4}")
    for name in args.family or list(FAMILIES):
        for d in range(args.min_d, args.max_d + 1):
            rep = arr.arrangement_report(FAMILIES[name](d))
            for r in rep.records:
                flag = "" if r.agrees else "  differs"
                print(f"{name:<12}{d:>3}  {str(list(rep.betti)):<14}{r.j:>2}{r.eigen1:>8}"
                      f"{r.formula:>9}{r.stabilized_at_m:>4}{flag}")


if __name__ == "__main__":
    main()
