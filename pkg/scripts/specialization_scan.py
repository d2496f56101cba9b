"""Scan dim H_j(C at t = lambda) over roots of unity and small rationals.

The jumps above the generic rank sit exactly at roots of the torsion
characteristic polynomial; the scan makes that visible for a fixture.
"""
import argparse
from fractions import Fraction

from alexmod.complexes import SpecializationPoint, fox_complex, generic_rank, specialize
from alexmod.fixtures import fixture_path
from alexmod.io import complex_from_json, detect_kind, presentation_from_json, read_json


def load_complex(path):
    data, _ = read_json(path)
    if detect_kind(data) == "presentation":
        return fox_complex(presentation_from_json(data)), [0, 1]
    C = complex_from_json(data)
    return C, sorted(C.ranks)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("path", nargs="?", default=str(fixture_path("presentations", "concurrent3")))
    ap.add_argument("--max-order", type=int, default=8)
    ap.add_argument("--rationals", default="2,-1,1/2,3")
    args = ap.parse_args(argv)
    C, degrees = load_complex(args.path)
    points = [SpecializationPoint.root_of_unity(d) for d in range(1, args.max_order + 1)]
    points += [SpecializationPoint.rational(Fraction(x)) for x in args.rationals.split(",")]
    print("point".ljust(18) + "".join(f"H_{j:<4}" for j in degrees))
    print("generic".ljust(18) + "".join(f"{generic_rank(C, j):<6}" for j in degrees))
    for p in points:
        dims = [specialize(C, p, j) for j in degrees]
        jumps = ["*" if v > generic_rank(C, j) else " " for v, j in zip(dims, degrees)]
        print(str(p).ljust(18) + "".join(f"{v}{s:<5}" for v, s in zip(dims, jumps)))


if __name__ == "__main__":
    main()
