"""Regenerate the shipped JSON fixtures under src/alexmod/data/."""
import json
from pathlib import Path

from alexmod import arrangements as arr
from alexmod import complexes as cx
from alexmod.arrangements import build_os_algebra
from alexmod.io import arrangement_to_json, cdga_to_json, complex_to_json, presentation_to_json

DATA = Path(__file__).resolve().parents[1] / "src" / "alexmod" / "data"


def write(rel, obj):
    path = DATA / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=2) + "\n")
    print("wrote", path.relative_to(DATA))


def main():
    # complexes
    for d in range(3, 7):
        write(f"complexes/wedge{d}.json", complex_to_json(cx.wedge_of_circles(d)))
    write("complexes/circle.json", {"ranks": {"0": 1, "1": 1}, "boundaries": {"1": [["t-1"]]}})
    write("complexes/zero_boundaries.json", {"ranks": {"0": 1, "1": 1}, "boundaries": {"1": [["0"]]}})
    write("complexes/unipotent_block.json",
          {"ranks": {"0": 1, "1": 1}, "boundaries": {"1": [["1 - 2*t + t^2"]]}})
    write("complexes/empty.json", {"ranks": {}, "boundaries": {}})

    # presentations
    for d in range(3, 7):
        write(f"presentations/free{d}.json", presentation_to_json(cx.free_group_presentation(d)))
    write("presentations/z.json", {"generators": ["a"], "relators": [], "epsilon": {"a": 1}})
    for d in (3, 4):
        write(f"presentations/concurrent{d}.json", presentation_to_json(cx.concurrent_lines_presentation(d)))
    write("presentations/concurrent3_eps211.json",
          presentation_to_json(cx.concurrent_lines_presentation(3, [2, 1, 1])))
    write("presentations/generic3.json", presentation_to_json(cx.generic_lines_presentation(3)))
    write("presentations/trefoil.json",
          {"generators": ["x", "y"], "relators": ["x y x y^-1 x^-1 y^-1"], "epsilon": {"x": 1, "y": 1}})

    # arrangements and their OS algebras
    arrs = {f"points{d}": arr.points_in_line(d) for d in range(3, 7)}
    arrs.update({
        "concurrent3": arr.concurrent_lines(3),
        "concurrent4": arr.concurrent_lines(4),
        "concurrent3_eps211": arr.concurrent_lines(3, [2, 1, 1]),
        "generic3": arr.generic_lines(3),
        "generic4": arr.generic_lines(4),
    })
    for name, A in arrs.items():
        write(f"arrangements/{name}.json", arrangement_to_json(A))
    for name in ("points3", "concurrent3", "generic3"):
        write(f"cdgas/{name}_os.json", cdga_to_json(build_os_algebra(arrs[name]).cdga))
    write("cdgas/rationals.json", {"basis": [{"name": "u", "degree": 0}], "unit": "u",
                                   "products": [{"left": "u", "right": "u", "value": "u"}]})

    # inputs that must be rejected
    write("invalid/not_a_complex.json",
          {"ranks": {"0": 1, "1": 1, "2": 1}, "boundaries": {"1": [["t-1"]], "2": [["1"]]}})
    write("invalid/figure_eight.json",
          {"generators": ["x", "y"], "relators": ["y^-1 x y x^-1 y x y^-1 x^-1 y x^-1"],
           "epsilon": {"x": 1, "y": 1}})
    write("invalid/eps_not_surjective.json",
          {"generators": ["a", "b"], "relators": [], "epsilon": {"a": 2, "b": 4}})
    write("invalid/points3_eps0.json", arrangement_to_json(arr.points_in_line(3, [1, 0, 1])))
    write("invalid/duplicate_hyperplanes.json",
          {"ambient_dim": 1, "hyperplanes": [{"normal": ["1"], "offset": "0", "multiplicity": 1},
                                             {"normal": ["2"], "offset": "0", "multiplicity": 1}]})
    write("invalid/bad_syntax.json", None)
    (DATA / "invalid/bad_syntax.json").write_text('{"ranks": {"0": 1,\n  "1": }\n}\n')


if __name__ == "__main__":
    main()
