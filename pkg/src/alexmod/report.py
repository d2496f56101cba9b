"""Reports: plain dicts of exact values, canonical JSON and a text rendering.

Every number in a report is an int or a string (Laurent polynomials and
rationals in the input grammar), so the JSON form never holds a float.
Hodge-theoretic conclusions are never computed here; they sit under a
separate ``citations`` key and are printed with a ``[cited]`` marker.
"""
from __future__ import annotations

import json

from . import __version__
from .arrangements import ArrangementReport
from .complexes import (
    FreeRChainComplex,
    SpecializationPoint,
    generic_rank,
    homology,
    milnor_consistency,
    specialize,
)
from .errors import NotQuasiUnipotent
from .io import guard_size
from .modules import (
    TorsionModule,
    decompose,
    eigenspace_decomposition,
    find_N,
    is_semisimple,
    is_semisimple_on,
    jordan_chevalley,
    log_tN_action,
)
from . import linalg as la
from .snf import CancelToken

CITE_SEMISIMPLE = (
    "t_ss acts on Tors H_{j} by automorphisms of mixed Hodge structure, so each "
    "generalized eigenspace is a sub-MHS"
)
CITE_LOG = (
    "multiplication by log(t^{N}) is a morphism of mixed Hodge structure from "
    "Tors H_{j} to its -1st Tate twist"
)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _check_no_floats(obj):
    if isinstance(obj, float):
        raise TypeError("reports must not contain floats")
    if isinstance(obj, dict):
        for v in obj.values():
            _check_no_floats(v)
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            _check_no_floats(v)


def envelope(command: str, digest: str | None, body: dict) -> dict:
    out = {"command": command, "version": __version__}
    if digest is not None:
        out["input_digest"] = f"sha256:{digest}"
    out.update(body)
    _check_no_floats(out)
    return out


# --------------------------------------------------------------------------
# module-theory records


def torsion_record(T: TorsionModule) -> dict:
    """N, characteristic polynomial and the eigenspace table of a torsion module."""
    rec = {
        "torsion_qdim": T.qdim,
        "char_poly": T.char_poly().format("t"),
    }
    if T.qdim == 0:
        rec.update({"N": 1, "semisimple": True, "eigenspaces": []})
        return rec
    N = find_N(T)
    jc = jordan_chevalley(T)
    eig = eigenspace_decomposition(T, jc, N)
    table = []
    for c in eig.components:
        table.append({
            "order": c.order,
            "factor": c.g.format("t"),
            "dim": c.dim,
            "semisimple": is_semisimple_on(T, c.g, jc),
        })
    log = log_tN_action(T, N, T.qdim)
    rec.update({
        "N": N,
        "semisimple": is_semisimple(T),
        "eigenspaces": table,
        "log_tN_nilpotent": la.is_nilpotent(log),
        "eigenspace_dims_sum_to_qdim": sum(e["dim"] for e in table) == T.qdim,
    })
    return rec


def complex_report(C: FreeRChainComplex, max_degree: int | None = None, cancel: CancelToken | None = None) -> dict:
    """Per-degree Alexander module report for a free R-complex.

    The eigenvalue-1 formula column is the alternating sum of
    dim H_l(t=1) - rank H_l over l <= j; it equals the eigenvalue-1
    dimension whenever the eigenvalue-1 parts in degrees <= j are
    semisimple, which is reported alongside.
    """
    degrees = [j for j in C.degrees() if max_degree is None or j <= max_degree]
    records = []
    citations = []
    betti, ranks, eigen1_ss = [], [], []
    lo = min(C.degrees(), default=0)
    for j in range(lo, (max(degrees) + 1) if degrees else lo):
        if j not in C.ranks:
            continue
        H = homology(C, j, cancel)
        free_rank, T = decompose(H, cancel)
        guard_size(T.qdim, f"Tors H_{j}")
        try:
            trec = torsion_record(T)
        except NotQuasiUnipotent as exc:
            raise NotQuasiUnipotent(f"{exc.factor} (in H_{j})") from None
        milnor = milnor_consistency(C, j)
        g = generic_rank(C, j)
        b = specialize(C, SpecializationPoint.rational(1), j)
        betti.append(b)
        ranks.append(g)
        one = next((e for e in trec["eigenspaces"] if e["order"] == 1), None)
        eigen1 = one["dim"] if one else 0
        eigen1_ss.append(one["semisimple"] if one else True)
        formula = sum((-1) ** (i + len(betti) - 1) * (bb - rr) for i, (bb, rr) in enumerate(zip(betti, ranks)))
        rec = {
            "degree": j,
            "free_rank": free_rank,
            "invariant_factors": [str(f) for f in T.invariant_factors],
            **trec,
            "eigen1": eigen1,
            "eigen1_formula": formula,
            "eigen1_formula_applies": all(eigen1_ss),
            "consistency": {
                "generic_rank": g,
                "generic_rank_equals_free_rank": g == free_rank,
                "milnor": {
                    "dim_at_t_equals_1": milnor.specialized_at_one,
                    "coker_t_minus_1": milnor.coker_t_minus_one,
                    "ker_t_minus_1_below": milnor.ker_t_minus_one_below,
                    "holds": milnor.holds,
                },
            },
        }
        records.append(rec)
        if T.qdim:
            citations.append({"degree": j, "statement": CITE_SEMISIMPLE.format(j=j)})
            citations.append({"degree": j, "statement": CITE_LOG.format(j=j, N=trec["N"])})
    return {"degrees": records, "citations": citations}


def specialization_report(C: FreeRChainComplex, point: SpecializationPoint, degrees=None) -> dict:
    degrees = C.degrees() if degrees is None else degrees
    rows = []
    for j in degrees:
        rows.append({
            "degree": j,
            "dim": specialize(C, point, j),
            "generic_rank": generic_rank(C, j),
        })
    return {"point": str(point), "degrees": rows, "citations": []}


def arrangement_report_dict(rep: ArrangementReport) -> dict:
    records = []
    citations = []
    for r in rep.records:
        records.append({
            "j": r.j,
            "cohomological_degree": r.j + 1,
            "eigen1": r.eigen1,
            "eigen1_formula": r.formula,
            "agrees": r.agrees,
            "stabilized_at_m": r.stabilized_at_m,
        })
        citations.append({"degree": r.j, "statement": r.label})
    return {
        "betti": list(rep.betti),
        "rank": rep.rank,
        "multiplicities": list(rep.multiplicities),
        "degrees": records,
        "all_agree": rep.all_agree,
        "citations": citations,
    }


# --------------------------------------------------------------------------
# text rendering


def _render_value(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_render_value(x) for x in v) + "]"
    return str(v)


def render_text(report: dict) -> str:
    lines = [f"alexmod {report.get('command', '')}"]
    if "input_digest" in report:
        lines.append(f"input: {report['input_digest']}")
    for key in ("point", "betti", "rank", "multiplicities", "all_agree"):
        if key in report:
            lines.append(f"{key}: {_render_value(report[key])}")
    degrees = report.get("degrees", [])
    if not degrees and "checks" not in report:
        lines.append("(no degrees)")
    for rec in degrees:
        label = rec.get("degree", rec.get("j"))
        lines.append("")
        lines.append(f"degree {label}")
        for k, v in rec.items():
            if k in ("degree", "j", "eigenspaces", "consistency"):
                continue
            lines.append(f"  {k}: {_render_value(v)}")
        if rec.get("eigenspaces"):
            lines.append("  eigenspaces:")
            for e in rec["eigenspaces"]:
                flag = "semisimple" if e["semisimple"] else "NOT semisimple"
                lines.append(f"    Phi_{e['order']} = {e['factor']}: dim {e['dim']}, {flag}")
        if "consistency" in rec:
            c = rec["consistency"]
            m = c["milnor"]
            lines.append(
                f"  milnor check: {m['dim_at_t_equals_1']} = {m['coker_t_minus_1']} + "
                f"{m['ker_t_minus_1_below']} ({'ok' if m['holds'] else 'FAILED'})"
            )
            lines.append(
                f"  generic rank: {c['generic_rank']} "
                f"({'matches' if c['generic_rank_equals_free_rank'] else 'DIFFERS FROM'} free rank)"
            )
    for chk in report.get("checks", []):
        status = "PASS" if chk["passed"] else "FAIL"
        lines.append(f"{status}  {chk['name']}  {chk.get('detail', '')}".rstrip())
    if "seed" in report:
        lines.append(f"seed: {report['seed']}")
    cites = report.get("citations", [])
    if cites:
        lines.append("")
        lines.append("cited from the literature, not computed:")
        for c in cites:
            lines.append(f"  [cited] degree {c['degree']}: {c['statement']}")
    return "\n".join(lines) + "\n"
