"""JSON input files: complexes, presentations, CDGAs and arrangements."""
from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction
from pathlib import Path

from .arrangements import Arrangement, Hyperplane
from .complexes import FreeRChainComplex, GroupPresentation
from .errors import InputTooLarge, ParseError
from .poly import _Scanner, parse_laurent, parse_rational
from .snf import RMatrix
from .thickening import CDGA, EtaClass

DEFAULT_MAX_DIM = 4096


def max_dim() -> int:
    raw = os.environ.get("ALEXMOD_MAX_DIM")
    if not raw:
        return DEFAULT_MAX_DIM
    try:
        return int(raw)
    except ValueError as exc:
        raise ParseError(f"ALEXMOD_MAX_DIM must be an integer, got {raw!r}") from exc


def guard_size(n: int, what: str):
    cap = max_dim()
    if n > cap:
        raise InputTooLarge(f"{what} has total Q-dimension {n}, above ALEXMOD_MAX_DIM={cap}")


def read_json(path) -> tuple:
    """Return (parsed object, sha256 hex digest of the raw bytes)."""
    raw = Path(path).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    try:
        data = json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise ParseError(f"file is not UTF-8: {exc}", where=str(path)) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno, where=str(path)) from exc
    return data, digest


def _require(data, key, kind, where):
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", where=where)
    if key not in data:
        raise ParseError(f"missing key {key!r}", where=where)
    value = data[key]
    if not isinstance(value, kind):
        raise ParseError(f"{key!r} must be a {kind.__name__ if isinstance(kind, type) else kind}", where=where)
    return value


def _laurent_at(text, where):
    try:
        return parse_laurent(text)
    except ParseError as exc:
        raise ParseError(str(exc), where=where) from None


def _int_key(k, where) -> int:
    try:
        return int(k)
    except (TypeError, ValueError):
        raise ParseError(f"degree key {k!r} is not an integer", where=where) from None


def complex_from_json(data) -> FreeRChainComplex:
    ranks_raw = _require(data, "ranks", dict, "complex")
    ranks = {}
    for k, v in ranks_raw.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ParseError(f"rank of degree {k} must be a nonnegative integer", where="ranks")
        ranks[_int_key(k, "ranks")] = v
    guard_size(sum(ranks.values()), "complex")
    bds = {}
    for k, rows in data.get("boundaries", {}).items():
        j = _int_key(k, "boundaries")
        if not isinstance(rows, list):
            raise ParseError("boundary must be a list of rows", where=f"boundaries.{k}")
        parsed = []
        for i, row in enumerate(rows):
            if not isinstance(row, list):
                raise ParseError("row must be a list", where=f"boundaries.{k}[{i}]")
            parsed.append([_laurent_at(x, f"boundaries.{k}[{i}][{c}]") for c, x in enumerate(row)])
        width = ranks.get(j, 0)
        if parsed and any(len(r) != len(parsed[0]) for r in parsed):
            raise ParseError("ragged boundary matrix", where=f"boundaries.{k}")
        bds[j] = RMatrix(len(parsed), len(parsed[0]) if parsed else width, parsed)
    return FreeRChainComplex(ranks, bds)


def complex_to_json(C: FreeRChainComplex) -> dict:
    return {
        "ranks": {str(k): v for k, v in C.ranks.items()},
        "boundaries": {str(j): m.to_strings() for j, m in C.boundaries.items()},
    }


def presentation_from_json(data) -> GroupPresentation:
    gens = _require(data, "generators", list, "presentation")
    if not all(isinstance(g, str) and g for g in gens):
        raise ParseError("generators must be nonempty strings", where="generators")
    if len(set(gens)) != len(gens):
        raise ParseError("duplicate generator names", where="generators")
    rels = data.get("relators", [])
    if not isinstance(rels, list) or not all(isinstance(r, str) for r in rels):
        raise ParseError("relators must be a list of strings", where="relators")
    eps = _require(data, "epsilon", dict, "presentation")
    for g, v in eps.items():
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError(f"epsilon of {g!r} must be an integer", where="epsilon")
    P = GroupPresentation(tuple(gens), tuple(rels), eps)
    for i, r in enumerate(rels):
        try:
            P.words()[i]
        except ParseError as exc:
            raise ParseError(str(exc), where=f"relators[{i}]") from None
    return P


def parse_linear_combination(text: str, names) -> dict:
    """Parse ``2*e1 - 1/2*e2 + e3`` into {name: Fraction}."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {text!r}")
    names = sorted(names, key=len, reverse=True)
    sc = _Scanner(text)
    if not sc.peek():
        sc.error("empty linear combination")
    out: dict = {}
    first = True
    while sc.peek():
        sign = 1
        ch = sc.peek()
        if ch in ("+", "-"):
            sign = -1 if ch == "-" else 1
            sc.pos += 1
        elif not first:
            sc.error(f"expected '+' or '-', found {ch!r}")
        coeff = Fraction(1)
        # a basis name may itself be numeric (an OS unit called "1")
        bare = next((n for n in names if text.startswith(n, sc.pos)
                     and not text.startswith("*", sc.pos + len(n))
                     and not text.startswith("/", sc.pos + len(n))), None)
        if sc.peek().isdigit() and bare is None:
            coeff = sc.number()
            if sc.peek() != "*":
                sc.error("expected '*' between coefficient and name")
            sc.pos += 1
            sc.skip()
        name = next((n for n in names if text.startswith(n, sc.pos)), None)
        if name is None:
            sc.error("expected a basis name")
        end = sc.pos + len(name)
        if end < len(text) and (text[end].isalnum() or text[end] == "_"):
            sc.error("unknown basis name")
        sc.pos = end
        out[name] = out.get(name, Fraction(0)) + sign * coeff
        first = False
    return out


def cdga_from_json(data) -> CDGA:
    """Read a CDGA file.

    Only one ordering of each product needs to be listed: when (b, a) is
    omitted it is filled in by graded commutativity. Pairs missing in both
    orders are zero.
    """
    basis_raw = _require(data, "basis", list, "cdga")
    basis = []
    for i, b in enumerate(basis_raw):
        name = _require(b, "name", str, f"basis[{i}]")
        deg = _require(b, "degree", int, f"basis[{i}]")
        if deg < 0:
            raise ParseError("degrees must be nonnegative", where=f"basis[{i}]")
        basis.append((name, deg))
    names = [n for n, _ in basis]
    if len(set(names)) != len(names):
        raise ParseError("duplicate basis names", where="basis")
    guard_size(len(basis), "cdga")
    unit_name = _require(data, "unit", str, "cdga")
    if unit_name not in names:
        raise ParseError(f"unit {unit_name!r} is not a basis name", where="unit")
    index = {n: i for i, n in enumerate(names)}
    products = {}
    for i, p in enumerate(data.get("products", [])):
        where = f"products[{i}]"
        left = _require(p, "left", str, where)
        right = _require(p, "right", str, where)
        for side in (left, right):
            if side not in index:
                raise ParseError(f"unknown basis name {side!r}", where=where)
        value = p.get("value", "0")
        if value == "0" or value == 0:
            vec = [Fraction(0)] * len(names)
        else:
            try:
                combo = parse_linear_combination(value, names)
            except ParseError as exc:
                raise ParseError(str(exc), where=where) from None
            vec = [combo.get(n, Fraction(0)) for n in names]
        products[(index[left], index[right])] = tuple(vec)
    for (i, j), v in list(products.items()):
        if (j, i) not in products:
            sign = (-1) ** (basis[i][1] * basis[j][1])
            products[(j, i)] = tuple(sign * x for x in v)
    return CDGA(tuple(basis), products, unit=index[unit_name])


def cdga_to_json(K: CDGA) -> dict:
    from .poly import format_rational

    names = [n for n, _ in K.basis]

    def combo(v):
        terms = []
        for n, c in zip(names, v):
            if c:
                terms.append((c, n))
        parts = []
        for c, n in terms:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = n if a == 1 else f"{format_rational(a)}*{n}"
            parts.append(f"{sign} {body}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    return {
        "basis": [{"name": n, "degree": d} for n, d in K.basis],
        "unit": names[K.unit],
        "products": [
            {"left": names[i], "right": names[j], "value": combo(v)}
            for (i, j), v in sorted(K.products.items())
        ],
    }


def eta_from_expression(K: CDGA, text: str) -> EtaClass:
    deg1 = [K.basis[i][0] for i in K.in_degree(1)]
    combo = parse_linear_combination(text, [n for n, _ in K.basis])
    stray = [n for n in combo if n not in deg1]
    if stray:
        raise ParseError(f"eta must be a combination of degree-1 elements, got {stray}")
    return EtaClass(tuple(combo.get(n, Fraction(0)) for n in deg1))


def arrangement_from_json(data) -> Arrangement:
    n = _require(data, "ambient_dim", int, "arrangement")
    if n < 1:
        raise ParseError("ambient_dim must be positive", where="ambient_dim")
    hs_raw = _require(data, "hyperplanes", list, "arrangement")
    if len(hs_raw) > 12:
        guard_size(2 ** len(hs_raw), "arrangement exterior algebra")
    hs = []
    for i, h in enumerate(hs_raw):
        where = f"hyperplanes[{i}]"
        normal = _require(h, "normal", list, where)
        try:
            normal = tuple(parse_rational(x) for x in normal)
            offset = parse_rational(h.get("offset", "0"))
        except ParseError as exc:
            raise ParseError(str(exc), where=where) from None
        mult = h.get("multiplicity", 1)
        if not isinstance(mult, int) or isinstance(mult, bool):
            raise ParseError("multiplicity must be an integer", where=where)
        hs.append(Hyperplane(normal, offset, mult))
    return Arrangement(n, tuple(hs))


def arrangement_to_json(A: Arrangement) -> dict:
    from .poly import format_rational

    return {
        "ambient_dim": A.ambient_dim,
        "hyperplanes": [
            {
                "normal": [format_rational(x) for x in h.normal],
                "offset": format_rational(h.offset),
                "multiplicity": h.multiplicity,
            }
            for h in A.hyperplanes
        ],
    }


def presentation_to_json(P: GroupPresentation) -> dict:
    return {"generators": list(P.generators), "relators": list(P.relators), "epsilon": dict(P.epsilon)}


def detect_kind(data) -> str:
    if isinstance(data, dict):
        if "ranks" in data:
            return "complex"
        if "generators" in data:
            return "presentation"
        if "hyperplanes" in data:
            return "arrangement"
        if "basis" in data:
            return "cdga"
    raise ParseError("cannot tell what kind of input this file holds")
