"""Finite free chain complexes over R and the Fox calculus.

A complex is stored homologically: ``boundaries[j]`` maps degree j to
degree j-1 and has shape ranks[j-1] x ranks[j].
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import EpsilonInconsistent, EpsilonNotSurjective, NotAComplex, ParseError
from .modules import PresentedRModule, TorsionModule, decompose, t_minus_one_dims
from .numberfield import CyclotomicField, RationalField, field_rank
from .poly import LAURENT_ONE, LAURENT_ZERO, LaurentPoly
from .snf import CancelToken, RMatrix, rank_over_fraction_field, smith_normal_form


@dataclass(frozen=True)
class FreeRChainComplex:
    ranks: dict
    boundaries: dict = field(default_factory=dict)

    def __post_init__(self):
        ranks = {int(k): int(v) for k, v in self.ranks.items()}
        if any(v < 0 for v in ranks.values()):
            raise NotAComplex("negative rank")
        bds = {}
        for j, mat in self.boundaries.items():
            j = int(j)
            if not isinstance(mat, RMatrix):
                try:
                    mat = RMatrix.from_rows(mat, cols=ranks.get(j, 0))
                except ValueError as exc:
                    raise NotAComplex(f"boundary {j}: {exc}") from None
            want = (ranks.get(j - 1, 0), ranks.get(j, 0))
            if (mat.rows, mat.cols) != want:
                raise NotAComplex(
                    f"boundary {j} has shape {mat.rows}x{mat.cols}, expected {want[0]}x{want[1]}"
                )
            bds[j] = mat
        object.__setattr__(self, "ranks", dict(sorted(ranks.items())))
        object.__setattr__(self, "boundaries", bds)
        for j in self.degrees():
            if j - 1 in self.ranks:
                comp = self.boundary(j - 1) @ self.boundary(j)
                if not comp.is_zero():
                    raise NotAComplex(f"not a complex: boundary {j - 1} o boundary {j} is nonzero")

    def degrees(self) -> list:
        return list(self.ranks)

    def rank(self, j: int) -> int:
        return self.ranks.get(j, 0)

    def boundary(self, j: int) -> RMatrix:
        if j in self.boundaries:
            return self.boundaries[j]
        return RMatrix.zero(self.rank(j - 1), self.rank(j))

    def permuted(self, perms: dict) -> FreeRChainComplex:
        """Reorder the basis in each degree (perms[j] is a permutation list)."""
        def perm(j):
            return perms.get(j, list(range(self.rank(j))))

        return FreeRChainComplex(
            self.ranks,
            {j: self.boundary(j).permuted(perm(j - 1), perm(j)) for j in self.ranks},
        )

    def total_rank(self) -> int:
        return sum(self.ranks.values())


def homology(C: FreeRChainComplex, j: int, cancel: CancelToken | None = None) -> PresentedRModule:
    """Presentation of ker d_j / im d_{j+1}.

    The kernel basis is read off the right transformation of the Smith form
    of d_j, and the relations are the coordinates of im d_{j+1} in it.
    """
    n = C.rank(j)
    dj = C.boundary(j)
    dj1 = C.boundary(j + 1)
    snf = smith_normal_form(dj, cancel)
    k = snf.rank
    if n == 0:
        return PresentedRModule(0, RMatrix(0, dj1.cols))
    coords = snf.right_inv @ dj1
    rel = coords.submatrix(range(k, n), range(dj1.cols))
    return PresentedRModule(n - k, rel)


# --------------------------------------------------------------------------
# group presentations and Fox calculus


_EXPONENT = re.compile(r"\^\s*([+-]?)\s*(\d+)")


def parse_word(word: str, generators) -> list:
    """Parse a relator into a list of (generator, +1/-1) letters.

    Grammar: juxtaposed generator names, each optionally followed by
    ``^k`` with k a nonzero integer. Identifiers that are not generator
    names are split greedily into known names, so ``aba^-1b^-1`` works
    for single-letter generators.
    """
    gens = sorted(set(generators), key=len, reverse=True)
    text = word
    if not text.strip():
        raise ParseError("empty relator", text=text, pos=0)
    if text.strip() == "1":
        return []
    letters = []
    pos = 0
    last = None
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] == "^":
            if last is None:
                raise ParseError("exponent without a generator", text=text, pos=pos)
            m = _EXPONENT.match(text, pos)
            if not m:
                raise ParseError("malformed exponent", text=text, pos=pos)
            k = int(m.group(2)) * (-1 if m.group(1) == "-" else 1)
            if k == 0:
                raise ParseError("zero exponent", text=text, pos=pos)
            gname = last
            letters.pop()
            sign = 1 if k > 0 else -1
            letters.extend([(gname, sign)] * abs(k))
            last = None
            pos = m.end()
            continue
        name = next((g for g in gens if text.startswith(g, pos)), None)
        if name is None:
            raise ParseError(f"unknown generator at {text[pos:pos + 8]!r}", text=text, pos=pos)
        letters.append((name, 1))
        last = name
        pos += len(name)
    return letters


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple
    epsilon: dict

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        eps = {g: int(self.epsilon[g]) for g in self.generators if g in self.epsilon}
        missing = [g for g in self.generators if g not in eps]
        if missing:
            raise ParseError(f"epsilon missing for generators {missing}")
        object.__setattr__(self, "epsilon", eps)

    def words(self) -> list:
        return [parse_word(r, self.generators) for r in self.relators]

    def word_epsilon(self, letters) -> int:
        return sum(self.epsilon[g] * s for g, s in letters)

    def check(self):
        g = 0
        for v in self.epsilon.values():
            g = math.gcd(g, v)
        if g != 1:
            raise EpsilonNotSurjective(f"gcd of epsilon values is {g}, not 1")
        for r, w in zip(self.relators, self.words()):
            e = self.word_epsilon(w)
            if e != 0:
                raise EpsilonInconsistent(f"relator {r!r} has epsilon-image {e}, expected 0")


def fox_derivative(letters, x: str, epsilon: dict) -> LaurentPoly:
    """Abelianized Fox derivative d(word)/dx with generators sent to t^eps."""
    acc = LAURENT_ZERO
    prefix = 0
    for g, s in letters:
        if s > 0:
            if g == x:
                acc = acc + LaurentPoly.t(prefix)
            prefix += epsilon[g]
        else:
            prefix -= epsilon[g]
            if g == x:
                acc = acc - LaurentPoly.t(prefix)
    return acc


def fox_complex(P: GroupPresentation) -> FreeRChainComplex:
    """R^relators -> R^generators -> R, the presentation complex of the cover."""
    P.check()
    words = P.words()
    n = len(P.generators)
    d1 = RMatrix.from_rows([[LaurentPoly.t(P.epsilon[g]) - LAURENT_ONE for g in P.generators]], cols=n)
    d2 = RMatrix(
        n,
        len(words),
        [[fox_derivative(w, g, P.epsilon) for w in words] for g in P.generators],
    )
    return FreeRChainComplex({0: 1, 1: n, 2: len(words)}, {1: d1, 2: d2})


# --------------------------------------------------------------------------
# specialization t -> lambda


@dataclass(frozen=True)
class SpecializationPoint:
    kind: str
    value: Fraction = None
    order: int = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.value is None or Fraction(self.value) == 0:
                raise ValueError("rational specialization point must be nonzero")
            object.__setattr__(self, "value", Fraction(self.value))
        elif self.kind == "root_of_unity":
            if self.order is None or int(self.order) < 1:
                raise ValueError("root of unity order must be >= 1")
        elif self.kind != "generic":
            raise ValueError(f"unknown specialization kind {self.kind!r}")

    @classmethod
    def rational(cls, v) -> SpecializationPoint:
        return cls("rational", value=Fraction(v))

    @classmethod
    def root_of_unity(cls, d: int) -> SpecializationPoint:
        return cls("root_of_unity", order=int(d))

    @classmethod
    def generic(cls) -> SpecializationPoint:
        return cls("generic")

    def __str__(self):
        if self.kind == "rational":
            return f"rational:{self.value}"
        if self.kind == "root_of_unity":
            return f"root-of-unity:{self.order}"
        return "generic"


def parse_point(text: str) -> SpecializationPoint:
    from .poly import parse_rational

    if text == "generic":
        return SpecializationPoint.generic()
    kind, _, arg = text.partition(":")
    if kind in ("root-of-unity", "root_of_unity"):
        try:
            return SpecializationPoint.root_of_unity(int(arg))
        except ValueError as exc:
            raise ParseError(f"bad root of unity order {arg!r}") from exc
    if kind == "rational":
        v = parse_rational(arg)
        if v == 0:
            raise ParseError("rational specialization point must be nonzero")
        return SpecializationPoint.rational(v)
    raise ParseError(f"unknown specialization {text!r}")


def _specialized_rank(mat: RMatrix, p: SpecializationPoint) -> int:
    if mat.rows == 0 or mat.cols == 0:
        return 0
    if p.kind == "generic":
        return rank_over_fraction_field(mat)
    if p.kind == "rational":
        f = RationalField()
        return field_rank(mat.map(lambda x: x(p.value)), f)
    f = CyclotomicField(p.order)
    return field_rank(mat.map(f.embed_laurent), f)


def specialize(C: FreeRChainComplex, p: SpecializationPoint, j: int) -> int:
    """dim H_j of C with t specialized to p (rank over Q(t) for generic)."""
    return C.rank(j) - _specialized_rank(C.boundary(j), p) - _specialized_rank(C.boundary(j + 1), p)


def generic_rank(C: FreeRChainComplex, j: int) -> int:
    return specialize(C, SpecializationPoint.generic(), j)


# --------------------------------------------------------------------------
# Milnor sequence and the eigenvalue-1 formula


@dataclass(frozen=True)
class MilnorReport:
    degree: int
    specialized_at_one: int
    coker_t_minus_one: int
    ker_t_minus_one_below: int

    @property
    def rhs(self) -> int:
        return self.coker_t_minus_one + self.ker_t_minus_one_below

    @property
    def holds(self) -> bool:
        return self.specialized_at_one == self.rhs


def coker_t_minus_one(free_rank: int, torsion: TorsionModule) -> int:
    return free_rank + t_minus_one_dims(torsion)[1]


def ker_t_minus_one(torsion: TorsionModule) -> int:
    return t_minus_one_dims(torsion)[0]


def milnor_consistency(C: FreeRChainComplex, j: int) -> MilnorReport:
    """Compare dim H_j(C at t=1) with coker(t-1 | H_j) + ker(t-1 | H_{j-1})."""
    lhs = specialize(C, SpecializationPoint.rational(1), j)
    free_j, tors_j = decompose(homology(C, j))
    _, tors_below = decompose(homology(C, j - 1))
    return MilnorReport(j, lhs, coker_t_minus_one(free_j, tors_j), ker_t_minus_one(tors_below))


def eigen1_dimension_formula(b, r, j: int) -> int:
    """sum_{l<=j} (-1)^(l+j) (b_l - r_l)."""
    if len(b) <= j or len(r) <= j:
        raise ValueError(f"Betti and rank lists must cover degrees 0..{j}")
    return sum((-1) ** (l + j) * (b[l] - r[l]) for l in range(j + 1))


# --------------------------------------------------------------------------
# standard complexes


def wedge_of_circles(k: int) -> FreeRChainComplex:
    """Cellular chains of the infinite cyclic cover of a wedge of k circles, eps = 1."""
    return FreeRChainComplex({0: 1, 1: k}, {1: [["t-1"] * k]})


def free_group_presentation(k: int, eps=None) -> GroupPresentation:
    gens = tuple(f"x{i + 1}" for i in range(k))
    eps = eps or [1] * k
    return GroupPresentation(gens, (), dict(zip(gens, eps)))


def concurrent_lines_presentation(d: int, eps=None) -> GroupPresentation:
    """pi_1 of d lines through the origin in C^2 on meridians x1..xd.

    The product x1...xd is central; the group is Z x F_{d-1}.
    """
    gens = tuple(f"x{i + 1}" for i in range(d))
    w = " ".join(gens)
    winv = " ".join(f"{g}^-1" for g in reversed(gens))
    rels = tuple(f"{w} {g} {winv} {g}^-1" for g in gens[:-1])
    return GroupPresentation(gens, rels, dict(zip(gens, eps or [1] * d)))


def generic_lines_presentation(d: int, eps=None) -> GroupPresentation:
    """pi_1 of d lines in general position in C^2: free abelian of rank d."""
    gens = tuple(f"x{i + 1}" for i in range(d))
    rels = tuple(
        f"{a} {b} {a}^-1 {b}^-1" for i, a in enumerate(gens) for b in gens[i + 1 :]
    )
    return GroupPresentation(gens, rels, dict(zip(gens, eps or [1] * d)))
