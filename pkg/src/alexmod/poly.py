"""Exact univariate, Laurent and truncated polynomials over Q.

Coefficients are :class:`fractions.Fraction`. All classes are immutable.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError

Rat = Fraction


@functools.total_ordering
class _NegInf:
    """Degree of the zero polynomial. Compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "NEG_INF"


NEG_INF = _NegInf()


def _rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _strip(coeffs: Iterable) -> tuple:
    c = [_rat(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _int_scaled(coeffs) -> tuple:
    """(integers, d) with coeffs[i] = integers[i] / d."""
    d = 1
    for c in coeffs:
        q = c.denominator
        if d % q:
            d = d * q // math.gcd(d, q)
    return [c.numerator * (d // c.denominator) for c in coeffs], d


class UniPoly:
    """Polynomial in one variable, coefficients listed from degree 0 up."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c) -> UniPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> UniPoly:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        return f"UniPoly({self.format('x')!r})"

    def __add__(self, other):
        other = _as_unipoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_unipoly(other))

    def __rsub__(self, other):
        return _as_unipoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        other = _as_unipoly(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        ia, da = _int_scaled(self.coeffs)
        ib, db = _int_scaled(other.coeffs)
        out = [0] * (len(ia) + len(ib) - 1)
        for i, a in enumerate(ia):
            if a:
                for j, b in enumerate(ib):
                    out[i + j] += a * b
        den = da * db
        return UniPoly(Fraction(c, den) for c in out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = UniPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = _as_unipoly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly(), self
        n = len(other.coeffs)
        ib, db = _int_scaled(other.coeffs)
        if db == 1 and ib[-1] == 1:
            # integer monic divisor: the remainder stays integral over one denominator
            b = ib[:-1]
            ir, dr = _int_scaled(rem)
            iq = [0] * (dq + 1)
            for k in range(dq, -1, -1):
                c = ir[k + n - 1]
                iq[k] = c
                if c:
                    for i, bi in enumerate(b):
                        if bi:
                            ir[k + i] -= c * bi
            return (UniPoly(Fraction(x, dr) for x in iq),
                    UniPoly(Fraction(x, dr) for x in ir[: n - 1]))
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + n - 1] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return UniPoly(quot), UniPoly(rem[: n - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: UniPoly) -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self) -> UniPoly:
        if self.is_zero():
            return self
        return self * (1 / self.lead())

    def derivative(self) -> UniPoly:
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: UniPoly, modulus: UniPoly | None = None) -> UniPoly:
        """self(inner), reduced mod ``modulus`` at every Horner step if given."""
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly((c,))
            if modulus is not None:
                acc = acc % modulus
        return acc

    def squarefree_part(self) -> UniPoly:
        if self.degree == NEG_INF or self.degree < 1:
            return self.monic()
        return (self // gcd(self, self.derivative())).monic()

    def is_squarefree(self) -> bool:
        if self.is_zero():
            return False
        return gcd(self, self.derivative()).degree == 0

    def format(self, var: str = "t") -> str:
        return _format_terms(((i, c) for i, c in enumerate(self.coeffs)), var)


def _as_unipoly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UniPoly((x,))
    raise TypeError(f"cannot coerce {type(x).__name__} to UniPoly")


def gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def ext_gcd(a: UniPoly, b: UniPoly):
    """Return (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = UniPoly((1,)), UniPoly()
    t0, t1 = UniPoly(), UniPoly((1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = 1 / r0.lead()
    return r0 * inv, s0 * inv, t0 * inv


def lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    if a.is_zero() or b.is_zero():
        return UniPoly()
    return (a * b // gcd(a, b)).monic()


def inverse_mod(a: UniPoly, modulus: UniPoly) -> UniPoly:
    g, u, _ = ext_gcd(a % modulus, modulus)
    if g.degree != 0:
        raise ZeroDivisionError("element is not invertible modulo the given polynomial")
    return u % modulus


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_terms(terms, var: str) -> str:
    parts = []
    for e, c in terms:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = _fmt_coeff(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{_fmt_coeff(a)}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# --------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Element ``t**valuation * body(t)`` of Q[t, t^-1].

    ``body`` has nonzero constant term unless the element is zero, in which
    case the valuation is 0.
    """

    __slots__ = ("valuation", "body")

    def __init__(self, valuation: int = 0, body: UniPoly | Sequence = ()):
        if not isinstance(body, UniPoly):
            body = UniPoly(body)
        if body.is_zero():
            valuation = 0
        else:
            shift = next(i for i, c in enumerate(body.coeffs) if c)
            if shift:
                body = UniPoly(body.coeffs[shift:])
                valuation += shift
        object.__setattr__(self, "valuation", int(valuation))
        object.__setattr__(self, "body", body)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_terms(cls, terms: dict) -> LaurentPoly:
        """Build from an ``{exponent: coefficient}`` mapping."""
        terms = {e: _rat(c) for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo = min(terms)
        hi = max(terms)
        return cls(lo, [terms.get(e, 0) for e in range(lo, hi + 1)])

    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def t(cls, k: int = 1) -> LaurentPoly:
        return cls(k, (1,))

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        return parse_laurent(text)

    @property
    def degree(self):
        """Euclidean degree: the degree of the body."""
        return self.body.degree

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def is_unit(self) -> bool:
        return self.body.degree == 0

    def terms(self):
        return {self.valuation + i: c for i, c in enumerate(self.body.coeffs) if c}

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.valuation == other.valuation and self.body == other.body
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(("LaurentPoly", self.valuation, self.body.coeffs))

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def __str__(self):
        return _format_terms(sorted(self.terms().items()), "t")

    def __add__(self, other):
        other = _as_laurent(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        v = min(self.valuation, other.valuation)
        a = UniPoly.monomial(self.valuation - v) * self.body
        b = UniPoly.monomial(other.valuation - v) * other.body
        return LaurentPoly(v, a + b)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.valuation, -self.body)

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.valuation, self.body * other)
        other = _as_laurent(other)
        return LaurentPoly(self.valuation + other.valuation, self.body * other.body)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            inv = self.unit_inverse()
            return inv ** (-k)
        return LaurentPoly(self.valuation * k, self.body**k)

    def unit_inverse(self) -> LaurentPoly:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Q[t, t^-1]")
        return LaurentPoly(-self.valuation, (1 / self.body.coeffs[0],))

    def euclid(self, divisor: LaurentPoly):
        """Division with remainder: self = q*divisor + r with deg(r) < deg(divisor)."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        q, r = divmod(self.body, divisor.body)
        return (
            LaurentPoly(self.valuation - divisor.valuation, q),
            LaurentPoly(self.valuation, r),
        )

    def divides(self, other: LaurentPoly) -> bool:
        if self.is_zero():
            return other.is_zero()
        return self.body.divides(other.body)

    def normalized(self) -> LaurentPoly:
        """Associate that is monic in t with zero valuation (zero stays zero)."""
        if self.is_zero():
            return self
        return LaurentPoly(0, self.body.monic())

    def unit_part(self) -> LaurentPoly:
        """The unit c*t^k with self = unit_part * normalized."""
        if self.is_zero():
            raise ZeroDivisionError("zero has no unit part")
        return LaurentPoly(self.valuation, (self.body.lead(),))

    def __call__(self, x):
        """Evaluate at a nonzero rational."""
        x = _rat(x)
        return self.body(x) * x**self.valuation

    def shifted_body(self) -> UniPoly:
        """The polynomial t^-valuation * self (nonzero constant term)."""
        return self.body


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    if isinstance(x, UniPoly):
        return LaurentPoly(0, x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


LAURENT_ONE = LaurentPoly.constant(1)
LAURENT_ZERO = LaurentPoly()


def laurent_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


# --------------------------------------------------------------------------
# Parser for the Laurent grammar:  3/2*t^-1 - 2 + t^2


class _Scanner:
    def __init__(self, text: str, var: str = "t"):
        self.text = text
        self.pos = 0
        self.var = var

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, msg, pos=None):
        raise ParseError(msg, text=self.text, pos=self.pos if pos is None else pos)

    def digits(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start : self.pos]

    def number(self) -> Fraction:
        num = self.digits()
        if not num:
            self.error("expected a number")
        if self.peek() == "/":
            self.pos += 1
            den_pos = self.pos
            den = self.digits()
            if not den:
                self.error("expected a denominator after '/'")
            if int(den) == 0:
                self.error("zero denominator", den_pos)
            return Fraction(int(num), int(den))
        return Fraction(int(num))

    def exponent(self) -> int:
        self.skip()
        start = self.pos
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        d = self.digits()
        if not d:
            self.error("malformed exponent: expected an integer", start)
        return sign * int(d)

    def variable(self) -> int:
        """Parse 't' with optional '^e'; return exponent."""
        self.skip()
        if not self.text.startswith(self.var, self.pos):
            self.error(f"expected '{self.var}'")
        self.pos += len(self.var)
        nxt = self.text[self.pos] if self.pos < len(self.text) else ""
        if nxt.isalnum() or nxt == "_":
            self.error(f"unexpected character {nxt!r}", self.pos)
        if self.peek() == "^":
            self.pos += 1
            return self.exponent()
        return 1


def parse_laurent(text: str, var: str = "t") -> LaurentPoly:
    """Parse a signed sum of terms ``c``, ``c*t^e``, ``t^e`` or ``t``."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    sc = _Scanner(text, var)
    if not sc.peek():
        sc.error("empty polynomial")
    terms: dict[int, Fraction] = {}
    first = True
    while True:
        ch = sc.peek()
        sign = 1
        if ch in ("+", "-"):
            sign = -1 if ch == "-" else 1
            sc.pos += 1
        elif not first:
            sc.error(f"expected '+' or '-', found {ch!r}")
        ch = sc.peek()
        if ch.isdigit():
            coeff = sc.number()
            if sc.peek() == "*":
                sc.pos += 1
                exp = sc.variable()
            else:
                exp = 0
        elif ch == var[0]:
            coeff = Fraction(1)
            exp = sc.variable()
        elif not ch:
            sc.error("unexpected end of input: dangling sign")
        else:
            sc.error(f"unexpected character {ch!r}")
        terms[exp] = terms.get(exp, Fraction(0)) + sign * coeff
        first = False
        if not sc.peek():
            break
    return LaurentPoly.from_terms(terms)


def parse_rational(text) -> Fraction:
    """Parse ``p/q`` or an integer (optionally signed) into a Fraction."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {text!r}")
    sc = _Scanner(text)
    sign = 1
    if sc.peek() in ("+", "-"):
        sign = -1 if sc.text[sc.pos] == "-" else 1
        sc.pos += 1
    value = sc.number()
    if sc.peek():
        sc.error(f"unexpected character {sc.peek()!r}")
    return sign * value


def format_rational(x: Fraction) -> str:
    x = _rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# --------------------------------------------------------------------------
# Cyclotomic polynomials


def _mobius(n: int) -> int:
    result, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    return -result if n > 1 else result


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial Phi_n.

    Phi_n = prod_{d | n} (1 - x^d)^mu(n/d) for n > 1, expanded as an integer
    power series truncated at degree phi(n).
    """
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    if n == 1:
        return UniPoly((-1, 1))
    deg = euler_phi(n)
    c = [0] * (deg + 1)
    c[0] = 1
    ds = [d for d in range(1, n + 1) if n % d == 0]
    for d in ds:
        if _mobius(n // d) == 1 and d <= deg:
            for i in range(deg, d - 1, -1):
                c[i] -= c[i - d]
    for d in ds:
        if _mobius(n // d) == -1 and d <= deg:
            for i in range(d, deg + 1):
                c[i] += c[i - d]
    return UniPoly(c)


@functools.lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    k, m = 2, n
    while k * k <= m:
        if m % k == 0:
            while m % k == 0:
                m //= k
            result -= result // k
        k += 1
    if m > 1:
        result -= result // m
    return result


def cyclotomic_orders_up_to_degree(deg: int) -> list:
    """All n with phi(n) <= deg, in increasing order."""
    # phi(n) >= sqrt(n/2), so n <= 2*deg^2 suffices
    bound = max(2, 2 * deg * deg)
    return [n for n in range(1, bound + 1) if euler_phi(n) <= deg]


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


# --------------------------------------------------------------------------
# Truncated ring R_m = Q[t^{+-1}]/(t-1)^m, written in s = t - 1


class TruncElem:
    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable = ()):
        if m < 1:
            raise ValueError("truncation order must be positive")
        c = [_rat(x) for x in coeffs][:m]
        c += [Fraction(0)] * (m - len(c))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("TruncElem is immutable")

    @classmethod
    def one(cls, m: int) -> TruncElem:
        return cls(m, (1,))

    @classmethod
    def s(cls, m: int) -> TruncElem:
        return cls(m, (0, 1))

    def __eq__(self, other):
        if not isinstance(other, TruncElem):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("TruncElem", self.m, self.coeffs))

    def __repr__(self):
        return f"TruncElem(m={self.m}, {_format_terms(enumerate(self.coeffs), 's')})"

    def _check(self, other: TruncElem):
        if self.m != other.m:
            raise ValueError(f"truncation orders differ: {self.m} vs {other.m}")

    def __add__(self, other):
        self._check(other)
        return TruncElem(self.m, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return TruncElem(self.m, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TruncElem(self.m, (-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncElem(self.m, (a * other for a in self.coeffs))
        self._check(other)
        m = self.m
        out = [Fraction(0)] * m
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(m - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncElem(m, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result, base = TruncElem.one(self.m), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def s_valuation(self):
        """Largest k with s^k dividing self; NEG_INF-free: returns m for zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.m

    def is_unit(self) -> bool:
        return self.coeffs[0] != 0

    def inverse(self) -> TruncElem:
        if not self.is_unit():
            raise ZeroDivisionError("non-unit in R_m")
        m = self.m
        a0 = self.coeffs[0]
        inv = [Fraction(0)] * m
        inv[0] = 1 / a0
        for k in range(1, m):
            acc = sum((self.coeffs[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0))
            inv[k] = -acc / a0
        return TruncElem(m, inv)

    def divide_by_s(self, k: int = 1) -> TruncElem:
        """Return u with s^k * u = self (lowest coefficients must vanish).

        The result lives in R_{m-k}.
        """
        if any(self.coeffs[:k]):
            raise ValueError(f"element is not divisible by s^{k}")
        return TruncElem(self.m - k, self.coeffs[k:])

    def lift(self, m: int) -> TruncElem:
        """Coefficient-wise lift to R_m with m >= self.m (zeros on top)."""
        if m < self.m:
            raise ValueError("lift must not decrease the truncation order")
        return TruncElem(m, self.coeffs)

    def project(self, m: int) -> TruncElem:
        if m > self.m:
            raise ValueError("projection must not increase the truncation order")
        return TruncElem(m, self.coeffs[:m])


def _binom_general(v: int, k: int) -> Fraction:
    """Generalized binomial coefficient C(v, k) for any integer v."""
    num = 1
    for i in range(k):
        num *= v - i
    return Fraction(num, math.factorial(k))


def truncate(a: LaurentPoly, m: int) -> TruncElem:
    """Image of a Laurent polynomial in R_m, in the basis 1, s, ..., s^(m-1)."""
    if m < 1:
        raise ValueError("truncation order must be positive")
    out = [Fraction(0)] * m
    for e, c in a.terms().items():
        # t^e = (1+s)^e, valid for negative e as a power series in s
        for k in range(m):
            out[k] += c * _binom_general(e, k)
    return TruncElem(m, out)


def log_series(m: int) -> TruncElem:
    """log(1+s) = s - s^2/2 + s^3/3 - ... truncated to R_m."""
    if m < 1:
        raise ValueError("truncation order must be positive")
    return TruncElem(m, [0] + [Fraction((-1) ** (k + 1), k) for k in range(1, m)])
