"""Exact integer polynomials, characteristic polynomials and real-root isolation.

No floating point is used anywhere in this module.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
import math
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

IntMatrix = Sequence[Sequence[int]]


class NotDivisibleError(ArithmeticError):
    """Raised by :func:`divide_exact` when the remainder is nonzero."""

    def __init__(self, quotient: "IntPoly", remainder: list[Fraction]):
        super().__init__(f"nonzero remainder {remainder}")
        self.quotient = quotient
        self.remainder = remainder


class NoRealRootError(ValueError):
    pass


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial with integer coefficients, lowest degree first.

    The zero polynomial has no coefficients; otherwise the last one is nonzero.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = _trim(self.coefficients)
        if any(not isinstance(c, int) or isinstance(c, bool) for c in coeffs):
            raise TypeError("IntPoly coefficients must be int")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def linear(cls, root: int) -> "IntPoly":
        """``x - root``."""
        return cls((-root, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __iter__(self):
        return iter(self.coefficients)

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _as_poly(other)
        m = max(len(self.coefficients), len(other.coefficients))
        return IntPoly(tuple(self[i] + other[i] for i in range(m)))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "IntPoly | int") -> "IntPoly":
        return _as_poly(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(tuple(c * x for x in self.coefficients))

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int | Fraction) -> int | Fraction:
        acc: int | Fraction = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def evaluate_at_integer(self, x: int) -> int:
        return self(int(x))

    def evaluate_at_rational(self, x: Fraction | int) -> Fraction:
        return Fraction(self(Fraction(x)))

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coefficients) if i))

    def content(self) -> int:
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPoly(tuple(c // g for c in self.coefficients))

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coefficients])

    @classmethod
    def from_json(cls, text: str) -> "IntPoly":
        return cls(tuple(int(c) for c in json.loads(text)))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or i == 0) else ""
            body = f"{body}*{mono}" if body and mono else (body or mono)
            terms.append(("-" if c < 0 else "+", body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(p: "IntPoly | int") -> IntPoly:
    return IntPoly.constant(p) if isinstance(p, int) else p


def _divmod_rational(a: Sequence[Fraction | int], b: Sequence[Fraction | int]):
    """Long division over Q on ascending coefficient lists."""
    rem = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    db = len(b) - 1
    quot = [Fraction(0)] * max(len(rem) - db, 1)
    for i in range(len(rem) - 1, db - 1, -1):
        coef = rem[i] / b[db]
        if coef:
            quot[i - db] = coef
            for j in range(db + 1):
                rem[i - db + j] -= coef * b[j]
    rem = rem[:db]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def divide_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """``a / b`` when ``b`` divides ``a`` over the integers."""
    quot, rem = _divmod_rational(a.coefficients, b.coefficients)
    if rem or any(q.denominator != 1 for q in quot):
        approx = IntPoly(tuple(int(q) for q in quot))
        raise NotDivisibleError(approx, rem or [Fraction(0)])
    return IntPoly(tuple(int(q) for q in quot))


def char_poly_exact(m: IntMatrix) -> IntPoly:
    """``det(xI - m)`` by the Faddeev-LeVerrier recurrence.

    The recurrence divides by ``k`` at step ``k``; for integer input those
    divisions are exact, which is asserted rather than assumed.
    """
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        cols = list(zip(*mk))
        mk = [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        # tr(A @ M_k) without forming the product
        tr = sum(a[i][j] * mk[j][i] for i in range(n) for j in range(n) if a[i][j])
        c, r = divmod(-tr, k)
        if r:
            raise ArithmeticError(f"inexact Faddeev-LeVerrier step {k}")
        coeffs[n - k] = c
    return IntPoly(tuple(coeffs))


def det_exact(m: IntMatrix) -> int:
    """Bareiss fraction-free elimination."""
    a = [[int(x) for x in row] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# -- real roots ---------------------------------------------------------------

def _rational_primitive(coeffs: Sequence[Fraction]) -> IntPoly:
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return IntPoly(tuple(int(c * den) for c in coeffs)).primitive()


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    x, y = list(a.coefficients), list(b.coefficients)
    while y:
        _, r = _divmod_rational(x, y)
        x, y = y, ([] if not r else list(_rational_primitive(r).coefficients))
    return _rational_primitive([Fraction(c) for c in x]) if x else IntPoly()


def squarefree_part(p: IntPoly) -> IntPoly:
    if p.degree <= 0:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    return divide_exact_rational(p, g).primitive()


def divide_exact_rational(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient of exact division over Q, scaled to a primitive integer polynomial."""
    quot, rem = _divmod_rational(a.coefficients, b.coefficients)
    if rem:
        raise NotDivisibleError(IntPoly(), rem)
    return _rational_primitive(quot)


def sturm_sequence(p: IntPoly) -> list[IntPoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        _, r = _divmod_rational(seq[-2].coefficients, seq[-1].coefficients)
        if not r:
            break
        # keep the sign of -r, only strip positive content
        neg = _rational_primitive([-c for c in r])
        if neg.leading * (-r[-1]) < 0:
            neg = -neg
        seq.append(neg)
    return [q for q in seq if not q.is_zero()]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_variations(seq: Sequence[IntPoly], x: Fraction | int) -> int:
    signs = [s for s in (_sign(q(x)) for q in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_real_roots(p: IntPoly, lo: Fraction | int | None = None,
                     hi: Fraction | int | None = None) -> int:
    """Distinct real roots in ``(lo, hi]``; unbounded ends when ``None``."""
    seq = sturm_sequence(squarefree_part(p))

    def var_at_inf(sign: int) -> int:
        signs = [s for s in (_sign(q.leading) * (sign ** q.degree) for q in seq) if s]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    v_lo = var_at_inf(-1) if lo is None else sign_variations(seq, Fraction(lo))
    v_hi = var_at_inf(1) if hi is None else sign_variations(seq, Fraction(hi))
    return v_lo - v_hi


def cauchy_bound(p: IntPoly) -> Fraction:
    lead = abs(p.leading)
    return 1 + Fraction(max(abs(c) for c in p.coefficients[:-1]), lead) if p.degree > 0 else Fraction(1)


def max_real_root(p: IntPoly, eps: Fraction | float | str = Fraction(1, 10**12)) -> tuple[Fraction, Fraction]:
    """Interval ``[lo, hi]`` of width at most ``eps`` containing the largest real root.

    The root is isolated on the square-free part with a Sturm sequence, then
    narrowed by sign bisection. Either ``lo == hi`` is an exact root or the
    square-free part changes sign strictly between the endpoints.
    """
    if p.is_zero():
        raise NoRealRootError("zero polynomial")
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    q = squarefree_part(p)
    if q.degree < 1:
        raise NoRealRootError(f"{p} has no real root")
    seq = sturm_sequence(q)
    bound = cauchy_bound(q)
    v_top = sign_variations(seq, bound)
    if sign_variations(seq, -bound) == v_top:
        raise NoRealRootError(f"{p} has no real root")
    # isolate: (lo, hi] holds exactly the largest root
    lo, hi = -bound, bound
    while sign_variations(seq, lo) - v_top > 1:
        mid = (lo + hi) / 2
        if sign_variations(seq, mid) - v_top >= 1:
            lo = mid
        else:
            hi = mid
    if q(hi) == 0:
        return hi, hi
    s_hi = _sign(q(hi))
    while hi - lo > eps:
        mid = (lo + hi) / 2
        v = q(mid)
        if v == 0:
            return mid, mid
        if _sign(v) == s_hi:
            hi = mid
        else:
            lo = mid
    # a rational root of the primitive part has the form m / lead
    d = abs(q.primitive().leading)
    first, last = math.ceil(lo * d), math.floor(hi * d)
    if last - first < 4:
        for m in range(first, last + 1):
            if q(Fraction(m, d)) == 0:
                return Fraction(m, d), Fraction(m, d)
    return lo, hi


def compare_max_roots(p: IntPoly, q: IntPoly, eps: Fraction = Fraction(1, 10**12),
                      floor: Fraction = Fraction(1, 10**30)) -> int:
    """Sign of ``maxroot(p) - maxroot(q)``, decided exactly.

    Intervals are refined down to ``floor``; if they still overlap the roots are
    tested for equality through the gcd of the two polynomials.
    """
    while True:
        a, b = max_real_root(p, eps), max_real_root(q, eps)
        if a[0] > b[1]:
            return 1
        if b[0] > a[1]:
            return -1
        if eps <= floor:
            break
        eps /= 10
    # equal largest roots would be the largest real root of gcd(p, q)
    g = poly_gcd(p, q)
    if g.degree >= 1 and count_real_roots(g) >= 1:
        g_lo, _ = max_real_root(g, floor)
        if count_real_roots(p, g_lo, None) == 1 and count_real_roots(q, g_lo, None) == 1:
            return 0
    raise ArithmeticError("could not separate largest roots")
