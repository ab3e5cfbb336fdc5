"""Exact scalar arithmetic.

The scalar tower used everywhere else in the package:

* ``Fraction`` (stdlib) -- plain rationals,
* ``Eisenstein`` -- the quadratic field Q(w) with w**2 == -1 - w,
* ``Polynomial`` -- univariate polynomials in the formal variable ``nu``
  with ``Eisenstein`` coefficients,
* ``RationalFunction`` -- reduced quotients of two polynomials with a
  monic denominator, so equality is syntactic equality.

All values are immutable and all operations are pure; results are always
in canonical form.  Root extraction is exact and goes up to quadratic
factors (higher-degree irreducible factors are reported unresolved).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def _coerce_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def fraction_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if no rational root exists."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def fraction_str(q: Fraction) -> str:
    """Canonical rendering: integers as-is, otherwise 'a/b'."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Eisenstein:
    """An element a + b*w of Q(w), where w is a primitive cube root of unity.

    Arithmetic respects w**2 == -1 - w; conjugation maps w to -1 - w.
    """

    __slots__ = ("re", "om")

    def __init__(self, re=0, om=0):
        object.__setattr__(self, "re", _coerce_fraction(re))
        object.__setattr__(self, "om", _coerce_fraction(om))

    def __setattr__(self, name, value):
        raise AttributeError("Eisenstein values are immutable")

    @staticmethod
    def omega() -> "Eisenstein":
        return Eisenstein(0, 1)

    @classmethod
    def _coerce(cls, x) -> "Eisenstein | None":
        if isinstance(x, Eisenstein):
            return x
        if isinstance(x, (int, Fraction)):
            return Eisenstein(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Eisenstein(self.re + o.re, self.om + o.om)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Eisenstein(self.re - o.re, self.om - o.om)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Eisenstein(-self.re, -self.om)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w
        a, b, c, d = self.re, self.om, o.re, o.om
        bd = b * d
        return Eisenstein(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def conjugate(self) -> "Eisenstein":
        return Eisenstein(self.re - self.om, -self.om)

    def norm(self) -> Fraction:
        """Field norm a**2 - a*b + b**2 (always >= 0)."""
        a, b = self.re, self.om
        return a * a - a * b + b * b

    def inverse(self) -> "Eisenstein":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        conj = self.conjugate()
        return Eisenstein(conj.re / n, conj.om / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.om == o.om

    def __hash__(self):
        return hash((self.re, self.om))

    def __bool__(self):
        return bool(self.re) or bool(self.om)

    def is_rational(self) -> bool:
        return self.om == 0

    def as_fraction(self) -> Fraction:
        if self.om != 0:
            raise ValueError(f"{self} is not rational")
        return self.re

    def __str__(self):
        return eisenstein_str(self)

    def __repr__(self):
        return f"Eisenstein({self.re!r}, {self.om!r})"


E_ZERO = Eisenstein(0)
E_ONE = Eisenstein(1)
OMEGA = Eisenstein(0, 1)


def eisenstein_str(z: Eisenstein) -> str:
    """Canonical rendering with w for the cube root of unity, e.g. '1+2w'."""
    if z.om == 0:
        return fraction_str(z.re)
    mag = abs(z.om)
    wpart = "w" if mag == 1 else fraction_str(mag) + "w"
    if z.re == 0:
        return ("-" if z.om < 0 else "") + wpart
    sign = "+" if z.om > 0 else "-"
    return fraction_str(z.re) + sign + wpart


def eisenstein_sqrt(z: Eisenstein) -> Eisenstein | None:
    """A square root of z in Q(w) if one exists, else None.

    Solves (x + y*w)**2 = c + d*w exactly over the rationals.
    """
    c, d = z.re, z.om
    if d == 0:
        if c == 0:
            return E_ZERO
        x = fraction_sqrt(c)
        if x is not None:
            return Eisenstein(x)
        # y != 0 forces y = 2x and -3x**2 = c
        x = fraction_sqrt(-c / 3)
        if x is not None:
            return Eisenstein(x, 2 * x)
        return None
    # y != 0; with t = y**2:  3t**2 + (4c - 2d)t - d**2 = 0
    disc = (4 * c - 2 * d) ** 2 + 12 * d * d
    s = fraction_sqrt(disc)
    if s is None:
        return None
    for t in ((-(4 * c - 2 * d) + s) / 6, (-(4 * c - 2 * d) - s) / 6):
        if t <= 0:
            continue
        y = fraction_sqrt(t)
        if y is None:
            continue
        x = (d + t) / (2 * y)
        w = Eisenstein(x, y)
        if w * w == z:
            return w
    return None


class Polynomial:
    """Polynomial in nu over Q(w); coefficients ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        out = []
        for c in coeffs:
            if not isinstance(c, Eisenstein):
                c = Eisenstein(c)
            out.append(c)
        while out and not out[-1]:
            out.pop()
        object.__setattr__(self, "coeffs", tuple(out))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial values are immutable")

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial(())

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((E_ONE,))

    @staticmethod
    def const(c) -> "Polynomial":
        return Polynomial((c,))

    @staticmethod
    def nu() -> "Polynomial":
        return Polynomial((E_ZERO, E_ONE))

    @property
    def degree(self) -> int:
        """Degree; -1 is the sentinel for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Eisenstein:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    @classmethod
    def _coerce(cls, x) -> "Polynomial | None":
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, (int, Fraction, Eisenstein)):
            return Polynomial((x,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Polynomial(())
        out = [E_ZERO] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [E_ZERO] * max(0, len(rem) - len(o.coeffs) + 1)
        dlead = o.leading().inverse()
        dn = len(o.coeffs)
        while len(rem) >= dn:
            f = rem[-1] * dlead
            k = len(rem) - dn
            quo[k] = f
            for i, c in enumerate(o.coeffs):
                rem[k + i] = rem[k + i] - f * c
            while rem and not rem[-1]:
                rem.pop()
        return Polynomial(quo), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return Polynomial(tuple(c * inv for c in self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def evaluate(self, x: Eisenstein) -> Eisenstein:
        acc = E_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return f"Polynomial({self.coeffs!r})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor over the field Q(w)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def _monomial_str(coeff: Eisenstein, power: int) -> tuple[bool, str]:
    """Render one monomial; returns (negative, body-without-sign)."""
    if coeff.om == 0:
        neg = coeff.re < 0
        mag = abs(coeff.re)
        cstr = fraction_str(mag)
        simple = True
    elif coeff.re == 0:
        neg = coeff.om < 0
        mag = abs(coeff.om)
        cstr = "w" if mag == 1 else fraction_str(mag) + "w"
        simple = mag == 1
        if not simple:
            cstr = "(" + cstr + ")"
            simple = True
    else:
        neg = False
        cstr = "(" + eisenstein_str(coeff) + ")"
        simple = True
    if power == 0:
        return neg, cstr
    var = "nu" if power == 1 else f"nu^{power}"
    if cstr == "1":
        return neg, var
    return neg, f"{cstr}*{var}"


def poly_str(p: Polynomial) -> str:
    """Canonical rendering, descending powers of nu."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        neg, body = _monomial_str(c, k)
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


class RationalFunction:
    """Reduced quotient of polynomials in nu over Q(w), monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Polynomial._coerce(num)
        if den is None:
            den = Polynomial.one()
        else:
            den = Polynomial._coerce(den)
        if num is None or den is None:
            raise TypeError("RationalFunction expects polynomial-like arguments")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = Polynomial.zero(), Polynomial.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead_inv = den.leading().inverse()
            num = num * lead_inv
            den = den * lead_inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction values are immutable")

    @staticmethod
    def zero() -> "RationalFunction":
        return RationalFunction(Polynomial.zero())

    @staticmethod
    def one() -> "RationalFunction":
        return RationalFunction(Polynomial.one())

    @staticmethod
    def nu() -> "RationalFunction":
        return RationalFunction(Polynomial.nu())

    @classmethod
    def _coerce(cls, x) -> "RationalFunction | None":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction, Eisenstein, Polynomial)):
            return RationalFunction(Polynomial._coerce(x))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction.one() / self ** (-n)
        out = RationalFunction.one()
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "RationalFunction":
        return RationalFunction.one() / self

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def as_eisenstein(self) -> Eisenstein:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        if self.num.is_zero():
            return E_ZERO
        return self.num.coeffs[0]

    def as_fraction(self) -> Fraction:
        return self.as_eisenstein().as_fraction()

    def substitute(self, x: Eisenstein) -> Eisenstein:
        """Evaluate at nu = x; raises ZeroDivisionError if the denominator vanishes."""
        d = self.den.evaluate(x)
        if not d:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at nu={x}")
        return self.num.evaluate(x) / d

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == Polynomial.one():
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


RF_ZERO = RationalFunction.zero()
RF_ONE = RationalFunction.one()


def as_scalar(x) -> RationalFunction:
    """Coerce ints, Fractions, Eisenstein or polynomials into the scalar field."""
    out = RationalFunction._coerce(x)
    if out is None:
        raise TypeError(f"cannot interpret {type(x).__name__} as a scalar")
    return out


def scalar_factor_str(rf: RationalFunction) -> str:
    """Rendering of a scalar used as a multiplicative factor (fixture/report form)."""
    if rf.den == Polynomial.one():
        nonzero = sum(1 for c in rf.num.coeffs if c)
        if nonzero <= 1:
            return poly_str(rf.num)
        return "(" + poly_str(rf.num) + ")"
    return str(rf)


def reduce_fraction(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Coprime canonical quotient with monic denominator."""
    return RationalFunction(num, den)


@dataclass(frozen=True)
class RootReport:
    """Roots found in Q(w) with multiplicities, plus unresolved factors.

    ``unresolved`` collects monic square-free factors of degree >= 3 whose
    splitting would need machinery beyond quadratics; quadratic factors
    with no root in Q(w) are irreducible over Q(w) and contribute nothing.
    """

    roots: tuple[tuple[Eisenstein, int], ...]
    unresolved: tuple[tuple[Polynomial, int], ...]

    def root_set(self) -> frozenset[Eisenstein]:
        return frozenset(r for r, _ in self.roots)


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Monic square-free factors with multiplicities (char-0 Musser algorithm)."""
    if p.degree <= 0:
        return []
    f = p.monic()
    g = poly_gcd(f, f.derivative())
    w = f // g
    out = []
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, g)
        fac = w // y
        if fac.degree > 0:
            out.append((fac.monic(), i))
        w = y
        g = g // y
        i += 1
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def _rational_root_candidates(p: Polynomial) -> set[Fraction]:
    """Candidate rational roots of a polynomial with rational coefficients."""
    coeffs = [c.as_fraction() for c in p.coeffs]
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    while ints and ints[0] == 0:
        ints.pop(0)
    if not ints:
        return set()
    cands = {Fraction(0)}
    for pnum in _divisors(ints[0]):
        for qden in _divisors(ints[-1]):
            cands.add(Fraction(pnum, qden))
            cands.add(Fraction(-pnum, qden))
    return cands


def _squarefree_roots(f: Polynomial) -> tuple[list[Eisenstein], list[Polynomial]]:
    """All Q(w) roots of a monic square-free polynomial; leftovers unresolved."""
    roots: list[Eisenstein] = []
    # rational roots of f = g + w*h must be common roots of g and h
    g = Polynomial(tuple(Eisenstein(c.re) for c in f.coeffs))
    h = Polynomial(tuple(Eisenstein(c.om) for c in f.coeffs))
    d = g if h.is_zero() else poly_gcd(g, h)
    if not d.is_zero() and d.degree >= 1:
        d_fracs = [c.as_fraction() for c in d.coeffs]
        for cand in sorted(_rational_root_candidates(d)):
            val = Fraction(0)
            for c in reversed(d_fracs):
                val = val * cand + c
            if val:
                continue
            x = Eisenstein(cand)
            if not f.evaluate(x):
                roots.append(x)
                f = f // Polynomial((-x, E_ONE))
    if f.degree == 1:
        roots.append(-f.coeffs[0] / f.coeffs[1])
        return roots, []
    if f.degree == 2:
        a, b, c = f.coeffs[2], f.coeffs[1], f.coeffs[0]
        s = eisenstein_sqrt(b * b - 4 * a * c)
        if s is not None:
            inv2a = (2 * a).inverse()
            roots.append((-b + s) * inv2a)
            roots.append((-b - s) * inv2a)
        return roots, []
    if f.degree >= 3:
        return roots, [f]
    return roots, []


def roots_up_to_quadratic(p: Polynomial) -> RootReport:
    """Exact Q(w) roots of p with multiplicities; degree >= 3 leftovers reported.

    Raises ValueError for the zero polynomial.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every value as a root")
    roots: list[tuple[Eisenstein, int]] = []
    unresolved: list[tuple[Polynomial, int]] = []
    for factor, mult in squarefree_decomposition(p):
        found, leftover = _squarefree_roots(factor)
        roots.extend((r, mult) for r in found)
        unresolved.extend((f, mult) for f in leftover)
    roots.sort(key=lambda rm: (rm[0].re, rm[0].om))
    return RootReport(tuple(roots), tuple(unresolved))
