"""Dense univariate polynomials over the integers.

Coefficients are arbitrary-precision Python ints stored low-to-high, so
``coeffs[j]`` is the coefficient of t^j.  Polynomials are immutable; all
operations return new instances.  The canonical text form used by the CLI
and golden files is the comma-separated low-to-high decimal list, e.g.
``"25,5,1,1,1"`` for t^4 + t^3 + t^2 + 5t + 25.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Sequence

from .errors import ShapeMismatch, ZeroPolynomial


class IntPoly:
    """Immutable dense polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPoly":
        """c * t^k"""
        return cls((0,) * k + (c,))

    @classmethod
    def from_string(cls, text: str) -> "IntPoly":
        """Parse the canonical comma-separated low-to-high coefficient form."""
        parts = [p.strip() for p in text.split(",")]
        if not parts or parts == [""]:
            raise ValueError("empty coefficient string")
        return cls(int(p) for p in parts)

    def to_string(self) -> str:
        """Canonical comma-separated low-to-high coefficient form."""
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    # -- basic structure -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial mapped to -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, j: int) -> int:
        """Coefficient of t^j (0 beyond the degree)."""
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "IntPoly(0)"
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeff(j)
            if c == 0:
                continue
            if j == 0:
                terms.append(f"{c}")
            elif j == 1:
                terms.append("t" if c == 1 else f"{c}*t")
            else:
                terms.append(f"t^{j}" if c == 1 else f"{c}*t^{j}")
        return "IntPoly(" + " + ".join(terms).replace("+ -", "- ") + ")"

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return IntPoly(out)

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(c * a for a in self.coeffs)

    def __pow__(self, e: int) -> "IntPoly":
        if e < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> "IntPoly":
        return IntPoly(j * self.coeffs[j] for j in range(1, len(self.coeffs)))

    def inflate(self, k: int) -> "IntPoly":
        """Substitute t -> t^k."""
        if k < 1:
            raise ValueError("inflate expects k >= 1")
        out = [0] * (len(self.coeffs) * k)
        for j, c in enumerate(self.coeffs):
            out[j * k] = c
        return IntPoly(out)

    def __call__(self, x: int) -> int:
        """Exact evaluation at an integer (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_fraction(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- content and division --------------------------------------------------

    def content(self) -> int:
        """gcd of the coefficients (0 for the zero polynomial)."""
        c = 0
        for a in self.coeffs:
            c = int_gcd(c, a)
        return c

    def primitive(self) -> "IntPoly":
        """Divide out the content; sign fixed so the leading coefficient is > 0."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly(a // c for a in self.coeffs)

    def divmod_monic(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Quotient and remainder by a monic divisor; exact over the integers."""
        if not divisor.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        quot = [0] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            quot[i - d] = c
            for j, b in enumerate(divisor.coeffs):
                rem[i - d + j] -= c * b
        return IntPoly(quot), IntPoly(rem)

    def divides(self, f: "IntPoly") -> bool:
        """True iff self (monic) divides f exactly."""
        _, r = f.divmod_monic(self)
        return r.is_zero()


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a divided by b."""
    if b.is_zero():
        raise ZeroPolynomial("pseudo-division by zero")
    da, db = a.degree, b.degree
    if a.is_zero() or da < db:
        return a
    lb = b.lc
    rem = list(a.coeffs)
    e = da - db + 1
    while True:
        while rem and rem[-1] == 0:
            rem.pop()
        dr = len(rem) - 1
        if dr < db:
            break
        top = rem[-1]
        k = dr - db
        rem = [lb * c for c in rem]
        for j, bc in enumerate(b.coeffs):
            rem[k + j] -= top * bc
        e -= 1
    return IntPoly(rem).scale(lb ** e)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """gcd in Z[t] via the primitive remainder sequence, leading coefficient > 0."""
    if a.is_zero():
        return b.primitive() if not b.is_zero() else IntPoly.zero()
    if b.is_zero():
        return a.primitive()
    cont = int_gcd(a.content(), b.content())
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = pseudo_remainder(a, b)
        a, b = b, r.primitive()
    return a.scale(cont)


def _div_exact_rational(f: IntPoly, d: IntPoly) -> IntPoly:
    """f / d where the division is exact over Q and the true quotient is integral
    up to content; returns the primitive quotient with positive leading coefficient."""
    if d.is_zero():
        raise ZeroPolynomial("division by zero polynomial")
    rem = [Fraction(c) for c in f.coeffs]
    dd = d.degree
    dl = Fraction(d.lc)
    quot = [Fraction(0)] * max(0, len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q = c / dl
        quot[i - dd] = q
        for j, b in enumerate(d.coeffs):
            rem[i - dd + j] -= q * b
    if any(rem):
        raise ValueError("division is not exact")
    denom = 1
    for q in quot:
        denom = denom * q.denominator // int_gcd(denom, q.denominator)
    return IntPoly(int(q * denom) for q in quot).primitive()


def squarefree_part(f: IntPoly) -> IntPoly:
    """The radical f / gcd(f, f'), primitive with positive leading coefficient.

    For monic f the result is the monic product of the distinct irreducible
    factors of f.
    """
    if f.is_zero():
        raise ZeroPolynomial("radical of zero polynomial")
    if f.degree == 0:
        return IntPoly.one()
    d = poly_gcd(f, f.derivative())
    if d.degree == 0:
        return f.primitive()
    return _div_exact_rational(f, d)


# -- cyclotomic polynomials ----------------------------------------------------


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, computed by dividing x^n - 1 by the
    cyclotomic polynomials of the proper divisors of n."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = IntPoly((-1,) + (0,) * (n - 1) + (1,))  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = poly.divmod_monic(cyclotomic(d))
            assert rem.is_zero()
    return poly


# -- the (g, q) coefficient symmetry -------------------------------------------


@dataclass(frozen=True)
class QPolynomial:
    """A monic degree-2g integer polynomial with the Weil coefficient pairing
    coeff(j) = q^(g-j) * coeff(2g-j) for 0 <= j <= g-1 (so the constant term
    is q^g).  Roots of such polynomials come in pairs (z, q/z)."""

    poly: IntPoly
    g: int
    q: int

    def a(self, j: int) -> int:
        """The upper-half coefficient a_j = coeff(t^(2g-j)), 0 <= j <= g."""
        if not 0 <= j <= self.g:
            raise IndexError(f"a_{j} out of range for g={self.g}")
        return self.poly.coeff(2 * self.g - j)

    @property
    def middle(self) -> int:
        """a_g, the coefficient of t^g."""
        return self.poly.coeff(self.g)


def check_q_symmetry(f: IntPoly, g: int, q: int) -> QPolynomial:
    """Validate the paired-coefficient shape and wrap f as a QPolynomial.

    Raises ShapeMismatch (carrying the first violated coefficient index) if
    deg f != 2g, f is not monic, or some pair coeff(j) != q^(g-j)*coeff(2g-j).
    """
    if g < 1:
        raise ValueError("g must be >= 1")
    if f.degree != 2 * g:
        raise ShapeMismatch(f"degree {f.degree} != 2g = {2 * g}", index=-1)
    if not f.is_monic():
        raise ShapeMismatch("polynomial is not monic", index=2 * g)
    for j in range(g):
        expected = q ** (g - j) * f.coeff(2 * g - j)
        if f.coeff(j) != expected:
            raise ShapeMismatch(
                f"coeff({j}) = {f.coeff(j)} != q^(g-{j})*coeff({2 * g - j}) = {expected}",
                index=j,
            )
    return QPolynomial(f, g, q)


# -- resultants ------------------------------------------------------------------


def _sylvester_resultant(a: IntPoly, b: IntPoly) -> int:
    """Res(a, b) = lc(a)^deg(b) * prod b(alpha) over the roots alpha of a,
    via the subresultant remainder sequence (Ducos/Cohen bookkeeping)."""
    if a.is_zero() or b.is_zero():
        raise ZeroPolynomial("resultant of zero polynomial")
    s = 1
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2 == 1:
            s = -1
        a, b = b, a
    if b.degree == 0:
        return s * b.lc ** a.degree
    ca, cb = abs(a.content()), abs(b.content())
    t = ca ** b.degree * cb ** a.degree
    a = IntPoly(c // ca for c in a.coeffs)
    b = IntPoly(c // cb for c in b.coeffs)
    g = h = 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = pseudo_remainder(a, b)
        a = b
        divisor = g * h ** delta
        b = IntPoly(c // divisor for c in r.coeffs)
        if b.is_zero():
            return 0
        g = a.lc
        if delta == 0:
            pass  # h unchanged: h^(1-0) * g^0
        else:
            h = g ** delta // h ** (delta - 1)
        if b.degree == 0:
            return s * t * (b.lc ** a.degree // h ** (a.degree - 1))


def resultant(f: IntPoly, h: IntPoly) -> int:
    """Resultant with the convention

        resultant(f, h) = lc(h)^deg(f) * prod f(beta) over the roots beta of h,

    so resultant(t - a, t - b) = b - a and resultant(f, h) =
    (-1)^(deg f * deg h) * resultant(h, f)."""
    return _sylvester_resultant(h, f)


# -- characteristic/minimal polynomials of powers of the roots --------------------


def power_sums(f: IntPoly, count: int) -> list[int]:
    """Newton power sums s_k = sum theta_i^k, k = 1..count, over the roots of
    the monic polynomial f (exact integers)."""
    if not f.is_monic():
        raise ValueError("power_sums expects a monic polynomial")
    n = f.degree
    a = [f.coeff(n - i) for i in range(n + 1)]  # a[0]=1, a[i] coefficient of x^(n-i)
    s: list[int] = []
    for k in range(1, count + 1):
        if k <= n:
            acc = -k * a[k]
            for i in range(1, k):
                acc -= a[i] * s[k - i - 1]
        else:
            acc = 0
            for i in range(1, n + 1):
                acc -= a[i] * s[k - i - 1]
        s.append(acc)
    return s


def _monic_from_power_sums(s: Sequence[int], n: int) -> IntPoly:
    """Invert Newton's identities: the monic degree-n polynomial whose roots
    have power sums s[0..n-1] (must be integral; asserts exact divisions)."""
    a = [1]
    for k in range(1, n + 1):
        acc = s[k - 1]
        for i in range(1, k):
            acc += a[i] * s[k - i - 1]
        q, r = divmod(-acc, k)
        if r:
            raise ValueError("power sums are not those of an integer polynomial")
        a.append(q)
    return IntPoly([a[n - j] for j in range(n + 1)])


def char_poly_of_power(f: IntPoly, d: int) -> IntPoly:
    """The monic degree-(deg f) polynomial whose roots are theta^d over all
    roots theta of monic f, counted with multiplicity.

    Equals the resultant in y of f(y) and x - y^d (normalized monic), computed
    here exactly through Newton power sums: the k-th power sum of the d-th
    powers is the (dk)-th power sum of the roots of f.
    """
    if not f.is_monic() or f.degree < 1:
        raise ValueError("char_poly_of_power expects a monic nonconstant polynomial")
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1:
        return f
    n = f.degree
    s = power_sums(f, n * d)
    return _monic_from_power_sums([s[d * k - 1] for k in range(1, n + 1)], n)


def minimal_poly_of_power(f: IntPoly, d: int) -> IntPoly:
    """Radical of char_poly_of_power(f, d), monic.

    When f is irreducible this is the minimal polynomial of theta^d for any
    root theta of f; its degree is the degree of the field Q(theta^d).
    """
    c = char_poly_of_power(f, d)
    rad = squarefree_part(c)
    if not rad.is_monic():
        raise ValueError("radical of a monic polynomial must be monic")
    return rad


# -- reduction mod a prime ---------------------------------------------------------


def reduce_mod(f: IntPoly, r: int) -> list[int]:
    """Coefficients of f reduced into [0, r), low-to-high, trailing zeros kept off."""
    if r < 2:
        raise ValueError("modulus must be >= 2")
    out = [c % r for c in f.coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out
