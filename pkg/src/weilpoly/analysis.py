"""Exact decision of the root-modulus condition, plus a numeric cross-oracle.

A degree-2g polynomial f with the (g, q) coefficient pairing factors through
the substitution x = t + q/t: there is a unique degree-g integer polynomial h
with f(t) = t^g * h(t + q/t).  Every root pair (z, q/z) of f maps to the root
x = z + q/z of h, and |z| = sqrt(q) exactly when x is real with
|x| <= 2*sqrt(q).  So "all roots of f on the circle |z| = sqrt(q)" is
equivalent to "h is totally real with all roots in [-2*sqrt(q), 2*sqrt(q)]",
which Sturm chains decide exactly: the interval endpoints are quadratic surds
and all chain signs are evaluated in Z[sqrt(q)].

The numeric oracle (simultaneous root iteration via mpmath) is deliberately
independent of the Sturm route and is used to cross-check it.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import EndpointRoot, NoConvergence, NotSquarefree, NotSymmetric, ZeroPolynomial
from .intpoly import IntPoly, QPolynomial, poly_gcd, pseudo_remainder, squarefree_part
from .numtheory import integer_sqrt
from .surd import QuadSurd

class _Infinity:
    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self):
        return "+inf" if self.sign > 0 else "-inf"


NEG_INF = _Infinity(-1)
POS_INF = _Infinity(1)


@functools.lru_cache(maxsize=None)
def _dickson_basis(k: int, q: int) -> IntPoly:
    """The monic degree-k polynomial D_k with D_k(t + q/t) = t^k + (q/t)^k.

    D_0 = 2, D_1 = x, D_k = x*D_{k-1} - q*D_{k-2} (Dickson polynomials)."""
    if k == 0:
        return IntPoly((2,))
    if k == 1:
        return IntPoly.x()
    return IntPoly.x() * _dickson_basis(k - 1, q) - _dickson_basis(k - 2, q).scale(q)


@dataclass(frozen=True)
class RealWeilPoly:
    """The degree-g polynomial h with f(t) = t^g * h(t + q/t)."""

    h: IntPoly
    g: int
    q: int


def real_weil_transform(f: QPolynomial) -> RealWeilPoly:
    """Compute h with f(t) = t^g * h(t + q/t), exactly."""
    if not isinstance(f, QPolynomial):
        raise NotSymmetric("expected a checked QPolynomial; run check_q_symmetry first")
    g, q = f.g, f.q
    h = _dickson_basis(g, q)
    for j in range(1, g):
        h = h + _dickson_basis(g - j, q).scale(f.a(j))
    h = h + IntPoly((f.middle,))
    return RealWeilPoly(h=h, g=g, q=q)


def reconstruct_symmetric(h: IntPoly, g: int, q: int) -> IntPoly:
    """Expand t^g * h(t + q/t) back into a polynomial in t."""
    if h.degree > g:
        raise ValueError("deg h must be <= g")
    shifted = IntPoly((q, 0, 1))  # t^2 + q
    acc = IntPoly.zero()
    for k in range(h.degree + 1):
        c = h.coeff(k)
        if c:
            acc = acc + (shifted ** k).scale(c) * IntPoly.monomial(1, g - k)
    return acc


# -- Sturm machinery -----------------------------------------------------------


def sturm_chain(h: IntPoly) -> list[IntPoly]:
    """Signed remainder chain of (h, h') over Z.

    Each element is a positive integer multiple of the exact rational chain
    element, which preserves all sign information: pseudo-remainders are
    taken with an even power of the leading coefficient and divided by their
    (positive) content.
    """
    if h.is_zero():
        raise ZeroPolynomial("Sturm chain of zero polynomial")
    chain = [h]
    if h.degree >= 1:
        chain.append(h.derivative())
        while chain[-1].degree > 0:
            a, b = chain[-2], chain[-1]
            delta = a.degree - b.degree
            mult = b.lc ** (delta + 1)
            rem = _pseudo_rem_signed(a, b, mult)
            if rem.is_zero():
                break
            c = rem.content()
            chain.append(IntPoly(x // c for x in rem.coeffs))
    return chain


def _pseudo_rem_signed(a: IntPoly, b: IntPoly, mult: int) -> IntPoly:
    """-(a mod b) scaled by |mult|: the next Sturm element up to positive factor."""
    rem = pseudo_remainder(a, b)
    if mult < 0:
        rem = -rem
    return -rem


def _sign_at(p: IntPoly, point) -> int:
    """Exact sign of p at a QuadSurd, Fraction, integer, or +/- infinity."""
    if isinstance(point, _Infinity):
        if p.is_zero():
            return 0
        s = 1 if p.lc > 0 else -1
        if point.sign < 0 and p.degree % 2 == 1:
            s = -s
        return s
    if isinstance(point, QuadSurd):
        acc = QuadSurd(point.D, 0, 0)
        for c in reversed(p.coeffs):
            acc = acc * point + QuadSurd(point.D, c, 0)
        return acc.sign()
    if isinstance(point, int):
        v = p(point)
        return (v > 0) - (v < 0)
    if isinstance(point, Fraction):
        u, v = point.numerator, point.denominator
        n = max(p.degree, 0)
        acc = 0
        for j in range(n, -1, -1):
            acc = acc * u + p.coeff(j) * v ** (n - j)
        return (acc > 0) - (acc < 0)
    raise TypeError(f"unsupported evaluation point {point!r}")


def _variations(chain: list[IntPoly], point) -> int:
    signs = [s for s in (_sign_at(p, point) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sturm_count_in_interval(h: IntPoly, lo: QuadSurd, hi: QuadSurd) -> int:
    """Number of real roots of squarefree h in (lo, hi], by exact Sturm counts.

    Raises NotSquarefree if gcd(h, h') is nonconstant, and EndpointRoot if h
    vanishes at either endpoint (the count would be ambiguous there).
    """
    if h.is_zero():
        raise ZeroPolynomial("root count of zero polynomial")
    if poly_gcd(h, h.derivative()).degree > 0:
        raise NotSquarefree("input must be squarefree")
    if (hi - lo).sign() <= 0:
        raise ValueError("need lo < hi")
    if _sign_at(h, lo) == 0 or _sign_at(h, hi) == 0:
        raise EndpointRoot("h vanishes at an interval endpoint")
    chain = sturm_chain(h)
    return _variations(chain, lo) - _variations(chain, hi)


def count_real_roots(h: IntPoly) -> int:
    """Number of distinct real roots of squarefree h."""
    if poly_gcd(h, h.derivative()).degree > 0:
        raise NotSquarefree("input must be squarefree")
    if h.degree <= 0:
        return 0
    chain = sturm_chain(h)
    return _variations(chain, NEG_INF) - _variations(chain, POS_INF)


def _count_between(chain: list[IntPoly], lo, hi) -> int:
    return _variations(chain, lo) - _variations(chain, hi)


def _cauchy_bound(h: IntPoly) -> int:
    """Integer B with all real roots of h in (-B, B)."""
    lc = abs(h.lc)
    m = max(abs(c) for c in h.coeffs)
    return 2 + m // lc


def _isolate_root_above(h: IntPoly, q: int) -> tuple[Fraction, Fraction]:
    """Isolating (lo, hi] interval with rational endpoints for some root of
    squarefree h lying strictly above 2*sqrt(q); assumes one exists and that
    h(2*sqrt(q)) != 0."""
    chain = sturm_chain(h)
    edge = QuadSurd(q, 0, 2)  # 2*sqrt(q)
    bound = Fraction(_cauchy_bound(h))
    total = _count_between(chain, edge, POS_INF)
    assert total > 0
    # rational left cut strictly above the surd edge but below the offending roots
    k = 1
    while True:
        z = Fraction(integer_sqrt(4 * q * 4 ** k) + 1, 2 ** k)
        if _sign_at(h, z) == 0:
            return z, z
        if _count_between(chain, edge, z) == 0:
            lo = z
            break
        k *= 2
    count = _count_between(chain, lo, bound)
    hi = bound
    while count > 1:
        mid = (lo + hi) / 2
        if _sign_at(h, mid) == 0:
            return mid, mid
        left = _count_between(chain, lo, mid)
        if left >= 1:
            hi, count = mid, left
        else:
            lo = mid
    return lo, hi


@dataclass(frozen=True)
class ModulusCheckResult:
    """Outcome of the exact all-roots-on-circle decision."""

    passed: bool
    witness: dict | None = None


def exact_modulus_check(f: QPolynomial) -> ModulusCheckResult:
    """Decide exactly whether every root of f has modulus sqrt(q).

    Reduces f to the degree-g polynomial h, strips multiplicities, accepts
    endpoint factors (roots t = +/-sqrt(q), which appear in h as roots at
    +/-2*sqrt(q)), and requires all remaining roots of h to be real and
    strictly inside (-2*sqrt(q), 2*sqrt(q)).  On failure the witness isolates
    an offending root of h (real outside the band) or reports the number of
    nonreal roots.
    """
    q = f.q
    h = real_weil_transform(f).h
    h0 = squarefree_part(h)
    s = integer_sqrt(q)
    if s * s == q:
        for root in (2 * s, -2 * s):
            lin = IntPoly((-root, 1))
            if lin.divides(h0):
                h0 = h0.divmod_monic(lin)[0]
    else:
        edge_factor = IntPoly((-4 * q, 0, 1))  # x^2 - 4q
        if edge_factor.divides(h0):
            h0 = h0.divmod_monic(edge_factor)[0]
    if h0.degree <= 0:
        return ModulusCheckResult(passed=True)
    lo = QuadSurd(q, 0, -2)
    hi = QuadSurd(q, 0, 2)
    inside = sturm_count_in_interval(h0, lo, hi)
    if inside == h0.degree:
        return ModulusCheckResult(passed=True)
    total_real = count_real_roots(h0)
    if total_real > inside:
        chain = sturm_chain(h0)
        if _count_between(chain, hi, POS_INF) > 0:
            a, b = _isolate_root_above(h0, q)
            side = "above"
        else:
            neg = IntPoly(
                (-1) ** j * c for j, c in enumerate(h0.coeffs)
            )  # h0(-x), mirrors roots below the band to above it
            a, b = _isolate_root_above(neg, q)
            a, b = -b, -a
            side = "below"
        witness = {
            "kind": "real_root_outside_band",
            "side": side,
            "interval": [str(a), str(b)],
        }
        return ModulusCheckResult(passed=False, witness=witness)
    witness = {
        "kind": "nonreal_roots",
        "real_roots": total_real,
        "degree": h0.degree,
    }
    return ModulusCheckResult(passed=False, witness=witness)


# -- numeric oracle --------------------------------------------------------------


@dataclass(frozen=True)
class RootReport:
    """All complex roots of a polynomial, with modulus diagnostics."""

    roots: tuple[complex, ...]
    modulus_deviations: tuple[float, ...] | None
    max_modulus_deviation: float | None
    precision_bits: int


def default_precision_bits(f: IntPoly) -> int:
    """Working precision policy: coefficients reach q^g, so scale with them."""
    m = max((abs(c) for c in f.coeffs), default=1)
    return max(128, 2 * m.bit_length() + 64)


def numeric_roots(f: IntPoly, precision_bits: int | None = None, q: int | None = None) -> RootReport:
    """All complex roots by simultaneous iteration at high working precision.

    Residuals are certified: every root z must have relative backward error
    |f(z)| / sum_i |f_i| |z|^i below 2^(-precision_bits/2), else the working
    precision is raised and the iteration retried; NoConvergence is raised
    (with partial results) after the retry cap.  When q is supplied the
    report carries | |z| - sqrt(q) | / sqrt(q) for every root.
    """
    if f.degree < 1:
        raise ValueError("numeric_roots expects a nonconstant polynomial")
    if precision_bits is None:
        precision_bits = default_precision_bits(f)
    if precision_bits < 64:
        raise ValueError("precision_bits must be >= 64")
    maxbit = max(abs(c) for c in f.coeffs).bit_length()
    work = max(precision_bits, maxbit + 32) + 32
    coeffs_desc = list(reversed(f.coeffs))
    threshold_exp = -(precision_bits // 2)
    last_roots = None
    for attempt in range(4):
        with mpmath.workprec(work):
            try:
                roots = mpmath.polyroots(
                    coeffs_desc, maxsteps=200, extraprec=work // 2, cleanup=True
                )
            except mpmath.libmp.NoConvergence:
                work *= 2
                continue
            last_roots = roots
            ok = True
            for z in roots:
                num = abs(mpmath.polyval(coeffs_desc, z))
                den = sum(
                    abs(mpmath.mpf(c)) * abs(z) ** (f.degree - i)
                    for i, c in enumerate(coeffs_desc)
                )
                if num > den * mpmath.mpf(2) ** threshold_exp:
                    ok = False
                    break
            if ok:
                devs = None
                if q is not None:
                    sq = mpmath.sqrt(q)
                    devs = tuple(float(abs(abs(z) - sq) / sq) for z in roots)
                return RootReport(
                    roots=tuple(complex(z) for z in roots),
                    modulus_deviations=devs,
                    max_modulus_deviation=max(devs) if devs else None,
                    precision_bits=precision_bits,
                )
        work *= 2
    raise NoConvergence(
        "root iteration failed residual certification",
        partial=[complex(z) for z in (last_roots or [])],
    )
