"""Exact integer-polynomial arithmetic.

Polynomials are dense, with arbitrary-precision integer coefficients stored
in ascending degree order.  The module provides the cyclotomic polynomials,
exact resultants, cyclotomic factor extraction, and the small number-theoretic
helpers (totient, factorization, prime powers) the rest of the library needs.
"""

from __future__ import annotations

import functools
import math

from .errors import (
    DivisorNotMonicUnit,
    FactorizationLimit,
    NotAPrimePower,
    ZeroPolynomial,
)

TRIAL_DIVISION_BOUND = 10**6


class IntPolynomial:
    """Integer polynomial in canonical dense form.

    The coefficient tuple has no trailing zero; the zero polynomial is the
    empty tuple.  Instances are immutable and hashable.

    >>> IntPolynomial([1, -1, 1])
    IntPolynomial('t^2 - t + 1')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # -- basic queries ----------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic_unit(self):
        """True if the leading coefficient is +1 or -1."""
        return bool(self.coeffs) and self.coeffs[-1] in (1, -1)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, complex, mpmath values."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def divmod_exact(self, g):
        """Long division by a monic-up-to-sign divisor; stays in Z[t].

        Returns (q, r) with self = q*g + r and deg r < deg g.
        """
        if g.is_zero() or not g.is_monic_unit():
            raise DivisorNotMonicUnit(
                "divisor must be nonzero with leading coefficient +-1, got %r" % (g,)
            )
        dg = g.degree()
        rem = list(self.coeffs)
        if len(rem) <= dg:
            return IntPolynomial(), self
        lc_inv = g.coeffs[-1]  # +-1 is its own inverse
        gc = g.coeffs
        quot = [0] * (len(rem) - dg)
        for i in range(len(rem) - dg - 1, -1, -1):
            c = rem[i + dg] * lc_inv
            if c:
                quot[i] = c
                for j in range(dg + 1):
                    rem[i + j] -= c * gc[j]
        return IntPolynomial(quot), IntPolynomial(rem[:dg])

    def reversed_coefficients(self):
        return IntPolynomial(list(reversed(self.coeffs)))

    # -- formatting -------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "IntPolynomial(%r)" % format_poly(self)


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])


def format_poly(p, var="t"):
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree(), -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            tvar = var if i == 1 else "%s^%d" % (var, i)
            body = tvar if mag == 1 else "%d*%s" % (mag, tvar)
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += " %s %s" % (sign, body)
    return out


def parse_coefficients(text):
    """Parse ascending comma- or space-separated coefficients."""
    parts = text.replace(",", " ").split()
    if not parts:
        raise ValueError("empty coefficient list")
    return IntPolynomial([int(p) for p in parts])


def t_power_minus_one(r):
    """t^r - 1."""
    if r < 1:
        raise ValueError("r must be >= 1")
    coeffs = [0] * (r + 1)
    coeffs[0] = -1
    coeffs[r] = 1
    return IntPolynomial(coeffs)


# -- integer helpers ------------------------------------------------------


def factorize(n, bound=TRIAL_DIVISION_BOUND):
    """Prime factorization {p: multiplicity} by bounded trial division."""
    if n < 1:
        raise ValueError("n must be >= 1")
    factors = {}
    m = n
    d = 2
    while d * d <= m:
        if d > bound:
            raise FactorizationLimit(
                "cofactor %d survived trial division up to %d" % (m, bound)
            )
        while m % d == 0:
            factors[d] = factors.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def distinct_prime_factors(n, bound=TRIAL_DIVISION_BOUND):
    """Distinct prime divisors of n, ascending."""
    return sorted(factorize(n, bound))


def totient(n):
    phi = n
    for p in factorize(n):
        phi -= phi // p
    return phi


def is_prime(n):
    return n >= 2 and factorize(n) == {n: 1}


def prime_power_decomposition(r):
    """Return (p, k) with r = p^k, or raise NotAPrimePower."""
    if r >= 2:
        factors = factorize(r)
        if len(factors) == 1:
            ((p, k),) = factors.items()
            return p, k
    raise NotAPrimePower("%d is not a prime power" % r)


def prime_powers_up_to(bound):
    """All prime powers p^k <= bound, ascending."""
    out = []
    for n in range(2, bound + 1):
        f = factorize(n)
        if len(f) == 1:
            out.append(n)
    return out


# -- cyclotomic polynomials -----------------------------------------------


@functools.lru_cache(maxsize=None)
def cyclotomic(n):
    """The n-th cyclotomic polynomial, by exact division of t^n - 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return IntPolynomial([-1, 1])
    f = t_power_minus_one(n)
    for d in range(1, n):
        if n % d == 0:
            q, r = f.divmod_exact(cyclotomic(d))
            assert r.is_zero()
            f = q
    return f


def phi_inverse_candidates(bound):
    """All n with totient(n) <= bound, ascending.

    Uses totient(n) >= sqrt(n/2), so the scan stops at n = 2*bound^2.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return [n for n in range(1, 2 * bound * bound + 1) if totient(n) <= bound]


def cyclotomic_factor_extract(f):
    """Split f into cyclotomic factors and a cyclotomic-free remainder.

    Returns (factors, remainder) with factors a list of (n, multiplicity),
    n ascending, such that f = remainder * prod(cyclotomic(n)^multiplicity).
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    factors = []
    rem = f
    if rem.degree() < 1:
        return factors, rem
    for n in phi_inverse_candidates(rem.degree()):
        phi = cyclotomic(n)
        if phi.degree() > rem.degree():
            continue
        mult = 0
        while True:
            q, r = rem.divmod_exact(phi)
            if not r.is_zero():
                break
            rem = q
            mult += 1
        if mult:
            factors.append((n, mult))
        if rem.degree() < 1:
            break
    return factors, rem


# -- determinants and resultants ------------------------------------------


def integer_determinant(rows):
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(row) for row in rows]
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mk = m[k]
            mik = mi[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - mik * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _sylvester_resultant(f, g):
    df, dg = f.degree(), g.degree()
    size = df + dg
    if size == 0:
        return 1
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(dg):
        rows.append([0] * i + fc + [0] * (size - i - len(fc)))
    for i in range(df):
        rows.append([0] * i + gc + [0] * (size - i - len(gc)))
    return integer_determinant(rows)


# Degree sum below which Sylvester elimination is applied directly; above it
# a monic-unit side is used to reduce the other one first.
_REDUCTION_THRESHOLD = 16


def resultant(f, g):
    """Exact resultant Res(f, g) = lc(f)^deg(g) * prod g(alpha) over roots of f."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant requires nonzero polynomials")
    sign = 1
    while True:
        if f.degree() < g.degree():
            if (f.degree() * g.degree()) % 2:
                sign = -sign
            f, g = g, f
        if g.degree() == 0:
            return sign * g.coeffs[0] ** f.degree()
        if (
            g.is_monic_unit()
            and f.degree() > g.degree()
            and f.degree() + g.degree() > _REDUCTION_THRESHOLD
        ):
            # Res(f, g) = (-1)^(df*dg) * lc(g)^(df - dr) * Res(g, f mod g)
            df, dg = f.degree(), g.degree()
            _, r = f.divmod_exact(g)
            if r.is_zero():
                return 0
            if (df * dg) % 2:
                sign = -sign
            if g.coeffs[-1] == -1 and (df - r.degree()) % 2:
                sign = -sign
            f, g = g, r
            continue
        return sign * _sylvester_resultant(f, g)
