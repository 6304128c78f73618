"""Seifert matrix algebra.

A Seifert matrix here is any square integer matrix V of even dimension with
det(V - V^t) = 1.  The Alexander polynomial is the raw determinant
det(V - t*V^t), with no sign or power normalization, so Delta(1) = 1 holds
identically and downstream resultants are unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadTorusParameter, InvalidSeifertMatrix
from .exactpoly import IntPolynomial, integer_determinant


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    failures: tuple


class SeifertMatrix:
    """Immutable integer matrix with Seifert-matrix validation.

    The 0x0 matrix is the unknot.  Construction is permissive; use
    validate() (or any operation, which validates implicitly) to check
    the Seifert invariants.
    """

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        object.__setattr__(
            self, "rows", tuple(tuple(int(c) for c in row) for row in rows)
        )

    def __setattr__(self, name, value):
        raise AttributeError("SeifertMatrix is immutable")

    @property
    def dim(self):
        return len(self.rows)

    @property
    def genus(self):
        return self.dim // 2

    def is_square(self):
        return all(len(row) == self.dim for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, SeifertMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "SeifertMatrix(%r)" % (list(list(r) for r in self.rows),)

    def transpose(self):
        n = self.dim
        return SeifertMatrix(
            [[self.rows[j][i] for j in range(n)] for i in range(n)]
        )

    # -- validation -------------------------------------------------------

    def validate(self):
        """Check squareness, even dimension, and det(V - V^t) = 1."""
        failures = []
        if not self.is_square():
            failures.append("matrix is not square")
        else:
            if self.dim % 2 != 0:
                failures.append("dimension %d is odd" % self.dim)
            else:
                n = self.dim
                skew = [
                    [self.rows[i][j] - self.rows[j][i] for j in range(n)]
                    for i in range(n)
                ]
                d = integer_determinant(skew)
                if d != 1:
                    failures.append(
                        "skew-symmetrization determinant is %d, expected 1" % d
                    )
        return ValidityReport(valid=not failures, failures=tuple(failures))

    def require_valid(self):
        report = self.validate()
        if not report.valid:
            raise InvalidSeifertMatrix("; ".join(report.failures))


def alexander(V):
    """Alexander polynomial det(V - t*V^t), exact.

    Computed by evaluating the determinant at dim+1 integer points and
    reconstructing the (degree <= dim) polynomial by Lagrange interpolation.
    """
    V.require_valid()
    n = V.dim
    if n == 0:
        return IntPolynomial([1])
    points = list(range(n + 1))
    values = []
    for c in points:
        m = [
            [V.rows[i][j] - c * V.rows[j][i] for j in range(n)]
            for i in range(n)
        ]
        values.append(integer_determinant(m))
    coeffs = _interpolate_integer(points, values)
    return IntPolynomial(coeffs)


def _interpolate_integer(xs, ys):
    """Coefficients of the unique interpolating polynomial; must be integral."""
    acc = [Fraction(0)] * len(xs)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        # Lagrange basis polynomial for xi, built incrementally.
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        scale = Fraction(yi, denom)
        for k in range(len(basis)):
            acc[k] += scale * basis[k]
    out = []
    for c in acc:
        assert c.denominator == 1, "interpolation produced non-integer %s" % c
        out.append(int(c))
    return out


def connected_sum(V1, V2):
    """Block sum; Alexander polynomials multiply, signatures add."""
    V1.require_valid()
    V2.require_valid()
    n1, n2 = V1.dim, V2.dim
    rows = []
    for i in range(n1):
        rows.append(list(V1.rows[i]) + [0] * n2)
    for i in range(n2):
        rows.append([0] * n1 + list(V2.rows[i]))
    return SeifertMatrix(rows)


def mirror(V):
    """Seifert matrix -V^t of the reversed mirror; signatures negate."""
    V.require_valid()
    n = V.dim
    return SeifertMatrix(
        [[-V.rows[j][i] for j in range(n)] for i in range(n)]
    )


def multiple(V, n):
    """n-fold block sum; n = 0 is the unknot."""
    if n < 0:
        raise ValueError("multiplicity must be nonnegative")
    V.require_valid()
    out = SeifertMatrix()
    for _ in range(n):
        out = connected_sum(out, V)
    return out


def torus_2q(q):
    """Standard (q-1)x(q-1) Seifert matrix for the (2,q) torus knot.

    Convention: +1 on the diagonal, -1 on the superdiagonal, chosen so the
    signature at omega = -1 is +(q-1).  The opposite chirality is mirror().
    """
    if q < 3 or q % 2 == 0:
        raise BadTorusParameter("q must be odd and >= 3, got %d" % q)
    n = q - 1
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
        if i + 1 < n:
            rows[i][i + 1] = -1
    return SeifertMatrix(rows)


UNKNOT = SeifertMatrix()
TREFOIL = torus_2q(3)
FIGURE_EIGHT = SeifertMatrix([[1, 1], [0, -1]])
