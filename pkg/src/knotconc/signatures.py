"""Tristram-Levine signatures at rational angles, with certified arithmetic.

The signature at omega = exp(2*pi*i*a/q) is the signature of the Hermitian
form (1-omega)V + (1-conj(omega))V^t.  Jump locations (roots of the
Alexander polynomial on the unit circle) are decided exactly via cyclotomic
divisibility; evaluation at a jump is refused.

Off jumps, inertia is certified: the Hermitian form is realified to a real
symmetric matrix of twice the dimension (which doubles each inertia count),
and eliminated with interval arithmetic using 1x1 and 2x2 pivots whose signs
are certified by the interval bounds.  If no pivot can be certified the
working precision is doubled, up to a hard ceiling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .errors import (
    JumpPoint,
    LemmaViolation,
    PreconditionUnverifiable,
    SignatureUncertified,
    TrivialAngle,
)
from .exactpoly import cyclotomic, cyclotomic_factor_extract
from .seifert import alexander, torus_2q


@dataclass(frozen=True)
class UnitRootArg:
    """Reduced fraction a/q standing for omega = exp(2*pi*i*a/q)."""

    a: int
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be >= 1")
        a = self.a % self.q
        q = self.q
        if a == 0:
            q = 1
        else:
            g = math.gcd(a, q)
            a //= g
            q //= g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "q", q)

    @property
    def is_trivial(self):
        return self.a == 0

    @property
    def order(self):
        """Multiplicative order of omega (1 for omega = 1)."""
        return self.q if self.a else 1

    def __str__(self):
        return "%d/%d" % (self.a, self.q)


class _JumpMarker:
    __slots__ = ()

    def __repr__(self):
        return "JUMP"


JUMP = _JumpMarker()


def at_jump(V, w, _delta=None):
    """True iff omega is a root of the Alexander polynomial (decided exactly)."""
    if w.is_trivial:
        raise TrivialAngle("angle 0 is excluded")
    delta = alexander(V) if _delta is None else _delta
    if delta.degree() < 1:
        return False
    phi = cyclotomic(w.order)
    if phi.degree() > delta.degree():
        return False
    _, r = delta.divmod_exact(phi)
    return r.is_zero()


_INERTIA_START_PREC = 64
_INERTIA_MAX_PREC = 4096


def tl_signature(V, w, _delta=None):
    """Tristram-Levine signature of V at omega = exp(2*pi*i*a/q); exact."""
    V.require_valid()
    if w.is_trivial:
        raise TrivialAngle("the form vanishes at omega = 1; angle 0 is excluded")
    if at_jump(V, w, _delta=_delta):
        raise JumpPoint("omega = exp(2*pi*i*%s) is a root of the Alexander polynomial" % w)
    n = V.dim
    if n == 0:
        return 0
    sym = [
        [V.rows[i][j] + V.rows[j][i] for j in range(n)] for i in range(n)
    ]
    skew = [
        [V.rows[j][i] - V.rows[i][j] for j in range(n)] for i in range(n)
    ]
    pos, neg = _certified_inertia(sym, skew, w.a, w.q)
    assert pos + neg == 2 * n and (pos - neg) % 2 == 0
    return (pos - neg) // 2


def _certified_inertia(sym, skew, a, q):
    """Inertia of the realified Hermitian form, doubling precision as needed."""
    prec = _INERTIA_START_PREC
    while prec <= _INERTIA_MAX_PREC:
        result = _try_inertia(sym, skew, a, q, prec)
        if result is not None:
            return result
        prec *= 2
    raise SignatureUncertified(
        "could not certify inertia at a/q = %d/%d within %d bits"
        % (a, q, _INERTIA_MAX_PREC)
    )


def _try_inertia(sym, skew, a, q, prec):
    iv = mpmath.iv
    saved = iv.prec
    iv.prec = prec
    try:
        n = len(sym)
        theta = 2 * iv.pi * a / q
        oc = 1 - iv.cos(theta)
        s = iv.sin(theta)
        # Realification of (1-w)V + (1-conj w)V^t = oc*(V+V^t) + i*s*(V^t-V):
        # M = [[A, -B], [B, A]] is symmetric and has doubled inertia.
        m = {}
        for i in range(n):
            for j in range(n):
                aij = oc * sym[i][j]
                bij = s * skew[i][j]
                m[(i, j)] = aij
                m[(n + i, n + j)] = aij
                m[(i, n + j)] = -bij
                m[(n + i, j)] = bij
        active = list(range(2 * n))
        pos = neg = 0
        while active:
            step = _eliminate_once(m, active)
            if step is None:
                return None
            dpos, dneg, active = step
            pos += dpos
            neg += dneg
        return pos, neg
    finally:
        iv.prec = saved


def _certainly_nonzero(x):
    return x.a > 0 or x.b < 0


def _eliminate_once(m, active):
    """One certified pivot step; returns (dpos, dneg, remaining) or None."""
    # Prefer the 1x1 diagonal pivot with the largest certified magnitude.
    best = None
    for p in active:
        x = m[(p, p)]
        if _certainly_nonzero(x):
            strength = min(abs(x.a), abs(x.b))
            if best is None or strength > best[1]:
                best = (p, strength)
    if best is not None:
        p = best[0]
        piv = m[(p, p)]
        rest = [i for i in active if i != p]
        for i in rest:
            f = m[(i, p)] / piv
            for j in rest:
                m[(i, j)] = m[(i, j)] - f * m[(p, j)]
        if piv.a > 0:
            return 1, 0, rest
        return 0, 1, rest
    # Otherwise look for a certified-indefinite 2x2 pivot, which contributes
    # one eigenvalue of each sign.
    best = None
    for ii, p in enumerate(active):
        for r in active[ii + 1 :]:
            d = m[(p, p)] * m[(r, r)] - m[(p, r)] * m[(p, r)]
            if d.b < 0:
                strength = abs(d.b)
                if best is None or strength > best[2]:
                    best = (p, r, strength, d)
    if best is None:
        return None
    p, r, _, d = best
    rest = [i for i in active if i not in (p, r)]
    mpp, mrr, mpr = m[(p, p)], m[(r, r)], m[(p, r)]
    for i in rest:
        u = (m[(i, p)] * mrr - m[(i, r)] * mpr) / d
        v = (m[(i, r)] * mpp - m[(i, p)] * mpr) / d
        for j in rest:
            m[(i, j)] = m[(i, j)] - u * m[(p, j)] - v * m[(r, j)]
    return 1, 1, rest


@dataclass(frozen=True)
class SignatureProfile:
    """Signature at every a/q, a = 1..q-1; JUMP marks Alexander roots."""

    q: int
    values: dict  # a -> int or JUMP

    def non_jump_values(self):
        return [v for v in self.values.values() if v is not JUMP]

    def jump_angles(self):
        return [a for a, v in self.values.items() if v is JUMP]


def signature_profile(V, q, _delta=None):
    """Tristram-Levine signatures of V at all q-th roots of unity except 1."""
    V.require_valid()
    if q < 2:
        raise ValueError("q must be >= 2")
    delta = alexander(V) if _delta is None else _delta
    values = {}
    for a in range(1, q):
        w = UnitRootArg(a, q)
        if at_jump(V, w, _delta=delta):
            values[a] = JUMP
        else:
            values[a] = tl_signature(V, w, _delta=delta)
    return SignatureProfile(q=q, values=values)


@dataclass(frozen=True)
class TorusLemmaReport:
    q: int
    profile: SignatureProfile
    min_value: int
    sigma_at_minus_one: int


def verify_torus_lemma(q):
    """Check sigma_{a/q}(T_{2,q}) >= 2 for all a != 0 and sigma_{-1} = q-1."""
    V = torus_2q(q)
    delta = alexander(V)
    profile = signature_profile(V, q, _delta=delta)
    if profile.jump_angles():
        raise LemmaViolation(
            "unexpected jump of T(2,%d) at a q-th root of unity" % q
        )
    min_value = min(profile.non_jump_values())
    if min_value < 2:
        raise LemmaViolation(
            "minimum q-signature of T(2,%d) is %d, expected >= 2" % (q, min_value)
        )
    sigma_minus_one = tl_signature(V, UnitRootArg(1, 2), _delta=delta)
    if sigma_minus_one != q - 1:
        raise LemmaViolation(
            "sigma_{-1}(T(2,%d)) is %d, expected %d" % (q, sigma_minus_one, q - 1)
        )
    return TorusLemmaReport(
        q=q,
        profile=profile,
        min_value=min_value,
        sigma_at_minus_one=sigma_minus_one,
    )


@dataclass(frozen=True)
class JumpInfo:
    numerator: int  # jump at angle numerator/(2q)
    denominator: int
    ccw_step: int  # signature change counterclockwise across the root
    away_step: int  # step in the direction leading away from omega = 1
    simple: bool


@dataclass(frozen=True)
class JumpStepReport:
    q: int
    jumps: tuple
    sigma_at_minus_one: int | None  # None when -1 is itself a root


def jump_step_check(V, q):
    """Locate signature jumps on the 2q-grid and check each simple one is +-2.

    Requires every unit-circle root of the Alexander polynomial to be a root
    of unity of order dividing 2q; one-sided values are read off at the 4q-th
    root midpoints, which are never Alexander roots under that hypothesis.
    """
    V.require_valid()
    if q < 1:
        raise ValueError("q must be >= 1")
    delta = alexander(V)
    factors, remainder = cyclotomic_factor_extract(delta)
    if remainder.degree() > 0:
        raise PreconditionUnverifiable(
            "Alexander polynomial has non-cyclotomic factor %s; jump "
            "locations are not certified rational angles" % remainder
        )
    bad = [n for n, _ in factors if (2 * q) % n != 0]
    if bad:
        raise PreconditionUnverifiable(
            "cyclotomic factors with index not dividing %d: %s" % (2 * q, bad)
        )
    multiplicity = dict(factors)
    # Signature on each open arc between consecutive 2q-grid points.
    mid = [
        tl_signature(V, UnitRootArg(2 * j + 1, 4 * q), _delta=delta)
        for j in range(2 * q)
    ]
    jumps = []
    for j in range(1, 2 * q):
        w = UnitRootArg(j, 2 * q)
        if not at_jump(V, w, _delta=delta):
            continue
        ccw = mid[j] - mid[j - 1]
        away = ccw if 2 * j < 2 * q else -ccw
        if 2 * j == 2 * q:
            away = ccw
        simple = multiplicity.get(w.order, 0) == 1
        if simple and abs(ccw) != 2:
            raise LemmaViolation(
                "jump at %d/%d across a simple root has step %d, expected +-2"
                % (j, 2 * q, ccw)
            )
        jumps.append(
            JumpInfo(
                numerator=j,
                denominator=2 * q,
                ccw_step=ccw,
                away_step=away,
                simple=simple,
            )
        )
    w_half = UnitRootArg(1, 2)
    if at_jump(V, w_half, _delta=delta):
        sigma_minus_one = None
    else:
        sigma_minus_one = tl_signature(V, w_half, _delta=delta)
    return JumpStepReport(q=q, jumps=tuple(jumps), sigma_at_minus_one=sigma_minus_one)
