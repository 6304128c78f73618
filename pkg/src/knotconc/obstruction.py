"""Separation engine: achievable signature-sum ranges and witness schedules.

Each family member J_i is the n_i-fold multiple of the (2,q) torus knot.  A
character contributes a sum of L = 2*g*p^k torus-knot signatures, each term
either 0 or in [n_i*S_min, n_i*S_max], so the achievable nonzero sums fill
[n_i*S_min, L*n_i*S_max].  The greedy schedule spaces these ranges more than
2*N0 apart, which makes the Casson-Gordon equality impossible between
distinct members.

The character model here is an over-approximation: each of the L lift terms
independently takes any value in Z_q, while genuine characters form a
subgroup-constrained subset.  Disjointness of the larger ranges is still a
sound obstruction.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass

from .covers import classify_prime_power_covers, cover_order, max_prime_power_divisor
from .errors import HypothesisNotSatisfied, LemmaViolation, SeparationFailure
from .seifert import alexander, torus_2q
from .signatures import JUMP, signature_profile


@dataclass(frozen=True)
class FamilyParameters:
    genus: int
    p: int
    k: int
    q: int  # modulus for characters; odd prime power >= 3 in practice
    n0: int  # bound on |sigma_1(tau(K, chi))| over all characters

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be >= 1")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.q < 2:
            raise ValueError("q must be >= 2")
        if self.n0 < 0:
            raise ValueError("n0 must be >= 0")
        if self.term_count < 2:
            raise ValueError("term count 2*g*p^k must be >= 2")

    @property
    def term_count(self):
        """Number of signature terms per character sum."""
        return 2 * self.genus * self.p**self.k


@dataclass(frozen=True)
class ScheduleEntry:
    n: int  # multiplicity of the torus knot
    lo: int
    hi: int


@dataclass(frozen=True)
class WitnessSchedule:
    entries: tuple  # ScheduleEntry, n strictly increasing
    parameters: FamilyParameters
    s_min: int
    s_max: int


def torus_profile_values(q):
    """sigma_{a/q}(T_{2,q}) for a = 0..q-1 (0 at a = 0)."""
    profile = signature_profile(torus_2q(q), q)
    values = [0] + [profile.values[a] for a in range(1, q)]
    if any(v is JUMP for v in values):
        raise LemmaViolation("unexpected jump of T(2,%d) at a q-th root" % q)
    return values


def profile_extremes(q):
    """(S_min, S_max) of the nonzero-angle signature profile of T_{2,q}."""
    values = torus_profile_values(q)[1:]
    s_min, s_max = min(values), max(values)
    if s_min < 2:
        raise LemmaViolation(
            "minimum q-signature of T(2,%d) is %d, expected >= 2" % (q, s_min)
        )
    return s_min, s_max


def sum_range(n, params, extremes):
    """Range of achievable signature sums with at least one nonzero term."""
    if n < 1:
        raise ValueError("n must be >= 1")
    s_min, s_max = extremes
    return n * s_min, params.term_count * n * s_max


def _ceil_div(a, b):
    return -(-a // b)


def witness_schedule(params, count, extremes=None):
    """Greedy multiplicities n_i with pairwise separated sum ranges."""
    if count < 0:
        raise ValueError("count must be >= 0")
    if extremes is None:
        extremes = profile_extremes(params.q)
    s_min, s_max = extremes
    entries = []
    threshold = 2 * params.n0 + 1
    for _ in range(count):
        n = _ceil_div(threshold, s_min)
        lo, hi = sum_range(n, params, extremes)
        entries.append(ScheduleEntry(n=n, lo=lo, hi=hi))
        threshold = 2 * params.n0 + hi + 1
    return WitnessSchedule(
        entries=tuple(entries), parameters=params, s_min=s_min, s_max=s_max
    )


# Brute-force enumeration is feasible only at desk scale.
_BRUTE_FORCE_MAX_TERMS = 8
_BRUTE_FORCE_MAX_Q = 7


@dataclass(frozen=True)
class SeparationReport:
    pair_count: int
    brute_forced: bool
    note: str


def verify_separation(schedule):
    """Check that no Casson-Gordon equality can hold between members.

    Raises SeparationFailure on any invariant breach.  For each pair i < j,
    the j-side interval [lo_j, hi_j] must avoid the i-side achievable sums
    (including the all-zero character) padded by 2*N0 on each side.  At desk
    scale the check is repeated by enumerating every character-value
    assignment on both sides.
    """
    params = schedule.parameters
    entries = schedule.entries
    n0 = params.n0
    for idx, e in enumerate(entries):
        expected_lo = e.n * schedule.s_min
        expected_hi = params.term_count * e.n * schedule.s_max
        if e.lo != expected_lo or e.hi != expected_hi:
            raise SeparationFailure(
                "entry %d range (%d, %d) does not match n=%d" % (idx, e.lo, e.hi, e.n)
            )
        if idx and entries[idx - 1].n >= e.n:
            raise SeparationFailure("multiplicities are not strictly increasing")
        floor = 2 * n0 + 1 if idx == 0 else 2 * n0 + entries[idx - 1].hi + 1
        if e.lo < floor:
            raise SeparationFailure(
                "entry %d lower bound %d below required %d" % (idx, e.lo, floor)
            )
    pair_count = 0
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            pair_count += 1
            ei, ej = entries[i], entries[j]
            # i-side can contribute 0 (trivial character) or [lo_i, hi_i].
            if ej.lo <= ei.hi + 2 * n0 or ej.lo <= 2 * n0:
                raise SeparationFailure(
                    "ranges of entries %d and %d are not separated" % (i, j)
                )
    brute = (
        params.term_count <= _BRUTE_FORCE_MAX_TERMS
        and params.q <= _BRUTE_FORCE_MAX_Q
        and len(entries) >= 2
    )
    if brute:
        _brute_force_separation(schedule)
    note = (
        "character sums over-approximated: each of the %d lift terms ranges "
        "over all of Z_%d" % (params.term_count, params.q)
    )
    return SeparationReport(pair_count=pair_count, brute_forced=brute, note=note)


def _achievable_sums(n, params, values):
    """All sums over character assignments; returns (all, with-nonzero-term)."""
    scaled = [n * v for v in values]
    terms = params.term_count
    if params.q**terms <= 20000:
        all_sums = set()
        nonzero_sums = set()
        for assignment in itertools.product(range(params.q), repeat=terms):
            s = sum(scaled[a] for a in assignment)
            all_sums.add(s)
            if any(assignment):
                nonzero_sums.add(s)
        return all_sums, nonzero_sums
    # Iterated sumset; identical result since the distinct sums are few.
    all_sums = {0}
    for _ in range(terms):
        all_sums = {s + v for s in all_sums for v in scaled}
    # Nonzero torus signatures are positive, so only the all-zero
    # assignment sums to 0.
    return all_sums, all_sums - {0}


def _brute_force_separation(schedule):
    params = schedule.parameters
    values = torus_profile_values(params.q)
    n0 = params.n0
    sums = [_achievable_sums(e.n, params, values) for e in schedule.entries]
    for i in range(len(sums)):
        for j in range(i + 1, len(sums)):
            for side_all, side_nonzero in (
                (sums[i][0], sums[j][1]),
                (sums[j][0], sums[i][1]),
            ):
                hit = _find_collision(side_all, side_nonzero, 2 * n0)
                if hit is not None:
                    raise SeparationFailure(
                        "enumeration found colliding sums %d and %d "
                        "for entries %d, %d" % (hit[0], hit[1], i, j)
                    )


def _find_collision(a_sums, b_sums, pad):
    b_sorted = sorted(b_sums)
    for s in a_sums:
        idx = bisect.bisect_left(b_sorted, s - pad)
        if idx < len(b_sorted) and b_sorted[idx] <= s + pad:
            return s, b_sorted[idx]
    return None


@dataclass(frozen=True)
class FamilyReport:
    delta: object  # IntPolynomial
    classification: object  # ClassificationReport
    witness_r: int
    witness_order: object  # HomologyOrder
    suggested_q: int
    schedule: WitnessSchedule
    separation: SeparationReport
    note: str


def family_report(V, schedule, classification=None):
    """Bundle the whole obstruction pipeline for a Seifert matrix and schedule.

    Raises HypothesisNotSatisfied when every prime power branched cover of
    the knot is a homology sphere (no obstruction available).
    """
    V.require_valid()
    delta = alexander(V)
    if classification is None:
        classification = classify_prime_power_covers(delta)
    if classification.all_prime_power_covers_trivial:
        raise HypothesisNotSatisfied(
            "all prime power branched covers are homology spheres; "
            "Alexander polynomial %s gives no obstruction" % delta,
            classification=classification,
        )
    witness_r, witness_order = classification.witness_cover
    suggested_q = (
        max_prime_power_divisor(witness_order.value)
        if witness_order.is_finite and witness_order.value >= 2
        else 0
    )
    separation = verify_separation(schedule)
    note = (
        "every family member shares this Seifert matrix by construction; "
        "member i is obtained by tying the n_i-fold multiple of T(2,%d) "
        "into the surface bands" % schedule.parameters.q
    )
    return FamilyReport(
        delta=delta,
        classification=classification,
        witness_r=witness_r,
        witness_order=witness_order,
        suggested_q=suggested_q,
        schedule=schedule,
        separation=separation,
        note=note,
    )
