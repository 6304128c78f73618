"""Concordance invariants of Seifert matrices.

Exact computation of Alexander polynomials, cyclic branched cover homology
orders, cyclotomic classification of which covers are homology spheres,
certified Tristram-Levine signatures, and greedy witness schedules
separating infinitely many knots that share a Seifert matrix.
"""

from .covers import (
    ClassificationReport,
    HomologyOrder,
    assert_rational_homology_sphere,
    classify_prime_power_covers,
    cover_order,
    cyclotomic_product_identity,
    max_prime_power_divisor,
)
from .exactpoly import (
    IntPolynomial,
    cyclotomic,
    cyclotomic_factor_extract,
    distinct_prime_factors,
    phi_inverse_candidates,
    resultant,
    t_power_minus_one,
    totient,
)
from .obstruction import (
    FamilyParameters,
    FamilyReport,
    ScheduleEntry,
    WitnessSchedule,
    family_report,
    profile_extremes,
    sum_range,
    verify_separation,
    witness_schedule,
)
from .seifert import (
    FIGURE_EIGHT,
    TREFOIL,
    UNKNOT,
    SeifertMatrix,
    alexander,
    connected_sum,
    mirror,
    multiple,
    torus_2q,
)
from .signatures import (
    JUMP,
    SignatureProfile,
    UnitRootArg,
    at_jump,
    jump_step_check,
    signature_profile,
    tl_signature,
    verify_torus_lemma,
)

__version__ = "0.1.0"
