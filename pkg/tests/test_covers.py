import pytest

from conftest import random_seifert
from knotconc.covers import (
    ClassificationReport,
    HomologyOrder,
    assert_rational_homology_sphere,
    classify_prime_power_covers,
    cover_order,
    cyclotomic_product_identity,
    max_prime_power_divisor,
)
from knotconc.errors import (
    DegenerateCase,
    NotAPrimePower,
    NotAKnotPolynomial,
)
from knotconc.exactpoly import (
    IntPolynomial,
    cyclotomic,
    prime_powers_up_to,
    resultant,
    t_power_minus_one,
    totient,
)
from knotconc.seifert import FIGURE_EIGHT, TREFOIL, alexander, connected_sum

P = IntPolynomial

TREFOIL_DELTA = P([1, -1, 1])
FIG8_DELTA = P([-1, 3, -1])


class TestCoverOrder:
    def test_trefoil_table(self):
        expected = {2: 3, 3: 4, 4: 3, 5: 1}
        for r, value in expected.items():
            order = cover_order(TREFOIL_DELTA, r)
            assert order.is_finite and order.value == value

    def test_trefoil_six_fold_infinite(self):
        order = cover_order(TREFOIL_DELTA, 6)
        assert not order.is_finite
        assert str(order) == "infinite"

    def test_figure_eight_table(self):
        assert cover_order(FIG8_DELTA, 2).value == 5
        assert cover_order(FIG8_DELTA, 3).value == 16

    def test_unknot(self):
        for r in (2, 3, 10):
            assert cover_order(P([1]), r).value == 1

    def test_rejects_non_knot_polynomial(self):
        with pytest.raises(NotAKnotPolynomial):
            cover_order(P([2]), 2)
        with pytest.raises(NotAKnotPolynomial):
            cover_order(P([1, 1]), 2)

    def test_matches_direct_resultant(self, rng):
        for _ in range(30):
            V = random_seifert(rng, rng.randint(1, 2))
            delta = alexander(V)
            for r in (2, 3, 4, 5, 6, 9):
                order = cover_order(delta, r)
                direct = resultant(t_power_minus_one(r), delta)
                if order.is_finite:
                    assert order.value == abs(direct)
                else:
                    assert direct == 0

    def test_infinite_iff_cyclotomic_root(self):
        # Delta divisible by phi_6: infinite exactly when 6 | r.
        delta = TREFOIL_DELTA * TREFOIL_DELTA
        assert not cover_order(delta, 6).is_finite
        assert not cover_order(delta, 12).is_finite
        assert cover_order(delta, 4).is_finite

    def test_rational_homology_sphere_assertion(self):
        assert assert_rational_homology_sphere(TREFOIL_DELTA, 5)
        with pytest.raises(NotAPrimePower):
            assert_rational_homology_sphere(TREFOIL_DELTA, 6)


class TestClassifier:
    def test_all_trivial_verdicts(self):
        for n in (30, 42):
            report = classify_prime_power_covers(cyclotomic(n))
            assert isinstance(report, ClassificationReport)
            assert report.all_prime_power_covers_trivial
            assert report.witness_cover is None

    def test_all_trivial_checked_against_covers(self):
        for n in (30, 42):
            delta = cyclotomic(n)
            for r in prime_powers_up_to(27):
                assert cover_order(delta, r).value == 1

    def test_nontrivial_verdicts(self):
        expected = {6: (2, 3), 12: (3, 4), 15: (3, 25), 45: (5, 81)}
        for n, (r, value) in expected.items():
            report = classify_prime_power_covers(cyclotomic(n))
            assert not report.all_prime_power_covers_trivial
            wr, worder = report.witness_cover
            assert (wr, worder.value) == (r, value)
            # Independently confirm the witness cover order.
            assert cover_order(cyclotomic(n), r).value == value

    def test_unit_remainder_required(self):
        # Remainder 3 - t is not a unit, so some cover must be nontrivial.
        delta = P([3, -1]) * P([-1, 1]) + P([0])  # placeholder, rebuilt below
        delta = cyclotomic(30) * P([-2, 3])
        assert delta(1) == 1
        report = classify_prime_power_covers(delta)
        assert not report.all_prime_power_covers_trivial
        r, worder = report.witness_cover
        assert cover_order(delta, r).value == worder.value > 1

    def test_trefoil_nontrivial(self):
        report = classify_prime_power_covers(TREFOIL_DELTA)
        assert not report.all_prime_power_covers_trivial
        wr, worder = report.witness_cover
        assert (wr, worder.value) == (2, 3)

    def test_rejects_non_knot_polynomial(self):
        with pytest.raises(NotAKnotPolynomial):
            classify_prime_power_covers(P([1, 1]))


class TestMaxPrimePowerDivisor:
    def test_values(self):
        assert max_prime_power_divisor(12) == 4
        assert max_prime_power_divisor(45) == 9
        assert max_prime_power_divisor(7) == 7

    def test_rejects_small_input(self):
        with pytest.raises(ValueError):
            max_prime_power_divisor(1)


class TestProductIdentity:
    def test_known_values(self):
        cases = {
            (15, 3, 2): (25, 5, 2),
            (30, 7, 1): (1, 30, 1),
            (9, 3, 1): (27, 3, 3),
        }
        for (n, p, k), (value, m, b) in cases.items():
            got_value, predicted, got_m, got_b = cyclotomic_product_identity(n, p, k)
            assert (got_value, got_m, got_b) == (value, m, b)
            assert predicted == value

    def test_degenerate(self):
        with pytest.raises(DegenerateCase):
            cyclotomic_product_identity(2, 2, 1)
        with pytest.raises(DegenerateCase):
            cyclotomic_product_identity(9, 3, 3)

    def test_exponent_consistency(self):
        import math

        for n in (6, 10, 12, 15, 21, 30, 45):
            for p in (2, 3, 5):
                for k in (1, 2, 3):
                    m = n // math.gcd(n, p**k)
                    if m == 1:
                        continue
                    value, predicted, got_m, got_b = cyclotomic_product_identity(n, p, k)
                    assert got_m == m
                    assert got_b == totient(n) // totient(m)
                    assert value == predicted == abs(cyclotomic(m)(1)) ** got_b

    def test_three_primes_gives_one(self):
        # Indices with >= 3 distinct primes evaluate to 1 at every prime power.
        for n in (30, 42, 60):
            for p, k in ((2, 1), (3, 2), (7, 1), (11, 1)):
                if n % (p ** (k + 10)) == 0:
                    continue
                value, _, m, _ = cyclotomic_product_identity(n, p, k)
                if m > 1:
                    assert value == 1


class TestConnectedSumCovers:
    def test_orders_multiply(self):
        delta = alexander(connected_sum(TREFOIL, FIGURE_EIGHT))
        assert cover_order(delta, 2).value == 3 * 5
        assert cover_order(delta, 3).value == 4 * 16
