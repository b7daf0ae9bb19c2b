from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from skewfib.integrality import (
    Congruence,
    CongruenceSystem,
    IntegralityError,
    StructureViolation,
    admissible,
    complex_expansion,
    cross_field_implications,
    first_failing_coefficient,
    hurwitz_radon,
    integrality_system,
    james_complex,
    james_quaternionic,
    prime_periods,
    real_exists,
    real_period,
    relation_check,
    solve_congruences,
)
from skewfib.series import base_series, series_pow_symbolic

B_ROW = [2, 24, 24, 2880, 2880, 362880, 362880, 29030400, 29030400, 958003200, 958003200]
C_ROW = [24, 1440, 362880, 14515200, 958003200]
A_ROW = [2, 4, 4, 8, 8, 8, 8, 16, 32, 64, 64, 128, 128, 128]


def rho_oracle(q):
    # straight from the definition: search b, c with q = 2^(b+4c) * odd
    for c in range(20):
        for b in range(4):
            k = 2 ** (b + 4 * c)
            if q % k == 0 and (q // k) % 2 == 1:
                return 2 ** b + 8 * c
    raise AssertionError


def brute_min(system, limit):
    for r in range(1, limit + 1):
        if system.holds(r):
            return r
    return None


class TestHurwitzRadon:
    @pytest.mark.parametrize("q,expected", [(1, 1), (8, 8), (16, 9), (240, 9), (2, 2), (4, 4)])
    def test_values(self, q, expected):
        assert hurwitz_radon(q) == expected

    def test_against_definition(self):
        for q in range(1, 3000):
            assert hurwitz_radon(q) == rho_oracle(q)

    def test_odd_families(self):
        for odd in range(1, 100, 2):
            assert hurwitz_radon(odd) == 1
            assert hurwitz_radon(2 * odd) == 2
            assert hurwitz_radon(4 * odd) == 4
            assert hurwitz_radon(8 * odd) == 8
            assert hurwitz_radon(16 * odd) == 9

    def test_zero(self):
        with pytest.raises(IntegralityError):
            hurwitz_radon(0)


class TestReal:
    def test_exists(self):
        assert real_exists(3, 4)
        assert real_exists(0, 1)
        assert not real_exists(2, 2)

    def test_period_row(self):
        assert [real_period(p, check_bound=600) for p in range(1, 15)] == A_ROW


class TestSolver:
    def test_single(self):
        assert solve_congruences(CongruenceSystem([((0, 1), 2)])) == 2

    def test_worked_pair(self):
        sys_ = CongruenceSystem([((0, -5, 6), 12), ((0, 3, -5, 2), 12)])
        assert solve_congruences(sys_) == 12

    def test_squared_complex_t1_to_t4(self):
        exp = series_pow_symbolic(base_series("complex_squared", 4))
        assert solve_congruences(integrality_system(exp, 4)) == 1440

    def test_prime_periods(self):
        exp = series_pow_symbolic(base_series("complex_squared", 4))
        assert prime_periods(integrality_system(exp, 4)) == {2: 5, 3: 2, 5: 1}

    def test_structure_violation(self):
        with pytest.raises(StructureViolation) as exc:
            solve_congruences(CongruenceSystem([((-1, 1), 2)]))  # r odd
        assert exc.value.prime == 2
        with pytest.raises(StructureViolation) as exc:
            solve_congruences(CongruenceSystem([((0, -1, 1), 9)]))  # r(r-1) = 0 mod 9
        assert exc.value.prime == 3

    def test_empty(self):
        with pytest.raises(IntegralityError):
            solve_congruences(CongruenceSystem([]))

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.tuples(st.lists(st.integers(-20, 20), min_size=1, max_size=4),
                              st.integers(1, 60)), min_size=1, max_size=3))
    def test_against_brute_force(self, raw):
        # force a zero constant term so r = 0 is always a solution
        system = CongruenceSystem([((0, *poly), m) for poly, m in raw])
        limit = lcm(*[c.modulus for c in system.constraints])
        sols = [r for r in range(limit) if system.holds(r)]
        try:
            got = solve_congruences(system)
        except StructureViolation:
            # then no divisor d of the modulus has the multiples of d as solutions
            assert all(sols != list(range(0, limit, d))
                       for d in range(1, limit + 1) if limit % d == 0)
            return
        assert got == brute_min(system, limit)
        assert sols == list(range(0, limit, got))


class TestJames:
    def test_complex_row(self):
        assert [james_complex(p) for p in range(1, 12)] == B_ROW

    def test_quaternionic_row(self):
        assert [james_quaternionic(p) for p in range(1, 6)] == C_ROW

    def test_divisibility_chain(self):
        for p in range(1, 14):
            assert james_complex(p + 1) % james_complex(p) == 0
            assert james_complex(p) % 2 == 0
        for p in range(1, 11):
            assert james_quaternionic(p + 1) % james_quaternionic(p) == 0

    def test_complex_admissible_set(self):
        for p in range(1, 5):
            exp = complex_expansion(p)
            b = james_complex(p)
            for q in range(1, 2 * b + 1):
                ok = all(exp.polys[k](q).denominator == 1 for k in range(1, p + 1))
                assert ok == (q % b == 0), (p, q)

    def test_first_failing_coefficient(self):
        assert first_failing_coefficient("C", 2, 2) == 2
        assert first_failing_coefficient("C", 2, 3) == 1
        assert first_failing_coefficient("C", 2, 24) is None
        assert first_failing_coefficient("H", 1, 12) == 1  # -1 is odd
        assert first_failing_coefficient("H", 2, 24) == 2

    def test_bad_p(self):
        with pytest.raises(IntegralityError):
            james_complex(0)


class TestAdmissible:
    def test_c13(self):
        assert admissible("C", 1, 3).possible

    def test_c2_26(self):
        v = admissible("C", 2, 26)
        assert v.possible and v.period == 24

    def test_r24(self):
        v = admissible("R", 2, 4)
        assert not v.possible and "rho(2) = 2" in v.reason

    def test_h14(self):
        v = admissible("H", 1, 4)
        assert not v.possible and v.failing_coefficient == 1

    def test_bad_n(self):
        with pytest.raises(IntegralityError):
            admissible("C", 3, 3)

    def test_implications(self):
        (r,) = cross_field_implications("C", 1, 3)
        assert r.label == "R-(3,7)" and r.possible
        c, r = cross_field_implications("H", 1, 3)
        assert (c.label, r.label) == ("C-(3,7)", "R-(5,9)")
        # rho(48) = rho(16 * 3) = 9 >= 6
        assert hurwitz_radon(48) == rho_oracle(48) == 9
        (r,) = cross_field_implications("C", 2, 26)
        assert r.label == "R-(5,53)" and r.possible
        with pytest.raises(IntegralityError):
            cross_field_implications("R", 1, 3)


class TestRelation:
    @pytest.mark.parametrize("p,case", [(1, "equal"), (2, "half"), (3, "equal"), (4, "half")])
    def test_cases(self, p, case):
        assert relation_check(p) == case

    def test_up_to_seven(self):
        for p in range(1, 8):
            case = relation_check(p)
            if p % 2 == 0:
                assert case == "half"
