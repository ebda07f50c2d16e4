from math import comb, gcd

import pytest

from tokenspectra import (ParameterDomainError, count_burnside, count_moreau,
                          count_polya, enumerate_orbits, period)
from tokenspectra.necklaces import euler_phi, moebius, rotate

# orbit counts for k = 2..7, n = 3..12 (blank cells omitted)
ORBIT_COUNT_TABLE = {
    2: {3: 1, 4: 2, 5: 2, 6: 3, 7: 3, 8: 4, 9: 4, 10: 5, 11: 5, 12: 6},
    3: {3: 1, 4: 1, 5: 2, 6: 4, 7: 5, 8: 7, 9: 10, 10: 12, 11: 15, 12: 19},
    4: {4: 1, 5: 1, 6: 3, 7: 5, 8: 10, 9: 14, 10: 22, 11: 30, 12: 43},
    5: {5: 1, 6: 1, 7: 3, 8: 7, 9: 14, 10: 26, 11: 42, 12: 66},
    6: {6: 1, 7: 1, 8: 4, 9: 10, 10: 22, 11: 42, 12: 80},
    7: {7: 1, 8: 1, 9: 4, 10: 12, 11: 30, 12: 66},
}

# counts of necklaces with 8 marked beads, n = 8..17
EIGHT_TOKEN_SEQUENCE = [1, 1, 5, 15, 43, 99, 217, 429, 810, 1430]


class TestPeriod:
    def test_alternating_6(self):
        assert period((0, 2, 4), 6) == 2

    def test_contiguous_6(self):
        assert period((0, 1, 2), 6) == 6

    def test_alternating_8(self):
        assert period((0, 2, 4, 6), 8) == 2

    def test_half_turn(self):
        assert period((0, 3), 6) == 3
        assert period((0, 1, 4, 5), 8) == 4

    def test_divides_n(self):
        for n in (6, 8, 9, 12):
            for k in range(1, n // 2 + 1):
                table = enumerate_orbits(n, k)
                assert all(n % p == 0 for p in table.periods)

    def test_rejects_bad_subset(self):
        with pytest.raises(ParameterDomainError):
            period((0, 0, 2), 6)
        with pytest.raises(ParameterDomainError):
            period((0, 7), 6)


class TestEnumerateOrbits:
    def test_7_3_five_representatives(self):
        assert enumerate_orbits(7, 3).count == 5

    def test_8_4_period_profile(self):
        table = enumerate_orbits(8, 4)
        assert table.count == 10
        profile = sorted(table.periods)
        assert profile == [2, 4] + [8] * 8

    def test_6_3_period_profile(self):
        table = enumerate_orbits(6, 3)
        assert table.count == 4
        assert sorted(table.periods) == [2, 6, 6, 6]

    def test_representatives_canonical_and_sorted(self):
        table = enumerate_orbits(9, 3)
        assert list(table.reps) == sorted(table.reps)
        for rep in table.reps:
            assert all(rotate(rep, j, 9) >= rep for j in range(9))

    @pytest.mark.parametrize("n,k", [(6, 3), (8, 4), (9, 3), (10, 4)])
    def test_lookup_round_trip_total(self, n, k):
        table = enumerate_orbits(n, k)
        assert len(table.lookup) == comb(n, k)
        for subset, (i, j) in table.lookup.items():
            assert rotate(table.reps[i], j, n) == subset
            assert 0 <= j < table.periods[i]

    def test_locate_validates(self):
        table = enumerate_orbits(6, 3)
        assert table.locate((4, 0, 1)) == table.lookup[(0, 1, 4)]
        with pytest.raises(ParameterDomainError):
            table.locate((0, 1))

    def test_orbit_sizes_sum(self):
        for n in range(3, 13):
            for k in range(1, n // 2 + 1):
                assert sum(enumerate_orbits(n, k).periods) == comb(n, k)


class TestCounts:
    def test_burnside_examples(self):
        assert count_burnside(8, 4) == 10
        assert count_burnside(12, 6) == 80
        for n in (3, 7, 20):
            assert count_burnside(n, 1) == 1

    def test_polya_examples(self):
        assert count_polya(10, 5) == 26
        assert count_polya(5, 2) == 2

    def test_eight_token_sequence(self):
        got = [count_polya(n, 8) for n in range(8, 18)]
        assert got == EIGHT_TOKEN_SEQUENCE

    def test_moreau_examples(self):
        assert count_moreau(8, 4) == 8
        assert count_moreau(7, 3) == 5
        assert count_moreau(4, 2) == 1

    def test_moreau_4_2_by_enumeration(self):
        table = enumerate_orbits(4, 2)
        assert sum(1 for p in table.periods if p == 4) == 1

    def test_table_of_counts(self):
        for k, row in ORBIT_COUNT_TABLE.items():
            for n, want in row.items():
                assert count_burnside(n, k) == want, (n, k)
                assert count_polya(n, k) == want, (n, k)

    def test_three_routes_agree_with_enumeration(self):
        for n in range(3, 15):
            for k in range(1, n // 2 + 1):
                table = enumerate_orbits(n, k)
                assert count_burnside(n, k) == count_polya(n, k) == table.count
                aperiodic = sum(1 for p in table.periods if p == n)
                assert count_moreau(n, k) == aperiodic

    def test_coprime_case_all_orbits_full(self):
        for n, k in [(7, 3), (9, 4), (11, 5), (10, 3)]:
            assert gcd(n, k) == 1
            table = enumerate_orbits(n, k)
            assert all(p == n for p in table.periods)
            assert table.count * n == comb(n, k)
            assert count_moreau(n, k) == table.count

    def test_domain_errors(self):
        with pytest.raises(ParameterDomainError):
            count_burnside(5, 6)
        with pytest.raises(ParameterDomainError):
            count_polya(5, 0)
        with pytest.raises(ParameterDomainError):
            count_moreau(0, 1)


class TestSectorOrder:
    def test_identity_rotation(self):
        from tokenspectra.necklaces import sector_order
        for n in (4, 7, 12):
            assert sector_order(n, 0) == 1

    def test_product_with_gcd_is_n(self):
        from tokenspectra.necklaces import sector_order
        for n in (6, 8, 9, 12, 30):
            for r in range(n):
                assert gcd(n, r) * sector_order(n, r) == n


class TestNumberTheoryHelpers:
    def test_euler_phi(self):
        values = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
        assert [euler_phi(m) for m in range(1, 13)] == values

    def test_moebius(self):
        values = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
        assert [moebius(m) for m in range(1, 13)] == values

    def test_phi_divisor_sum(self):
        for n in (12, 30, 97):
            assert sum(euler_phi(d) for d in range(1, n + 1) if n % d == 0) == n
