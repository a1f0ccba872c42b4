import itertools
from fractions import Fraction

import pytest

from multinom import backend
from multinom.distribution import (
    moment_identity_check,
    moment_identity_report,
    pmf_convolution,
    pmf_demoivre,
    pmf_from_coefficients,
    raw_moments,
    sample_sums,
    uniform_moment,
    weighted_power_sum,
    within_four_sigma,
)


def brute_force_pmf(q: int, L: int) -> list[Fraction]:
    """Oracle: enumerate all (q+1)^L outcomes."""
    counts = [0] * (q * L + 1)
    for outcome in itertools.product(range(q + 1), repeat=L):
        counts[sum(outcome)] += 1
    total = (q + 1) ** L
    return [Fraction(c, total) for c in counts]


def test_two_dice_table_against_enumeration():
    oracle = brute_force_pmf(5, 2)
    table = pmf_from_coefficients(5, 2)
    assert list(table) == oracle
    assert table.mass(5) == Fraction(6, 36)
    assert table.mass(7) == Fraction(4, 36)


def test_pmf_examples():
    assert pmf_from_coefficients(2, 4).mass(4) == Fraction(19, 81)
    assert pmf_from_coefficients(1, 1).mass(0) == Fraction(1, 2)
    assert pmf_demoivre(2, 4, 4) == Fraction(19, 81)
    assert pmf_demoivre(3, 2, 3) == Fraction(4, 16)
    assert pmf_demoivre(2, 2, 5) == 0


def test_convolution_examples():
    assert list(pmf_convolution(1, 2)) == [Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)]
    assert list(pmf_convolution(2, 2)) == [
        Fraction(1, 9),
        Fraction(2, 9),
        Fraction(3, 9),
        Fraction(2, 9),
        Fraction(1, 9),
    ]
    assert list(pmf_convolution(4, 1)) == [Fraction(1, 5)] * 5
    assert list(pmf_convolution(3, 0)) == [Fraction(1)]


def test_three_routes_agree():
    for q in range(1, 6):
        for L in range(7):
            table = pmf_from_coefficients(q, L)
            assert table.masses == pmf_convolution(q, L).masses
            if L <= 4:
                assert list(table) == brute_force_pmf(q, L)
            for a in range(q * L + 1):
                assert pmf_demoivre(q, L, a) == table.mass(a)


def test_normalization_symmetry_denominators():
    for q in range(1, 6):
        for L in range(7):
            table = pmf_from_coefficients(q, L)
            assert sum(table.masses) == 1
            assert table.masses == table.masses[::-1]
            scale = (q + 1) ** L
            assert all(scale % p.denominator == 0 for p in table)


def test_semigroup_property():
    for q in range(1, 4):
        for L1 in range(5):
            for L2 in range(5):
                left = pmf_from_coefficients(q, L1)
                right = pmf_from_coefficients(q, L2)
                product = tuple(backend.active.convolve(list(left), list(right)))
                assert product == pmf_from_coefficients(q, L1 + L2).masses


def test_uniform_moment():
    assert uniform_moment(5, 1) == Fraction(5, 2)
    assert uniform_moment(3, 0) == 1
    assert uniform_moment(2, 2) == Fraction(5, 3)
    with pytest.raises(ValueError):
        uniform_moment(0, 1)


def test_weighted_power_sum_against_direct_summation():
    # direct sums over the printed q=2, L=2 row [1, 2, 3, 2, 1]
    printed_row = [1, 2, 3, 2, 1]
    for m in range(5):
        direct = sum(k**m * c for k, c in enumerate(printed_row))
        assert weighted_power_sum(2, 2, m) == direct
    assert weighted_power_sum(2, 2, 1) == 18 == 3**2 * (2 * 2) // 2
    assert weighted_power_sum(1, 3, 0) == 8
    assert weighted_power_sum(2, 2, 2) == 48


def test_moment_identities():
    assert moment_identity_check(2, 3, 1)
    assert moment_identity_check(3, 2, 2)
    assert moment_identity_check(2, 2, 3)
    for q in range(1, 5):
        for L in range(1, 5):
            for m in range(1, 5):
                report = moment_identity_report(q, L, m)
                assert report["ok"], report
                assert report["power_sum"] == report["moment_expansion"]
                if m <= 3:
                    assert report["closed_form"] == report["power_sum"]


def test_raw_moments():
    moments = raw_moments(2, 4, 2)
    assert moments[0] == 1
    assert moments[1] == 4
    assert moments[2] == Fraction(56, 3)
    # mean and variance closed forms
    for q in range(1, 5):
        for L in range(7):
            table_moments = raw_moments(q, L, 2)
            assert table_moments[1] == Fraction(q * L, 2)
            variance = table_moments[2] - table_moments[1] ** 2
            assert variance == Fraction(L * q * (q + 2), 12)


def test_sampler_totals_and_support():
    counts = sample_sums(1, 1, 1000, 7)
    assert len(counts) == 2
    assert sum(counts) == 1000
    counts = sample_sums(2, 2, 500, 11)
    assert len(counts) == 5
    assert sum(counts) == 500
    assert all(c >= 0 for c in counts)


def test_sampler_is_deterministic():
    a = sample_sums(5, 2, 2000, 20260810)
    b = sample_sums(5, 2, 2000, 20260810)
    assert a == b
    c = sample_sums(5, 2, 2000, 20260811)
    assert a != c


def test_sampler_rejects_bad_args():
    with pytest.raises(ValueError):
        sample_sums(2, 1, 0, 1)
    with pytest.raises(ValueError):
        sample_sums(2, 1, 10, -1)


def test_sampler_frequencies_near_exact_law():
    count = 200_000
    counts = sample_sums(5, 2, count, 20260810)
    table = pmf_from_coefficients(5, 2)
    for a, observed in enumerate(counts):
        assert within_four_sigma(observed, count, table.mass(a))


def test_within_four_sigma_edges():
    assert within_four_sigma(1000, 1000, Fraction(1))
    assert not within_four_sigma(0, 1000, Fraction(1, 2))
