import pytest

from multinom import coefficients
from multinom.coefficients import (
    METHODS,
    central_trinomial_alternating,
    central_trinomial_direct,
    coeff,
    coeff_demoivre,
    coeff_diagonal,
    coeff_longitudinal,
    coeff_nested_sum,
    coeff_partition_sum,
    row,
    row_generating_function,
)
from multinom.combinat import binomial

# Leading rows of the printed reference triangles.
TRINOMIAL_ROWS = [
    [1],
    [1, 1, 1],
    [1, 2, 3, 2, 1],
    [1, 3, 6, 7, 6, 3, 1],
    [1, 4, 10, 16, 19, 16, 10, 4, 1],
    [1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1],
]
QUADRINOMIAL_ROWS = [
    [1],
    [1, 1, 1, 1],
    [1, 2, 3, 4, 3, 2, 1],
    [1, 3, 6, 10, 12, 12, 10, 6, 3, 1],
    [1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1],
]
PENTANOMIAL_ROWS = [
    [1],
    [1, 1, 1, 1, 1],
    [1, 2, 3, 4, 5, 4, 3, 2, 1],
    [1, 3, 6, 10, 15, 18, 19, 18, 15, 10, 6, 3, 1],
    [1, 4, 10, 20, 35, 52, 68, 80, 85, 80, 68, 52, 35, 20, 10, 4, 1],
]


@pytest.mark.parametrize(
    "q,golden",
    [(2, TRINOMIAL_ROWS), (3, QUADRINOMIAL_ROWS), (4, PENTANOMIAL_ROWS)],
)
def test_golden_rows(q, golden):
    for L, expected in enumerate(golden):
        assert list(row_generating_function(q, L)) == expected


def test_gf_rows_examples():
    assert list(row_generating_function(2, 4)) == [1, 4, 10, 16, 19, 16, 10, 4, 1]
    assert list(row_generating_function(3, 2)) == [1, 2, 3, 4, 3, 2, 1]
    assert list(row_generating_function(1, 3)) == [1, 3, 3, 1]


def test_nested_sum_examples():
    assert coeff_nested_sum(2, 3, 3) == 7
    assert coeff_nested_sum(2, 5, 5) == 51
    assert coeff_nested_sum(4, 3, 6) == 19


def test_longitudinal_examples():
    assert coeff_longitudinal(2, 4, 4) == 19
    assert coeff_longitudinal(3, 4, 6) == 44
    assert coeff_longitudinal(2, 1, 2) == 1


def test_diagonal_examples():
    assert coeff_diagonal(2, 3, 2) == 6
    assert coeff_diagonal(4, 2, 4) == 5
    assert coeff_diagonal(2, 0, 0) == 1


def test_demoivre_examples():
    assert coeff_demoivre(2, 4, 4) == 19
    assert coeff_demoivre(4, 4, 8) == 85
    assert coeff_demoivre(2, 3, 7) == 0


def test_partition_sum_examples():
    assert coeff_partition_sum(2, 2, 2) == 3
    assert coeff_partition_sum(2, 3, 3) == 7
    assert coeff_partition_sum(3, 3, 5) == 12


def test_dispatcher():
    assert coeff(2, 5, 4, "demoivre") == 45
    assert coeff(2, 5, 4, "gf") == 45
    assert coeff(1, 6, 2, "auto") == 15
    with pytest.raises(ValueError):
        coeff(2, 5, 4, "nonsense")
    with pytest.raises(ValueError):
        row(2, 5, "nonsense")


def test_domain_errors():
    for bad in ((0, 1, 1), (2, -1, 1), (2, 1, -1)):
        with pytest.raises(ValueError):
            coeff(*bad)


def test_row_helpers():
    r = row(2, 2)
    assert len(r) == 5
    assert r[2] == 3
    assert r.entry(17) == 0
    assert list(r) == [1, 2, 3, 2, 1]
    assert r.q == 2 and r.L == 2


@pytest.mark.parametrize("method", METHODS)
def test_row_by_every_method(method):
    assert list(row(2, 4, method)) == [1, 4, 10, 16, 19, 16, 10, 4, 1]
    assert list(row(3, 0, method)) == [1]


def test_method_equivalence_small_sweep():
    for q in range(1, 4):
        for L in range(9):
            reference = list(row_generating_function(q, L))
            for a, expected in enumerate(reference):
                assert coeff_nested_sum(q, L, a) == expected
                assert coeff_longitudinal(q, L, a) == expected
                assert coeff_diagonal(q, L, a) == expected
                assert coeff_demoivre(q, L, a) == expected
                assert coeff_partition_sum(q, L, a) == expected


def test_symmetry_and_row_sums():
    for q in range(1, 6):
        for L in range(9):
            r = list(row_generating_function(q, L))
            assert r == r[::-1]
            assert sum(r) == (q + 1) ** L


def test_binomial_specialization():
    for L in range(21):
        assert list(row_generating_function(1, L)) == [
            binomial(L, a) for a in range(L + 1)
        ]


def test_vanishing_beyond_support():
    for method in METHODS:
        assert coeff(2, 3, 7, method) == 0
        assert coeff(3, 2, 10, method) == 0


def test_convolution_identity():
    for q in range(1, 4):
        for L1 in range(5):
            r1 = row_generating_function(q, L1)
            for L2 in range(5):
                r2 = row_generating_function(q, L2)
                combined = row_generating_function(q, L1 + L2)
                for a in range(q * (L1 + L2) + 1):
                    assert combined.entry(a) == sum(
                        r1.entry(j) * r2.entry(a - j) for j in range(a + 1)
                    )


def test_central_trinomial_identity():
    assert central_trinomial_direct(0) == central_trinomial_alternating(0) == 1
    assert central_trinomial_direct(4) == central_trinomial_alternating(4) == 19
    assert central_trinomial_direct(5) == central_trinomial_alternating(5) == 51
    for n in range(31):
        central = coeff_demoivre(2, n, n)
        assert central_trinomial_direct(n) == central
        assert central_trinomial_alternating(n) == central


def test_large_single_coefficient_matches_methods():
    # a stays small so even the partition route is exact and quick
    q, L, a = 3, 150, 12
    reference = coeff_demoivre(q, L, a)
    assert coeff_partition_sum(q, L, a) == reference
    assert row_generating_function(q, L).entry(a) == reference
    assert coefficients.row_longitudinal(q, L).entry(a) == reference
