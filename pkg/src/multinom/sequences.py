"""Multibonacci numbers: the order-q generalization of Fibonacci.

phi(q, n) obeys the (q+1)-term recurrence
phi(n) = phi(n-1) + ... + phi(n-q-1) with phi(0) = 1 and
phi(-q) = ... = phi(-1) = 0, so q = 1 is the classical Fibonacci
sequence shifted to start 1, 1, 2, 3, 5, ...

Besides the defining recurrence this module evaluates the same numbers
three more ways (diagonal sums across the coefficient triangle, weighted
compositions, and an alternating binomial sum) so the routes can be
cross-checked exactly.
"""

from __future__ import annotations

from fractions import Fraction

from . import coefficients
from .combinat import binomial, multinomial, weighted_compositions


class FormulaDiscrepancy(ArithmeticError):
    """The alternating sum produced a value it provably should not."""


def multibonacci(q: int, n: int) -> int:
    """phi(q, n) by forward iteration of the defining recurrence."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    if n < -q:
        raise ValueError(f"n must be >= -q = {-q}")
    if n < 0:
        return 0
    window = [0] * q + [1]
    for _ in range(n):
        window.append(sum(window))
        window.pop(0)
    return window[-1]


def euclidean_split(q: int, n: int) -> tuple[int, int]:
    """The unique (m, r) with n = m(q+1) - r and 0 <= r <= q."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = -(-n // (q + 1))
    return m, m * (q + 1) - n


def multibonacci_diagonal(q: int, n: int) -> int:
    """phi(q, n) as the diagonal sum of coefficients C(n-l, l)_q for
    l = 0..qm-r, with (m, r) the euclidean split of n."""
    if n < 1:
        raise ValueError("n must be positive")
    m, r = euclidean_split(q, n)
    return sum(coefficients.coeff_demoivre(q, n - l, l) for l in range(q * m - r + 1))


def multibonacci_compositions(q: int, n: int) -> int:
    """phi(q, n) as the number of ordered ways to write n as a sum of
    parts of size 1..q+1 (weighted compositions scored by multinomials)."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    for comp in weighted_compositions(n, q + 1):
        total += multinomial(comp.part_sum, comp.parts)
    return total


def alternating_sum(q: int, n: int) -> Fraction:
    """The alternating binomial sum with halving powers of two, evaluated
    verbatim in exact rationals.

    Note the parameter convention: the sum with parameter q targets the
    order q-1 sequence, i.e. alternating_sum(q, n) should equal
    multibonacci(q - 1, n).  Individual terms may be non-integral (the
    power of two can be 2^-1); only the total is expected to be integral.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    if n < 1:
        raise ValueError("n must be positive")
    total = Fraction(0)
    for k in range(n // (q + 1) + 1):
        den = n - k * q
        if den == 0:
            # unreachable for n >= 1 since k <= n/(q+1) < n/q
            raise FormulaDiscrepancy(f"zero denominator at q={q}, n={n}, k={k}")
        term = Fraction(n - k * (q - 1), den) * binomial(den, k) * Fraction(2) ** (
            n - 1 - k * (q + 1)
        )
        total = total - term if k & 1 else total + term
    return total


def alternating_formula(q: int, n: int) -> int:
    """Integer value of alternating_sum(q, n); raises FormulaDiscrepancy
    if the total fails to be an integer."""
    total = alternating_sum(q, n)
    if total.denominator != 1:
        raise FormulaDiscrepancy(
            f"alternating sum is not an integer at q={q}, n={n}: {total}"
        )
    return int(total)


def alternating_discrepancy_report(q_values=(2, 3, 4), n_max: int = 30) -> list[dict]:
    """Per-(q, n) comparison of the alternating sum against the recurrence.

    Returns one record per pair, in (q, n) order, stating whether the sum
    came out integral and whether it agrees with multibonacci(q-1, n).
    The report is pure data; disagreements are recorded, never raised.
    """
    records = []
    for q in q_values:
        for n in range(1, n_max + 1):
            value = alternating_sum(q, n)
            expected = multibonacci(q - 1, n)
            records.append(
                {
                    "sum_parameter": q,
                    "order": q - 1,
                    "n": n,
                    "alternating": str(value),
                    "recurrence": str(expected),
                    "integral": value.denominator == 1,
                    "agrees": value == expected,
                }
            )
    return records


def multibonacci_shifted(q: int, m: int, r: int) -> int:
    """phi(q, (q+1)m - r) as the diagonal sum indexed by (m, r) directly;
    verified against the recurrence before returning."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    if m < 1:
        raise ValueError("m must be positive")
    if not 0 <= r <= q:
        raise ValueError("r must lie in [0, q]")
    n = (q + 1) * m - r
    total = sum(
        coefficients.coeff_demoivre(q, n - l, l) for l in range(q * m - r + 1)
    )
    expected = multibonacci(q, n)
    if total != expected:
        raise ArithmeticError(
            f"shifted diagonal sum {total} != recurrence value {expected} "
            f"at q={q}, m={m}, r={r}"
        )
    return total
