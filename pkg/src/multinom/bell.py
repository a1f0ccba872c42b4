"""Partial Bell partition polynomials over exact rationals.

bell_partial(n, L, t) sums, over all multiplicity vectors with
sum(i * k_i) = n and sum(k_i) = L, the terms

    n! / (k_1! k_2! ... (1!)^{k_1} (2!)^{k_2} ...) * t_1^{k_1} t_2^{k_2} ...

Classical specializations (Stirling numbers of both kinds, all-factorial
arguments) and the factorial sequence truncated after q+1 entries, which
reproduces ordinary multinomial coefficients, are provided on top.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from . import coefficients
from .combinat import binomial, factorial, weighted_compositions


def bell_partial(n: int, L: int, t: Iterable) -> Fraction:
    """Exact value of the partial Bell polynomial at t = (t_1, t_2, ...).

    Entries beyond the supplied sequence count as zero.  B(n, 0) is 0 for
    the whole domain n >= 1 (the sum over an empty index set), and L > n
    gives 0 as well.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if L < 0:
        raise ValueError("L must be nonnegative")
    values = [Fraction(x) for x in t]
    while values and values[-1] == 0:
        values.pop()
    if L == 0 or L > n or not values:
        return Fraction(0)
    n_fact = factorial(n)
    total = Fraction(0)
    for comp in weighted_compositions(n, min(n, len(values)), part_count=L):
        weight_product = Fraction(1)
        denom = 1
        for i, k in enumerate(comp.parts, start=1):
            if k == 0:
                continue
            tv = values[i - 1]
            if tv == 0:
                weight_product = Fraction(0)
                break
            weight_product *= tv**k
            denom *= factorial(k) * factorial(i) ** k
        if weight_product:
            total += Fraction(n_fact, denom) * weight_product
    return total


def _integer_value(value: Fraction, label: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{label} came out non-integral: {value}")
    return int(value)


def stirling2(n: int, L: int) -> int:
    """Stirling numbers of the second kind: partitions of an n-set into
    L nonempty blocks (t = 1, 1, 1, ...)."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= L <= n:
        raise ValueError("L must lie in [0, n]")
    return _integer_value(bell_partial(n, L, [1] * n), f"stirling2({n},{L})")


def stirling1_unsigned(n: int, L: int) -> int:
    """Unsigned Stirling numbers of the first kind: permutations of n
    elements with L cycles (t_m = (m-1)!)."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= L <= n:
        raise ValueError("L must lie in [0, n]")
    t = [factorial(m - 1) for m in range(1, n + 1)]
    return _integer_value(bell_partial(n, L, t), f"stirling1_unsigned({n},{L})")


def bell_factorial_full(n: int, L: int) -> int:
    """Bell polynomial at t_m = m!, which collapses to the closed form
    n!/L! * C(n-1, n-L); both sides are computed and must agree."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= L <= n:
        raise ValueError("L must lie in [1, n]")
    t = [factorial(m) for m in range(1, n + 1)]
    value = _integer_value(bell_partial(n, L, t), f"bell_factorial_full({n},{L})")
    closed = factorial(n) // factorial(L) * binomial(n - 1, n - L)
    if value != closed:
        raise ArithmeticError(
            f"bell_factorial_full({n},{L}): partition sum {value} != closed form {closed}"
        )
    return value


def truncated_factorial_closed_form(n: int, L: int, q: int) -> int:
    """n!/L! * C(L, n-L)_q, the closed form the truncated Bell value must hit."""
    return factorial(n) // factorial(L) * coefficients.coeff_demoivre(q, L, n - L)


def bell_truncated_factorial(n: int, L: int, q: int) -> int:
    """Bell polynomial at t = (1!, 2!, ..., (q+1)!, 0, 0, ...).

    Cutting the factorial sequence after q+1 entries turns the Bell sum
    into an ordinary multinomial count: the value equals
    n!/L! * C(L, n-L)_q, and both sides are computed and must agree.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= L <= n:
        raise ValueError("L must lie in [1, n]")
    if q < 1:
        raise ValueError("q must be a positive integer")
    t = [factorial(m) for m in range(1, min(n, q + 1) + 1)]
    value = _integer_value(
        bell_partial(n, L, t), f"bell_truncated_factorial({n},{L},{q})"
    )
    closed = truncated_factorial_closed_form(n, L, q)
    if value != closed:
        raise ArithmeticError(
            f"bell_truncated_factorial({n},{L},{q}): partition sum {value} "
            f"!= closed form {closed}"
        )
    return value


def stars_and_bars_identity(q: int, L: int, a: int) -> bool:
    """Whether C(L, a)_q equals the unconstrained count C(L+a-1, a).

    Requires q >= a, where the per-cell cap can never bind, so the bounded
    count must match plain stars and bars.  Always true in that range;
    exposed as a check so callers can sweep it.
    """
    if a < 0 or L < 0:
        raise ValueError("L and a must be nonnegative")
    if q < a:
        raise ValueError("stars_and_bars_identity requires q >= a")
    unbounded = 1 if a == 0 else binomial(L + a - 1, a)
    return coefficients.coeff_demoivre(q, L, a) == unbounded
