"""Exact law of the sum of L independent uniform draws on {0, ..., q}.

Every probability is a Fraction; three independent routes produce the same
table (coefficient rows scaled by (q+1)^-L, an alternating per-entry sum,
and honest repeated convolution), making equality checks exact.  A seeded
deterministic sampler is included for Monte Carlo cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator

from . import _pykernels, backend, coefficients
from .combinat import multinomial


@dataclass(frozen=True)
class PmfTable:
    """Exact probability masses of the sum, over the support 0..qL."""

    q: int
    L: int
    masses: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.masses)

    def __iter__(self):
        return iter(self.masses)

    def mass(self, a: int) -> Fraction:
        """P(sum = a); 0 outside the support."""
        if 0 <= a < len(self.masses):
            return self.masses[a]
        return Fraction(0)

    def moment(self, i: int) -> Fraction:
        """Raw moment E[sum^i]."""
        return sum((Fraction(a) ** i) * p for a, p in enumerate(self.masses))


def _check(q: int, L: int) -> None:
    if q < 1:
        raise ValueError("q must be a positive integer")
    if L < 0:
        raise ValueError("L must be nonnegative")


def pmf_from_coefficients(q: int, L: int) -> PmfTable:
    """Masses C(L, a)_q / (q+1)^L from a full coefficient row."""
    _check(q, L)
    scale = (q + 1) ** L
    row = coefficients.row_generating_function(q, L)
    return PmfTable(q, L, tuple(Fraction(c, scale) for c in row))


def pmf_demoivre(q: int, L: int, a: int) -> Fraction:
    """Single mass P(sum = a) by the alternating inclusion-exclusion sum."""
    _check(q, L)
    if a < 0:
        raise ValueError("a must be nonnegative")
    return Fraction(coefficients.coeff_demoivre(q, L, a), (q + 1) ** L)


def pmf_convolution(q: int, L: int) -> PmfTable:
    """Masses by L-fold convolution of the single-draw distribution."""
    _check(q, L)
    base = [Fraction(1, q + 1)] * (q + 1)
    masses = [Fraction(1)]
    for _ in range(L):
        masses = backend.active.convolve(masses, base)
    return PmfTable(q, L, tuple(masses))


def uniform_moment(q: int, i: int) -> Fraction:
    """Raw moment E[X^i] of a single uniform draw on {0..q}."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    if i < 0:
        raise ValueError("i must be nonnegative")
    return Fraction(sum(j**i for j in range(q + 1)), q + 1)


def raw_moments(q: int, L: int, m_max: int) -> list[Fraction]:
    """Raw moments of the sum, orders 0..m_max."""
    table = pmf_from_coefficients(q, L)
    return [table.moment(i) for i in range(m_max + 1)]


def weighted_power_sum(q: int, L: int, m: int) -> int:
    """Sum over the row of k^m C(L, k)_q, i.e. (q+1)^L times the m-th
    raw moment of the sum."""
    _check(q, L)
    if m < 0:
        raise ValueError("m must be nonnegative")
    row = coefficients.row_generating_function(q, L)
    return sum((k**m) * c for k, c in enumerate(row))


def _compositions_exact(total: int, length: int) -> Iterator[tuple[int, ...]]:
    # ordered tuples of `length` nonnegative ints summing to `total`
    if length == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions_exact(total - first, length - 1):
            yield (first, *rest)


def moment_identity_report(q: int, L: int, m: int) -> dict:
    """Compare the power-weighted row sum against the moment expansion of
    the L-fold sum (and, for m <= 3, against the closed forms).

    The expansion distributes the m-th power over the L independent draws:
    sum over (i_1, ..., i_L) with sum i_j = m of the multinomial of m times
    the product of single-draw moments u_{i_j}, all scaled by (q+1)^L.
    """
    _check(q, L)
    if L < 1:
        raise ValueError("L must be positive")
    if m < 1:
        raise ValueError("m must be positive")
    lhs = Fraction(weighted_power_sum(q, L, m))
    scale = (q + 1) ** L
    u = [uniform_moment(q, i) for i in range(m + 1)]
    expansion = scale * sum(
        multinomial(m, parts) * prod((u[i] for i in parts), start=Fraction(1))
        for parts in _compositions_exact(m, L)
    )
    half_range = Fraction(q * L, 2)
    if m == 1:
        closed = scale * half_range
    elif m == 2:
        closed = scale * half_range * (half_range + Fraction(q + 2, 6))
    elif m == 3:
        closed = scale * half_range**2 * (half_range + Fraction(q + 2, 2))
    else:
        closed = None
    ok = lhs == expansion and (closed is None or lhs == closed)
    return {
        "q": q,
        "L": L,
        "m": m,
        "power_sum": lhs,
        "moment_expansion": expansion,
        "closed_form": closed,
        "ok": ok,
    }


def moment_identity_check(q: int, L: int, m: int) -> bool:
    """True when the power-weighted row sum matches the moment expansion
    (and the m <= 3 closed forms)."""
    return moment_identity_report(q, L, m)["ok"]


def sample_sums(q: int, L: int, count: int, seed: int) -> list[int]:
    """Frequency table of `count` simulated sums, deterministic in `seed`.

    The generator is SplitMix64 (64-bit state) with rejection sampling for
    exact uniformity; the same seed always reproduces the same table, on
    either kernel backend.
    """
    _check(q, L)
    if count < 1:
        raise ValueError("count must be positive")
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    try:
        return list(backend.active.sample_sums(q, L, count, seed))
    except OverflowError:
        return list(_pykernels.sample_sums(q, L, count, seed))


def within_four_sigma(observed: int, count: int, p: Fraction) -> bool:
    """Exact rational test |observed/count - p| <= 4 sqrt(p(1-p)/count),
    compared in squared form so no square root is needed."""
    diff = Fraction(observed, count) - p
    return diff * diff <= 16 * p * (1 - p) / count
