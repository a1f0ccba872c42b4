"""Ordinary multinomial coefficients computed six independent ways.

C(L, a)_q is the coefficient of x^a in (1 + x + ... + x^q)^L, equivalently
the number of ways to distribute a unit balls over L cells when no cell
holds more than q balls.  Each evaluation route below follows a different
identity, so any two of them cross-validate each other:

  gf            iterated exact polynomial powering (square and multiply)
  nested        chained binomial sums over q indices
  longitudinal  row-by-row sliding-window recurrence from the L = 0 row
  diagonal      reduction in q through plain binomial convolutions
  demoivre      single alternating inclusion-exclusion sum
  partition     weighted compositions of a scored by multinomials

The three methods with serious inner loops (gf, longitudinal, demoivre)
delegate those loops to the selected kernel backend; the rest are pure
Python throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _pykernels, backend
from .combinat import binomial, multinomial, weighted_compositions

METHODS = ("gf", "nested", "longitudinal", "diagonal", "demoivre", "partition")


@dataclass(frozen=True)
class CoefficientRow:
    """Row {C(L, a)_q : a = 0..qL} for fixed q and L."""

    q: int
    L: int
    coefficients: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, a: int) -> int:
        return self.coefficients[a]

    def entry(self, a: int) -> int:
        """coefficients[a], or 0 outside the support 0..qL."""
        if 0 <= a < len(self.coefficients):
            return self.coefficients[a]
        return 0


def _check(q: int, L: int, a: int | None = None) -> None:
    if q < 1:
        raise ValueError("q must be a positive integer")
    if L < 0:
        raise ValueError("L must be nonnegative")
    if a is not None and a < 0:
        raise ValueError("a must be nonnegative")


def _poly_pow(base: list, exponent: int, kernels) -> list:
    result = [1]
    acc = base
    e = exponent
    while e:
        if e & 1:
            result = kernels.convolve(result, acc)
        e >>= 1
        if e:
            acc = kernels.convolve(acc, acc)
    return result


def row_generating_function(q: int, L: int, kernels=None) -> CoefficientRow:
    """Full row from the polynomial power (1 + x + ... + x^q)^L."""
    _check(q, L)
    kernels = kernels or backend.active
    coeffs = _poly_pow([1] * (q + 1), L, kernels)
    return CoefficientRow(q, L, tuple(coeffs))


def row_longitudinal(q: int, L: int, kernels=None) -> CoefficientRow:
    """Full row by applying the (q+1)-term window recurrence L times."""
    _check(q, L)
    kernels = kernels or backend.active
    row = [1]
    for _ in range(L):
        row = kernels.uniform_row_step(row, q)
    return CoefficientRow(q, L, tuple(row))


def coeff_longitudinal(q: int, L: int, a: int) -> int:
    _check(q, L, a)
    return row_longitudinal(q, L).entry(a)


@lru_cache(maxsize=None)
def _chain_tail(depth: int, upper: int, target: int) -> int:
    # sum over j of C(upper, j) * (chain of depth-1 starting at j), the
    # last chain link being a bare binomial
    if depth == 1:
        return binomial(upper, target)
    total = 0
    for j in range(min(upper, target) + 1):
        c = binomial(upper, j)
        if c:
            total += c * _chain_tail(depth - 1, j, target - j)
    return total


def coeff_nested_sum(q: int, L: int, a: int) -> int:
    """Chained binomial sum C(L,j1) C(j1,j2) ... C(j_{q-1},j_q) over all
    index tuples with j_1 + ... + j_q = a."""
    _check(q, L, a)
    return _chain_tail(q, L, a)


@lru_cache(maxsize=None)
def _diagonal(q: int, L: int, a: int) -> int:
    if a < 0 or a > q * L:
        return 0
    if q == 1:
        return binomial(L, a)
    return sum(binomial(L, m) * _diagonal(q - 1, m, a - m) for m in range(L + 1))


def coeff_diagonal(q: int, L: int, a: int) -> int:
    """Reduce q by one per step: sum over m of C(L,m) C(m, a-m)_{q-1}."""
    _check(q, L, a)
    return _diagonal(q, L, a)


def coeff_demoivre(q: int, L: int, a: int) -> int:
    """Single alternating sum over j of (-1)^j C(L,j) C(a - j(q+1) + L - 1, L - 1).

    The cheapest route for one coefficient; exact at any size (falls back
    to the pure kernel when arguments exceed the compiled kernel's C
    integer range).
    """
    _check(q, L, a)
    try:
        return backend.active.demoivre_coeff(q, L, a)
    except OverflowError:
        return _pykernels.demoivre_coeff(q, L, a)


def coeff_partition_sum(q: int, L: int, a: int) -> int:
    """Sum of cell-occupancy multinomials over weighted compositions of a.

    Each vector (L_1, ..., L_q) with sum(i * L_i) = a describes how many
    cells hold 1, 2, ..., q balls; the remaining L_0 = L - sum(L_i) cells
    stay empty, and vectors needing more than L cells contribute 0.
    Intended for small a (the vector count grows like the partition
    function).
    """
    _check(q, L, a)
    total = 0
    for comp in weighted_compositions(a, q):
        used = comp.part_sum
        if used > L:
            continue
        total += multinomial(L, (L - used, *comp.parts))
    return total


def coeff_gf(q: int, L: int, a: int) -> int:
    _check(q, L, a)
    return row_generating_function(q, L).entry(a)


_COEFF_FUNCS = {
    "gf": coeff_gf,
    "nested": coeff_nested_sum,
    "longitudinal": coeff_longitudinal,
    "diagonal": coeff_diagonal,
    "demoivre": coeff_demoivre,
    "partition": coeff_partition_sum,
}


def coeff(q: int, L: int, a: int, method: str = "auto") -> int:
    """C(L, a)_q by the chosen method ("auto" picks demoivre)."""
    if method == "auto":
        method = "demoivre"
    try:
        fn = _COEFF_FUNCS[method]
    except KeyError:
        raise ValueError(
            f"unknown method {method!r} (expected one of {', '.join(METHODS)} or auto)"
        ) from None
    return fn(q, L, a)


def row(q: int, L: int, method: str = "auto", kernels=None) -> CoefficientRow:
    """Full row by the chosen method ("auto" picks gf)."""
    if method == "auto":
        method = "gf"
    if method == "gf":
        return row_generating_function(q, L, kernels=kernels)
    if method == "longitudinal":
        return row_longitudinal(q, L, kernels=kernels)
    if method == "demoivre":
        _check(q, L)
        kernels = kernels or backend.active
        coeffs = []
        for a in range(q * L + 1):
            try:
                coeffs.append(kernels.demoivre_coeff(q, L, a))
            except OverflowError:
                coeffs.append(_pykernels.demoivre_coeff(q, L, a))
        return CoefficientRow(q, L, tuple(coeffs))
    if method in _COEFF_FUNCS:
        fn = _COEFF_FUNCS[method]
        return CoefficientRow(q, L, tuple(fn(q, L, a) for a in range(q * L + 1)))
    raise ValueError(
        f"unknown method {method!r} (expected one of {', '.join(METHODS)} or auto)"
    )


def central_trinomial_direct(n: int) -> int:
    """Middle entry of the q = 2 row L = n, as the plain double-binomial sum."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(binomial(n, j) * binomial(n - j, j) for j in range(n // 2 + 1))


def central_trinomial_alternating(n: int) -> int:
    """The same middle entry by the alternating single sum.

    At n = 0 the summand degenerates to C(-1, -1); the identity's value is
    defined through C(0, 0)_2 = 1 (the empty-row case).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    total = 0
    for j in range(n // 3 + 1):
        term = binomial(n, j) * binomial(2 * n - 3 * j - 1, n - 1)
        total = total - term if j & 1 else total + term
    return total
