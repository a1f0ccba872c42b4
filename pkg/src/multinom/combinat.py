"""Exact combinatorial primitives shared by every other module.

All arithmetic uses Python's arbitrary-precision integers and
``fractions.Fraction``; nothing here ever rounds or overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator


def binomial(n: int, k: int) -> int:
    """C(n, k), with the summation-friendly convention that out-of-range
    k (k < 0 or k > n) gives 0.  n must be nonnegative."""
    if n < 0:
        raise ValueError("binomial: n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    """n! for nonnegative n."""
    if n < 0:
        raise ValueError("factorial: n must be nonnegative")
    return math.factorial(n)


def multinomial(n: int, parts: Iterable[int]) -> int:
    """n! / (k_1! k_2! ... k_s!) for parts (k_1, ..., k_s) summing to n."""
    parts = tuple(parts)
    if any(k < 0 for k in parts):
        raise ValueError("multinomial: parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"multinomial: parts sum to {sum(parts)}, expected {n}")
    result = math.factorial(n)
    for k in parts:
        result //= math.factorial(k)
    return result


@dataclass(frozen=True)
class WeightedComposition:
    """Multiplicity vector (k_1, ..., k_s): k_i copies of part size i."""

    parts: tuple[int, ...]

    @property
    def weighted_sum(self) -> int:
        """Sum of i * k_i, the total weight carried by the parts."""
        return sum(i * k for i, k in enumerate(self.parts, start=1))

    @property
    def part_sum(self) -> int:
        """Sum of k_i, the number of parts used."""
        return sum(self.parts)


def weighted_compositions(
    weight: int, max_part: int, part_count: int | None = None
) -> Iterator[WeightedComposition]:
    """All (k_1, ..., k_s) with s = max_part and sum(i * k_i) = weight.

    When part_count is given, only vectors with sum(k_i) = part_count are
    produced.  Vectors appear exactly once, in ascending lexicographic
    order of (k_s, ..., k_1), which keeps downstream sums reproducible.
    """
    if weight < 0:
        raise ValueError("weighted_compositions: weight must be nonnegative")
    if max_part < 1:
        raise ValueError("weighted_compositions: max_part must be positive")
    if part_count is not None and part_count < 0:
        raise ValueError("weighted_compositions: part_count must be nonnegative")

    def descend(index: int, weight_left: int, parts_left: int | None, chosen: list[int]):
        # chosen holds (k_s, ..., k_{index+1}); sizes <= index remain.
        if parts_left is not None:
            if weight_left < parts_left or weight_left > parts_left * index:
                return
        if index == 1:
            k1 = weight_left
            if parts_left is None or parts_left == k1:
                yield WeightedComposition((k1, *reversed(chosen)))
            return
        for k in range(weight_left // index + 1):
            if parts_left is not None and k > parts_left:
                break
            chosen.append(k)
            yield from descend(
                index - 1,
                weight_left - k * index,
                None if parts_left is None else parts_left - k,
                chosen,
            )
            chosen.pop()

    yield from descend(max_part, weight, part_count, [])
