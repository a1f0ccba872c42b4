"""Cross-method identity checks, runnable in bulk with adjustable bounds.

Each family sweeps a grid of parameters, remembers the first failing
tuple, and reports how many cases it covered.  Families that would get
expensive at large bounds clip themselves to fixed internal caps (noted
in each docstring) so `verify` stays interactive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import backend, bell, coefficients, distribution, sequences
from .combinat import binomial, factorial


@dataclass
class CheckResult:
    name: str
    ok: bool
    cases: int
    failure: str | None = None
    note: str | None = None


class _Recorder:
    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failure: str | None = None
        self.note: str | None = None

    def check(self, ok: bool, scope) -> None:
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = str(scope)

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.failure is None, self.cases, self.failure, self.note)


def check_method_agreement(q_max: int, L_max: int) -> CheckResult:
    """All six coefficient methods agree entrywise (partition method
    clipped to a <= 30)."""
    rec = _Recorder("coefficient_method_agreement")
    for q in range(1, q_max + 1):
        for L in range(L_max + 1):
            gf = list(coefficients.row_generating_function(q, L))
            longitudinal = list(coefficients.row_longitudinal(q, L))
            rec.check(gf == longitudinal, (q, L, "longitudinal"))
            for a, expected in enumerate(gf):
                rec.check(
                    coefficients.coeff_demoivre(q, L, a) == expected, (q, L, a, "demoivre")
                )
                rec.check(
                    coefficients.coeff_nested_sum(q, L, a) == expected, (q, L, a, "nested")
                )
                rec.check(
                    coefficients.coeff_diagonal(q, L, a) == expected, (q, L, a, "diagonal")
                )
                if a <= 30:
                    rec.check(
                        coefficients.coeff_partition_sum(q, L, a) == expected,
                        (q, L, a, "partition"),
                    )
    return rec.result()


def check_row_symmetry(q_max: int, L_max: int) -> CheckResult:
    """Rows read the same in both directions."""
    rec = _Recorder("coefficient_symmetry")
    for q in range(1, q_max + 1):
        for L in range(L_max + 1):
            row = list(coefficients.row_generating_function(q, L))
            rec.check(row == row[::-1], (q, L))
    return rec.result()


def check_row_sums(q_max: int, L_max: int) -> CheckResult:
    """Row totals equal (q+1)^L."""
    rec = _Recorder("coefficient_row_sums")
    for q in range(1, q_max + 1):
        for L in range(L_max + 1):
            rec.check(
                sum(coefficients.row_generating_function(q, L)) == (q + 1) ** L, (q, L)
            )
    return rec.result()


def check_binomial_specialization(L_max: int) -> CheckResult:
    """q = 1 rows are plain binomial rows (clipped to L <= 20)."""
    rec = _Recorder("coefficient_binomial_specialization")
    for L in range(min(L_max, 20) + 1):
        row = list(coefficients.row_generating_function(1, L))
        rec.check(row == [binomial(L, a) for a in range(L + 1)], (L,))
    return rec.result()


def check_vanishing(q_max: int, L_max: int) -> CheckResult:
    """Every method returns 0 beyond the support a = qL."""
    rec = _Recorder("coefficient_vanishing")
    for q in range(1, q_max + 1):
        for L in range(L_max + 1):
            for a in (q * L + 1, q * L + 2):
                for method in coefficients.METHODS:
                    rec.check(coefficients.coeff(q, L, a, method) == 0, (q, L, a, method))
    return rec.result()


def check_convolution_identity(q_max: int, L_max: int) -> CheckResult:
    """Rows multiply: C(L1+L2, a)_q = sum_j C(L1, j)_q C(L2, a-j)_q
    (clipped to q <= 3 and L1, L2 <= 6)."""
    rec = _Recorder("coefficient_convolution")
    for q in range(1, min(q_max, 3) + 1):
        for L1 in range(min(L_max, 6) + 1):
            row1 = coefficients.row_generating_function(q, L1)
            for L2 in range(min(L_max, 6) + 1):
                row2 = coefficients.row_generating_function(q, L2)
                combined = coefficients.row_generating_function(q, L1 + L2)
                for a in range(q * (L1 + L2) + 1):
                    expected = sum(
                        row1.entry(j) * row2.entry(a - j) for j in range(a + 1)
                    )
                    rec.check(combined.entry(a) == expected, (q, L1, L2, a))
    return rec.result()


def check_central_trinomial(n_max: int) -> CheckResult:
    """Both central-entry sums equal C(n, n)_2 (clipped to n <= 30)."""
    rec = _Recorder("central_trinomial")
    for n in range(min(n_max, 30) + 1):
        central = coefficients.coeff_demoivre(2, n, n)
        rec.check(coefficients.central_trinomial_direct(n) == central, (n, "direct"))
        rec.check(
            coefficients.central_trinomial_alternating(n) == central, (n, "alternating")
        )
    return rec.result()


def check_stars_and_bars(q_max: int, L_max: int) -> CheckResult:
    """Cap-free specialization holds whenever q >= a (clipped to q <= 8,
    L <= 10)."""
    rec = _Recorder("stars_and_bars")
    for q in range(1, min(q_max, 8) + 1):
        for L in range(min(L_max, 10) + 1):
            for a in range(min(q, q * L) + 1):
                rec.check(bell.stars_and_bars_identity(q, L, a), (q, L, a))
    return rec.result()


def check_multibonacci_diagonal(q_max: int, n_max: int) -> CheckResult:
    """Diagonal coefficient sums reproduce the recurrence."""
    rec = _Recorder("multibonacci_diagonal")
    for q in range(1, q_max + 1):
        for n in range(1, n_max + 1):
            rec.check(
                sequences.multibonacci_diagonal(q, n)
                == sequences.multibonacci(q, n),
                (q, n),
            )
    return rec.result()


def check_multibonacci_compositions(q_max: int, n_max: int) -> CheckResult:
    """Weighted-composition counts reproduce the recurrence (clipped to
    q <= 4, n <= 25)."""
    rec = _Recorder("multibonacci_composition")
    for q in range(1, min(q_max, 4) + 1):
        for n in range(min(n_max, 25) + 1):
            rec.check(
                sequences.multibonacci_compositions(q, n)
                == sequences.multibonacci(q, n),
                (q, n),
            )
    return rec.result()


def check_multibonacci_shifted(q_max: int, m_max: int = 8) -> CheckResult:
    """Shifted diagonal family agrees with the recurrence (clipped to
    q <= 4, m <= 8)."""
    rec = _Recorder("multibonacci_shifted")
    for q in range(1, min(q_max, 4) + 1):
        for m in range(1, m_max + 1):
            for r in range(q + 1):
                try:
                    sequences.multibonacci_shifted(q, m, r)
                    rec.check(True, (q, m, r))
                except ArithmeticError:
                    rec.check(False, (q, m, r))
    return rec.result()


def check_alternating_report(n_max: int) -> CheckResult:
    """The alternating-sum report exists, is deterministic, and records a
    verdict for every pair (clipped to n <= 30; sum parameters 2..4).

    Disagreements with the recurrence are data for the report, not
    failures of this check.
    """
    rec = _Recorder("multibonacci_alternating_report")
    n_cap = min(n_max, 30)
    first = sequences.alternating_discrepancy_report((2, 3, 4), n_cap)
    second = sequences.alternating_discrepancy_report((2, 3, 4), n_cap)
    rec.check(json.dumps(first) == json.dumps(second), ("determinism",))
    rec.check(len(first) == 3 * n_cap, ("completeness",))
    disagreements = sum(1 for item in first if not item["agrees"])
    rec.note = f"{disagreements} disagreement(s) recorded"
    return rec.result()


def check_bell_truncated(n_max: int, q_max: int) -> CheckResult:
    """Truncated-factorial Bell values agree with the multinomial closed
    form (clipped to n <= 16, q <= 3)."""
    rec = _Recorder("bell_truncated_identity")
    for n in range(1, min(n_max, 16) + 1):
        for L in range(1, n + 1):
            for q in range(1, min(q_max, 3) + 1):
                try:
                    bell.bell_truncated_factorial(n, L, q)
                    rec.check(True, (n, L, q))
                except ArithmeticError:
                    rec.check(False, (n, L, q))
    return rec.result()


def check_bell_integrality(n_max: int) -> CheckResult:
    """Integer arguments give integer Bell values (clipped to n <= 14)."""
    rec = _Recorder("bell_integrality")
    vectors = {
        "ones": lambda n: [1] * n,
        "factorials": lambda n: [factorial(m) for m in range(1, n + 1)],
        "shifted_factorials": lambda n: [factorial(m - 1) for m in range(1, n + 1)],
        "index": lambda n: list(range(1, n + 1)),
    }
    for n in range(1, min(n_max, 14) + 1):
        for L in range(n + 1):
            for label, make in vectors.items():
                value = bell.bell_partial(n, L, make(n))
                rec.check(value.denominator == 1, (n, L, label))
    return rec.result()


def check_stirling_recurrences(n_max: int) -> CheckResult:
    """Both Stirling triangles obey their textbook recurrences (clipped to
    n <= 14)."""
    rec = _Recorder("stirling_recurrences")
    for n in range(2, min(n_max, 14) + 1):
        for L in range(1, n + 1):
            s2_left = bell.stirling2(n - 1, L) if L <= n - 1 else 0
            s2_diag = bell.stirling2(n - 1, L - 1) if L - 1 >= 1 else 0
            rec.check(
                bell.stirling2(n, L) == L * s2_left + s2_diag, (n, L, "second")
            )
            c_left = bell.stirling1_unsigned(n - 1, L) if L <= n - 1 else 0
            c_diag = bell.stirling1_unsigned(n - 1, L - 1) if L - 1 >= 1 else 0
            rec.check(
                bell.stirling1_unsigned(n, L) == (n - 1) * c_left + c_diag,
                (n, L, "first"),
            )
    return rec.result()


def check_bell_row_sums(n_max: int) -> CheckResult:
    """Second-kind rows sum to the Bell numbers from the Bell triangle
    (clipped to n <= 14)."""
    rec = _Recorder("bell_row_sums")
    cap = min(n_max, 14)
    # Bell triangle, an independent route to the row totals
    bell_numbers = [1]
    row = [1]
    for _ in range(cap):
        new = [row[-1]]
        for value in row:
            new.append(new[-1] + value)
        row = new
        bell_numbers.append(row[0])
    for n in range(1, cap + 1):
        total = sum(bell.stirling2(n, L) for L in range(n + 1))
        rec.check(total == bell_numbers[n], (n,))
    return rec.result()


def check_pmf_triple_agreement(q_max: int, L_max: int) -> CheckResult:
    """Coefficient, alternating-sum, and convolution routes give the same
    table (clipped to L <= 10)."""
    rec = _Recorder("pmf_triple_agreement")
    for q in range(1, q_max + 1):
        for L in range(min(L_max, 10) + 1):
            table = distribution.pmf_from_coefficients(q, L)
            conv = distribution.pmf_convolution(q, L)
            rec.check(table.masses == conv.masses, (q, L, "convolution"))
            for a, p in enumerate(table.masses):
                rec.check(distribution.pmf_demoivre(q, L, a) == p, (q, L, a, "demoivre"))
    return rec.result()


def check_pmf_normalization(q_max: int, L_max: int) -> CheckResult:
    """Tables sum to exactly 1 and are palindromic; denominators divide
    (q+1)^L (clipped to L <= 10)."""
    rec = _Recorder("pmf_normalization_symmetry")
    for q in range(1, q_max + 1):
        for L in range(min(L_max, 10) + 1):
            table = distribution.pmf_from_coefficients(q, L)
            rec.check(sum(table.masses) == 1, (q, L, "total"))
            rec.check(table.masses == table.masses[::-1], (q, L, "symmetry"))
            scale = (q + 1) ** L
            rec.check(
                all(scale % p.denominator == 0 for p in table.masses),
                (q, L, "denominators"),
            )
    return rec.result()


def check_pmf_semigroup(q_max: int, L_max: int) -> CheckResult:
    """Convolving the L1 and L2 tables gives the L1+L2 table (clipped to
    q <= 3, L <= 5)."""
    rec = _Recorder("pmf_semigroup")
    for q in range(1, min(q_max, 3) + 1):
        for L1 in range(min(L_max, 5) + 1):
            t1 = distribution.pmf_from_coefficients(q, L1)
            for L2 in range(min(L_max, 5) + 1):
                t2 = distribution.pmf_from_coefficients(q, L2)
                combined = distribution.pmf_from_coefficients(q, L1 + L2)
                product = tuple(backend.active.convolve(list(t1), list(t2)))
                rec.check(product == combined.masses, (q, L1, L2))
    return rec.result()


def check_moment_identities(q_max: int, L_max: int, m_max: int = 4) -> CheckResult:
    """Power-weighted row sums match the moment expansion and closed forms
    (clipped to q <= 4, L <= 5, m <= 4)."""
    rec = _Recorder("moment_identities")
    for q in range(1, min(q_max, 4) + 1):
        for L in range(1, min(L_max, 5) + 1):
            for m in range(1, m_max + 1):
                rec.check(distribution.moment_identity_check(q, L, m), (q, L, m))
    return rec.result()


def check_mean_variance(q_max: int, L_max: int) -> CheckResult:
    """Mean is qL/2 and the central second moment is Lq(q+2)/12 (clipped
    to L <= 10)."""
    rec = _Recorder("pmf_mean_variance")
    for q in range(1, q_max + 1):
        for L in range(min(L_max, 10) + 1):
            table = distribution.pmf_from_coefficients(q, L)
            mean = table.moment(1)
            rec.check(mean == Fraction(q * L, 2), (q, L, "mean"))
            variance = table.moment(2) - mean**2
            rec.check(variance == Fraction(L * q * (q + 2), 12), (q, L, "variance"))
    return rec.result()


def run_all(q_max: int, L_max: int, n_max: int) -> list[CheckResult]:
    """Every family at the given bounds, sorted by check name."""
    if q_max < 1 or L_max < 1 or n_max < 1:
        raise ValueError("bounds must be positive")
    results = [
        check_method_agreement(q_max, L_max),
        check_row_symmetry(q_max, L_max),
        check_row_sums(q_max, L_max),
        check_binomial_specialization(L_max),
        check_vanishing(q_max, L_max),
        check_convolution_identity(q_max, L_max),
        check_central_trinomial(n_max),
        check_stars_and_bars(q_max, L_max),
        check_multibonacci_diagonal(q_max, n_max),
        check_multibonacci_compositions(q_max, n_max),
        check_multibonacci_shifted(q_max),
        check_alternating_report(n_max),
        check_bell_truncated(n_max, q_max),
        check_bell_integrality(n_max),
        check_stirling_recurrences(n_max),
        check_bell_row_sums(n_max),
        check_pmf_triple_agreement(q_max, L_max),
        check_pmf_normalization(q_max, L_max),
        check_pmf_semigroup(q_max, L_max),
        check_moment_identities(q_max, L_max),
        check_mean_variance(q_max, L_max),
    ]
    return sorted(results, key=lambda item: item.name)
