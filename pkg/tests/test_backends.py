"""The compiled and pure kernels must be interchangeable bit for bit."""

import subprocess
import sys

import pytest

from multinom import _pykernels, backend, coefficients
from multinom.combinat import binomial

HAS_C = "c" in backend.available()

if HAS_C:
    from multinom import _ckernels


needs_c = pytest.mark.skipif(not HAS_C, reason="compiled kernels not built")


@needs_c
def test_convolve_matches():
    cases = [
        ([1], [1, 1, 1]),
        ([1, 2, 3], [4, 5]),
        ([0, 0, 7], [1, 0, -1, 5]),
        ([10**40, 1], [1, 10**40]),
    ]
    for a, b in cases:
        assert _ckernels.convolve(a, b) == _pykernels.convolve(a, b)


@needs_c
def test_uniform_row_step_matches():
    row = [1]
    prow = [1]
    for q in (1, 2, 3, 5):
        for _ in range(6):
            row = _ckernels.uniform_row_step(row, q)
            prow = _pykernels.uniform_row_step(prow, q)
            assert row == prow


@needs_c
def test_demoivre_matches():
    for q in range(1, 5):
        for L in range(8):
            for a in range(q * L + 3):
                assert _ckernels.demoivre_coeff(q, L, a) == _pykernels.demoivre_coeff(
                    q, L, a
                )


@needs_c
def test_sample_streams_match():
    for seed in (0, 7, 2**63 + 11):
        assert _ckernels.sample_sums(3, 2, 500, seed) == _pykernels.sample_sums(
            3, 2, 500, seed
        )


def test_backend_get():
    assert backend.get("python") is _pykernels
    # auto prefers the compiled kernels whenever they are built, regardless
    # of what the current process was forced to
    assert backend.get("auto") is backend.get(backend.available()[0])
    with pytest.raises(ValueError):
        backend.get("fortran")


def test_demoivre_overflow_falls_back_to_pure():
    # beyond C integer range the dispatcher must switch to the pure kernel;
    # with a <= q the expected value is plain stars and bars
    L = 2**70
    assert coefficients.coeff_demoivre(5, L, 3) == binomial(L + 2, 3)
    assert coefficients.coeff_demoivre(5, L, 0) == 1


def test_forced_backend_env():
    code = "import multinom; print(multinom.backend_name)"
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"MULTINOM_BACKEND": "python", "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
