# cython: language_level=3
# cython: boundscheck=False
"""Compiled twins of the pure-Python kernels in _pykernels.py.

Loop counters are C-typed; the coefficient values stay Python integers, so
results are exact and match the pure twins bit for bit.  Callers fall back
to _pykernels on OverflowError for arguments outside C integer range.
"""

from math import comb

cdef unsigned long long MASK64 = 0xFFFFFFFFFFFFFFFFULL


def convolve(list a, list b):
    """Coefficient list of the product of two polynomials."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef Py_ssize_t i, j
    out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def uniform_row_step(list row, Py_ssize_t q):
    """Sliding (q+1)-term window sum, extending the row by q entries."""
    cdef Py_ssize_t n = len(row)
    cdef Py_ssize_t a, drop
    out = []
    window = 0
    for a in range(n + q):
        if a < n:
            window = window + row[a]
        drop = a - q - 1
        if drop >= 0:
            window = window - row[drop]
        out.append(window)
    return out


def demoivre_coeff(long long q, long long L, long long a):
    """Single bounded-composition count by the alternating sum."""
    cdef long long j, jmax
    if L == 0:
        return 1 if a == 0 else 0
    total = 0
    jmax = a // (q + 1)
    if jmax > L:
        jmax = L
    for j in range(jmax + 1):
        term = comb(L, j) * comb(a - j * (q + 1) + L - 1, L - 1)
        total = total - term if j & 1 else total + term
    return total


def sample_sums(long long q, long long L, long long count, unsigned long long seed):
    """Frequency table of `count` sums of L uniform draws on {0..q}.

    SplitMix64 with rejection sampling; stream-identical to the pure twin.
    """
    cdef unsigned long long bound = <unsigned long long> (q + 1)
    cdef unsigned long long rem = ((MASK64 % bound) + 1) % bound
    cdef unsigned long long accept_max = MASK64 - rem
    cdef unsigned long long state = seed
    cdef unsigned long long z
    cdef long long i, j, total
    counts = [0] * (q * L + 1)
    for i in range(count):
        total = 0
        for j in range(L):
            while True:
                state = state + 0x9E3779B97F4A7C15ULL
                z = state
                z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL
                z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL
                z = z ^ (z >> 31)
                if z <= accept_max:
                    break
            total += <long long> (z % bound)
        counts[total] = counts[total] + 1
    return counts
