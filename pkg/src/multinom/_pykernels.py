"""Pure-Python kernels for the coefficient and sampling hot loops.

The compiled twin (``multinom._ckernels``, built from ``_ckernels.pyx``)
implements the same four functions with C-typed loop counters;
``multinom.backend`` picks one of the two at import time.  Both operate on
Python integers, so results are exact and identical either way.
"""

from math import comb

MASK64 = (1 << 64) - 1


def convolve(a, b):
    """Coefficient list of the product of two polynomials."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def uniform_row_step(row, q):
    """Replace each entry with the sliding sum of itself and its q left
    neighbours, extending the row by q entries (multiplication by
    1 + x + ... + x^q)."""
    n = len(row)
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


def demoivre_coeff(q, L, a):
    """Single bounded-composition count by the alternating inclusion-
    exclusion sum; exact for any argument sizes."""
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


def sample_sums(q, L, count, seed):
    """Frequency table of `count` sums of L uniform draws on {0..q}.

    Uses the SplitMix64 generator with rejection sampling, so the stream
    (and therefore the table) is fully determined by the seed and is
    bit-identical to the compiled kernel's.
    """
    bound = q + 1
    # 2**64 % bound, kept in 64-bit range so both twins compute it alike
    rem = ((MASK64 % bound) + 1) % bound
    accept_max = MASK64 - rem
    state = seed & MASK64
    counts = [0] * (q * L + 1)
    for _ in range(count):
        total = 0
        for _ in range(L):
            while True:
                state = (state + 0x9E3779B97F4A7C15) & MASK64
                z = state
                z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
                z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
                z = z ^ (z >> 31)
                if z <= accept_max:
                    break
            total += z % bound
        counts[total] += 1
    return counts
