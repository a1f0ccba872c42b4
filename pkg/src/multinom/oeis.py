"""Offline cross-checks against catalogued coefficient triangles.

The reference rows below are vendored copies of the leading rows of three
OEIS triangles (oeis.org), kept inline so verification never touches the
network:

  A027907  trinomial coefficients, rows of (1 + x + x^2)^L
  A008287  quadrinomial coefficients, rows of (1 + x + x^2 + x^3)^L
  A035343  pentanomial coefficients, rows of (1 + ... + x^4)^L
"""

from __future__ import annotations

from . import coefficients

REFERENCE_ROWS = {
    "A027907": {
        "q": 2,
        "rows": (
            (1,),
            (1, 1, 1),
            (1, 2, 3, 2, 1),
            (1, 3, 6, 7, 6, 3, 1),
            (1, 4, 10, 16, 19, 16, 10, 4, 1),
            (1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1),
            (1, 6, 21, 50, 90, 126, 141, 126, 90, 50, 21, 6, 1),
        ),
    },
    "A008287": {
        "q": 3,
        "rows": (
            (1,),
            (1, 1, 1, 1),
            (1, 2, 3, 4, 3, 2, 1),
            (1, 3, 6, 10, 12, 12, 10, 6, 3, 1),
            (1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1),
        ),
    },
    "A035343": {
        "q": 4,
        "rows": (
            (1,),
            (1, 1, 1, 1, 1),
            (1, 2, 3, 4, 5, 4, 3, 2, 1),
            (1, 3, 6, 10, 15, 18, 19, 18, 15, 10, 6, 3, 1),
            (1, 4, 10, 20, 35, 52, 68, 80, 85, 80, 68, 52, 35, 20, 10, 4, 1),
        ),
    },
}


def sequence_ids() -> tuple[str, ...]:
    return tuple(REFERENCE_ROWS)


def reference_rows(sequence_id: str) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """(q, vendored rows) for a sequence id; KeyError style lookup."""
    try:
        entry = REFERENCE_ROWS[sequence_id]
    except KeyError:
        raise ValueError(
            f"unknown sequence id {sequence_id!r} (known: {', '.join(REFERENCE_ROWS)})"
        ) from None
    return entry["q"], entry["rows"]


def compare(sequence_id: str, rows: int) -> list[dict]:
    """Generate `rows` rows and compare each against the vendored data.

    Returns one record per row with the match verdict; raises ValueError
    if more rows are requested than are vendored.
    """
    q, reference = reference_rows(sequence_id)
    if rows < 1:
        raise ValueError("rows must be positive")
    if rows > len(reference):
        raise ValueError(
            f"only {len(reference)} reference rows are embedded for {sequence_id}"
        )
    report = []
    for L in range(rows):
        generated = tuple(coefficients.row_generating_function(q, L))
        report.append(
            {
                "L": L,
                "expected": reference[L],
                "generated": generated,
                "match": generated == reference[L],
            }
        )
    return report
