import pytest

from multinom import oeis


def test_embedded_data_is_self_consistent():
    # vendored rows must be palindromic with row sums (q+1)^L; this guards
    # the transcription itself, independently of the generator
    for sequence_id in oeis.sequence_ids():
        q, rows = oeis.reference_rows(sequence_id)
        for L, row in enumerate(rows):
            assert len(row) == q * L + 1
            assert row == row[::-1]
            assert sum(row) == (q + 1) ** L


def test_generated_rows_match_embedded():
    for sequence_id, expected_rows in (("A027907", 7), ("A008287", 5), ("A035343", 5)):
        report = oeis.compare(sequence_id, expected_rows)
        assert len(report) == expected_rows
        assert all(item["match"] for item in report)


def test_compare_rejects_unknown_and_oversized():
    with pytest.raises(ValueError):
        oeis.compare("A000045", 3)
    with pytest.raises(ValueError):
        oeis.compare("A027907", 99)
    with pytest.raises(ValueError):
        oeis.compare("A027907", 0)
