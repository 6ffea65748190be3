import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cobweb import (
    BUILTIN_SEQUENCES,
    DIV31,
    EVEN1,
    FIBONACCI,
    NATURALS,
    ODD,
    IndexOutOfDomain,
    InvalidBounds,
    from_file,
    from_values,
    is_gcd_morphic,
)


def test_builtin_prefixes():
    assert NATURALS.values(6) == [1, 2, 3, 4, 5, 6]
    assert ODD.values(6) == [1, 3, 5, 7, 9, 11]
    assert EVEN1.values(6) == [1, 2, 4, 6, 8, 10]
    assert DIV31.values(6) == [1, 3, 6, 9, 12, 15]
    assert FIBONACCI.values(8) == [1, 1, 2, 3, 5, 8, 13, 21]


def test_spec_examples():
    assert FIBONACCI.value(6) == 8  # recurrence unrolled from F_1 = F_2 = 1
    assert NATURALS.value(1) == 1
    assert EVEN1.value(4) == 6


@pytest.mark.parametrize("seq", BUILTIN_SEQUENCES.values(), ids=lambda s: s.name)
def test_positive_and_deterministic_to_ten_thousand(seq):
    first = [seq.value(s) for s in range(1, 10_001)]
    assert min(first) >= 1
    assert first == [seq.value(s) for s in range(1, 10_001)]


@pytest.mark.parametrize("seq", BUILTIN_SEQUENCES.values(), ids=lambda s: s.name)
def test_index_below_one_rejected(seq):
    with pytest.raises(IndexOutOfDomain):
        seq.value(0)
    with pytest.raises(IndexOutOfDomain):
        seq.value(-3)


def test_custom_sequence_bound():
    seq = from_values("custom", [4, 7, 9])
    assert seq.values(3) == [4, 7, 9]
    with pytest.raises(IndexOutOfDomain):
        seq.value(4)


@pytest.mark.parametrize("bad", [[], [0], [1, -2], [1, "x"], [1, 2.5]])
def test_custom_sequence_rejects_bad_values(bad):
    with pytest.raises(ValueError):
        from_values("bad", bad)


def test_from_file(tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("1\n2\n\n4\n")
    seq = from_file(str(path))
    assert seq.values(3) == [1, 2, 4]
    assert seq.limit == 3


def test_from_file_rejects_garbage(tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("1\nzebra\n")
    with pytest.raises(ValueError, match="zebra"):
        from_file(str(path))
    path.write_text("1\n0\n")
    with pytest.raises(ValueError, match="positive"):
        from_file(str(path))


@pytest.mark.parametrize("seq", [NATURALS, FIBONACCI], ids=lambda s: s.name)
def test_gcd_morphic_holds_to_two_hundred(seq):
    assert is_gcd_morphic(seq, 200).holds


def test_gcd_morphic_fibonacci_spot_check():
    # GCD[F_6, F_9] = GCD[8, 34] = 2 = F_3
    assert math.gcd(FIBONACCI.value(6), FIBONACCI.value(9)) == FIBONACCI.value(3) == 2


def test_even1_fails_with_smallest_witness():
    report = is_gcd_morphic(EVEN1, 10)
    assert not report.holds
    # lexicographically smallest violating pair: GCD[F_2, F_3] = GCD[2, 4] = 2
    # while F_GCD[2,3] = F_1 = 1
    assert report.witness == (2, 3)
    n, m = report.witness
    assert math.gcd(EVEN1.value(n), EVEN1.value(m)) == report.gcd_of_values == 2
    assert EVEN1.value(math.gcd(n, m)) == report.f_at_gcd == 1
    assert report.gcd_of_values != report.f_at_gcd


def test_witness_reproduces_violation_for_div31():
    report = is_gcd_morphic(DIV31, 12)
    assert not report.holds
    n, m = report.witness
    assert math.gcd(DIV31.value(n), DIV31.value(m)) == report.gcd_of_values
    assert DIV31.value(math.gcd(n, m)) == report.f_at_gcd
    assert report.gcd_of_values != report.f_at_gcd


def test_gcd_morphic_range_precondition():
    with pytest.raises(InvalidBounds):
        is_gcd_morphic(NATURALS, 1)


@given(st.integers(1, 300), st.integers(1, 300))
def test_fibonacci_gcd_identity(n, m):
    assert math.gcd(FIBONACCI.value(n), FIBONACCI.value(m)) == FIBONACCI.value(math.gcd(n, m))
