from itertools import product
from math import comb

import pytest

from lrc_anticodes.anticodes import (
    Anticode,
    build_A_embedded_simplex,
    build_A_mid,
    build_A_prefix_simplex,
    build_A_s2,
    cut_value_delta,
    max_weight,
    prepend_zero_rows,
)
from lrc_anticodes.errors import InvalidParameter, TooLarge
from lrc_anticodes.formats import anticode_from_text
from lrc_anticodes.gf2 import BitMatrix, popcount

from golden import ANTICODE_3x3


def enumerate_max_weight(g: BitMatrix) -> int:
    """Independent oracle: plain product enumeration, no Gray code."""
    best = 0
    for bits in product((0, 1), repeat=g.nrows):
        v = 0
        for b, r in zip(bits, g.data):
            if b:
                v ^= r
        best = max(best, popcount(v))
    return best


def distinct_nonzero(a: Anticode) -> bool:
    cols = a.columns()
    return len(set(cols)) == len(cols) and 0 not in cols


class TestWeightTwoAnticode:
    def test_s3_matches_first_example(self):
        a = build_A_s2(3)
        assert (a.length, a.delta) == (3, 2)
        assert sorted(a.columns()) == sorted(BitMatrix.from_strings(ANTICODE_3x3).columns())

    def test_s4(self):
        a = build_A_s2(4)
        assert (a.length, a.delta) == (6, 4)

    def test_s5_by_enumeration(self):
        a = build_A_s2(5)
        assert (a.length, a.delta) == (10, 6)
        assert enumerate_max_weight(a.generator) == 6

    def test_rejects_small_s(self):
        with pytest.raises(InvalidParameter):
            build_A_s2(1)

    @pytest.mark.parametrize("s", range(2, 11))
    def test_delta_equals_cut_value(self, s):
        a = build_A_s2(s)
        assert a.length == comb(s, 2)
        assert max_weight(a) == s * s // 4 == cut_value_delta(s) == a.delta
        assert distinct_nonzero(a)


class TestMidWeightAnticode:
    def test_t3_coincides_with_weight_two(self):
        assert build_A_mid(3).generator == build_A_s2(3).generator

    def test_t4(self):
        a = build_A_mid(4)
        assert (a.length, a.delta) == (10, 6)

    def test_t5_by_enumeration(self):
        a = build_A_mid(5)
        assert (a.length, a.delta) == (25, 14)
        assert enumerate_max_weight(a.generator) == 14

    @pytest.mark.parametrize("t", range(3, 9))
    def test_grid(self, t):
        a = build_A_mid(t)
        assert a.length == 2**t - t - 2
        assert max_weight(a) == 2 ** (t - 1) - 2 == a.delta
        assert distinct_nonzero(a)

    def test_rejects_small_t(self):
        with pytest.raises(InvalidParameter):
            build_A_mid(2)


class TestPrefixSimplexAnticode:
    def test_m3_by_enumeration(self):
        a = build_A_prefix_simplex(3)
        assert a.generator.shape == (3, 4)
        assert enumerate_max_weight(a.generator) == 3 == a.delta

    def test_layout(self):
        a = build_A_prefix_simplex(4)
        cols = a.columns()
        assert cols[0] == 1
        assert sorted(c >> 1 for c in cols[1:]) == list(range(1, 8))
        assert all(c & 1 == 0 for c in cols[1:])

    def test_m4(self):
        a = build_A_prefix_simplex(4)
        assert (a.length, a.delta) == (8, 5)

    def test_rejects_m2(self):
        with pytest.raises(InvalidParameter):
            build_A_prefix_simplex(2)

    @pytest.mark.parametrize("m", range(3, 9))
    def test_grid(self, m):
        a = build_A_prefix_simplex(m)
        assert max_weight(a) == 2 ** (m - 2) + 1 == a.delta
        assert distinct_nonzero(a)


class TestEmbeddedSimplexAnticode:
    def test_s4(self):
        a = build_A_embedded_simplex(4)
        assert (a.length, a.delta) == (3, 2)

    def test_s5_by_enumeration(self):
        a = build_A_embedded_simplex(5)
        assert (a.length, a.delta) == (7, 4)
        assert enumerate_max_weight(a.generator) == 4

    def test_rejects_s3(self):
        with pytest.raises(InvalidParameter):
            build_A_embedded_simplex(3)

    @pytest.mark.parametrize("s", range(4, 9))
    def test_grid(self, s):
        a = build_A_embedded_simplex(s)
        assert max_weight(a) == 2 ** (s - 3) == a.delta
        assert all(c & 0b11 == 0 for c in a.columns())
        assert distinct_nonzero(a)


class TestMaxWeight:
    def test_first_example(self):
        assert max_weight(BitMatrix.from_strings(ANTICODE_3x3)) == 2

    def test_zero_generator(self):
        assert max_weight(BitMatrix.zeros(3, 5)) == 0

    def test_s6(self):
        assert max_weight(build_A_s2(6)) == 9

    def test_guard(self):
        with pytest.raises(TooLarge):
            max_weight(BitMatrix.zeros(25, 2))

    def test_agrees_with_enumeration_on_random_matrices(self):
        import random

        rng = random.Random(3)
        for _ in range(30):
            k, n = rng.randint(1, 7), rng.randint(1, 12)
            g = BitMatrix(k, n, tuple(rng.getrandbits(n) for _ in range(k)))
            assert max_weight(g) == enumerate_max_weight(g)


class TestPrependZeroRows:
    def test_same_rows_is_identity(self):
        a = build_A_s2(4)
        assert prepend_zero_rows(a, 4) == a

    def test_example_deletion_block(self):
        a = prepend_zero_rows(build_A_s2(3), 4)
        assert a.generator.row_string(0) == "000"
        assert sorted(a.columns()) == sorted([0b0110, 0b1010, 0b1100])

    def test_delta_unchanged(self):
        a = build_A_s2(4)
        b = prepend_zero_rows(a, 6)
        assert b.delta == a.delta == max_weight(b) and b.length == a.length

    def test_rejects_fewer_rows(self):
        with pytest.raises(InvalidParameter):
            prepend_zero_rows(build_A_s2(4), 3)


def test_text_round_trip():
    a = build_A_mid(4)
    text = a.to_text()
    assert text.startswith("delta=6\n4 10\n")
    back = anticode_from_text(text)
    assert back.generator == a.generator and back.delta == a.delta
