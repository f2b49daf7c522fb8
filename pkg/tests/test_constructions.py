from math import comb

import pytest

from lrc_anticodes import constructions
from lrc_anticodes.analysis import min_distance, weight_distribution
from lrc_anticodes.anticodes import Anticode, build_A_s2, prepend_zero_rows
from lrc_anticodes.constructions import (
    FamilyParams,
    augmented_simplex_via_farrell,
    build_augmented_simplex,
    build_C_ms2,
    build_C_mt,
    build_simplex,
    build_subspace_code,
    check_code_invariants,
    farrell_delete,
    localize_parity_check,
    localize_with_notes,
    subspace_code_via_farrell,
    subspace_parity_check,
)
from lrc_anticodes.errors import DuplicateTarget, InvalidParameter, ScheduleFailure
from lrc_anticodes.gf2 import BitMatrix, delete_columns, popcount, rank, support

import oracles
from golden import G4, G4_DELETED, H4, H4_COLUMN_VECTORS, H_PRIME_12_4_6, vector_to_int


def rows_as_strings(m: BitMatrix) -> list[str]:
    return [m.row_string(i) for i in range(m.nrows)]


def covered_by_light_rows(code, h, r):
    covered = 0
    for row in h.data:
        if popcount(row) <= r + 1:
            covered |= row
    return covered == (1 << code.n) - 1


def is_dual(code, h):
    return all(popcount(g & row) % 2 == 0 for g in code.generator.data for row in h.data)


class TestSimplex:
    def test_m3(self):
        c = build_simplex(3)
        assert (c.n, c.k, min_distance(c)) == (7, 3, 4)

    def test_m4_matches_example_generator(self):
        assert rows_as_strings(build_simplex(4).generator) == G4

    def test_m2(self):
        c = build_simplex(2)
        assert (c.n, c.k, min_distance(c)) == (3, 2, 2)

    @pytest.mark.parametrize("m", [1, 21])
    def test_range(self, m):
        with pytest.raises(InvalidParameter):
            build_simplex(m)


class TestFarrell:
    def test_example_code(self):
        c = farrell_delete(4, prepend_zero_rows(build_A_s2(3), 4))
        assert (c.n, c.k) == (12, 4)
        assert min_distance(c) == 6
        assert c.generator == delete_columns(BitMatrix.from_strings(G4), G4_DELETED)

    def test_m5(self):
        c = farrell_delete(5, prepend_zero_rows(build_A_s2(3), 5))
        assert (c.n, c.k, min_distance(c)) == (28, 5, 14)

    def test_empty_anticode_gives_simplex(self):
        c = farrell_delete(4, Anticode(BitMatrix.zeros(4, 0), 0))
        assert c.generator == build_simplex(4).generator

    def test_requires_matching_rows(self):
        with pytest.raises(InvalidParameter):
            farrell_delete(4, build_A_s2(3))

    def test_duplicate_columns_rejected(self):
        a = Anticode(BitMatrix.from_columns([3, 3], 4), 2)
        with pytest.raises(DuplicateTarget):
            farrell_delete(4, a)

    def test_rank_drop_is_reported(self):
        # every column with a one in the top row: the top row vanishes
        cols = [v for v in range(1, 16) if v & 1]
        c = farrell_delete(4, Anticode(BitMatrix.from_columns(cols, 4), 8))
        assert c.k == 3
        assert any("rank drop" in note for note in c.notes)


class TestFamilies:
    @pytest.mark.parametrize(
        "m,s,expected",
        [(5, 4, (25, 5, 12)), (6, 5, (53, 6, 26)), (4, 3, (12, 4, 6))],
    )
    def test_cms2(self, m, s, expected):
        c = build_C_ms2(m, s)
        assert (c.n, c.k, min_distance(c)) == expected

    @pytest.mark.parametrize("m,t,expected", [(5, 4, (21, 5, 10)), (6, 5, (38, 6, 18))])
    def test_cmt(self, m, t, expected):
        c = build_C_mt(m, t)
        assert (c.n, c.k, min_distance(c)) == expected

    @pytest.mark.parametrize("m", [4, 5, 6])
    def test_cmt_t3_equals_cms2_s3(self, m):
        assert build_C_mt(m, 3).generator == build_C_ms2(m, 3).generator

    @pytest.mark.parametrize("m,expected", [(6, (31, 6, 15)), (7, (63, 7, 31))])
    def test_augmented(self, m, expected):
        c = build_augmented_simplex(m)
        assert (c.n, c.k, min_distance(c)) == expected

    def test_augmented_m4_by_enumeration(self):
        c = build_augmented_simplex(4)
        assert (c.n, c.k, oracles.min_distance(c.generator)) == (7, 4, 3)

    @pytest.mark.parametrize("s,expected", [(5, (24, 5, 12)), (6, (48, 6, 24))])
    def test_subspace(self, s, expected):
        c = build_subspace_code(s)
        assert (c.n, c.k, min_distance(c)) == expected

    @pytest.mark.parametrize(
        "builder,args",
        [
            (build_C_ms2, (3, 3)),
            (build_C_ms2, (5, 2)),
            (build_C_ms2, (5, 6)),
            (build_C_mt, (5, 2)),
            (build_C_mt, (4, 5)),
            (build_augmented_simplex, (3,)),
            (build_subspace_code, (3,)),
        ],
    )
    def test_preconditions(self, builder, args):
        with pytest.raises(InvalidParameter):
            builder(*args)

    def test_family_params_require_fields(self):
        with pytest.raises(InvalidParameter):
            FamilyParams("C_ms2", m=5)
        assert FamilyParams("C_ms2", m=5, s=3).build().n == 28


def grid():
    for m in range(4, 8):
        for s in range(3, m + 1):
            yield ("C_ms2", m, s)
        for t in range(3, m + 1):
            yield ("C_mt", m, t)
        yield ("aug_simplex", m, None)
    for s in range(4, 8):
        yield ("subspace", None, s)


def build(tag, m, x):
    return {
        "C_ms2": lambda: build_C_ms2(m, x),
        "C_mt": lambda: build_C_mt(m, x),
        "aug_simplex": lambda: build_augmented_simplex(m),
        "subspace": lambda: build_subspace_code(x),
    }[tag]()


def formula(tag, m, x):
    if tag == "C_ms2":
        return (2**m - comb(x, 2) - 1, m, 2 ** (m - 1) - x * x // 4)
    if tag == "C_mt":
        return (2**m - 2**x + x + 1, m, 2 ** (m - 1) - 2 ** (x - 1) + 2)
    if tag == "aug_simplex":
        return (2 ** (m - 1) - 1, m, 2 ** (m - 2) - 1)
    return (3 * 2 ** (x - 2), x, 3 * 2 ** (x - 3))


@pytest.mark.parametrize("tag,m,x", list(grid()))
def test_grid_parameters_exact(tag, m, x):
    c = build(tag, m, x)
    check_code_invariants(c)
    assert (c.n, c.k, min_distance(c)) == formula(tag, m, x)


@pytest.mark.parametrize("tag,m,x", [g for g in grid() if not (g[0] == "C_mt" and g[1] == g[2])])
def test_grid_localized_checks(tag, m, x):
    c = build(tag, m, x)
    h, r, notes = localize_with_notes(c)
    assert notes == []
    assert r == (3 if tag == "aug_simplex" else 2)
    assert is_dual(c, h)
    assert covered_by_light_rows(c, h, r)


@pytest.mark.parametrize("m", range(4, 8))
def test_cmt_with_t_equal_m_is_single_parity(m):
    c = build_C_mt(m, m)
    assert (c.n, c.k, min_distance(c)) == (m + 1, m, 2)
    with pytest.raises(ScheduleFailure):
        localize_parity_check(c)


class TestLocalize:
    def test_example_h_prime(self):
        h = localize_parity_check(build_C_ms2(4, 3))
        assert rows_as_strings(h) == H_PRIME_12_4_6

    def test_subspace_unchanged(self):
        c = build_subspace_code(4)
        assert localize_parity_check(c) == c.parity_check

    def test_augmented_m4(self):
        c = build_augmented_simplex(4)
        h = localize_parity_check(c)
        assert h.nrows == 2 ** 3 - 4 - 1 == 3
        assert all(popcount(row) == 4 for row in h.data)
        assert is_dual(c, h) and covered_by_light_rows(c, h, 3)

    @pytest.mark.parametrize("m", range(4, 9))
    def test_augmented_literal_schedule(self, m):
        c = build_augmented_simplex(m)
        h, r, notes = localize_with_notes(c)
        assert notes == []
        assert h.nrows == 2 ** (m - 1) - m - 1
        assert all(popcount(row) == 4 for row in h.data)

    def test_augmented_fallback(self, monkeypatch):
        c = build_augmented_simplex(5)
        bogus = BitMatrix.from_rows([0b111], c.n)
        monkeypatch.setattr(constructions, "_hamming_pair_schedule", lambda code: bogus)
        h, r, notes = localize_with_notes(c)
        assert notes and "exhaustive" in notes[0]
        assert r == 3 and is_dual(c, h) and covered_by_light_rows(c, h, 3)

    def test_custom_code_has_no_schedule(self):
        with pytest.raises(ScheduleFailure):
            localize_parity_check(build_simplex(4))


class TestSubspaceMatrix:
    def test_h4_matches_printed_matrix(self):
        c = build_subspace_code(4)
        h = c.parity_check
        assert h.shape == (16, 12)
        ours = {frozenset(c.column_labels[j] for j in support(row)) for row in h.data}
        labels = [vector_to_int(v) for v in H4_COLUMN_VECTORS]
        printed = {frozenset(labels[j] for j, ch in enumerate(row) if ch == "1") for row in H4}
        assert ours == printed

    @pytest.mark.parametrize("s", range(4, 8))
    def test_structure(self, s):
        h = subspace_parity_check(s)
        assert h.nrows == 2 ** (2 * s - 4)
        assert len(set(h.data)) == h.nrows
        assert all(popcount(row) == 3 for row in h.data)
        assert rank(h) == h.ncols - s


@pytest.mark.parametrize("s", range(4, 8))
def test_subspace_matches_farrell_route(s):
    a, b = build_subspace_code(s), subspace_code_via_farrell(s)
    assert (a.n, a.k, min_distance(a)) == (b.n, b.k, min_distance(b))
    assert weight_distribution(a) == weight_distribution(b)


@pytest.mark.parametrize("m", range(4, 8))
def test_augmented_matches_farrell_route(m):
    a, b = build_augmented_simplex(m), augmented_simplex_via_farrell(m)
    assert (a.n, a.k, min_distance(a)) == (b.n, b.k, min_distance(b))
    assert weight_distribution(a) == weight_distribution(b)
