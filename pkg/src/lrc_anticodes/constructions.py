"""Simplex codes, Farrell column deletion, and the four LRC families.

Coordinates of every constructed code keep the order of the simplex
columns they came from (ascending weight, then lexicographic support), and
``LinearCode.column_labels`` records the original column vector behind each
coordinate so the row schedules can address coordinates by vector.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace

from .anticodes import (
    Anticode,
    build_A_embedded_simplex,
    build_A_mid,
    build_A_prefix_simplex,
    build_A_s2,
    prepend_zero_rows,
    weight_class_columns,
)
from .errors import InvalidParameter, RankDeficient, ScheduleFailure
from .gf2 import (
    BitMatrix,
    column_order_key,
    delete_columns,
    derive_parity_check,
    find_columns,
    from_support,
    is_standard_form,
    nullspace,
    parity_check_for,
    popcount,
    rank,
    rref,
    rows_orthogonal,
)

log = logging.getLogger(__name__)

FAMILY_TAGS = ("simplex", "C_ms2", "C_mt", "aug_simplex", "subspace", "custom")

# identifiers used on the command line and in files
CLI_FAMILIES = {
    "simplex": "simplex",
    "cms2": "C_ms2",
    "cmt": "C_mt",
    "augsimplex": "aug_simplex",
    "subspace": "subspace",
    "custom": "custom",
}
TAG_TO_CLI = {v: k for k, v in CLI_FAMILIES.items()}

MAX_SIMPLEX_M = 20


@dataclass(frozen=True)
class LinearCode:
    generator: BitMatrix
    parity_check: BitMatrix
    family_tag: str = "custom"
    params: dict[str, int] = field(default_factory=dict)
    d: int | None = None
    column_labels: tuple[int, ...] | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.family_tag not in FAMILY_TAGS:
            raise InvalidParameter(f"unknown family tag {self.family_tag!r}")
        if self.generator.ncols != self.parity_check.ncols:
            raise ValueError("generator and parity-check lengths differ")
        if not rows_orthogonal(self.generator, self.parity_check):
            raise ValueError("generator rows are not orthogonal to the parity checks")

    @property
    def n(self) -> int:
        return self.generator.ncols

    @property
    def k(self) -> int:
        return self.generator.nrows

    def with_distance(self, d: int) -> LinearCode:
        return replace(self, d=d)

    def encode(self, message: int) -> int:
        word = 0
        for i, row in enumerate(self.generator.data):
            if (message >> i) & 1:
                word ^= row
        return word

    def is_codeword(self, word: int) -> bool:
        if word >> self.n:
            return False
        return all(popcount(h & word) % 2 == 0 for h in self.parity_check.data)

    def describe(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        d = "?" if self.d is None else self.d
        return f"{self.family_tag}({ps}) [{self.n},{self.k},{d}]"


@dataclass(frozen=True)
class FamilyParams:
    family_tag: str
    m: int | None = None
    s: int | None = None
    t: int | None = None

    def __post_init__(self) -> None:
        if self.family_tag not in FAMILY_TAGS or self.family_tag == "custom":
            raise InvalidParameter(f"not a buildable family: {self.family_tag!r}")
        for name in self.required():
            if getattr(self, name) is None:
                raise InvalidParameter(f"family {TAG_TO_CLI[self.family_tag]} needs --{name}")

    def required(self) -> tuple[str, ...]:
        return {
            "simplex": ("m",),
            "C_ms2": ("m", "s"),
            "C_mt": ("m", "t"),
            "aug_simplex": ("m",),
            "subspace": ("s",),
        }[self.family_tag]

    def build(self) -> LinearCode:
        if self.family_tag == "simplex":
            return build_simplex(self.m)
        if self.family_tag == "C_ms2":
            return build_C_ms2(self.m, self.s)
        if self.family_tag == "C_mt":
            return build_C_mt(self.m, self.t)
        if self.family_tag == "aug_simplex":
            return build_augmented_simplex(self.m)
        return build_subspace_code(self.s)


def code_from_generator(
    g: BitMatrix,
    family_tag: str = "custom",
    params: dict[str, int] | None = None,
    column_labels: tuple[int, ...] | None = None,
    notes: tuple[str, ...] = (),
) -> LinearCode:
    """Row-reduce ``g`` (dropping dependent rows) and attach a parity-check matrix."""
    reduced, pivots = rref(g.data, g.ncols)
    notes = tuple(notes)
    if len(pivots) < g.nrows:
        notes += (f"rank drop: dimension {len(pivots)} < {g.nrows} generator rows",)
    gen = BitMatrix(len(reduced), g.ncols, tuple(reduced))
    return LinearCode(
        generator=gen,
        parity_check=parity_check_for(gen),
        family_tag=family_tag,
        params=dict(params or {}),
        column_labels=column_labels,
        notes=notes,
    )


def simplex_columns(m: int) -> list[int]:
    return weight_class_columns(m, range(1, m + 1))


def build_simplex(m: int) -> LinearCode:
    if not 2 <= m <= MAX_SIMPLEX_M:
        raise InvalidParameter(f"simplex code needs 2 <= m <= {MAX_SIMPLEX_M}, got {m}")
    cols = simplex_columns(m)
    g = BitMatrix.from_columns(cols, m)
    return LinearCode(g, derive_parity_check(g), "simplex", {"m": m}, column_labels=tuple(cols))


def farrell_delete(
    m: int, a: Anticode, family_tag: str = "custom", params: dict[str, int] | None = None
) -> LinearCode:
    """Delete the anticode's columns from the simplex generator ``G_m``."""
    if a.rows != m:
        raise InvalidParameter(f"anticode has {a.rows} rows, expected {m}; prepend zero rows first")
    targets = a.columns()
    if any(c == 0 for c in targets):
        raise InvalidParameter("anticode has a zero column")
    simplex = build_simplex(m)
    drop = find_columns(simplex.generator, targets)
    g = delete_columns(simplex.generator, drop)
    drop_set = set(drop)
    labels = tuple(c for j, c in enumerate(simplex.column_labels) if j not in drop_set)
    code = code_from_generator(g, family_tag, params or {"m": m}, labels)
    if code.k < m:
        log.warning("Farrell deletion lost rank: k=%d < m=%d", code.k, m)
    return code


def build_C_ms2(m: int, s: int) -> LinearCode:
    if m < 4 or not 3 <= s <= m:
        raise InvalidParameter(f"C_m,s,2 needs m >= 4 and 3 <= s <= m, got m={m}, s={s}")
    a = prepend_zero_rows(build_A_s2(s), m)
    return farrell_delete(m, a, "C_ms2", {"m": m, "s": s})


def build_C_mt(m: int, t: int) -> LinearCode:
    if m < 4 or not 3 <= t <= m:
        raise InvalidParameter(f"C_m,t needs m >= 4 and 3 <= t <= m, got m={m}, t={t}")
    a = prepend_zero_rows(build_A_mid(t), m)
    return farrell_delete(m, a, "C_mt", {"m": m, "t": t})


def build_augmented_simplex(m: int) -> LinearCode:
    """All-ones row stacked on the simplex generator G_{m-1}."""
    if m < 4:
        raise InvalidParameter(f"augmented simplex needs m >= 4, got {m}")
    labels = tuple(1 | (v << 1) for v in simplex_columns(m - 1))
    g = BitMatrix.from_columns(list(labels), m)
    return code_from_generator(g, "aug_simplex", {"m": m}, labels)


def augmented_simplex_via_farrell(m: int) -> LinearCode:
    return farrell_delete(m, build_A_prefix_simplex(m), "aug_simplex", {"m": m})


def subspace_code_via_farrell(s: int) -> LinearCode:
    return farrell_delete(s, build_A_embedded_simplex(s), "subspace", {"s": s})


def subspace_columns(s: int) -> list[int]:
    """Nonzero vectors of F_2^s whose top two entries are not both zero."""
    return sorted((v for v in range(1, 1 << s) if v & 0b11), key=column_order_key)


def subspace_parity_check(s: int) -> BitMatrix:
    """Incidence matrix of the 2-dimensional subspaces avoiding ``{00v}``.

    One weight-3 row per subspace, rows sorted by the coordinate triple.
    """
    cols = subspace_columns(s)
    index = {v: j for j, v in enumerate(cols)}
    triples = set()
    for a in range(len(cols)):
        for b in range(a + 1, len(cols)):
            c = index.get(cols[a] ^ cols[b])
            if c is not None:
                triples.add(tuple(sorted((a, b, c))))
    return BitMatrix.from_rows((from_support(t) for t in sorted(triples)), len(cols))


def build_subspace_code(s: int) -> LinearCode:
    """Null space of the subspace incidence matrix ``H^s``."""
    if s < 4:
        raise InvalidParameter(f"subspace code needs s >= 4, got {s}")
    h = subspace_parity_check(s)
    basis = nullspace(h)
    reduced, _ = rref(basis.data, basis.ncols)
    g = BitMatrix(len(reduced), h.ncols, tuple(reduced))
    return LinearCode(g, h, "subspace", {"s": s}, column_labels=tuple(subspace_columns(s)))


# localization ------------------------------------------------------------


def _covering_report(code: LinearCode, rows: BitMatrix, r: int) -> list[int]:
    """Coordinates not covered by any row of weight <= r+1."""
    covered = 0
    for row in rows.data:
        if popcount(row) <= r + 1:
            covered |= row
    return [i for i in range(code.n) if not (covered >> i) & 1]


def _check_schedule(code: LinearCode, rows: BitMatrix, r: int) -> list[str]:
    problems = []
    bad = [
        i
        for i, row in enumerate(rows.data)
        if any(popcount(row & g) & 1 for g in code.generator.data)
    ]
    if bad:
        problems.append(f"rows {bad} are not dual codewords")
    uncovered = _covering_report(code, rows, r)
    if uncovered:
        problems.append(f"coordinates {uncovered} not covered by a row of weight <= {r + 1}")
    return problems


def _weight_class_schedule(code: LinearCode) -> BitMatrix:
    """Pair each weight-i check row with a weight-(i+1) row containing it.

    H = (A^T | I) has one row per non-systematic column x of G; the row's
    first-block support is the column itself. For 3 <= wt(x) <= m-1 the
    row is replaced by its sum with the first row whose column has weight
    wt(x)+1 and contains x, which leaves exactly three ones.
    """
    g = code.generator
    if not is_standard_form(g):
        raise ScheduleFailure("generator is not in standard form")
    m = code.k
    h = derive_parity_check(g)
    cols = g.columns()[m:]
    rows = list(h.data)
    for x, cx in enumerate(cols):
        w = popcount(cx)
        if not 3 <= w <= m - 1:
            continue
        partner = next(
            (y for y, cy in enumerate(cols) if popcount(cy) == w + 1 and cy & cx == cx),
            None,
        )
        if partner is None:
            raise ScheduleFailure(f"no weight-{w + 1} partner for check row {x}")
        rows[x] = h.data[x] ^ h.data[partner]
    return BitMatrix(h.nrows, h.ncols, tuple(rows))


def _hamming_pair_schedule(code: LinearCode) -> BitMatrix:
    """Weight-4 checks built from sums of weight-3 Hamming checks.

    Coordinates are addressed by the integer value ``p`` of their G_{m-1}
    column; the Hamming check ``(i, 2^j, i+2^j)`` has support on the
    coordinates labelled ``i``, ``2^j`` and ``i + 2^j`` (``i < 2^j``).
    """
    m = code.params["m"]
    if code.column_labels is None:
        raise ScheduleFailure("augmented simplex code lacks column labels")
    where = {label >> 1: j for j, label in enumerate(code.column_labels)}

    def ham(i: int, j: int) -> int:
        p = 1 << j
        return from_support(where[v] for v in (i, p, i + p))

    rows = [ham(1, 1) ^ ham(1, j) for j in range(2, m - 1)]
    for j in range(2, m - 1):
        for i in range(1, 2**j - 1):
            rows.append(ham(i, j) ^ ham(i + 1, j))
    return BitMatrix.from_rows(rows, code.n)


def _exhaustive_weight4(code: LinearCode) -> BitMatrix:
    from .analysis import locality

    cert = locality(code, 3)
    rows = sorted({from_support(sorted(s + (i,))) for i, s in enumerate(cert.repair_sets) if s is not None})
    return BitMatrix.from_rows(rows, code.n)


def localize_with_notes(code: LinearCode) -> tuple[BitMatrix, int, list[str]]:
    """Low-weight parity checks for a family code, plus their locality and any notes."""
    tag = code.family_tag
    notes: list[str] = []
    if tag == "subspace":
        h, r = code.parity_check, 2
    elif tag in ("C_ms2", "C_mt"):
        h, r = _weight_class_schedule(code), 2
    elif tag == "aug_simplex":
        h, r = _hamming_pair_schedule(code), 3
        problems = _check_schedule(code, h, r)
        if problems:
            notes.append("literal weight-4 schedule failed (" + "; ".join(problems) + "); used exhaustive search")
            h = _exhaustive_weight4(code)
    else:
        raise ScheduleFailure(f"no localization schedule for family {tag!r}")
    problems = _check_schedule(code, h, r)
    if problems:
        raise ScheduleFailure("; ".join(problems))
    return h, r, notes


def localize_parity_check(code: LinearCode) -> BitMatrix:
    return localize_with_notes(code)[0]


def check_code_invariants(code: LinearCode) -> None:
    """Raise if the generator/parity-check pair is inconsistent."""
    if rank(code.generator) != code.k:
        raise RankDeficient("generator rows are dependent")
    if rank(code.parity_check) != code.n - code.k:
        raise RankDeficient("parity-check rank differs from n - k")
