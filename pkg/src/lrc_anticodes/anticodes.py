"""Binary linear anticodes used as deletion sets for simplex generators.

Every builder stores ``delta`` from its closed form; :func:`max_weight`
is the brute-force oracle used to check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidParameter, TooLarge
from .gf2 import BitMatrix, column_order_key, from_support, gray_flips, popcount

MAX_ENUM_ROWS = 24


@dataclass(frozen=True)
class Anticode:
    generator: BitMatrix
    delta: int
    name: str = "anticode"

    @property
    def length(self) -> int:
        return self.generator.ncols

    @property
    def rows(self) -> int:
        return self.generator.nrows

    def columns(self) -> list[int]:
        return self.generator.columns()

    def to_text(self) -> str:
        return f"delta={self.delta}\n" + self.generator.to_text()


def _from_columns(cols, nrows: int, delta: int, name: str) -> Anticode:
    ordered = sorted(cols, key=column_order_key)
    return Anticode(BitMatrix.from_columns(ordered, nrows), delta, name)


def weight_class_columns(nrows: int, weights) -> list[int]:
    return [from_support(c) for w in weights for c in combinations(range(nrows), w)]


def build_A_s2(s: int) -> Anticode:
    """All weight-2 columns of length ``s``: length C(s,2), max weight floor(s^2/4)."""
    if s < 2:
        raise InvalidParameter(f"A_s,2 needs s >= 2, got {s}")
    return _from_columns(weight_class_columns(s, [2]), s, s * s // 4, f"A_{s},2")


def build_A_mid(t: int) -> Anticode:
    """All columns of length ``t`` whose weight lies in 2..t-1."""
    if t < 3:
        raise InvalidParameter(f"A_t;2..t-1 needs t >= 3, got {t}")
    cols = weight_class_columns(t, range(2, t))
    return _from_columns(cols, t, 2 ** (t - 1) - 2, f"A_{t};2..{t - 1}")


def build_A_prefix_simplex(m: int) -> Anticode:
    """``e_1`` followed by the simplex generator G_{m-1} under a zero top row."""
    if m < 3:
        raise InvalidParameter(f"A_m-1 needs m >= 3, got {m}")
    cols = [1] + [v << 1 for v in range(1, 1 << (m - 1))]
    return _from_columns(cols, m, 2 ** (m - 2) + 1, f"A_{m - 1}")


def build_A_embedded_simplex(s: int) -> Anticode:
    """All nonzero columns of length ``s`` whose top two entries are zero."""
    if s < 4:
        raise InvalidParameter(f"embedded simplex anticode needs s >= 4, got {s}")
    cols = [v << 2 for v in range(1, 1 << (s - 2))]
    return _from_columns(cols, s, 2 ** (s - 3), f"S_{s - 2}@{s}")


def max_weight(a: Anticode | BitMatrix) -> int:
    """Exact maximum weight over all row combinations of the generator.

    Walks the combinations in Gray-code order so each step costs one XOR.
    """
    g = a.generator if isinstance(a, Anticode) else a
    if g.nrows > MAX_ENUM_ROWS:
        raise TooLarge(f"{g.nrows} generator rows exceeds guard {MAX_ENUM_ROWS}")
    rows = g.data
    acc = 0
    best = 0
    for i in gray_flips(g.nrows):
        acc ^= rows[i]
        w = popcount(acc)
        if w > best:
            best = w
    return best


def prepend_zero_rows(a: Anticode, m: int) -> Anticode:
    """Embed the generator in ``m`` rows by adding zero rows on top."""
    k = a.rows
    if m < k:
        raise InvalidParameter(f"cannot embed {k} rows into {m}")
    shift = m - k
    g = BitMatrix.from_columns([c << shift for c in a.columns()], m)
    return Anticode(g, a.delta, a.name)


def cut_value_delta(s: int) -> int:
    """max over i of i*(s-i): the number of K_s edges crossing the best cut."""
    return max(i * (s - i) for i in range(1, s + 1))
