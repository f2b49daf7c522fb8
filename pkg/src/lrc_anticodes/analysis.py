"""Exhaustive code verification and bound evaluation.

Distances and weight distributions come from a full Gray-code walk over
the message space. Locality comes from an exact search for the smallest
set of other columns XOR-ing to each column.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .constructions import LinearCode
from .errors import InvalidParameter, TooLarge
from .gf2 import BitMatrix, from_support, gray_flips, popcount, support

MAX_ENUM_K = 24
MAX_LOCALITY_R = 4
MAX_LOCALITY_N = 1 << 16


def _check_guard(k: int, guard: int | None) -> None:
    limit = MAX_ENUM_K if guard is None else min(guard, MAX_ENUM_K)
    if k > limit:
        raise TooLarge(f"dimension {k} exceeds enumeration guard {limit}")


def iter_codewords(code: LinearCode, guard: int | None = None):
    """Yield all ``2^k`` codewords, starting with zero, in Gray-code order."""
    _check_guard(code.k, guard)
    rows = code.generator.data
    word = 0
    yield word
    for i in gray_flips(code.k):
        word ^= rows[i]
        yield word


def min_distance(code: LinearCode, guard: int | None = None) -> int:
    if code.k == 0:
        raise InvalidParameter("a dimension-0 code has no nonzero codewords")
    best = code.n
    it = iter_codewords(code, guard)
    next(it)
    for word in it:
        w = popcount(word)
        if w < best:
            best = w
    return best


def weight_distribution(code: LinearCode, guard: int | None = None) -> dict[int, int]:
    counts: dict[int, int] = defaultdict(int)
    for word in iter_codewords(code, guard):
        counts[popcount(word)] += 1
    return dict(sorted(counts.items()))


# locality ----------------------------------------------------------------


@dataclass(frozen=True)
class LocalityCertificate:
    """Per-coordinate repair sets; ``None`` marks a coordinate with no set found."""

    repair_sets: tuple[tuple[int, ...] | None, ...]
    r_max: int = MAX_LOCALITY_R

    @property
    def n(self) -> int:
        return len(self.repair_sets)

    @property
    def missing(self) -> list[int]:
        return [i for i, s in enumerate(self.repair_sets) if s is None]

    @property
    def complete(self) -> bool:
        return not self.missing

    @property
    def r(self) -> int | None:
        """Largest repair set used; ``None`` if some coordinate has no repair set."""
        if not self.complete:
            return None
        return max((len(s) for s in self.repair_sets), default=0)

    def per_coordinate(self) -> list[int | None]:
        return [None if s is None else len(s) for s in self.repair_sets]

    def dual_vector(self, i: int) -> int:
        s = self.repair_sets[i]
        if s is None:
            raise KeyError(i)
        return from_support(s) | (1 << i)

    def as_rows(self) -> BitMatrix:
        rows = sorted({self.dual_vector(i) for i in range(self.n) if self.repair_sets[i] is not None})
        return BitMatrix.from_rows(rows, self.n)


def locality(code: LinearCode, r_max: int = 3) -> LocalityCertificate:
    """Exact per-coordinate locality up to ``r_max``.

    Ties between equally small repair sets go to the lexicographically
    smallest sorted index tuple.
    """
    if not 1 <= r_max <= MAX_LOCALITY_R:
        raise InvalidParameter(f"r_max must lie in 1..{MAX_LOCALITY_R}")
    if code.n > MAX_LOCALITY_N:
        raise TooLarge(f"length {code.n} exceeds locality search limit")
    cols = code.generator.columns()
    n = len(cols)
    where: dict[int, list[int]] = defaultdict(list)
    for j, c in enumerate(cols):
        where[c].append(j)

    def first_after(value: int, after: int, skip: int) -> int | None:
        idx = where.get(value)
        if not idx:
            return None
        pos = bisect_right(idx, after)
        while pos < len(idx) and idx[pos] == skip:
            pos += 1
        return idx[pos] if pos < len(idx) else None

    pair_sums: dict[int, list[tuple[int, int]]] | None = None
    sets: list[tuple[int, ...] | None] = []
    for i, target in enumerate(cols):
        found: tuple[int, ...] | None = None
        if target == 0:
            found = ()
        if found is None:
            j = first_after(target, -1, i)
            if j is not None:
                found = (j,)
        if found is None and r_max >= 2:
            for a in range(n):
                if a == i:
                    continue
                b = first_after(target ^ cols[a], a, i)
                if b is not None:
                    found = (a, b)
                    break
        if found is None and r_max >= 3:
            found = _search3(cols, i, first_after)
        if found is None and r_max >= 4:
            if pair_sums is None:
                pair_sums = defaultdict(list)
                for a, b in combinations(range(n), 2):
                    pair_sums[cols[a] ^ cols[b]].append((a, b))
            found = _search4(cols, i, pair_sums)
        sets.append(found)
    return LocalityCertificate(tuple(sets), r_max)


def _search3(cols, i, first_after):
    target = cols[i]
    n = len(cols)
    for a in range(n):
        if a == i:
            continue
        ta = target ^ cols[a]
        for b in range(a + 1, n):
            if b == i:
                continue
            c = first_after(ta ^ cols[b], b, i)
            if c is not None:
                return (a, b, c)
    return None


def _search4(cols, i, pair_sums):
    # meet in the middle: cols[a]^cols[b] == target^cols[c]^cols[d]
    target = cols[i]
    n = len(cols)
    for a in range(n):
        if a == i:
            continue
        for b in range(a + 1, n):
            if b == i:
                continue
            for c, d in pair_sums.get(target ^ cols[a] ^ cols[b], ()):
                if c > b and c != i and d != i:
                    return (a, b, c, d)
    return None


def certificate_from_rows(code: LinearCode, rows: BitMatrix, r_max: int | None = None) -> LocalityCertificate:
    """Read a repair set for each coordinate off the lightest row covering it."""
    sets: list[tuple[int, ...] | None] = []
    ranked = sorted((popcount(r), support(r)) for r in rows.data if r)
    for i in range(code.n):
        choice = None
        for w, supp in ranked:
            if r_max is not None and w > r_max + 1:
                break
            if i in supp:
                choice = tuple(j for j in supp if j != i)
                break
        sets.append(choice)
    return LocalityCertificate(tuple(sets), r_max if r_max is not None else MAX_LOCALITY_R)


def verify_certificate(code: LinearCode, cert: LocalityCertificate, r: int | None = None) -> bool:
    """Check that every repair set, with its coordinate, supports a dual codeword."""
    if cert.n != code.n or not cert.complete:
        return False
    limit = cert.r if r is None else r
    for i, s in enumerate(cert.repair_sets):
        if i in s or len(set(s)) != len(s) or len(s) > limit:
            return False
        if any(not 0 <= j < code.n for j in s):
            return False
        v = from_support(s) | (1 << i)
        if any(popcount(v & g) & 1 for g in code.generator.data):
            return False
    return True


# bounds ------------------------------------------------------------------


def plotkin_upper(n: int, d: int) -> int | None:
    """Plotkin upper bound on ``A_2(n, d)``; ``None`` when it does not apply.

    Odd ``d`` is handled through ``A_2(n, d) = A_2(n + 1, d + 1)``.
    """
    if n < 1 or d < 1:
        raise InvalidParameter("plotkin_upper needs n >= 1 and d >= 1")
    if d % 2:
        n, d = n + 1, d + 1
    if 2 * d <= n:
        return None
    return 2 * (d // (2 * d - n))


def griesmer_min_length(k: int, d: int) -> int:
    if k < 0 or d < 1:
        raise InvalidParameter("griesmer_min_length needs k >= 0 and d >= 1")
    return sum(-(-d // (1 << i)) for i in range(k))


def griesmer_max_k(n: int, d: int) -> int:
    """Largest ``k`` with ``griesmer_min_length(k, d) <= n``."""
    k = 0
    while griesmer_min_length(k + 1, d) <= n:
        k += 1
    return k


def griesmer_max_d(n: int, k: int) -> int:
    """Largest ``d`` with ``griesmer_min_length(k, d) <= n`` (0 if none)."""
    d = 0
    while griesmer_min_length(k, d + 1) <= n:
        d += 1
    return d


def singleton_d_max(n: int, k: int, r: int) -> int:
    if not (1 <= k <= n and r >= 1):
        raise InvalidParameter("singleton_d_max needs 1 <= k <= n and r >= 1")
    return n - k + 2 - (-(-k // r))


@dataclass(frozen=True)
class KoptBound:
    value: int
    method: str  # plotkin | singleton | griesmer-inverse | trivial
    plotkin: int | None = None
    parity_extended: bool = False


def k_opt_detail(n: int, d: int) -> KoptBound:
    """Upper bound on the largest dimension of a binary length-n code with distance d."""
    if n < 1 or d > n:
        return KoptBound(0, "trivial")
    if d < 1:
        raise InvalidParameter("d must be positive")
    p = plotkin_upper(n, d)
    candidates = []
    if p is not None:
        candidates.append((p.bit_length() - 1, "plotkin"))
    candidates.append((n - d + 1, "singleton"))
    candidates.append((griesmer_max_k(n, d), "griesmer-inverse"))
    # min() keeps the first of equal values, so plotkin wins ties
    value, method = min(candidates, key=lambda vm: vm[0])
    return KoptBound(value, method, p, bool(d % 2) and p is not None)


def k_opt_upper(n: int, d: int) -> int:
    return k_opt_detail(n, d).value


@dataclass(frozen=True)
class CMResult:
    k_max: int
    t: int
    kopt: KoptBound


def cm_bound_detail(n: int, d: int, r: int) -> CMResult:
    if r < 1:
        raise InvalidParameter("locality must be >= 1")
    best: CMResult | None = None
    for t in range(1, max(1, n // (r + 1)) + 1):
        kopt = k_opt_detail(n - t * (r + 1), d)
        value = t * r + kopt.value
        if best is None or value < best.k_max:
            best = CMResult(value, t, kopt)
    return best


def cm_bound(n: int, d: int, r: int) -> tuple[int, int]:
    """Minimum over t of ``t*r + k_opt(n - t(r+1), d)`` and the smallest minimizing t."""
    res = cm_bound_detail(n, d, r)
    return res.k_max, res.t


@dataclass
class BoundReport:
    n: int
    k: int
    d: int
    r: int
    singleton_d_max: int
    griesmer_min_length: int
    griesmer_attained: bool
    cm_k_max: int
    cm_t: int
    cm_attained: bool
    kopt_method: str
    plotkin_upper: int | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def optimality_report(code: LinearCode, r: int) -> BoundReport:
    if code.d is None:
        raise InvalidParameter("minimum distance must be computed first")
    n, k, d = code.n, code.k, code.d
    cm = cm_bound_detail(n, d, r)
    g = griesmer_min_length(k, d)
    notes = []
    if cm.kopt.parity_extended:
        notes.append("plotkin applied to the parity-extended code (odd d)")
    return BoundReport(
        n=n,
        k=k,
        d=d,
        r=r,
        singleton_d_max=singleton_d_max(n, k, r),
        griesmer_min_length=g,
        griesmer_attained=g == n,
        cm_k_max=cm.k_max,
        cm_t=cm.t,
        cm_attained=cm.k_max == k,
        kopt_method=cm.kopt.method,
        plotkin_upper=cm.kopt.plotkin,
        notes=notes,
    )
