"""Single-erasure repair from certified repair groups."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .analysis import LocalityCertificate, iter_codewords
from .constructions import LinearCode
from .errors import IndexOutOfRange, NoCertificateForCoordinate, NotACodeword

MAX_SWEEP_K = 20


def repair(code: LinearCode, cert: LocalityCertificate, word: int, i: int) -> int:
    """Recover symbol ``i`` of ``word`` from the symbols in its repair group.

    Only positions in the repair group are read; bit ``i`` itself is ignored.
    """
    if not 0 <= i < code.n:
        raise IndexOutOfRange(f"coordinate {i} outside 0..{code.n - 1}")
    if not code.is_codeword(word):
        raise NotACodeword("word fails the parity checks")
    group = cert.repair_sets[i] if i < cert.n else None
    if group is None:
        raise NoCertificateForCoordinate(i)
    return _xor_group(word, group)


def _xor_group(word: int, group) -> int:
    bit = 0
    for j in group:
        bit ^= (word >> j) & 1
    return bit


@dataclass
class SweepSummary:
    cases: int
    failures: int
    max_group: int

    def to_dict(self) -> dict:
        return asdict(self)


def repair_sweep(code: LinearCode, cert: LocalityCertificate, guard: int = MAX_SWEEP_K) -> SweepSummary:
    """Erase and repair every coordinate of every codeword."""
    cases = failures = 0
    max_group = 0
    if code.k == 0:
        return SweepSummary(0, 0, 0)
    for j in range(code.n):
        if cert.repair_sets[j] is None:
            raise NoCertificateForCoordinate(j)
        max_group = max(max_group, len(cert.repair_sets[j]))
    groups = cert.repair_sets
    # words come straight from the generator, so the codeword check in repair() is skipped
    for word in iter_codewords(code, min(guard, MAX_SWEEP_K)):
        for j in range(code.n):
            cases += 1
            if _xor_group(word, groups[j]) != (word >> j) & 1:
                failures += 1
    return SweepSummary(cases, failures, max_group)
