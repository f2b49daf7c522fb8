"""Command-line entry point.

Exit codes: 0 success, 1 internal error, 2 usage or parameter error,
3 a claimed property was falsified.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .analysis import (
    MAX_ENUM_K,
    cm_bound_detail,
    griesmer_max_d,
    griesmer_max_k,
    griesmer_min_length,
    locality,
    plotkin_upper,
    singleton_d_max,
)
from .constructions import CLI_FAMILIES, FamilyParams, LinearCode
from .errors import InvalidParameter, LRCError, MatrixFormatError, TooLarge
from .formats import code_from_text, code_to_text
from .repair import repair, repair_sweep
from .verification import TABLE_I, Verification, family_claims, verify_code

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2, 3

INDEXING_NOTE = (
    "Coordinates are 0-based in files, JSON output and option values; "
    "human-readable reports print them 1-based."
)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    m: int | None = None
    s: int | None = None
    t: int | None = None
    out: Path | None = None
    from_file: Path | None = None
    format: str = "text"
    guard: int = MAX_ENUM_K
    n: int | None = None
    k: int | None = None
    d: int | None = None
    r: int | None = None
    message: int = 1

    def __post_init__(self) -> None:
        if not 0 <= self.guard <= MAX_ENUM_K:
            raise TooLarge(f"--guard {self.guard} exceeds the hard enumeration limit {MAX_ENUM_K}")

    def family_params(self) -> FamilyParams:
        if self.family is None:
            raise UsageError("--family is required")
        if self.family == "custom":
            raise UsageError("family 'custom' can only be read with --from-file")
        return FamilyParams(CLI_FAMILIES[self.family], m=self.m, s=self.s, t=self.t)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out is not None:
        cfg.out.write_text(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _load_or_build(cfg: RunConfig) -> tuple[LinearCode, FamilyParams | None]:
    if cfg.from_file is not None:
        try:
            text = cfg.from_file.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.from_file}: {exc}") from exc
        return code_from_text(text), None
    p = cfg.family_params()
    return p.build(), p


# commands ------------------------------------------------------------------


def cmd_construct(cfg: RunConfig) -> int:
    p = cfg.family_params()
    code = p.build()
    text = code_to_text(code)
    summary = f"[{code.n}, {code.k}] family={cfg.family}\n"
    if cfg.out is not None:
        cfg.out.write_text(text)
        sys.stdout.write(summary)
    else:
        sys.stdout.write(text)
        sys.stderr.write(summary)
    return EXIT_OK


def _format_verification(v: Verification) -> str:
    code = v.code
    lines = [f"code: {code.describe()}"]
    if v.search is not None:
        per = v.search.per_coordinate()
        if v.search.complete:
            lines.append(f"locality (exact search): r={v.search.r}")
        else:
            missing = ", ".join(str(i + 1) for i in v.search.missing)
            lines.append(f"locality (exact search): no repair set within r<={v.search.r_max} for coordinates {missing}")
        for size in sorted({x for x in per if x is not None}):
            count = sum(1 for x in per if x == size)
            lines.append(f"  coordinates with locality {size}: {count}")
        first = v.search.repair_sets[0] if v.search.n else None
        if first is not None:
            group = ", ".join(str(j + 1) for j in first)
            lines.append(f"  e.g. coordinate 1 is repaired from coordinates {{{group}}}")
    if v.localized_r is not None or v.localized_ok is not None:
        lines.append(f"localized parity checks: r={v.localized_r}, certificate verified={v.localized_ok}")
    if v.sweep is not None:
        s = v.sweep
        lines.append(f"repair sweep: cases={s.cases} failures={s.failures} max_group={s.max_group}")
    if v.report is not None:
        rep = v.report
        lines.append(f"singleton: d <= {rep.singleton_d_max}")
        lines.append(
            f"griesmer: n >= {rep.griesmer_min_length} "
            f"({'attained' if rep.griesmer_attained else 'not attained'})"
        )
        lines.append(
            f"cadambe-mazumdar: k <= {rep.cm_k_max} at t={rep.cm_t} via {rep.kopt_method} "
            f"({'attained' if rep.cm_attained else 'not attained'})"
        )
    for note in v.notes + (v.report.notes if v.report else []):
        lines.append(f"note: {note}")
    if v.checks:
        lines.append("checks:")
        for c in v.checks:
            mark = "ok  " if c.ok else "FAIL"
            lines.append(f"  [{mark}] {c.name}: expected {c.expected}, observed {c.observed}")
    lines.append("result: " + ("all claims hold" if v.passed else "CLAIM FALSIFIED"))
    return "\n".join(lines) + "\n"


def cmd_verify(cfg: RunConfig) -> int:
    code, params = _load_or_build(cfg)
    claims = family_claims(params) if params is not None else None
    v = verify_code(code, claims, cfg.guard)
    if cfg.format == "json":
        rec = v.record()
        rec["repair_sets"] = list(v.search.repair_sets) if v.search else None
        _emit(cfg, _dumps(rec))
    else:
        _emit(cfg, _format_verification(v))
    return EXIT_OK if v.passed else EXIT_FALSIFIED


def cmd_table(cfg: RunConfig) -> int:
    records = []
    mismatches = []
    for row in TABLE_I:
        v = verify_code(row.params.build(), family_claims(row.params), cfg.guard)
        rec = v.record()
        rec["expected"] = {"n": row.n, "k": row.k, "d": row.d, "r": row.r}
        rec["matches"] = (v.code.n, v.code.k, v.d, v.r) == (row.n, row.k, row.d, row.r)
        records.append(rec)
        if not rec["matches"]:
            mismatches.append(f"{row.label} r={row.r}: got [{v.code.n},{v.code.k},{v.d}] r={v.r}")

    if cfg.format == "json":
        _emit(cfg, _dumps(records))
    else:
        header = f"{'[n,k,d]':<12}{'r':>3}  {'family':<11}{'parameters':<12}{'cm':<5}{'griesmer':<9}{'repair':<14}match"
        lines = [header, "-" * len(header)]
        for rec in records:
            params = ", ".join(f"{k}={v}" for k, v in rec["params"].items())
            nkd = f"[{rec['n']},{rec['k']},{rec['d']}]"
            sweep = f"{rec.get('failures', '?')}/{rec.get('cases', '?')}"
            lines.append(
                f"{nkd:<12}{rec['r']:>3}  {rec['family']:<11}{params:<12}"
                f"{'yes' if rec.get('cm_attained') else 'no':<5}"
                f"{'yes' if rec.get('griesmer_attained') else 'no':<9}"
                f"{sweep:<14}{'yes' if rec['matches'] else 'NO'}"
            )
        for msg in mismatches:
            lines.append(f"mismatch: {msg}")
        _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if not mismatches else EXIT_FALSIFIED


def cmd_bounds(cfg: RunConfig) -> int:
    n, k, d, r = cfg.n, cfg.k, cfg.d, cfg.r
    if n is None or n < 1:
        raise UsageError("--n must be a positive integer")
    if r is not None and r < 1:
        raise UsageError("--r must be positive")
    if d is not None and d < 1:
        raise UsageError("--d must be positive")
    if k is not None and not 1 <= k <= n:
        raise UsageError("--k must lie in 1..n")
    if d is None and k is None:
        raise UsageError("give --d and/or --k")

    out: dict = {"n": n, "k": k, "d": d, "r": r}
    if k is not None and r is not None:
        out["singleton_d_max"] = singleton_d_max(n, k, r)
    if d is not None:
        p = plotkin_upper(n, d)
        out["plotkin_upper"] = p
        out["plotkin_applicable"] = p is not None
        kg = griesmer_max_k(n, d)
        out["griesmer_min_length_by_k"] = {str(j): griesmer_min_length(j, d) for j in range(1, kg + 2)}
        out["griesmer_max_k"] = kg
        if k is not None:
            out["griesmer_min_length"] = griesmer_min_length(k, d)
        if r is not None:
            cm = cm_bound_detail(n, d, r)
            out["cm_k_max"] = cm.k_max
            out["cm_t"] = cm.t
            out["kopt_method"] = cm.kopt.method
            out["kopt_residual"] = {"n": n - cm.t * (r + 1), "d": d, "value": cm.kopt.value}
    elif k is not None:
        dg = griesmer_max_d(n, k)
        out["griesmer_max_d"] = dg
        out["griesmer_min_length"] = griesmer_min_length(k, dg) if dg else None

    if cfg.format == "json":
        _emit(cfg, _dumps(out))
        return EXIT_OK
    lines = []
    if "singleton_d_max" in out:
        lines.append(f"singleton: d <= {out['singleton_d_max']}")
    if d is not None:
        if out["plotkin_applicable"]:
            lines.append(f"plotkin: A_2({n},{d}) <= {out['plotkin_upper']}")
        else:
            lines.append(f"plotkin: inapplicable at n={n}, d={d} (2d <= n)")
        for j, length in out["griesmer_min_length_by_k"].items():
            lines.append(f"griesmer: k={j} needs n >= {length}")
        if r is not None:
            res = out["kopt_residual"]
            lines.append(
                f"cadambe-mazumdar: k <= {out['cm_k_max']} (t={out['cm_t']}, "
                f"k_opt({res['n']},{d}) <= {res['value']} via {out['kopt_method']})"
            )
    else:
        dg = out["griesmer_max_d"]
        if dg:
            lines.append(f"griesmer: largest d for k={k} within n={n} is {dg}; min length for d={dg} is {out['griesmer_min_length']}")
        else:
            lines.append(f"griesmer: no d >= 1 fits k={k} within n={n}")
    _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_repair_demo(cfg: RunConfig) -> int:
    code, _ = _load_or_build(cfg)
    if code.k == 0:
        raise UsageError("code has dimension 0; nothing to repair")
    if not 0 <= cfg.message < (1 << code.k):
        raise UsageError(f"--message must lie in 0..{(1 << code.k) - 1}")
    cert = locality(code, 4)
    if not cert.complete:
        raise UsageError("some coordinates have no repair group within r <= 4")
    word = code.encode(cfg.message)
    rows = []
    for i in range(code.n):
        rows.append({"coordinate": i, "group": list(cert.repair_sets[i]),
                     "original": (word >> i) & 1, "repaired": repair(code, cert, word, i)})
    sweep = repair_sweep(code, cert, cfg.guard)
    if cfg.format == "json":
        _emit(cfg, _dumps({"message": cfg.message, "n": code.n, "k": code.k,
                           "repairs": rows, **sweep.to_dict()}))
    else:
        bits = "".join(str((word >> i) & 1) for i in range(code.n))
        lines = [f"codeword (message {cfg.message}): {bits}"]
        for row in rows:
            group = "+".join(f"c{j + 1}" for j in row["group"]) or "0"
            lines.append(f"  erase c{row['coordinate'] + 1}: {group} = {row['repaired']} (was {row['original']})")
        lines.append(f"sweep: cases={sweep.cases} failures={sweep.failures} max_group={sweep.max_group}")
        _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if sweep.failures == 0 else EXIT_FALSIFIED


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "table": cmd_table,
    "bounds": cmd_bounds,
    "repair-demo": cmd_repair_demo,
}


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--family", choices=sorted(CLI_FAMILIES))
    shared.add_argument("--m", type=int)
    shared.add_argument("--s", type=int)
    shared.add_argument("--t", type=int)
    shared.add_argument("--out", type=Path, help="write output here instead of stdout")
    shared.add_argument("--from-file", type=Path, help="read a code file or a bare generator matrix")
    shared.add_argument("--format", choices=("text", "json"), default="text")
    shared.add_argument("--guard", type=int, default=MAX_ENUM_K, metavar="MAX_K",
                        help=f"largest dimension to enumerate exhaustively (at most {MAX_ENUM_K})")

    parser = argparse.ArgumentParser(
        prog="lrc-anticodes",
        description="Construct and verify optimal binary locally repairable codes built from anticodes.",
        epilog=INDEXING_NOTE,
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("construct", parents=[shared], help="write generator and parity-check matrices",
                   epilog=INDEXING_NOTE)
    sub.add_parser("verify", parents=[shared], help="check distance, locality, repair and bounds",
                   epilog=INDEXING_NOTE)
    sub.add_parser("table", parents=[shared], help="rebuild and check all twelve tabulated codes",
                   epilog=INDEXING_NOTE)
    b = sub.add_parser("bounds", parents=[shared], help="evaluate Singleton, Plotkin, Griesmer and CM bounds")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int)
    b.add_argument("--d", type=int)
    b.add_argument("--r", type=int)
    demo = sub.add_parser("repair-demo", parents=[shared], help="erase and repair each symbol of one codeword",
                          epilog=INDEXING_NOTE)
    demo.add_argument("--message", type=int, default=1,
                      help="message bits as an integer, bit i multiplies generator row i")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__}
    try:
        cfg = RunConfig(**fields)
        return COMMANDS[args.command](cfg)
    except (UsageError, InvalidParameter, TooLarge, MatrixFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LRCError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - stable exit code for CI
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
