"""On-disk text formats for codes and anticodes.

A code file is a header line ``family=<tag> n=<n> k=<k>`` followed by the
generator block and the parity-check block, each in the matrix text
format (``<rows> <cols>`` then one ``0``/``1`` string per row).
"""

from __future__ import annotations

from .anticodes import Anticode
from .constructions import CLI_FAMILIES, TAG_TO_CLI, LinearCode, code_from_generator
from .errors import MatrixFormatError
from .gf2 import parse_matrix, rank, rows_orthogonal


def code_to_text(code: LinearCode) -> str:
    family = TAG_TO_CLI.get(code.family_tag, "custom")
    header = f"family={family} n={code.n} k={code.k}\n"
    return header + code.generator.to_text() + code.parity_check.to_text()


def _parse_header(line: str) -> dict[str, str]:
    fields = {}
    for token in line.split():
        key, sep, value = token.partition("=")
        if not sep:
            raise MatrixFormatError(f"bad header token {token!r}")
        fields[key] = value
    return fields


def code_from_text(text: str) -> LinearCode:
    """Parse a code file, or a bare generator matrix, into a ``custom`` code.

    The declared family is kept in ``notes``; family parameters are not
    stored in files, so no family claims are attached on reload.
    """
    lines = text.splitlines()
    if not lines:
        raise MatrixFormatError("empty input")
    if not lines[0].startswith("family="):
        g, end = parse_matrix(lines)
        if any(line.strip() for line in lines[end:]):
            raise MatrixFormatError("trailing content after generator matrix")
        return code_from_generator(g)

    header = _parse_header(lines[0])
    family = header.get("family", "custom")
    if family not in CLI_FAMILIES:
        raise MatrixFormatError(f"unknown family {family!r}")
    g, pos = parse_matrix(lines, 1)
    h, pos = parse_matrix(lines, pos)
    if any(line.strip() for line in lines[pos:]):
        raise MatrixFormatError("trailing content after parity-check matrix")
    try:
        n, k = int(header["n"]), int(header["k"])
    except (KeyError, ValueError) as exc:
        raise MatrixFormatError("header needs integer n= and k=") from exc
    if g.shape != (k, n) or h.ncols != n:
        raise MatrixFormatError("matrix shapes disagree with the header")
    if rank(g) != k:
        raise MatrixFormatError("generator rows are dependent")
    if not rows_orthogonal(g, h) or rank(h) != n - k:
        raise MatrixFormatError("parity-check matrix does not match the generator")
    notes = (f"declared family: {family}",) if family != "custom" else ()
    return LinearCode(g, h, "custom", notes=notes)


def anticode_to_text(a: Anticode) -> str:
    return a.to_text()


def anticode_from_text(text: str) -> Anticode:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("delta="):
        raise MatrixFormatError("anticode file must start with delta=<value>")
    try:
        delta = int(lines[0].partition("=")[2])
    except ValueError as exc:
        raise MatrixFormatError("delta must be an integer") from exc
    g, end = parse_matrix(lines, 1)
    if any(line.strip() for line in lines[end:]):
        raise MatrixFormatError("trailing content after anticode matrix")
    return Anticode(g, delta)
