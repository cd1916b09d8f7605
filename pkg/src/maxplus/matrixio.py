"""The plain-text matrix format shared by every CLI command.

First line: `rows cols`.  Then row-major whitespace-separated entries.
ε is written `-inf` on output and accepted as `-inf` or `*` on input;
finite entries are integers, exact decimals (`1.5` parses as 3/2) or
`p/q` rationals.  Printing never uses decimals: non-integral values come
out as `p/q`, so output always re-parses to the identical matrix.
"""

from __future__ import annotations

from fractions import Fraction

from .semiring import EPS, Trop
from .matrix import TropMatrix


class MatrixParseError(ValueError):
    """Malformed matrix text; carries the offending line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__("line %d, column %d: %s" % (line, column, message))
        self.line = line
        self.column = column


def parse_scalar(token: str) -> Trop:
    if token in ("-inf", "*"):
        return EPS
    try:
        return Trop(Fraction(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError("bad scalar %r: %s" % (token, exc)) from None


def format_scalar(x: Trop) -> str:
    if x.is_eps:
        return "-inf"
    v = x.value
    return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)


def _tokens_with_positions(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            yield tok, lineno, col + 1
            col += len(tok)


def parse_matrix(text: str) -> TropMatrix:
    stream = list(_tokens_with_positions(text))
    if len(stream) < 2:
        raise MatrixParseError("missing `rows cols` header", 1, 1)
    (rtok, rline, rcol), (ctok, cline, ccol) = stream[0], stream[1]
    try:
        rows = int(rtok)
    except ValueError:
        raise MatrixParseError("row count %r is not an integer" % rtok, rline, rcol) from None
    try:
        cols = int(ctok)
    except ValueError:
        raise MatrixParseError("column count %r is not an integer" % ctok, cline, ccol) from None
    if rows < 1 or cols < 1:
        raise MatrixParseError("dimensions must be at least 1x1", rline, rcol)
    body = stream[2:]
    if len(body) != rows * cols:
        if body:
            tok, line, col = body[-1]
        else:
            tok, line, col = ctok, cline, ccol
        raise MatrixParseError(
            "expected %d entries, found %d" % (rows * cols, len(body)), line, col
        )
    entries = []
    for tok, line, col in body:
        try:
            entries.append(parse_scalar(tok))
        except ValueError as exc:
            raise MatrixParseError(str(exc), line, col) from None
    return TropMatrix([entries[i * cols : (i + 1) * cols] for i in range(rows)])


def load_matrix(path: str) -> TropMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return parse_matrix(fh.read())
        except MatrixParseError as exc:
            raise ValueError("%s: %s" % (path, exc)) from None


def format_matrix(a: TropMatrix) -> str:
    lines = ["%d %d" % (a.rows, a.cols)]
    for i in range(a.rows):
        lines.append(" ".join(format_scalar(x) for x in a.row(i)))
    return "\n".join(lines) + "\n"


def format_fraction(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)
