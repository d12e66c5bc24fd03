"""Perturbed determinant signs and the term-table / code generators.

``sign_det_sos`` walks the relevant terms of a perturbed determinant in
order of decreasing significance and returns the first nonzero sign together
with the depth at which it was found.  The walk always terminates: the last
relevant term has a constant +1 coefficient, so the result is never zero.
"""

import csv
import io
from dataclasses import dataclass

from .epsorder import (Kind, TermDescriptor, decode, initial_vector, next_v,
                       sentinel_for)
from .exact import sign_of_determinant

MAX_SIZE = 8


@dataclass(frozen=True)
class SosMatrix:
    """Rows of perturbed points in increasing index order.

    LAMBDA kind: rows hold d coordinates each, the constant-1 column is
    implicit and D = d + 1.  DELTA kind: rows hold all D coordinates.
    """

    kind: Kind
    rows: tuple
    row_indices: tuple

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.row_indices, self.row_indices[1:])):
            raise ValueError("row indices must be strictly increasing")
        if len(self.rows) != len(self.row_indices):
            raise ValueError("one index per row required")
        d = self.size
        want = d - 1 if self.kind is Kind.LAMBDA else d
        if any(len(r) != want for r in self.rows):
            raise ValueError("inconsistent row width")

    @property
    def size(self) -> int:
        return len(self.rows)

    def full_matrix(self):
        if self.kind is Kind.LAMBDA:
            return [list(r) + [1] for r in self.rows]
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class SosSignResult:
    sign: int  # -1 or +1, never 0
    depth: int


def sign_det_sos_raw(kind: Kind, full, size: int) -> tuple[int, int]:
    """(sign, depth) for a fully materialised D x D matrix.

    ``full`` must already include the constant-1 column for LAMBDA kind.
    """
    s = sign_of_determinant(full)
    if s:
        return s, 0
    v = initial_vector(kind, size)
    t = 0
    while True:
        v = next_v(v)
        t += 1
        term = decode(v)
        rows = [r for r in range(1, size + 1) if r not in term.deleted_rows]
        cols = [c for c in range(1, size + 1) if c not in term.deleted_cols]
        sub = [[full[r - 1][c - 1] for c in cols] for r in rows]
        s = term.sign * sign_of_determinant(sub)
        if s:
            return s, t


def sign_det_sos(m: SosMatrix) -> SosSignResult:
    sign, depth = sign_det_sos_raw(m.kind, m.full_matrix(), m.size)
    assert sign != 0
    return SosSignResult(sign=sign, depth=depth)


def generate_term_table(kind: Kind, size: int) -> list[TermDescriptor]:
    """All relevant terms in significance order.

    The table ends at the first constant term: submatrix size 0 for DELTA,
    size 1 (the lone constant entry) for LAMBDA.
    """
    if not 2 <= size <= MAX_SIZE:
        raise ValueError(f"size must be in 2..{MAX_SIZE}")
    stop_k = 1 if kind is Kind.LAMBDA else 0
    out = []
    v = initial_vector(kind, size)
    t = 0
    while True:
        term = decode(v, depth=t)
        out.append(term)
        if term.k == stop_k:
            return out
        v = next_v(v)
        t += 1


# --- rendering ------------------------------------------------------------

def _eps_str(term: TermDescriptor) -> str:
    pairs = sorted(term.eps, key=lambda p: (-p[0], p[1]))
    return "".join(f"({r},{c})" for r, c in pairs)


def _parse_eps(text: str) -> frozenset:
    pairs = []
    for chunk in text.replace(")(", ");(").split(";"):
        chunk = chunk.strip()
        if chunk:
            r, c = chunk[1:-1].split(",")
            pairs.append((int(r), int(c)))
    return frozenset(pairs)


def _v_str(v: tuple) -> str:
    body = ",".join(str(x) for x in v[:-1])
    return f"[{body};{v[-1]}]"


CSV_COLUMNS = ["t", "k", "v", "sign", "deleted_rows", "deleted_cols", "eps"]


def table_to_csv(table: list[TermDescriptor]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for term in table:
        w.writerow([
            term.depth,
            term.k,
            _v_str(term.v),
            f"{term.sign:+d}",
            " ".join(str(r) for r in term.deleted_rows),
            " ".join(str(c) for c in term.deleted_cols),
            _eps_str(term),
        ])
    return buf.getvalue()


def table_from_csv(text: str) -> list[TermDescriptor]:
    """Inverse of table_to_csv."""
    rows = list(csv.reader(io.StringIO(text)))
    if rows and rows[0] == CSV_COLUMNS:
        rows = rows[1:]
    out = []
    for t, k, v, sign, drows, dcols, eps in rows:
        body, sent = v.strip("[]").split(";")
        vec = tuple(int(x) for x in body.split(",")) + (int(sent),)
        out.append(TermDescriptor(
            depth=int(t),
            k=int(k),
            sign=int(sign),
            deleted_rows=tuple(int(x) for x in drows.split()) if drows else (),
            deleted_cols=tuple(int(x) for x in dcols.split()) if dcols else (),
            eps=_parse_eps(eps),
            v=vec,
        ))
    return out


def table_to_text(table: list[TermDescriptor]) -> str:
    header = ["t", "k", "v", "sign", "rows", "cols", "eps"]
    body = [[
        str(term.depth),
        str(term.k),
        _v_str(term.v),
        f"{term.sign:+d}",
        " ".join(str(r) for r in term.deleted_rows) or "-",
        " ".join(str(c) for c in term.deleted_cols) or "-",
        _eps_str(term) or "-",
    ] for term in table]
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in [header] + body]
    return "\n".join(lines) + "\n"


# --- straight-line code emission -------------------------------------------

def _term_expr(term: TermDescriptor, kind: Kind, size: int) -> str:
    rows = [r for r in range(1, size + 1) if r not in term.deleted_rows]
    cols = [c for c in range(1, size + 1) if c not in term.deleted_cols]

    def cell(r, c):
        if kind is Kind.LAMBDA and c == size:
            return "1"
        return f"m{r}_{c}"

    sgn = "+" if term.sign > 0 else "-"
    if not rows:
        return f"{sgn}1"
    if len(rows) == 1:
        entry = cell(rows[0], cols[0])
        if entry == "1":
            return f"{sgn}1"
        return f"{sgn}sign({entry})"
    body = "; ".join(", ".join(cell(r, c) for c in cols) for r in rows)
    return f"{sgn}sign_det[{body}]"


def emit_straightline_code(kind: Kind, size: int, style: str = "case") -> str:
    """Render the term table as a language-neutral evaluation skeleton.

    ``case``: one branch per depth, for a driver that tracks depth itself.
    ``unrolled``: sequential tests that return at the first nonzero sign.
    """
    if style not in ("case", "unrolled"):
        raise ValueError("style must be 'case' or 'unrolled'")
    table = generate_term_table(kind, size)
    head = [
        f"# perturbed determinant sign, kind={kind.value}, size={size}",
        "# m<r>_<c> holds the unperturbed entry at row r, column c (1-based)",
    ]
    lines = []
    if style == "case":
        lines.append("switch t:")
        for term in table:
            lines.append(f"  case {term.depth}: s = {_term_expr(term, kind, size)}")
    else:
        for term in table[:-1]:
            lines.append(f"s = {_term_expr(term, kind, size)}")
            lines.append("if s != 0: return s")
        lines.append(f"return {_term_expr(table[-1], kind, size)}")
    return "\n".join(head + lines) + "\n"
