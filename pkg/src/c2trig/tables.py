"""Coefficient tables of the normalized polynomials, one per family and class.

Rows are the labels of one congruence class sorted by ``(lam, mu)``; columns
are the leading monomials of those rows in the same order.  A row lists its
coefficients up to and including its own leading monomial and leaves the
remaining cells empty.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from importlib import resources

from .bipoly import BiPoly
from .recurrences import gen_poly, row_labels
from .trig import CMINUS, CPLUS, SMINUS, SPLUS, Family, congruence, normalization_g

TABLE_CORNER = {CPLUS: "c+", CMINUS: "c-/U", SPLUS: "s+/V", SMINUS: "s-/W"}
DEFAULT_MAX_LAMBDA = 7


def leading_exponent(family: Family, lam: int, mu: int) -> tuple[int, int]:
    family = Family.parse(family)
    shift_x = 1 if family in (CMINUS, SMINUS) else 0
    shift_y = 1 if family in (SPLUS, SMINUS) else 0
    return lam - mu - shift_x, mu - shift_y


def monomial_name(a: int, b: int) -> str:
    if a == b == 0:
        return "1"
    xs = "" if a == 0 else ("X" if a == 1 else f"X^{a}")
    ys = "" if b == 0 else ("Y" if b == 1 else f"Y^{b}")
    return xs + ys


def _fmt_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def label_name(lam: int, mu: int) -> str:
    return f"{_fmt_fraction(normalization_g(lam, mu))}({lam},{mu})"


def table_labels(family: Family, cls: int, max_lambda: int = DEFAULT_MAX_LAMBDA) -> list[tuple[int, int]]:
    family = Family.parse(family)
    if cls not in (0, 1):
        raise ValueError(f"congruence class must be 0 or 1, got {cls}")
    return [
        (lam, mu)
        for lam in range(max_lambda + 1)
        for mu in row_labels(family, lam)
        if congruence(lam, mu) == cls
    ]


def build_table(family: Family, cls: int, max_lambda: int = DEFAULT_MAX_LAMBDA):
    """Return ``(header, rows)`` with rows as ``(label, poly, coefficients)``."""
    family = Family.parse(family)
    labels = table_labels(family, cls, max_lambda)
    if not labels:
        raise ValueError(
            f"no {family.symbol} labels of class {cls} with lambda <= {max_lambda}"
        )
    columns = [leading_exponent(family, *lab) for lab in labels]
    rows = []
    for i, (lam, mu) in enumerate(labels):
        p = gen_poly(family, lam, mu)
        if not p.is_integral():
            raise ArithmeticError(f"{family.symbol}({lam},{mu}) has non-integer coefficients")
        stray = set(p.terms) - set(columns[: i + 1])
        if stray:
            raise ArithmeticError(f"{family.symbol}({lam},{mu}) has monomials outside its columns: {stray}")
        rows.append(((lam, mu), p, [p.coeff(*e) for e in columns[: i + 1]]))
    return columns, rows


def table_cells(family: Family, cls: int, max_lambda: int = DEFAULT_MAX_LAMBDA) -> list[list[str]]:
    family = Family.parse(family)
    columns, rows = build_table(family, cls, max_lambda)
    n = len(columns)
    out = [[TABLE_CORNER[family]] + [monomial_name(*e) for e in columns]]
    for (lam, mu), _, coeffs in rows:
        cells = [_fmt_fraction(c) for c in coeffs]
        out.append([label_name(lam, mu)] + cells + [""] * (n - len(cells)))
    return out


def to_csv(cells: list[list[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(cells)
    return buf.getvalue()


def to_markdown(cells: list[list[str]]) -> str:
    header, *body = cells
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(r) + " |" for r in body]
    return "\n".join(lines) + "\n"


def poly_record(family: Family, lam: int, mu: int, p: BiPoly | None = None) -> dict:
    family = Family.parse(family)
    if p is None:
        p = gen_poly(family, lam, mu)
    if not p.is_integral():
        raise ArithmeticError(f"{family.symbol}({lam},{mu}) has non-integer coefficients")
    return {
        "family": family.value,
        "lambda": lam,
        "mu": mu,
        "g": _fmt_fraction(normalization_g(lam, mu)),
        "congruence": congruence(lam, mu),
        "terms": p.to_terms_json(),
    }


def to_json(family: Family, cls: int, max_lambda: int = DEFAULT_MAX_LAMBDA) -> str:
    _, rows = build_table(family, cls, max_lambda)
    recs = [poly_record(family, lam, mu, p) for (lam, mu), p, _ in rows]
    return json.dumps(recs, indent=2) + "\n"


def render_table(family: Family, cls: int, max_lambda: int = DEFAULT_MAX_LAMBDA, fmt: str = "csv") -> str:
    if fmt == "csv":
        return to_csv(table_cells(family, cls, max_lambda))
    if fmt == "markdown":
        return to_markdown(table_cells(family, cls, max_lambda))
    if fmt == "json":
        return to_json(family, cls, max_lambda)
    raise ValueError(f"unknown format {fmt!r}")


def golden_name(family: Family, cls: int) -> str:
    return f"{Family.parse(family).value}_{cls}.csv"


def golden_text(family: Family, cls: int) -> str:
    return resources.files("c2trig.data").joinpath(golden_name(family, cls)).read_text()


def parse_golden(text: str) -> dict[tuple[int, int], BiPoly]:
    """Read a golden CSV back into ``{(lam, mu): P}``."""
    header, *body = list(csv.reader(io.StringIO(text)))
    cols = [_parse_monomial(h) for h in header[1:]]
    out = {}
    for row in body:
        lab = row[0]
        lam, mu = (int(v) for v in lab[lab.index("(") + 1 : -1].split(","))
        terms = {cols[i]: int(c) for i, c in enumerate(row[1:]) if c != ""}
        out[(lam, mu)] = BiPoly(terms)
    return out


def _parse_monomial(name: str) -> tuple[int, int]:
    if name == "1":
        return (0, 0)
    a = b = 0
    rest = name
    if rest.startswith("X"):
        rest = rest[1:]
        if rest.startswith("^"):
            num = ""
            rest = rest[1:]
            while rest and rest[0].isdigit():
                num, rest = num + rest[0], rest[1:]
            a = int(num)
        else:
            a = 1
    if rest.startswith("Y"):
        rest = rest[1:]
        b = int(rest[1:]) if rest.startswith("^") else 1
        rest = ""
    if rest:
        raise ValueError(f"bad monomial {name!r}")
    return a, b
