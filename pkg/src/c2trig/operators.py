"""The Laplace-type operator and the fourth-order operator in the variables X, Y.

Each family has its own pair ``(Delta_bar, Gamma_bar)``; the normalized
polynomials are simultaneous eigenfunctions with eigenvalues
``-(lam^2 + mu^2 - c_f)`` and ``lam^2 mu^2 - d_f``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bipoly import BiPoly, X, Y
from .recurrences import gen_poly
from .trig import CMINUS, CPLUS, SMINUS, SPLUS, Family, is_dominant

DELTA_SHIFT = {CPLUS: 0, CMINUS: 1, SPLUS: 2, SMINUS: 5}
GAMMA_SHIFT = {CPLUS: 0, CMINUS: 0, SPLUS: 1, SMINUS: 4}


@dataclass(frozen=True)
class LinDiffOp:
    """``sum coef * d^(i+j) / dX^i dY^j`` with polynomial coefficients."""

    terms: tuple = ()  # ((coef: BiPoly, (i, j)), ...)

    def __post_init__(self):
        merged: dict[tuple[int, int], BiPoly] = {}
        for coef, order in self.terms:
            order = (int(order[0]), int(order[1]))
            merged[order] = merged.get(order, BiPoly()) + coef
        object.__setattr__(
            self, "terms",
            tuple((c, o) for o, c in sorted(merged.items(), key=lambda kv: (-sum(kv[0]), -kv[0][0])) if c),
        )

    def coefficient(self, i: int, j: int) -> BiPoly:
        for c, o in self.terms:
            if o == (i, j):
                return c
        return BiPoly()

    @property
    def order(self) -> int:
        return max((i + j for _, (i, j) in self.terms), default=0)

    def apply(self, p: BiPoly) -> BiPoly:
        out = BiPoly()
        for coef, (i, j) in self.terms:
            d = p.diff(i, j)
            if d:
                out = out + coef * d
        return out

    __call__ = apply

    def replace(self, i: int, j: int, coef: BiPoly) -> "LinDiffOp":
        """Copy with the ``(i, j)`` coefficient swapped out."""
        kept = [(c, o) for c, o in self.terms if o != (i, j)]
        return LinDiffOp(tuple(kept) + ((coef, (i, j)),))


def apply(op: LinDiffOp, p: BiPoly) -> BiPoly:
    return op.apply(p)


def _delta_first_order(family):
    if family is CPLUS:
        return -X, -2 * Y
    if family is CMINUS:
        return -3 * X, -(4 * Y + 8)
    if family is SPLUS:
        return -3 * X, -6 * Y
    return -5 * X, -(8 * Y + 8)


def make_delta_bar(family: Family) -> LinDiffOp:
    family = Family.parse(family)
    cx, cy = _delta_first_order(family)
    return LinDiffOp((
        (8 - X**2 + 2 * Y, (2, 0)),
        (4 * X**2 - 8 * Y - 2 * Y**2, (0, 2)),
        (2 * (4 * X - X * Y), (1, 1)),
        (cx, (1, 0)),
        (cy, (0, 1)),
    ))


_GAMMA_TOP = (
    (16 - 4 * X**2 + 8 * Y + Y**2, (4, 0)),
    (32 * X - 8 * X**3 + 16 * X * Y + 2 * X * Y**2, (3, 1)),
    (32 * Y + 16 * Y**2 + 2 * Y**3 + 16 * X**2 + X**2 * Y**2 - 4 * X**4, (2, 2)),
    (32 * X * Y - 8 * X**3 * Y + 16 * X * Y**2 + 2 * X * Y**3, (1, 3)),
    (16 * Y**2 - 4 * X**2 * Y**2 + 8 * Y**3 + Y**4, (0, 4)),
)

_GAMMA_LOWER = {
    CPLUS: (
        (X * Y - 4 * X, (3, 0)),
        (X**2 * Y - 24 * X**2 + 40 * Y + 6 * Y**2 + 64, (2, 1)),
        (-20 * X**3 + 36 * X * Y + 7 * X * Y**2 + 64 * X, (1, 2)),
        (64 * Y - 20 * X**2 * Y + 40 * Y**2 + 6 * Y**3, (0, 3)),
        (Y, (2, 0)),
        (3 * X * Y - 8 * X, (1, 1)),
        (-16 * X**2 + 32 * Y + 7 * Y**2 + 32, (0, 2)),
        (Y, (0, 1)),
    ),
    CMINUS: (
        (X * Y - 4 * X, (3, 0)),
        (X**2 * Y - 32 * X**2 + 56 * Y + 8 * Y**2 + 96, (2, 1)),
        (-28 * X**3 + 52 * X * Y + 9 * X * Y**2 + 96 * X, (1, 2)),
        (96 * Y - 28 * X**2 * Y + 56 * Y**2 + 8 * Y**3, (0, 3)),
        (2 * Y + 4, (2, 0)),
        (5 * X * Y - 8 * X, (1, 1)),
        (-36 * X**2 + 76 * Y + 14 * Y**2 + 96, (0, 2)),
        (4 * Y + 8, (0, 1)),
    ),
    SPLUS: (
        (3 * X * Y - 12 * X, (3, 0)),
        (3 * X**2 * Y - 40 * X**2 + 56 * Y + 10 * Y**2 + 64, (2, 1)),
        (-28 * X**3 + 44 * X * Y + 13 * X * Y**2 + 64 * X, (1, 2)),
        (64 * Y - 28 * X**2 * Y + 56 * Y**2 + 10 * Y**3, (0, 3)),
        (7 * Y + X**2 - 8, (2, 0)),
        (17 * X * Y - 32 * X, (1, 1)),
        (-36 * X**2 + 72 * Y + 25 * Y**2 + 32, (0, 2)),
        (3 * X, (1, 0)),
        (15 * Y, (0, 1)),
    ),
    SMINUS: (
        (3 * X * Y - 12 * X, (3, 0)),
        (3 * X**2 * Y - 48 * X**2 + 72 * Y + 12 * Y**2 + 96, (2, 1)),
        (-36 * X**3 + 60 * X * Y + 15 * X * Y**2 + 96 * X, (1, 2)),
        (96 * Y - 36 * X**2 * Y + 72 * Y**2 + 12 * Y**3, (0, 3)),
        (X**2 + 10 * Y + 4, (2, 0)),
        (23 * X * Y - 32 * X, (1, 1)),
        (-64 * X**2 + 140 * Y + 38 * Y**2 + 96, (0, 2)),
        (5 * X, (1, 0)),
        (32 * Y + 32, (0, 1)),
    ),
}


def make_gamma_bar(family: Family) -> LinDiffOp:
    family = Family.parse(family)
    return LinDiffOp(_GAMMA_TOP + _GAMMA_LOWER[family])


def delta_eigenvalue(family: Family, lam: int, mu: int) -> int:
    return -(lam * lam + mu * mu - DELTA_SHIFT[Family.parse(family)])


def gamma_eigenvalue(family: Family, lam: int, mu: int) -> int:
    return lam * lam * mu * mu - GAMMA_SHIFT[Family.parse(family)]


@dataclass
class EigenReport:
    family: Family
    lam: int
    mu: int
    delta_ok: bool
    gamma_ok: bool
    delta_eigenvalue: int
    gamma_eigenvalue: int
    delta_residual: BiPoly = field(default_factory=BiPoly)
    gamma_residual: BiPoly = field(default_factory=BiPoly)

    @property
    def ok(self) -> bool:
        return self.delta_ok and self.gamma_ok

    def __iter__(self):
        # unpacks as (delta_ok, gamma_ok)
        return iter((self.delta_ok, self.gamma_ok))


def check_eigen(family: Family, lam: int, mu: int, delta: LinDiffOp | None = None,
                gamma: LinDiffOp | None = None) -> EigenReport:
    """Exact check of both eigen-relations for ``P(lam, mu)``."""
    family = Family.parse(family)
    if not is_dominant(family, lam, mu):
        raise ValueError(f"{family.symbol}({lam},{mu}) is not a dominant label")
    delta = delta or make_delta_bar(family)
    gamma = gamma or make_gamma_bar(family)
    p = gen_poly(family, lam, mu)
    ev_d = delta_eigenvalue(family, lam, mu)
    ev_g = gamma_eigenvalue(family, lam, mu)
    rd = delta.apply(p) - p.scale(Fraction(ev_d))
    rg = gamma.apply(p) - p.scale(Fraction(ev_g))
    return EigenReport(family, lam, mu, rd.is_zero(), rg.is_zero(), ev_d, ev_g, rd, rg)
