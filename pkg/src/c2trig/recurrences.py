"""Polynomials of the four families in the variables X = 2c+(1,0), Y = 2c+(1,1).

For each family the normalized polynomial is

    P(lam, mu) = g(lam, mu) * f(lam, mu) / d

with ``d = 1`` for c+, ``U = 2c-(1,0)`` for c-, ``V = 2s+(1,1)`` for s+ and
``W = 4s-(2,1)`` for s-.  Two independent constructions are provided: the
scalar four-branch recurrences (:class:`PolyFamilyGenerator`) and the 3-term
matrix recurrence on whole rows (:func:`gen_row_matrix`).
"""
from __future__ import annotations

import threading
from fractions import Fraction

import numpy as np

from .bipoly import ONE, BiPoly, X, Y
from .trig import (
    CMINUS, CPLUS, SMINUS, SPLUS, Family, Label, canonicalize_label,
    eval_trig, is_dominant, normalization_g,
)

# Low rows, written as P = g * f / d.
SEEDS: dict[Family, dict[tuple[int, int], BiPoly]] = {
    CPLUS: {
        (0, 0): ONE,
        (1, 0): X,
        (1, 1): Y,
        (2, 0): X**2 - 2 * Y - 4,
        (2, 1): X * Y - 2 * X,
        (2, 2): Y**2 - 2 * X**2 + 4 * Y + 4,
        (3, 0): X**3 - 3 * X * Y - 3 * X,
        (3, 1): X**2 * Y - 2 * Y**2 - 6 * Y,
        (3, 2): X * Y**2 - 2 * X**3 + 3 * X * Y + 6 * X,
        (3, 3): Y**3 - 3 * X**2 * Y + 6 * Y**2 + 9 * Y,
    },
    CMINUS: {
        (1, 0): ONE,
        (2, 0): X,
        (2, 1): Y + 2,
        (3, 0): X**2 - Y - 3,
        (3, 1): X * Y,
        (3, 2): Y**2 - 2 * X**2 + 5 * Y + 6,
        (4, 0): X**3 - 2 * X * Y - 4 * X,
        (4, 1): X**2 * Y - Y**2 - 4 * Y - 2,
        (4, 2): X * Y**2 - 2 * X**3 + 4 * X * Y + 6 * X,
        (4, 3): Y**3 - 3 * X**2 * Y + 7 * Y**2 - 2 * X**2 + 14 * Y + 6,
    },
    SPLUS: {
        (1, 1): ONE,
        (2, 1): X,
        (2, 2): Y,
        (3, 1): X**2 - 2 * Y - 2,
        (3, 2): X * Y - X,
        (3, 3): Y**2 - X**2 + 2 * Y + 1,
    },
    SMINUS: {
        (2, 1): ONE,
        (3, 1): X,
        (3, 2): Y + 1,
        (4, 1): X**2 - Y - 2,
        (4, 2): X * Y,
        (4, 3): Y**2 - X**2 + 3 * Y + 2,
    },
}

# Highest row seeded for each construction.
SCALAR_SEED_ROWS = {CPLUS: 3, CMINUS: 4, SPLUS: 3, SMINUS: 3}
MATRIX_SEED_ROWS = {CPLUS: 3, CMINUS: 4, SPLUS: 3, SMINUS: 4}

# Denominator polynomials in (x, y) form, and their congruence numbers.
DENOMINATOR_CONGRUENCE = {CPLUS: 0, CMINUS: 1, SPLUS: 0, SMINUS: 1}

MU_MIN = {CPLUS: 0, CMINUS: 0, SPLUS: 1, SMINUS: 1}
LAMBDA_MIN = {CPLUS: 0, CMINUS: 1, SPLUS: 1, SMINUS: 2}


def row_labels(family: Family, lam: int) -> list[int]:
    """The admissible ``mu`` values of row ``lam`` in increasing order."""
    family = Family.parse(family)
    return [mu for mu in range(0, lam + 1) if is_dominant(family, lam, mu)]


def denominator(family: Family, x, y):
    """1, U, V or W evaluated at ``(x, y)``."""
    family = Family.parse(family)
    if family is CPLUS:
        return np.ones(np.broadcast(np.asarray(x), np.asarray(y)).shape)
    if family is CMINUS:
        return 2 * eval_trig(Label(CMINUS, 1, 0), x, y)
    if family is SPLUS:
        return 2 * eval_trig(Label(SPLUS, 1, 1), x, y)
    return 4 * eval_trig(Label(SMINUS, 2, 1), x, y)


def xy_variables(x, y):
    """``(X, Y)`` as functions of ``(x, y)``."""
    cx, cy = np.cos(np.pi * np.asarray(x)), np.cos(np.pi * np.asarray(y))
    return 2 * (cx + cy), 4 * cx * cy


def trig_side(family: Family, lam: int, mu: int, x, y):
    """``g * f / d`` computed directly from the trigonometric definition."""
    family = Family.parse(family)
    g = float(normalization_g(lam, mu))
    return g * eval_trig(Label(family, lam, mu), x, y) / denominator(family, x, y)


def consistency_error(family, lam, mu, poly: BiPoly, x, y) -> float:
    """Largest relative gap between ``poly(X, Y)`` and ``g f / d``.

    Relative to ``max(1, |g f / d|)``.
    """
    Xv, Yv = xy_variables(x, y)
    ref = trig_side(family, lam, mu, x, y)
    got = poly.eval(Xv, Yv)
    return float(np.max(np.abs(got - ref) / np.maximum(1.0, np.abs(ref))))


def check_seeds(n_points: int = 64, tol: float = 1e-9, seed: int = 20240101) -> None:
    """Validate every hardcoded seed polynomial against the trig side."""
    rng = np.random.default_rng(seed)
    # interior of the fundamental triangle, away from the edges
    u = rng.uniform(0.05, 0.95, n_points)
    v = rng.uniform(0.05, 0.95, n_points)
    x, y = u, u * v
    for family, table in SEEDS.items():
        for (lam, mu), p in table.items():
            err = consistency_error(family, lam, mu, p, x, y)
            if err > tol:
                raise ValueError(f"seed {family.symbol}({lam},{mu}) disagrees with trig side: {err:.2e}")


# Scalar recurrences ---------------------------------------------------------
#
# Each rule is (lhs, [(coef, factor, (l, m)), ...]) meaning
#     lhs * f(lam, mu) = sum coef * factor * f(l, m)
# where factor is None, "X" (for c+(1,0) = X/2) or "Y" (for c+(1,1) = Y/2).

def _rule_cplus(lam, mu):
    if mu == 0:
        return 2, [(4, "X", (lam - 1, 0)), (-2, None, (lam - 2, 0)), (-4, None, (lam - 1, 1))]
    if lam - 1 > mu:
        return 4, [(8, "X", (lam - 1, mu)), (-4, None, (lam - 2, mu)),
                   (-4, None, (lam - 1, mu + 1)), (-4, None, (lam - 1, mu - 1))]
    if lam - 1 == mu:
        return 4, [(4, "X", (lam - 1, lam - 1)), (-4, None, (lam - 1, lam - 2))]
    return 2, [(4, "Y", (lam - 1, lam - 1)), (-4, None, (lam, lam - 2)), (-2, None, (lam - 2, lam - 2))]


def _rule_cminus(lam, mu):
    if mu == 0:
        return 2, [(4, "X", (lam - 1, 0)), (-2, None, (lam - 2, 0)), (-4, None, (lam - 1, 1))]
    if lam - 2 > mu:
        return 4, [(8, "X", (lam - 1, mu)), (-4, None, (lam - 2, mu)),
                   (-4, None, (lam - 1, mu + 1)), (-4, None, (lam - 1, mu - 1))]
    if lam - 1 == mu:
        return 4, [(8, "Y", (lam - 1, lam - 2)), (-4, None, (lam, lam - 3)),
                   (4, None, (lam - 1, lam - 2)), (-4, None, (lam - 2, lam - 3))]
    return 4, [(8, "X", (lam - 1, lam - 2)), (-4, None, (lam - 1, lam - 3))]


def _rule_splus(lam, mu):
    if mu == 1 and lam - 1 > mu:
        return 4, [(8, "X", (lam - 1, 1)), (-4, None, (lam - 2, 1)), (-4, None, (lam - 1, 2))]
    if lam - 1 > mu:
        return 4, [(8, "X", (lam - 1, mu)), (-4, None, (lam - 2, mu)),
                   (-4, None, (lam - 1, mu + 1)), (-4, None, (lam - 1, mu - 1))]
    if lam - 1 == mu:
        return 4, [(4, "X", (lam - 1, lam - 1)), (-4, None, (lam - 1, lam - 2))]
    return 2, [(4, "Y", (lam - 1, lam - 1)), (-4, None, (lam, lam - 2)), (-2, None, (lam - 2, lam - 2))]


def _rule_sminus(lam, mu):
    if mu == 1 and lam - 2 > mu:
        return 4, [(8, "X", (lam - 1, 1)), (-4, None, (lam - 2, 1)), (-4, None, (lam - 1, 2))]
    if lam - 2 > mu:
        return 4, [(8, "X", (lam - 1, mu)), (-4, None, (lam - 2, mu)),
                   (-4, None, (lam - 1, mu + 1)), (-4, None, (lam - 1, mu - 1))]
    if lam - 2 == mu:
        return 4, [(8, "X", (lam - 1, lam - 2)), (-4, None, (lam - 1, lam - 3))]
    return 4, [(8, "Y", (lam - 1, lam - 2)), (4, None, (lam - 1, lam - 2)),
               (-4, None, (lam, lam - 3)), (-4, None, (lam - 2, lam - 3))]


SCALAR_RULES = {CPLUS: _rule_cplus, CMINUS: _rule_cminus, SPLUS: _rule_splus, SMINUS: _rule_sminus}

_HALF_X = X.scale(Fraction(1, 2))
_HALF_Y = Y.scale(Fraction(1, 2))


class PolyFamilyGenerator:
    """Memoized scalar-recurrence generator for one family.

    The cache holds the unnormalized ``f / d`` polynomials; :meth:`poly`
    returns ``g * f / d``.  Safe to share between threads.
    """

    def __init__(self, family: Family, validate_seeds: bool = True):
        self.family = Family.parse(family)
        if validate_seeds:
            check_seeds()
        self._rule = SCALAR_RULES[self.family]
        top = SCALAR_SEED_ROWS[self.family]
        self.base_set = {
            k: p for k, p in SEEDS[self.family].items() if k[0] <= top
        }
        self._cache: dict[tuple[int, int], BiPoly] = {
            k: p.scale(1 / normalization_g(*k)) for k, p in self.base_set.items()
        }
        self._rows_done = top
        self._lock = threading.RLock()

    def _fetch(self, lam, mu) -> BiPoly:
        sign, lab = canonicalize_label(self.family, lam, mu)
        if sign == 0:
            return BiPoly()
        return self._cache[(lab.lam, lab.mu)].scale(sign)

    def _build_row(self, lam: int) -> None:
        # ascending mu: the last branches of a row read earlier entries of it
        for mu in row_labels(self.family, lam):
            lhs, terms = self._rule(lam, mu)
            acc = BiPoly()
            for coef, factor, (l, m) in terms:
                p = self._fetch(l, m)
                if factor == "X":
                    p = p * _HALF_X
                elif factor == "Y":
                    p = p * _HALF_Y
                acc = acc + p.scale(coef)
            self._cache[(lam, mu)] = acc.scale(Fraction(1, lhs))

    def raw(self, lam: int, mu: int) -> BiPoly:
        """``f / d`` without the normalization factor."""
        if not is_dominant(self.family, lam, mu):
            raise ValueError(f"{self.family.symbol}({lam},{mu}) is not a dominant label")
        with self._lock:
            while self._rows_done < lam:
                self._build_row(self._rows_done + 1)
                self._rows_done += 1
            return self._cache[(lam, mu)]

    def poly(self, lam: int, mu: int) -> BiPoly:
        return self.raw(lam, mu).scale(normalization_g(lam, mu))

    __call__ = poly

    def row(self, lam: int) -> list[BiPoly]:
        return [self.poly(lam, mu) for mu in row_labels(self.family, lam)]


_GENERATORS: dict[Family, PolyFamilyGenerator] = {}
_GEN_LOCK = threading.Lock()


def generator(family: Family) -> PolyFamilyGenerator:
    family = Family.parse(family)
    with _GEN_LOCK:
        if family not in _GENERATORS:
            _GENERATORS[family] = PolyFamilyGenerator(family)
        return _GENERATORS[family]


def gen_poly(family: Family, lam: int, mu: int) -> BiPoly:
    return generator(family).poly(lam, mu)


def gen_cplus(lam: int, mu: int) -> BiPoly:
    return gen_poly(CPLUS, lam, mu)


def gen_cminus(lam: int, mu: int) -> BiPoly:
    return gen_poly(CMINUS, lam, mu)


def gen_splus(lam: int, mu: int) -> BiPoly:
    return gen_poly(SPLUS, lam, mu)


def gen_sminus(lam: int, mu: int) -> BiPoly:
    return gen_poly(SMINUS, lam, mu)


# Matrix recurrence ----------------------------------------------------------

class MatrixRecurrence:
    """Coefficients of ``P[lam+1] = D (X,Y)P[lam] + E P[lam] + F P[lam-1]``.

    ``D`` has shape ``(n+1, 2n)``, ``E`` ``(n+1, n)`` and ``F`` ``(n+1, n-1)``
    (``(n+1, n)`` for c+) where ``n`` is the length of row ``lam``.
    """

    def __init__(self, family: Family, lam: int):
        self.family = family = Family.parse(family)
        if lam + 1 <= MATRIX_SEED_ROWS[family]:
            raise ValueError(
                f"matrix recurrence for {family.symbol} produces rows "
                f">= {MATRIX_SEED_ROWS[family] + 1}, asked for row {lam + 1}"
            )
        self.lam = lam
        n = len(row_labels(family, lam))
        n_prev = len(row_labels(family, lam - 1))
        self.D = np.zeros((n + 1, 2 * n), dtype=object)
        self.E = np.zeros((n + 1, n), dtype=object)
        self.F = np.zeros((n + 1, n_prev), dtype=object)

        for i in range(n):
            self.D[i, i] = 1
        self.D[n, n - 2] = -1
        self.D[n, 2 * n - 1] = 1

        # zero mu index present: the second row reads P(lam, 0) twice
        doubled_first = MU_MIN[family] == 0
        # c+ and s+ rows end on the diagonal lam == mu
        diagonal_tail = family in (CPLUS, SPLUS)
        self.E[0, 1] = -1
        for r in range(1, n - 1):
            self.E[r, r - 1] = -1
            self.E[r, r + 1] = -1
        if doubled_first:
            self.E[1, 0] = -2
        if diagonal_tail:
            self.E[n - 2, n - 1] = -2
        self.E[n - 1, n - 2] = -1
        self.E[n, n - 3] = 1
        self.E[n, n - 1] = 2

        if diagonal_tail:
            for r in range(n - 2):
                self.F[r, r] = -1
            self.F[n - 2, n_prev - 1] = -2
            self.F[n, n_prev - 1] = 1
        else:
            for r in range(n - 1):
                self.F[r, r] = -1

    @property
    def shapes(self):
        return self.D.shape, self.E.shape, self.F.shape

    def step(self, current: list[BiPoly], previous: list[BiPoly]) -> list[BiPoly]:
        xy = [X * p for p in current] + [Y * p for p in current]
        out = []
        for r in range(self.D.shape[0]):
            acc = BiPoly()
            for c, p in zip(self.D[r], xy):
                if c:
                    acc = acc + p.scale(c)
            for c, p in zip(self.E[r], current):
                if c:
                    acc = acc + p.scale(c)
            for c, p in zip(self.F[r], previous):
                if c:
                    acc = acc + p.scale(c)
            out.append(acc)
        return out


def seed_row(family: Family, lam: int) -> list[BiPoly]:
    family = Family.parse(family)
    return [SEEDS[family][(lam, mu)] for mu in row_labels(family, lam)]


def gen_row_matrix(family: Family, lam: int) -> list[BiPoly]:
    """Row ``lam`` built only from seed rows and the matrix recurrence."""
    family = Family.parse(family)
    top = MATRIX_SEED_ROWS[family]
    if lam <= top:
        raise ValueError(f"{family.symbol} matrix rows start at {top + 1}, got {lam}")
    prev, cur = seed_row(family, top - 1), seed_row(family, top)
    for k in range(top, lam):
        prev, cur = cur, MatrixRecurrence(family, k).step(cur, prev)
    return cur


# Character variables --------------------------------------------------------

def to_character_basis(p: BiPoly) -> BiPoly:
    """Rewrite ``p(X, Y)`` in ``chi1 = X``, ``chi2 = Y + 1``.

    The result reuses the BiPoly variables: X stands for chi1, Y for chi2.
    """
    return p.substitute(X, Y - 1)


def from_character_basis(q: BiPoly) -> BiPoly:
    return q.substitute(X, Y + 1)


# Closed-form values at (x, y) = (0, 0), i.e. X = Y = 4.

def value_at_origin(family: Family, lam: int, mu: int) -> Fraction:
    """Limit of ``g f / d`` at the origin.

    The divided families have removable singularities there; the limits are
    ``(lam^2 - mu^2)/2``, ``lam mu / 2`` and ``lam mu (lam^2 - mu^2)/24`` times g.
    """
    family = Family.parse(family)
    g = normalization_g(lam, mu)
    if family is CPLUS:
        return 2 * g
    if family is CMINUS:
        return g * Fraction(lam * lam - mu * mu, 2)
    if family is SPLUS:
        return g * Fraction(lam * mu, 2)
    return g * Fraction(lam * mu * (lam * lam - mu * mu), 24)
