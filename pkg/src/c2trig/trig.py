"""The four families of symmetric/antisymmetric 2D cosine and sine functions.

For integers ``lam``, ``mu``::

    c+ = cos(pi lam x) cos(pi mu y) + cos(pi mu x) cos(pi lam y)
    c- = cos(pi lam x) cos(pi mu y) - cos(pi mu x) cos(pi lam y)
    s+ = sin(pi lam x) sin(pi mu y) + sin(pi mu x) sin(pi lam y)
    s- = sin(pi lam x) sin(pi mu y) - sin(pi mu x) sin(pi lam y)
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class Family(enum.Enum):
    CPLUS = "cplus"
    CMINUS = "cminus"
    SPLUS = "splus"
    SMINUS = "sminus"

    @property
    def is_cosine(self) -> bool:
        return self in (Family.CPLUS, Family.CMINUS)

    @property
    def swap_sign(self) -> int:
        """Sign picked up when the two indices are exchanged."""
        return 1 if self in (Family.CPLUS, Family.SPLUS) else -1

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def parse(cls, name: "str | Family") -> "Family":
        if isinstance(name, Family):
            return name
        key = name.strip().lower().replace("_", "").replace("-", "minus").replace("+", "plus")
        aliases = {
            "cplus": cls.CPLUS, "cosplus": cls.CPLUS,
            "cminus": cls.CMINUS, "cosminus": cls.CMINUS,
            "splus": cls.SPLUS, "sinplus": cls.SPLUS,
            "sminus": cls.SMINUS, "sinminus": cls.SMINUS,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown family {name!r}") from None


_SYMBOLS = {Family.CPLUS: "c+", Family.CMINUS: "c-", Family.SPLUS: "s+", Family.SMINUS: "s-"}

CPLUS, CMINUS, SPLUS, SMINUS = Family.CPLUS, Family.CMINUS, Family.SPLUS, Family.SMINUS


def is_dominant(family: Family, lam: int, mu: int) -> bool:
    if family is CPLUS:
        return lam >= mu >= 0
    if family is CMINUS:
        return lam > mu >= 0
    if family is SPLUS:
        return lam >= mu > 0
    return lam > mu > 0


@functools.total_ordering
@dataclass(frozen=True)
class Label:
    family: Family
    lam: int
    mu: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        object.__setattr__(self, "lam", int(self.lam))
        object.__setattr__(self, "mu", int(self.mu))

    @property
    def is_dominant(self) -> bool:
        return is_dominant(self.family, self.lam, self.mu)

    @property
    def congruence(self) -> int:
        return congruence(self.lam, self.mu)

    def __str__(self) -> str:
        return f"{self.family.symbol}({self.lam},{self.mu})"

    def __lt__(self, other):
        # enums are not orderable; order by family declaration then indices
        return _sort_key(self) < _sort_key(other)


_FAMILY_ORDER = {f: i for i, f in enumerate(Family)}


def _sort_key(label: Label):
    return (_FAMILY_ORDER[label.family], label.lam, label.mu)


def congruence(lam: int, mu: int) -> int:
    return (lam - mu) % 2


def normalization_g(lam: int, mu: int) -> Fraction:
    """Factor turning a Weyl-group sum into an orbit sum."""
    if lam < mu or mu < 0:
        raise ValueError(f"normalization needs lam >= mu >= 0, got ({lam}, {mu})")
    if lam == mu == 0:
        return Fraction(1, 2)
    if lam == mu or mu == 0:
        return Fraction(2)
    return Fraction(4)


def eval_trig(label: Label, x, y):
    """Evaluate the family function at ``(x, y)``; broadcasts over arrays.

    Defined for every integer pair, dominant or not.
    """
    lam, mu = label.lam, label.mu
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    f = np.cos if label.family.is_cosine else np.sin
    a = f(np.pi * lam * x) * f(np.pi * mu * y)
    b = f(np.pi * mu * x) * f(np.pi * lam * y)
    out = a + b if label.family.swap_sign == 1 else a - b
    return out if out.shape else float(out)


def canonicalize_label(family: Family, lam: int, mu: int) -> tuple[int, Label | None]:
    """Reduce ``f_(lam, mu)`` to ``sign * f_L`` with ``L`` dominant.

    Cosines are even and sines odd in each index; exchanging the indices
    multiplies by the family's swap sign.  Returns ``(0, None)`` when the
    function vanishes identically.
    """
    family = Family.parse(family)
    sign = 1
    if lam < 0:
        lam = -lam
        if not family.is_cosine:
            sign = -sign
    if mu < 0:
        mu = -mu
        if not family.is_cosine:
            sign = -sign
    if lam < mu:
        lam, mu = mu, lam
        sign *= family.swap_sign
    if not is_dominant(family, lam, mu):
        # remaining failures: a zero sine index, or lam == mu for c-/s-
        return 0, None
    return sign, Label(family, lam, mu)


# Product decomposition.  Each family pair is solved from the generic
# product relations: the four c+ relations form a +-1 Hadamard system,
# the remaining three pairs of relations are solved by half-sum/difference.

def _cp_relations(l, m, L, M):
    # keyed by signs of the (c-c-, s+s+, s-s-) products
    return {
        (1, 1, 1): [(1, CPLUS, l + L, m + M), (1, CPLUS, l - L, m - M)],
        (1, -1, -1): [(1, CPLUS, l + L, m - M), (1, CPLUS, l - L, m + M)],
        (-1, 1, -1): [(1, CPLUS, l + M, m + L), (1, CPLUS, l - M, m - L)],
        (-1, -1, 1): [(1, CPLUS, l + M, m - L), (1, CPLUS, l - M, m + L)],
    }


def _pair_relations(target, l, m, L, M):
    """The two relations ``2(A B +- C D) = ...`` with right side in ``target``."""
    if target is CMINUS:
        plus = [(1, CMINUS, l + L, m + M), (1, CMINUS, l - L, m - M),
                (-1, CMINUS, l + M, m + L), (-1, CMINUS, l - M, m - L)]
        minus = [(1, CMINUS, l + L, m - M), (1, CMINUS, l - L, m + M),
                 (-1, CMINUS, l + M, m - L), (-1, CMINUS, l - M, m + L)]
    else:
        plus = [(1, target, l + L, m + M), (1, target, l + L, m - M),
                (1, target, l - L, m + M), (1, target, l - L, m - M)]
        minus = [(1, target, l + M, m + L), (1, target, l + M, m - L),
                 (1, target, l - M, m + L), (1, target, l - M, m - L)]
    return plus, minus


# (first, second) -> (target family, how to combine).  For the c+ block the
# combination is a sign vector over the four relations; for the others
# +1 means (plus + minus)/4 and -1 means (plus - minus)/4.
_PRODUCT_RULES = {
    (CPLUS, CPLUS): (CPLUS, (1, 1, 1, 1)),
    (CMINUS, CMINUS): (CPLUS, (1, 1, -1, -1)),
    (SPLUS, SPLUS): (CPLUS, (1, -1, 1, -1)),
    (SMINUS, SMINUS): (CPLUS, (1, -1, -1, 1)),
    (CPLUS, CMINUS): (CMINUS, 1),
    (SPLUS, SMINUS): (CMINUS, -1),
    (SPLUS, CPLUS): (SPLUS, 1),
    (SMINUS, CMINUS): (SPLUS, -1),
    (SMINUS, CPLUS): (SMINUS, 1),
    (SPLUS, CMINUS): (SMINUS, -1),
}

# Which family appears in every term of a product (unordered pairs).
PRODUCT_TARGET = {frozenset(k): v[0] for k, v in _PRODUCT_RULES.items()}


def product_family(a: Family, b: Family) -> Family:
    return PRODUCT_TARGET[frozenset((Family.parse(a), Family.parse(b)))]


def expand_product(a: Label, b: Label) -> list[tuple[Fraction, Family, int, int]]:
    """Product ``f_a * f_b`` as a list of raw (uncanonicalized) terms."""
    key = (a.family, b.family)
    if key not in _PRODUCT_RULES:
        a, b = b, a
        key = (a.family, b.family)
    target, combo = _PRODUCT_RULES[key]
    l, m, L, M = a.lam, a.mu, b.lam, b.mu
    terms = []
    quarter = Fraction(1, 4)
    if target is CPLUS:
        rels = _cp_relations(l, m, L, M)
        for s, rel in zip(combo, rels.values()):
            terms += [(quarter * s * c, f, p, q) for c, f, p, q in rel]
    else:
        plus, minus = _pair_relations(target, l, m, L, M)
        terms += [(quarter * c, f, p, q) for c, f, p, q in plus]
        terms += [(quarter * combo * c, f, p, q) for c, f, p, q in minus]
    return terms


def collect(terms) -> list[tuple[Fraction, Label]]:
    """Canonicalize raw ``(coef, family, lam, mu)`` terms and merge them."""
    acc: dict[Label, Fraction] = {}
    for c, fam, p, q in terms:
        sign, lab = canonicalize_label(fam, p, q)
        if sign == 0:
            continue
        acc[lab] = acc.get(lab, Fraction(0)) + sign * Fraction(c)
    return [(c, lab) for lab, c in sorted(acc.items()) if c != 0]


def decompose_product(a: Label, b: Label) -> list[tuple[Fraction, Label]]:
    """Write the pointwise product of two dominant functions as a sum.

    Returns ``[(coef, label), ...]`` with dominant labels, merged, zero terms
    dropped, sorted by label.
    """
    for lab in (a, b):
        if not lab.is_dominant:
            raise ValueError(f"{lab} is not dominant")
    return collect(expand_product(a, b))


def eval_sum(terms, x, y):
    """Evaluate ``sum(coef * f_label)``; a ``None`` label stands for 1."""
    total = 0.0
    for c, lab in terms:
        total = total + float(c) * (1.0 if lab is None else eval_trig(lab, x, y))
    return total
