"""Product identities of the four families, stored as data and checked pointwise.

Expressions are written in a tiny language: ``cp``, ``cm``, ``sp``, ``sm``
applied to two affine index expressions in ``lam, mu, lamp, mup`` (the last
two standing for the primed parameters), combined with ``+ - *``, integer
constants and division by a constant.
"""
from __future__ import annotations

import ast
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .trig import (
    CMINUS, CPLUS, SMINUS, SPLUS, Family, Label, canonicalize_label,
    decompose_product, eval_trig, product_family,
)

PARAMS = ("lam", "mu", "lamp", "mup")
FUNCS = {"cp": CPLUS, "cm": CMINUS, "sp": SPLUS, "sm": SMINUS}


@dataclass(frozen=True)
class Identity:
    id: str
    family: Family  # family of every right-hand term
    lhs: str
    rhs: str
    constraints: dict = field(default_factory=dict)  # dependent param -> expression
    parent: str | None = None
    parent_scale: Fraction = Fraction(1)  # this = parent_scale * parent after substitution
    corrected_rhs: str | None = None
    note: str = ""

    @property
    def is_generic(self) -> bool:
        return self.parent is None


_Q = "cp(lam,mu)*cp(lamp,mup) {0} cm(lam,mu)*cm(lamp,mup) {1} sp(lam,mu)*sp(lamp,mup) {2} sm(lam,mu)*sm(lamp,mup)"
_CM = "2*(cp(lam,mu)*cm(lamp,mup) {0} sp(lam,mu)*sm(lamp,mup))"
_SP = "2*(sp(lam,mu)*cp(lamp,mup) {0} sm(lam,mu)*cm(lamp,mup))"
_SM = "2*(sm(lam,mu)*cp(lamp,mup) {0} sp(lam,mu)*cm(lamp,mup))"

_GENERIC = [
    ("v1", CPLUS, _Q.format("+", "+", "+"), "cp(lam+lamp, mu+mup) + cp(lam-lamp, mu-mup)"),
    ("cplus-2", CPLUS, _Q.format("+", "-", "-"), "cp(lam+lamp, mu-mup) + cp(lam-lamp, mu+mup)"),
    ("cplus-3", CPLUS, _Q.format("-", "+", "-"), "cp(lam+mup, mu+lamp) + cp(lam-mup, mu-lamp)"),
    ("cplus-4", CPLUS, _Q.format("-", "-", "+"), "cp(lam+mup, mu-lamp) + cp(lam-mup, mu+lamp)"),
    ("cminus-1", CMINUS, _CM.format("+"),
     "cm(lam+lamp, mu+mup) + cm(lam-lamp, mu-mup) - cm(lam+mup, mu+lamp) - cm(lam-mup, mu-lamp)"),
    ("cminus-2", CMINUS, _CM.format("-"),
     "cm(lam+lamp, mu-mup) + cm(lam-lamp, mu+mup) - cm(lam+mup, mu-lamp) - cm(lam-mup, mu+lamp)"),
    ("splus-1", SPLUS, _SP.format("+"),
     "sp(lam+lamp, mu+mup) + sp(lam+lamp, mu-mup) + sp(lam-lamp, mu+mup) + sp(lam-lamp, mu-mup)"),
    ("splus-2", SPLUS, _SP.format("-"),
     "sp(lam+mup, mu+lamp) + sp(lam+mup, mu-lamp) + sp(lam-mup, mu+lamp) + sp(lam-mup, mu-lamp)"),
    ("sminus-1", SMINUS, _SM.format("+"),
     "sm(lam+lamp, mu+mup) + sm(lam+lamp, mu-mup) + sm(lam-lamp, mu+mup) + sm(lam-lamp, mu-mup)"),
    ("v2", SMINUS, _SM.format("-"),
     "sm(lam+mup, mu+lamp) + sm(lam+mup, mu-lamp) + sm(lam-mup, mu+lamp) + sm(lam-mup, mu-lamp)"),
]

# constraint sets
LAMP = {"lamp": "lam"}
DIAG = {"lamp": "lam", "mup": "mu"}
MU = {"mu": "lam"}
MU_MUP = {"mu": "lam", "mup": "lamp"}
MU_LAMP = {"mu": "lam", "lamp": "lam"}
ALL = {"mu": "lam", "lamp": "lam", "mup": "lam"}


def _q(s1, s2, s3, a, b):
    return (f"cp({a})*cp({b}) {s1} cm({a})*cm({b}) {s2} sp({a})*sp({b}) {s3} sm({a})*sm({b})")


_CP_LAMP = ("lam,mu", "lam,mup")
_CP_DIAG = ("lam,mu", "lam,mu")

# (id, family, lhs, rhs, constraints, parent, scale, corrected_rhs, note)
_SPECIAL = [
    # c+
    ("A1-cplus-lam", CPLUS, _q("+", "+", "+", *_CP_LAMP),
     "cp(2*lam, mu+mup) + cp(0, mu-mup)", LAMP, "v1"),
    ("A1-cplus-lam-2", CPLUS, _q("+", "-", "-", *_CP_LAMP),
     "cp(2*lam, mu-mup) + cp(0, mu+mup)", LAMP, "cplus-2"),
    ("A1-cplus-lam-3", CPLUS, _q("-", "+", "-", *_CP_LAMP),
     "cp(lam+mup, mu+lam) + cp(lam-mup, mu-lam)", LAMP, "cplus-3"),
    ("A1-cplus-lam-4", CPLUS, _q("-", "-", "+", *_CP_LAMP),
     "cp(lam+mup, mu-lam) + cp(lam-mup, mu+lam)", LAMP, "cplus-4"),
    ("A1-cplus-diag", CPLUS, _q("+", "+", "+", *_CP_DIAG),
     "cp(2*lam, 2*mu) + 2", DIAG, "v1"),
    ("A1-cplus-diag-2", CPLUS, _q("+", "-", "-", *_CP_DIAG),
     "cp(2*lam, 0) + cp(0, 2*mu)", DIAG, "cplus-2"),
    ("A1-cplus-diag-3", CPLUS, _q("-", "+", "-", *_CP_DIAG),
     "cp(lam+mu, lam+mu) + cp(mu-lam, mu-lam)", DIAG, "cplus-3"),
    ("A1-cplus-diag-4", CPLUS, _q("-", "-", "+", *_CP_DIAG),
     "2*cp(lam+mu, lam-mu)", DIAG, "cplus-4"),
    ("A1-cplus-mu", CPLUS, "cp(lam,lam)*cp(lamp,mup) + sp(lam,lam)*sp(lamp,mup)",
     "cp(lam+lamp, lam+mup) + cp(lam-lamp, lam-mup)", MU, "v1"),
    ("A1-cplus-mu-2", CPLUS, "cp(lam,lam)*cp(lamp,mup) - sp(lam,lam)*sp(lamp,mup)",
     "cp(lam+lamp, lam-mup) + cp(lam-lamp, lam+mup)", MU, "cplus-2"),
    ("A1-cplus-mu-mup", CPLUS, "cp(lam,lam)*cp(lamp,lamp) + sp(lam,lam)*sp(lamp,lamp)",
     "cp(lam+lamp, lam+lamp) + cp(lam-lamp, lam-lamp)", MU_MUP, "v1"),
    ("A1-cplus-mu-mup-2", CPLUS, "cp(lam,lam)*cp(lamp,lamp) - sp(lam,lam)*sp(lamp,lamp)",
     "2*cp(lam+lamp, lam-lamp)", MU_MUP, "cplus-2"),
    ("A1-cplus-mu-lamp", CPLUS, "cp(lam,lam)*cp(lam,mup) + sp(lam,lam)*sp(lam,mup)",
     "cp(2*lam, lam+mup) + cp(0, lam-mup)", MU_LAMP, "v1"),
    ("A1-cplus-mu-lamp-2", CPLUS, "cp(lam,lam)*cp(lam,mup) - sp(lam,lam)*sp(lam,mup)",
     "cp(2*lam, lam-mup) + cp(0, lam+mup)", MU_LAMP, "cplus-2"),
    ("A1-cplus-all", CPLUS, "cp(lam,lam)*cp(lam,lam) + sp(lam,lam)*sp(lam,lam)",
     "cp(2*lam, 2*lam) + 2", ALL, "v1"),
    ("A1-cplus-all-2", CPLUS, "cp(lam,lam)*cp(lam,lam) - sp(lam,lam)*sp(lam,lam)",
     "2*cp(2*lam, 0)", ALL, "cplus-2"),
    # c-
    ("A1-cminus-lam", CMINUS, "2*(cp(lam,mu)*cm(lam,mup) + sp(lam,mu)*sm(lam,mup))",
     "cm(2*lam, mu+mup) - cm(lam+mup, mu+lam) - cm(lam-mup, mu-lam)", LAMP, "cminus-1", 1,
     "cm(2*lam, mu+mup) + cm(0, mu-mup) - cm(lam+mup, mu+lam) - cm(lam-mup, mu-lam)",
     "omits cm(0, mu-mup) = -cm(mu-mup, 0), which is not identically zero"),
    ("A1-cminus-lam-2", CMINUS, "2*(cp(lam,mu)*cm(lam,mup) - sp(lam,mu)*sm(lam,mup))",
     "cm(2*lam, mu-mup) - cm(lam+mup, mu-lam) - cm(lam-mup, mu+lam)", LAMP, "cminus-2", 1,
     "cm(2*lam, mu-mup) + cm(0, mu+mup) - cm(lam+mup, mu-lam) - cm(lam-mup, mu+lam)",
     "omits cm(0, mu+mup) = -cm(mu+mup, 0), which is not identically zero"),
    ("A1-cminus-diag", CMINUS, "2*(cp(lam,mu)*cm(lam,mu) + sp(lam,mu)*sm(lam,mu))",
     "cm(2*lam, 2*mu)", DIAG, "cminus-1"),
    ("A1-cminus-diag-2", CMINUS, "2*(cp(lam,mu)*cm(lam,mu) - sp(lam,mu)*sm(lam,mu))",
     "cm(2*lam, 0) + cm(0, 2*mu)", DIAG, "cminus-2"),
    ("A1-cminus-mu", CMINUS, "cp(lam,lam)*cm(lamp,mup) + sp(lam,lam)*sm(lamp,mup)",
     "cm(lam+lamp, lam+mup) + cm(lam-lamp, lam-mup)", MU, "cminus-1", Fraction(1, 2)),
    ("A1-cminus-mu-2", CMINUS, "cp(lam,lam)*cm(lamp,mup) - sp(lam,lam)*sm(lamp,mup)",
     "cm(lam+lamp, lam-mup) + cm(lam-lamp, lam+mup)", MU, "cminus-2", Fraction(1, 2)),
    ("A1-cminus-mu-lamp", CMINUS, "cp(lam,lam)*cm(lam,mup) + sp(lam,lam)*sm(lam,mup)",
     "cm(2*lam, lam+mup)", MU_LAMP, "cminus-1", Fraction(1, 2),
     "cm(2*lam, lam+mup) + cm(0, lam-mup)",
     "omits cm(0, lam-mup) = -cm(lam-mup, 0), which is not identically zero"),
    ("A1-cminus-mu-lamp-2", CMINUS, "cp(lam,lam)*cm(lam,mup) - sp(lam,lam)*sm(lam,mup)",
     "cm(2*lam, lam-mup)", MU_LAMP, "cminus-2", Fraction(1, 2),
     "cm(2*lam, lam-mup) + cm(0, lam+mup)",
     "omits cm(0, lam+mup) = -cm(lam+mup, 0), which is not identically zero"),
    # s+
    ("A1-splus-lam", SPLUS, "2*(sp(lam,mu)*cp(lam,mup) + sm(lam,mu)*cm(lam,mup))",
     "sp(2*lam, mu+mup) + sp(2*lam, mu-mup)", LAMP, "splus-1"),
    ("A1-splus-lam-2", SPLUS, "2*(sp(lam,mu)*cp(lam,mup) - sm(lam,mu)*cm(lam,mup))",
     "sp(lam+mup, mu+lam) + sp(lam+mup, mu-lam) + sp(lam-mup, mu+lam) + sp(lam-mup, mu-lam)",
     LAMP, "splus-2"),
    ("A1-splus-diag", SPLUS, "2*(sp(lam,mu)*cp(lam,mu) + sm(lam,mu)*cm(lam,mu))",
     "sp(2*lam, 2*mu)", DIAG, "splus-1"),
    ("A1-splus-diag-2", SPLUS, "2*(sp(lam,mu)*cp(lam,mu) - sm(lam,mu)*cm(lam,mu))",
     "sp(lam+mu, lam+mu) - sp(lam-mu, lam-mu)", DIAG, "splus-2"),
    ("A1-splus-mu", SPLUS, "2*sp(lam,lam)*cp(lamp,mup)",
     "sp(lam+lamp, lam+mup) + sp(lam+lamp, lam-mup) + sp(lam-lamp, lam+mup) + sp(lam-lamp, lam-mup)",
     MU, "splus-1"),
    ("A1-splus-mu-mup", SPLUS, "2*sp(lam,lam)*cp(lamp,lamp)",
     "sp(lam+lamp, lam+lamp) + 2*sp(lam+lamp, lam-lamp) + sp(lam-lamp, lam-lamp)", MU_MUP, "splus-1"),
    ("A1-splus-mu-lamp", SPLUS, "2*sp(lam,lam)*cp(lam,mup)",
     "sp(2*lam, lam+mup) + sp(2*lam, lam-mup)", MU_LAMP, "splus-1"),
    ("A1-splus-all", SPLUS, "2*sp(lam,lam)*cp(lam,lam)", "sp(2*lam, 2*mu)", ALL, "splus-1"),
    # s-
    ("A1-sminus-lam", SMINUS, "2*(sm(lam,mu)*cp(lam,mup) + sp(lam,mu)*cm(lam,mup))",
     "sm(2*lam, mu+mup) + sm(2*lam, mu-mup)", LAMP, "sminus-1"),
    ("A1-sminus-lam-2", SMINUS, "2*(sm(lam,mu)*cp(lam,mup) - sp(lam,mu)*cm(lam,mup))",
     "sm(lam+mup, mu+lam) + sm(lam+mup, mu-lam) + sm(lam-mup, mu+lam) + sm(lam-mup, mu-lam)",
     LAMP, "v2"),
    ("A1-sminus-diag", SMINUS, "2*(sm(lam,mu)*cp(lam,mu) + sp(lam,mu)*cm(lam,mu))",
     "sm(2*lam, 2*mu)", DIAG, "sminus-1"),
    ("A1-sminus-char", SMINUS, "sm(lam,mu)*cp(lam,mu) - sp(lam,mu)*cm(lam,mu)",
     "sm(lam-mu, lam+mu)", DIAG, "v2", Fraction(1, 2)),
    ("A1-sminus-mu", SMINUS, "2*sp(lam,lam)*cm(lamp,mup)",
     "sm(lam+lamp, lam+mup) + sm(lam+lamp, lam-mup) + sm(lam-lamp, lam+mup) + sm(lam-lamp, lam-mup)",
     MU, "sminus-1"),
    ("A1-sminus-mu-lamp", SMINUS, "2*sp(lam,lam)*cm(lam,mup)",
     "sm(2*lam, lam+mup) + sm(2*lam, lam-mup)", MU_LAMP, "sminus-1"),
]


def _build() -> tuple[Identity, ...]:
    out = [Identity(i, f, l, r) for i, f, l, r in _GENERIC]
    for row in _SPECIAL:
        ident, fam, lhs, rhs, cons, parent, *rest = row
        scale = Fraction(rest[0]) if rest else Fraction(1)
        corrected = rest[1] if len(rest) > 1 else None
        note = rest[2] if len(rest) > 2 else ""
        out.append(Identity(ident, fam, lhs, rhs, dict(cons), parent, scale, corrected, note))
    return tuple(out)


_CATALOG = _build()
_BY_ID = {ident.id: ident for ident in _CATALOG}


def catalog() -> list[Identity]:
    return list(_CATALOG)


def get(identity_id: str) -> Identity:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


# Expression handling --------------------------------------------------------

class ExpressionError(ValueError):
    pass


@lru_cache(maxsize=None)
def _parse(src: str) -> ast.Expression:
    tree = ast.parse(src, mode="eval")
    _check_node(tree.body)
    return tree


def _check_node(node):
    if isinstance(node, ast.BinOp):
        if not isinstance(node.op, (ast.Add, ast.Sub, ast.Mult, ast.Div)):
            raise ExpressionError(f"operator {type(node.op).__name__} not allowed")
        _check_node(node.left)
        _check_node(node.right)
    elif isinstance(node, ast.UnaryOp):
        if not isinstance(node.op, (ast.USub, ast.UAdd)):
            raise ExpressionError("only unary +/- allowed")
        _check_node(node.operand)
    elif isinstance(node, ast.Constant):
        if not isinstance(node.value, int) or isinstance(node.value, bool):
            raise ExpressionError(f"constant {node.value!r} is not an integer")
    elif isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name) or node.func.id not in FUNCS:
            raise ExpressionError("only cp, cm, sp, sm may be called")
        if len(node.args) != 2 or node.keywords:
            raise ExpressionError("family functions take two index arguments")
        for arg in node.args:
            _affine(arg)
    else:
        raise ExpressionError(f"{type(node).__name__} not allowed here")


def _affine(node) -> dict:
    """Coefficients of an affine index expression; ``None`` key is the constant."""
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return {None: node.value}
    if isinstance(node, ast.Name):
        if node.id not in PARAMS:
            raise ExpressionError(f"unknown parameter {node.id!r}")
        return {node.id: 1}
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        s = -1 if isinstance(node.op, ast.USub) else 1
        return {k: s * v for k, v in _affine(node.operand).items()}
    if isinstance(node, ast.BinOp) and isinstance(node.op, (ast.Add, ast.Sub)):
        a, b = _affine(node.left), _affine(node.right)
        s = 1 if isinstance(node.op, ast.Add) else -1
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, 0) + s * v
        return out
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Mult):
        a, b = _affine(node.left), _affine(node.right)
        if set(a) == {None}:
            return {k: a[None] * v for k, v in b.items()}
        if set(b) == {None}:
            return {k: b[None] * v for k, v in a.items()}
        raise ExpressionError("index expression is not affine")
    raise ExpressionError("index expression is not affine")


def _index_value(coeffs: dict, params: dict) -> int:
    return sum(v * (1 if k is None else params[k]) for k, v in coeffs.items())


def _evaluate(node, params: dict, backend):
    if isinstance(node, ast.BinOp):
        a = _evaluate(node.left, params, backend)
        b = _evaluate(node.right, params, backend)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return backend.mul(a, b)
        if not isinstance(b, Fraction):
            raise ExpressionError("division only by a constant")
        return backend.mul(a, 1 / b)
    if isinstance(node, ast.UnaryOp):
        v = _evaluate(node.operand, params, backend)
        return backend.mul(v, Fraction(-1)) if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.Constant):
        return Fraction(node.value)
    lam = _index_value(_affine(node.args[0]), params)
    mu = _index_value(_affine(node.args[1]), params)
    return backend.func(FUNCS[node.func.id], lam, mu)


class _Numeric:
    def __init__(self, x, y):
        self.x, self.y = x, y

    def func(self, family, lam, mu):
        return eval_trig(Label(family, lam, mu), self.x, self.y)

    @staticmethod
    def mul(a, b):
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            return a * b
        a = float(a) if isinstance(a, Fraction) else a
        b = float(b) if isinstance(b, Fraction) else b
        return a * b


class Combo(dict):
    """Exact linear combination ``{Label or None: Fraction}``; ``None`` is 1."""

    @classmethod
    def of(cls, key, coef=Fraction(1)):
        c = cls()
        c._put(key, Fraction(coef))
        return c

    def _put(self, key, coef):
        # c+(0,0) is the constant 2
        if isinstance(key, Label) and key.family is CPLUS and key.lam == key.mu == 0:
            key, coef = None, 2 * coef
        v = self.get(key, Fraction(0)) + coef
        if v:
            self[key] = v
        else:
            self.pop(key, None)

    def __add__(self, other):
        other = _as_combo(other)
        out = Combo(self)
        for k, v in other.items():
            out._put(k, v)
        return out

    __radd__ = __add__

    def __sub__(self, other):
        return self + _as_combo(other).scaled(Fraction(-1))

    def __rsub__(self, other):
        return _as_combo(other) - self

    def scaled(self, c):
        out = Combo()
        for k, v in self.items():
            out._put(k, v * c)
        return out


def _as_combo(v):
    if isinstance(v, Combo):
        return v
    return Combo.of(None, Fraction(v)) if v else Combo()


class _Formal:
    @staticmethod
    def func(family, lam, mu):
        sign, lab = canonicalize_label(family, lam, mu)
        return Combo() if sign == 0 else Combo.of(lab, sign)

    @staticmethod
    def mul(a, b):
        if isinstance(a, Fraction):
            return _as_combo(b).scaled(a) if not isinstance(b, Fraction) else a * b
        if isinstance(b, Fraction):
            return a.scaled(b)
        out = Combo()
        for ka, va in a.items():
            for kb, vb in b.items():
                if ka is None or kb is None:
                    out._put(kb if ka is None else ka, va * vb)
                    continue
                for c, lab in decompose_product(ka, kb):
                    out._put(lab, c * va * vb)
        return out


# Parameters -----------------------------------------------------------------

def apply_constraints(identity: Identity, free: dict) -> dict:
    params = dict(free)
    for dep, expr in identity.constraints.items():
        params[dep] = _index_value(_affine(ast.parse(expr, mode="eval").body), params)
    return params


def check_params(identity: Identity, params) -> dict:
    if len(params) != 4:
        raise ValueError("parameters are a 4-tuple (lam, mu, lamp, mup)")
    p = dict(zip(PARAMS, (int(v) for v in params)))
    want = apply_constraints(identity, p)
    if want != p:
        bad = [k for k in PARAMS if want[k] != p[k]]
        raise ValueError(f"{identity.id}: parameters {tuple(params)} violate constraints on {bad}")
    return p


def random_params(identity: Identity, rng: np.random.Generator, low: int = -6, high: int = 6) -> tuple:
    free = dict(zip(PARAMS, (int(v) for v in rng.integers(low, high + 1, 4))))
    p = apply_constraints(identity, free)
    return tuple(p[k] for k in PARAMS)


# Verification ---------------------------------------------------------------

@dataclass
class IdentityReport:
    id: str
    params: tuple
    residual: float
    passed: bool


def evaluate_side(src: str, params: dict, x, y):
    return _evaluate(_parse(src).body, params, _Numeric(np.asarray(x, float), np.asarray(y, float)))


def verify_identity(identity_id: str, params, points, tol: float = 1e-11,
                    use_correction: bool = False) -> IdentityReport:
    """Evaluate both sides at every point; pass iff the largest gap is below ``tol``."""
    ident = get(identity_id)
    p = check_params(ident, params)
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    x, y = pts[:, 0], pts[:, 1]
    rhs_src = ident.corrected_rhs if use_correction and ident.corrected_rhs else ident.rhs
    lhs = evaluate_side(ident.lhs, p, x, y)
    rhs = evaluate_side(rhs_src, p, x, y)
    res = float(np.max(np.abs(np.asarray(lhs) - np.asarray(rhs)), initial=0.0))
    return IdentityReport(ident.id, tuple(params), res, res < tol)


def formal_side(src: str, params: dict) -> Combo:
    return _as_combo(_evaluate(_parse(src).body, params, _Formal()))


def formal_residual(identity: Identity, params: dict, use_correction: bool = False) -> Combo:
    rhs_src = identity.corrected_rhs if use_correction and identity.corrected_rhs else identity.rhs
    return formal_side(identity.lhs, params) - formal_side(rhs_src, params)


def check_specialization(identity_id: str, span: int = 4, use_correction: bool = False) -> list[tuple]:
    """Compare an entry with its parent relation, term by term, on a parameter grid.

    Both sides are reduced to exact combinations of canonical labels.
    Returns the parameter tuples where ``side == parent_scale * parent side``
    fails for either side (empty list on success).
    """
    ident = get(identity_id)
    if ident.parent is None:
        raise ValueError(f"{identity_id} is a generic relation")
    parent = get(ident.parent)
    rhs_src = ident.corrected_rhs if use_correction and ident.corrected_rhs else ident.rhs
    free = [k for k in PARAMS if k not in ident.constraints]
    bad = []
    for vals in itertools.product(range(-span, span + 1), repeat=len(free)):
        p = apply_constraints(ident, dict(zip(free, vals)))
        for mine, theirs in ((ident.lhs, parent.lhs), (rhs_src, parent.rhs)):
            diff = formal_side(mine, p) - formal_side(theirs, p).scaled(ident.parent_scale)
            if diff:
                bad.append(tuple(p[k] for k in PARAMS))
                break
    return bad


def check_structure(identity: Identity) -> None:
    """Every product's family and every right-hand term follow the product table."""
    for src, side in ((identity.lhs, "lhs"), (identity.rhs, "rhs")):
        for node in ast.walk(_parse(src).body):
            if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Mult):
                calls = [n for n in (node.left, node.right) if isinstance(n, ast.Call)]
                if len(calls) == 2:
                    fam = product_family(FUNCS[calls[0].func.id], FUNCS[calls[1].func.id])
                    if fam is not identity.family:
                        raise ExpressionError(f"{identity.id}: product lands in {fam.symbol}")
            if side == "rhs" and isinstance(node, ast.Call) and FUNCS[node.func.id] is not identity.family:
                raise ExpressionError(f"{identity.id}: rhs term outside {identity.family.symbol}")
