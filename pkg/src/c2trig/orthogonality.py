"""Continuous orthogonality over the triangle F and its image in (X, Y).

``F = {0 <= y <= x <= 1}``.  The map ``(x, y) -> (X, Y)`` sends it onto the
region bounded by ``Y = X^2/4`` and the lines ``Y = 2X - 4``, ``Y = -2X - 4``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bipoly import BiPoly, X, Y
from .recurrences import gen_cplus, row_labels
from .trig import (
    CMINUS, CPLUS, SMINUS, SPLUS, Family, Label, decompose_product,
    eval_trig, normalization_g,
)

REGION_EPS = 1e-12
F_VERTICES = ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0))
F_AREA = 0.5


class RegionError(ValueError):
    """A point lies outside (or on the boundary of) the image region."""


@dataclass(frozen=True)
class QuadratureRule:
    x: np.ndarray
    y: np.ndarray
    w: np.ndarray

    @property
    def nodes(self) -> list[tuple[float, float, float]]:
        return list(zip(self.x.tolist(), self.y.tolist(), self.w.tolist()))

    def __len__(self) -> int:
        return len(self.w)


@lru_cache(maxsize=16)
def mapped_gauss_rule(order: int = 64) -> QuadratureRule:
    """Tensor Gauss-Legendre on the unit square pulled onto F by (u, v) -> (u, uv)."""
    if order < 1:
        raise ValueError("order must be positive")
    t, wt = np.polynomial.legendre.leggauss(order)
    t = (t + 1) / 2
    wt = wt / 2
    u, v = np.meshgrid(t, t, indexing="ij")
    wu, wv = np.meshgrid(wt, wt, indexing="ij")
    x = u.ravel()
    y = (u * v).ravel()
    w = (wu * wv * u).ravel()
    for arr in (x, y, w):
        arr.setflags(write=False)
    return QuadratureRule(x, y, w)


def integrate_F(f, rule: QuadratureRule | None = None) -> float:
    """``sum w_i f(x_i, y_i)``, compensated summation in node order."""
    rule = rule or mapped_gauss_rule()
    vals = np.broadcast_to(np.asarray(f(rule.x, rule.y), dtype=float), rule.w.shape)
    return math.fsum((rule.w * vals).tolist())


def normalized_values(label: Label, x, y) -> np.ndarray:
    return float(normalization_g(label.lam, label.mu)) * eval_trig(label, x, y)


def inner_product(family: Family, a: Label, b: Label, rule: QuadratureRule | None = None) -> float:
    """``<g_a f_a, g_b f_b>`` over F."""
    family = Family.parse(family)
    for lab in (a, b):
        if lab.family is not family or not lab.is_dominant:
            raise ValueError(f"{lab} is not a dominant {family.symbol} label")
    return integrate_F(lambda x, y: normalized_values(a, x, y) * normalized_values(b, x, y), rule)


def gram_matrix(family: Family, max_lambda: int, rule: QuadratureRule | None = None):
    """All pairwise inner products up to ``max_lambda`` and the label list."""
    family = Family.parse(family)
    rule = rule or mapped_gauss_rule()
    labels = [Label(family, l, m) for l in range(max_lambda + 1) for m in row_labels(family, l)]
    if not labels:
        raise ValueError(f"no {family.symbol} labels with lambda <= {max_lambda}")
    vals = np.array([normalized_values(lab, rule.x, rule.y) for lab in labels])
    gram = (vals * rule.w) @ vals.T
    return labels, gram


def expected_norm(label: Label) -> float:
    return float(normalization_g(label.lam, label.mu))


# Variables and denominators on the (x, y) side.

def X_of(x, y):
    return 2 * (np.cos(np.pi * np.asarray(x)) + np.cos(np.pi * np.asarray(y)))


def Y_of(x, y):
    return 4 * np.cos(np.pi * np.asarray(x)) * np.cos(np.pi * np.asarray(y))


def U_of(x, y):
    return 2 * eval_trig(Label(CMINUS, 1, 0), x, y)


def V_of(x, y):
    return 2 * eval_trig(Label(SPLUS, 1, 1), x, y)


def W_of(x, y):
    return 4 * eval_trig(Label(SMINUS, 2, 1), x, y)


# Region and weights on the (X, Y) side.

U_SQUARED = X**2 - 4 * Y
V_SQUARED = (Y + 4) ** 2 - 4 * X**2
W_SQUARED = U_SQUARED * V_SQUARED


def in_region(Xv, Yv, eps: float = REGION_EPS):
    """Closed membership test for the image of F.

    ``U^2 >= 0`` and ``V^2 >= 0`` alone also admit points below both lines and
    beyond ``|X| = 4``; the linear factor of ``V^2`` and the bound on ``X`` pick
    out the bounded component.
    """
    Xv = np.asarray(Xv, dtype=float)
    Yv = np.asarray(Yv, dtype=float)
    out = (Xv**2 - 4 * Yv >= -eps) & (Yv + 4 - 2 * np.abs(Xv) >= -eps) & (np.abs(Xv) <= 4 + eps)
    return out if out.shape else bool(out)


def sign_conditions(Xv, Yv, eps: float = REGION_EPS):
    """``U^2 >= 0`` and ``V^2 >= 0`` as polynomials in (X, Y)."""
    Xv = np.asarray(Xv, dtype=float)
    Yv = np.asarray(Yv, dtype=float)
    out = (Xv**2 - 4 * Yv >= -eps) & ((Yv + 4) ** 2 - 4 * Xv**2 >= -eps)
    return out if out.shape else bool(out)


def _factors(Xv, Yv, strict: bool):
    Xv = np.asarray(Xv, dtype=float)
    Yv = np.asarray(Yv, dtype=float)
    if not np.all(in_region(Xv, Yv)):
        raise RegionError("point outside the image of F")
    u2 = Xv**2 - 4 * Yv
    v2 = (Yv + 4) ** 2 - 4 * Xv**2
    if strict and (np.any(u2 <= 0) or np.any(v2 <= 0)):
        raise RegionError("weight is undefined on the boundary")
    return np.maximum(u2, 0.0), np.maximum(v2, 0.0)


def _scalar(a):
    return a if a.shape else float(a)


def jacobian(Xv, Yv):
    """``|D(X,Y)/D(x,y)| = pi^2 sqrt((X^2-4Y)((Y+4)^2-4X^2))``."""
    u2, v2 = _factors(Xv, Yv, strict=False)
    return _scalar(np.pi**2 * np.sqrt(u2 * v2))


def weight(family: Family, Xv, Yv):
    """Orthogonality weight of a family on the open image region."""
    family = Family.parse(family)
    u2, v2 = _factors(Xv, Yv, strict=True)
    return _scalar(_weight_from_factors(family, u2, v2))


def _weight_from_factors(family, u2, v2):
    if family is CPLUS:
        w = 1 / np.sqrt(u2 * v2)
    elif family is CMINUS:
        w = np.sqrt(u2 / v2)
    elif family is SPLUS:
        w = np.sqrt(v2 / u2)
    else:
        w = np.sqrt(u2 * v2)
    return w / np.pi**2


def weighted_inner_product_XY(family: Family, p: BiPoly, q: BiPoly, rule: QuadratureRule | None = None) -> float:
    """``int p q weight dX dY`` over the image region.

    Evaluated through the change of variables, ``dX dY = J dx dy``.
    """
    family = Family.parse(family)
    rule = rule or mapped_gauss_rule()
    Xv, Yv = X_of(rule.x, rule.y), Y_of(rule.x, rule.y)
    u2, v2 = _factors(Xv, Yv, strict=False)
    # nodes nearest the corner (4, 4) can round onto the boundary; the
    # product weight * J has a finite limit there, which the floor recovers
    tiny = np.finfo(float).tiny
    u2, v2 = np.maximum(u2, tiny), np.maximum(v2, tiny)
    wj = _weight_from_factors(family, u2, v2) * np.pi**2 * np.sqrt(u2 * v2)
    vals = p.eval(Xv, Yv) * q.eval(Xv, Yv) * wj
    return math.fsum((rule.w * vals).tolist())


def w_squared_from_products() -> BiPoly:
    """``W^2 = 16 s-(2,1)^2`` expanded through the product rule and re-expressed in X, Y."""
    s = Label(SMINUS, 2, 1)
    out = BiPoly()
    for coef, lab in decompose_product(s, s):
        # c+(L) = P(L) / g(L)
        out = out + gen_cplus(lab.lam, lab.mu).scale(16 * coef / normalization_g(lab.lam, lab.mu))
    return out


def boundary_distance(x, y):
    """Euclidean distance from ``(x, y)`` in F to the boundary of F."""
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    return np.minimum.reduce([y, 1 - x, (x - y) / np.sqrt(2)])


def sample_interior(n: int, rng: np.random.Generator, margin: float = 0.0):
    """``n`` uniform points of F at distance > ``margin`` from its boundary."""
    xs, ys = [], []
    got = 0
    while got < n:
        x = rng.uniform(0, 1, 2 * n)
        y = rng.uniform(0, 1, 2 * n)
        keep = (y < x) & (boundary_distance(x, y) > margin)
        xs.append(x[keep])
        ys.append(y[keep])
        got += int(keep.sum())
    return np.concatenate(xs)[:n], np.concatenate(ys)[:n]
