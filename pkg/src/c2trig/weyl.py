"""Root data, Weyl group and orbit functions of C2.

Weights are integer pairs in the basis of fundamental weights
``(omega_1, omega_2)``; dual points are real pairs in the dual basis
``(check_omega_1, check_omega_2)``.  ``alpha_1`` is the short simple root.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .trig import Family

# <alpha_i, alpha_j>
GRAM = ((Fraction(1), Fraction(-1)), (Fraction(-1), Fraction(2)))
# rows: omega_i and check_omega_i written in the orthogonal basis (e1, e2)
OMEGA_TO_E = ((Fraction(1), Fraction(0)), (Fraction(1), Fraction(1)))
CHECK_OMEGA_TO_E = ((Fraction(2), Fraction(0)), (Fraction(1), Fraction(1)))
E_NORM = Fraction(1, 2)  # <e1, e1> = <e2, e2>


@dataclass(frozen=True)
class SimpleRootData:
    gram: tuple
    omega_to_e: tuple
    check_omega_to_e: tuple

    @property
    def cartan(self) -> tuple:
        """``C[i][j] = 2 <alpha_i, alpha_j> / <alpha_j, alpha_j>``."""
        g = self.gram
        return tuple(tuple(2 * g[i][j] / g[j][j] for j in range(2)) for i in range(2))

    @property
    def pairing(self) -> tuple:
        """``<omega_i, check_omega_j>`` computed in the orthogonal basis."""
        w, cw = self.omega_to_e, self.check_omega_to_e
        return tuple(
            tuple(E_NORM * (w[i][0] * cw[j][0] + w[i][1] * cw[j][1]) for j in range(2))
            for i in range(2)
        )


C2 = SimpleRootData(GRAM, OMEGA_TO_E, CHECK_OMEGA_TO_E)


def scalar_product(v, theta):
    """``<v, theta>`` for a weight ``v`` and a dual point ``theta``.

    Equals ``(v1 + v2) theta1 + (v1/2 + v2) theta2``.
    """
    p = C2.pairing
    v1, v2 = v
    t1, t2 = theta
    return (
        float(p[0][0]) * v1 * t1 + float(p[0][1]) * v1 * t2
        + float(p[1][0]) * v2 * t1 + float(p[1][1]) * v2 * t2
    )


def reflection_matrix(j: int) -> np.ndarray:
    """Integer matrix of the simple reflection ``r_{alpha_j}`` (j = 0 or 1).

    In omega coordinates ``2<alpha_j, v>/<alpha_j, alpha_j> = v_j`` and
    ``alpha_j`` has coordinates given by row ``j`` of the Cartan matrix, so
    ``r_j v = v - v_j alpha_j``.
    """
    cartan = C2.cartan
    m = np.eye(2, dtype=np.int64)
    for k in range(2):
        m[k, j] -= int(cartan[j][k])
    return m


@dataclass(frozen=True)
class WeylElement:
    action: tuple  # 2x2 integer matrix as nested tuples, acting on column vectors
    l1: int
    l2: int
    word: tuple = ()

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.action, dtype=np.int64)

    def __call__(self, v):
        m = self.action
        return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])

    @property
    def det(self) -> int:
        m = self.action
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _key(m: np.ndarray) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in m)


@lru_cache(maxsize=None)
def weyl_group() -> tuple[WeylElement, ...]:
    """All elements of W(C2), found breadth first from the identity.

    The first word reaching an element is a minimal one; ``l1``/``l2``
    count the occurrences of each generator in it.
    """
    gens = (reflection_matrix(0), reflection_matrix(1))
    start = np.eye(2, dtype=np.int64)
    seen = {_key(start): ()}
    order = [_key(start)]
    queue = deque([(start, ())])
    while queue:
        m, word = queue.popleft()
        for j, g in enumerate(gens):
            nm = g @ m
            k = _key(nm)
            if k not in seen:
                seen[k] = word + (j,)
                order.append(k)
                queue.append((nm, word + (j,)))
    return tuple(
        WeylElement(action=k, l1=seen[k].count(0), l2=seen[k].count(1), word=seen[k])
        for k in order
    )


def compose(a: WeylElement, b: WeylElement) -> WeylElement:
    """The element ``a o b`` looked up in the group."""
    m = _key(a.matrix @ b.matrix)
    for w in weyl_group():
        if w.action == m:
            return w
    raise ArithmeticError("group not closed under composition")


def orbit(v) -> set[tuple[int, int]]:
    return {w(v) for w in weyl_group()}


class OrbitKind(enum.Enum):
    C_PLUS = "C+"
    S_MINUS = "S-"
    C_MINUS = "C-"
    S_PLUS = "S+"

    def sign(self, w: WeylElement) -> int:
        if self is OrbitKind.C_PLUS:
            return 1
        if self is OrbitKind.S_MINUS:
            return (-1) ** (w.l1 + w.l2)
        if self is OrbitKind.C_MINUS:
            return (-1) ** w.l1
        return (-1) ** w.l2


# orbit function -> (trig family, scale) so that orbit fn = scale * trig fn
ORBIT_TO_TRIG = {
    OrbitKind.C_PLUS: (Family.CPLUS, 4),
    OrbitKind.S_MINUS: (Family.SMINUS, -4),
    OrbitKind.C_MINUS: (Family.CMINUS, 4),
    OrbitKind.S_PLUS: (Family.SPLUS, -4),
}


class ImaginaryPartError(ArithmeticError):
    """An orbit sum came out with a non-negligible imaginary part."""


def eval_orbit_fn(kind: OrbitKind, v, theta, tol: float = 1e-9):
    """Sign-weighted sum of ``exp(2 pi i <w v, theta>)`` over W(C2)."""
    kind = OrbitKind(kind) if not isinstance(kind, OrbitKind) else kind
    t1 = np.asarray(theta[0], dtype=float)
    t2 = np.asarray(theta[1], dtype=float)
    total = np.zeros(np.broadcast(t1, t2).shape, dtype=complex)
    for w in weyl_group():
        total = total + kind.sign(w) * np.exp(2j * np.pi * scalar_product(w(v), (t1, t2)))
    if np.max(np.abs(total.imag), initial=0.0) > tol:
        raise ImaginaryPartError(f"imaginary residue {np.max(np.abs(total.imag)):.3e}")
    out = total.real
    return out if out.shape else float(out)


def substitute(lam: int, mu: int, x, y):
    """Map a trig label and point to ``(weight, dual point)``."""
    return (lam - mu, mu), ((np.asarray(x) - np.asarray(y)) / 2, np.asarray(y))
