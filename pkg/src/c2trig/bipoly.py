"""Exact sparse polynomials in two variables with rational coefficients.

The two variables are called ``X`` and ``Y`` throughout the package.  A
:class:`BiPoly` is an immutable mapping ``(a, b) -> Fraction`` meaning
``sum(c * X**a * Y**b)``; zero coefficients are never stored.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

import numpy as np

Exponent = tuple[int, int]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


def canonical_key(exp: Exponent) -> tuple[int, int]:
    """Sort key for graded lexicographic order, X before Y."""
    a, b = exp
    return (a + b, -a)


class BiPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | Iterable[tuple[Exponent, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for (a, b), c in items:
            a, b = int(a), int(b)
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent {(a, b)}")
            acc[(a, b)] = acc.get((a, b), Fraction(0)) + _as_fraction(c)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    # construction helpers

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "BiPoly":
        return cls({(a, b): c})

    @classmethod
    def _raw(cls, terms: dict[Exponent, Fraction]) -> "BiPoly":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # mapping-like access

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def coeff(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def items(self):
        """Terms in canonical (graded lexicographic) order."""
        return sorted(self._terms.items(), key=lambda kv: canonical_key(kv[0]))

    def __iter__(self):
        return iter(k for k, _ in self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((a + b for a, b in self._terms), default=-1)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    # arithmetic

    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        return BiPoly.const(other)

    def __add__(self, other) -> "BiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return self._coerce(other) - self

    def scale(self, c) -> "BiPoly":
        c = _as_fraction(c)
        if c == 0:
            return BiPoly()
        return BiPoly._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly._raw({k: v for k, v in out.items() if v})

    def __rmul__(self, other) -> "BiPoly":
        return self.scale(other)

    def __truediv__(self, other) -> "BiPoly":
        # only division by a scalar
        return self.scale(1 / _as_fraction(other))

    def __pow__(self, n: int) -> "BiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = BiPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def diff(self, dx: int = 0, dy: int = 0) -> "BiPoly":
        """Iterated partial derivative d^(dx+dy) / dX^dx dY^dy."""
        if dx < 0 or dy < 0:
            raise ValueError("derivative orders must be non-negative")
        out = {}
        for (a, b), c in self._terms.items():
            if a < dx or b < dy:
                continue
            f = 1
            for i in range(dx):
                f *= a - i
            for j in range(dy):
                f *= b - j
            out[(a - dx, b - dy)] = c * f
        return BiPoly._raw(out)

    def substitute(self, xsub: "BiPoly", ysub: "BiPoly") -> "BiPoly":
        """Compose: replace X by ``xsub`` and Y by ``ysub``."""
        xpow = {0: BiPoly.const(1)}
        ypow = {0: BiPoly.const(1)}
        result = BiPoly()
        for (a, b), c in self._terms.items():
            if a not in xpow:
                xpow[a] = xsub ** a
            if b not in ypow:
                ypow[b] = ysub ** b
            result = result + (xpow[a] * ypow[b]).scale(c)
        return result

    # evaluation

    def __call__(self, X, Y):
        return self.eval(X, Y)

    def eval(self, X, Y):
        """Floating point evaluation; accepts scalars or numpy arrays."""
        X = np.asarray(X, dtype=float)
        Y = np.asarray(Y, dtype=float)
        out = np.zeros(np.broadcast(X, Y).shape)
        for (a, b), c in self._terms.items():
            out = out + float(c) * X**a * Y**b
        return out if out.shape else float(out)

    def eval_exact(self, X, Y) -> Fraction:
        X, Y = _as_fraction(X), _as_fraction(Y)
        return sum((c * X**a * Y**b for (a, b), c in self._terms.items()), Fraction(0))

    # comparison / display

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        try:
            return self._terms == BiPoly.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in reversed(self.items()):
            mono = "*".join(
                s for s in (
                    "" if a == 0 else ("X" if a == 1 else f"X^{a}"),
                    "" if b == 0 else ("Y" if b == 1 else f"Y^{b}"),
                ) if s
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    # serialization

    def to_terms_json(self) -> list[dict]:
        return [
            {"x": a, "y": b, "c": str(c)}
            for (a, b), c in self.items()
        ]

    @classmethod
    def from_terms_json(cls, terms: list[dict]) -> "BiPoly":
        return cls({(t["x"], t["y"]): Fraction(t["c"]) for t in terms})


X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)
ONE = BiPoly.const(1)
ZERO = BiPoly()


def eval_poly(p: BiPoly, X, Y):
    return p.eval(X, Y)


def eval_poly_exact(p: BiPoly, X, Y) -> Fraction:
    return p.eval_exact(X, Y)
