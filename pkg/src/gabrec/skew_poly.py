"""Twisted polynomials over a tower, with the rule x * a = theta(a) * x.

A :class:`SkewPoly` acts on the extension field as the operator
``g -> sum_i a_i * theta^i(g)``; multiplication of polynomials matches
composition of these operators.  Left Euclidean division and minimal
subspace polynomials are provided; right division is not needed anywhere
and intentionally absent.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .exact_algebra import FieldElement, Tower, _split_tuple

__all__ = ["SkewPoly", "left_divide", "msp", "format_poly", "parse_poly"]


class SkewPoly:
    """Polynomial sum(a_i x^i) with coefficients in L, stored lowest degree first."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: Tower, coeffs: Iterable = ()):
        trimmed = [tower.coerce(c) for c in coeffs]
        while trimmed and not trimmed[-1]:
            trimmed.pop()
        self.tower = tower
        self.coeffs = tuple(trimmed)

    @classmethod
    def constant(cls, tower: Tower, value) -> "SkewPoly":
        return cls(tower, [value])

    @classmethod
    def monomial(cls, tower: Tower, coeff, degree: int) -> "SkewPoly":
        return cls(tower, [tower.zero] * degree + [coeff])

    @classmethod
    def x(cls, tower: Tower) -> "SkewPoly":
        return cls.monomial(tower, tower.one, 1)

    @property
    def degree(self) -> int:
        """Degree, with -1 standing in for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.tower.one

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.tower.zero

    def _match(self, other) -> "SkewPoly":
        if isinstance(other, SkewPoly):
            if other.tower != self.tower:
                raise ValueError("tower mismatch")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.tower, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.tower, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return SkewPoly(self.tower, [-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, SkewPoly):
            # right multiplication by a scalar: f * a = sum f_i theta^i(a) x^i
            try:
                a = self.tower.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
            return SkewPoly(
                self.tower, [c * a.theta(i) for i, c in enumerate(self.coeffs)]
            )
        other = self._match(other)
        if self.is_zero() or other.is_zero():
            return SkewPoly(self.tower)
        out = [self.tower.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                out[i + j] = out[i + j] + a * b.theta(i)
        return SkewPoly(self.tower, out)

    def __rmul__(self, other):
        # scalar on the left: a * f has coefficients a * f_i
        try:
            a = self.tower.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return SkewPoly(self.tower, [a * c for c in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.tower == other.tower and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.tower, self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, g) -> FieldElement:
        return self.evaluate(g)

    def evaluate(self, g) -> FieldElement:
        """Operator evaluation sum(a_i * theta^i(g)); K-linear in g."""
        g = self.tower.coerce(g)
        acc = self.tower.zero
        power = g
        for i, c in enumerate(self.coeffs):
            if i:
                power = power.theta()
            if c:
                acc = acc + c * power
        return acc

    def monic(self) -> "SkewPoly":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic normalization")
        return self.coeffs[-1].inverse() * self

    def __repr__(self) -> str:
        return f"SkewPoly({format_poly(self)})"


def left_divide(n: SkewPoly, v: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Quotient and remainder with n = v*q + r and deg r < deg v.

    Eliminating the top coefficient divides by theta^(deg v) of the would-be
    quotient coefficient, which is why the twist shows up below.
    """
    if v.is_zero():
        raise ZeroDivisionError("left division by the zero polynomial")
    if n.tower != v.tower:
        raise ValueError("tower mismatch")
    tower = n.tower
    dv = v.degree
    lead_inv = v.coeffs[-1].inverse()
    q = SkewPoly(tower)
    r = n
    while not r.is_zero() and r.degree >= dv:
        shift = r.degree - dv
        c = (lead_inv * r.coeffs[-1]).theta(-dv)
        term = SkewPoly.monomial(tower, c, shift)
        q = q + term
        r = r - v * term
    return q, r


def msp(tower: Tower, elements: Sequence) -> SkewPoly:
    """Monic annihilator of least degree of the K-span of the given elements.

    Built iteratively: each element not already annihilated contributes the
    left factor (x - theta(w)/w) with w the current evaluation, so the final
    degree equals the K-dimension of the span.
    """
    poly = SkewPoly.constant(tower, tower.one)
    for v in elements:
        w = poly.evaluate(v)
        if not w:
            continue
        factor = SkewPoly(tower, [-(w.theta() / w), tower.one])
        poly = factor * poly
    return poly


def format_poly(p: SkewPoly) -> str:
    """Coefficient list lowest degree first, e.g. ``[(0,1,0,0), (1,0,0,0)]``."""
    return "[" + ", ".join(p.tower.to_text(c) for c in p.coeffs) + "]"


def parse_poly(tower: Tower, text: str) -> SkewPoly:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"expected bracketed coefficient list, got {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return SkewPoly(tower)
    parts = _split_tuple("(" + inner + ")")
    return SkewPoly(tower, [tower.from_text(p) for p in parts])
