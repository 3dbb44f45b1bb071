"""Exact arithmetic in cyclotomic and Kummer field extensions.

Two tower families are supported, each a cyclic Galois extension L/K of
degree m together with a generating automorphism theta:

* ``CyclotomicTower(p)`` for prime p: K is the rationals, L is the field
  generated by a primitive p-th root of unity zeta, m = p - 1, the power
  basis is (1, zeta, ..., zeta^(p-2)) and theta maps zeta to zeta^g for
  the smallest primitive root g modulo p.

* ``KummerTower(n, radicand)`` for 4 | n: K is the cyclotomic field of
  conductor n (so i lies in K), L = K(alpha) with alpha^n = radicand,
  m = n, the power basis is (1, alpha, ..., alpha^(n-1)) and theta maps
  alpha to zeta_n * alpha.

Scalars of K are :class:`fractions.Fraction` for the cyclotomic tower and
:class:`CyclotomicElement` for the Kummer tower.  All arithmetic is exact;
no floating point is used anywhere.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "QQ",
    "RationalField",
    "CyclotomicField",
    "CyclotomicElement",
    "Tower",
    "CyclotomicTower",
    "KummerTower",
    "FieldElement",
    "make_tower",
    "tower_from_spec",
    "apply_theta",
    "is_prime",
    "euler_phi",
    "smallest_primitive_root",
    "cyclotomic_polynomial",
    "scalar_to_text",
    "scalar_from_text",
]

Rational = Union[int, Fraction]


# ---------------------------------------------------------------------------
# elementary number theory

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def euler_phi(n: int) -> int:
    phi = n
    for p in prime_factors(n):
        phi -= phi // p
    return phi


def smallest_primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group modulo an odd prime p."""
    if not is_prime(p) or p < 3:
        raise ValueError(f"{p} is not an odd prime")
    cofactors = [(p - 1) // q for q in prime_factors(p - 1)]
    g = 2
    while any(pow(g, c, p) == 1 for c in cofactors):
        g += 1
    return g


def _int_poly_div_exact(num: list[int], den: Sequence[int]) -> list[int]:
    # exact division of integer polynomials with monic divisor, ascending coeffs
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for shift in range(len(out) - 1, -1, -1):
        c = num[shift + len(den) - 1]
        out[shift] = c
        if c:
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division not exact")
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Minimal polynomial of a primitive n-th root of unity (ascending, monic)."""
    if n < 1:
        raise ValueError("conductor must be positive")
    if n == 1:
        return (-1, 1)
    coeffs = [0] * (n + 1)
    coeffs[0], coeffs[n] = -1, 1  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            coeffs = _int_poly_div_exact(coeffs, cyclotomic_polynomial(d))
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# polynomial helpers over the rationals (ascending coefficient lists)

def _poly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = 1 / b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1] * inv_lead
        q[shift] = c
        if c:
            for i, d in enumerate(b):
                a[shift + i] -= c * d
    return q, _poly_trim(a)


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _poly_trim(out)


def _poly_xgcd(a: Sequence[Fraction], b: Sequence[Fraction]):
    # returns (g, s, t) with s*a + t*b = g, all ascending coefficient lists
    r0, r1 = _poly_trim(list(a)), _poly_trim(list(b))
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1))
    return r0, s0, t0


# ---------------------------------------------------------------------------
# text format shared by all scalar kinds
#
# Rationals print as "p/q" or "p"; coordinate vectors print as "(c0,c1,...)"
# where each c_i is again a scalar in this format (tuples nest for elements
# whose coordinates are themselves extension elements).

def _split_tuple(text: str) -> list[str]:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"expected parenthesized tuple, got {text!r}")
    parts, depth, start = [], 0, 1
    for i, ch in enumerate(text[1:-1], start=1):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {text!r}")
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    parts.append(text[start:-1])
    return [p.strip() for p in parts]


def scalar_to_text(value) -> str:
    """Render a Fraction, CyclotomicElement or FieldElement in the text format."""
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, (CyclotomicElement, FieldElement)):
        return "(" + ",".join(scalar_to_text(c) for c in value.coords) + ")"
    raise TypeError(f"cannot format {type(value).__name__}")


def scalar_from_text(field, text: str):
    """Parse an element of ``field`` (QQ, CyclotomicField or Tower) from text."""
    return field.from_text(text)


# ---------------------------------------------------------------------------
# the rational base field

class RationalField:
    """Field handle for exact rationals, usable wherever a field is expected."""

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to a rational")

    def to_text(self, value) -> str:
        return scalar_to_text(self.coerce(value))

    def from_text(self, text: str) -> Fraction:
        return Fraction(text.strip())

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("RationalField")


QQ = RationalField()


# ---------------------------------------------------------------------------
# cyclotomic fields Q(zeta_n)

class CyclotomicField:
    """The field generated over the rationals by a primitive n-th root of unity.

    Elements are stored as coefficient vectors of length phi(n) with respect
    to the power basis (1, zeta, ..., zeta^(phi(n)-1)); products are reduced
    modulo the n-th cyclotomic polynomial.
    """

    def __init__(self, conductor: int):
        if conductor < 3:
            raise ValueError("conductor must be at least 3")
        self.conductor = conductor
        self.degree = euler_phi(conductor)
        self.modulus = tuple(Fraction(c) for c in cyclotomic_polynomial(conductor))

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicField) and other.conductor == self.conductor

    def __hash__(self) -> int:
        return hash(("CyclotomicField", self.conductor))

    def __repr__(self) -> str:
        return f"CyclotomicField({self.conductor})"

    @property
    def zero(self) -> CyclotomicElement:
        return self.element([])

    @property
    def one(self) -> CyclotomicElement:
        return self.element([1])

    def element(self, coeffs: Iterable[Rational]) -> CyclotomicElement:
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            raise ValueError(f"at most {self.degree} coordinates expected")
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return CyclotomicElement(self, tuple(coeffs))

    def zeta(self, power: int = 1) -> CyclotomicElement:
        """zeta^power, reduced to the power basis."""
        e = power % self.conductor
        raw = [Fraction(0)] * e + [Fraction(1)]
        return CyclotomicElement(self, self._reduce(raw))

    def coerce(self, value) -> CyclotomicElement:
        if isinstance(value, CyclotomicElement):
            if value.field != self:
                raise ValueError("element from a different cyclotomic field")
            return value
        if isinstance(value, (int, Fraction)):
            return self.element([value])
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def _reduce(self, coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(coeffs) > self.degree:
            _, coeffs = _poly_divmod(coeffs, self.modulus)
        out = list(coeffs) + [Fraction(0)] * (self.degree - len(coeffs))
        return tuple(out)

    def to_text(self, value) -> str:
        return scalar_to_text(self.coerce(value))

    def from_text(self, text: str) -> CyclotomicElement:
        return self.element([Fraction(part) for part in _split_tuple(text)])


class CyclotomicElement:
    """Element of a :class:`CyclotomicField` in reduced power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field: CyclotomicField, coords: tuple[Fraction, ...]):
        self.field = field
        self.coords = coords

    def _match(self, other) -> "CyclotomicElement":
        if isinstance(other, CyclotomicElement):
            if other.field != self.field:
                raise ValueError("cyclotomic field mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element([other])
        return NotImplemented

    def __add__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicElement(
            self.field, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CyclotomicElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        prod = _poly_mul(self.coords, other.coords)
        return CyclotomicElement(self.field, self.field._reduce(_poly_trim(prod)))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = _poly_xgcd(_poly_trim(list(self.coords)), self.field.modulus)
        # g is a nonzero constant since the modulus is irreducible
        inv = [c / g[0] for c in s]
        return CyclotomicElement(self.field, self.field._reduce(_poly_trim(inv)))

    def __truediv__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                out = out * base
            base = base * base
            exponent >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.element([other])
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __bool__(self) -> bool:
        return any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def __repr__(self) -> str:
        return scalar_to_text(self)


# ---------------------------------------------------------------------------
# towers L/K with generating automorphism theta

class Tower:
    """Shared behaviour of the two tower kinds; use :func:`make_tower`."""

    kind: str
    m: int

    # subclasses provide: scalar_field, _mul_coords, _theta_coords,
    # generator(), plus their identifying attributes

    @property
    def zero(self) -> FieldElement:
        return self.from_coords([self.scalar_field.zero] * self.m)

    @property
    def one(self) -> FieldElement:
        coords = [self.scalar_field.zero] * self.m
        coords[0] = self.scalar_field.one
        return self.from_coords(coords)

    @property
    def basis(self) -> list[FieldElement]:
        out = []
        for i in range(self.m):
            coords = [self.scalar_field.zero] * self.m
            coords[i] = self.scalar_field.one
            out.append(self.from_coords(coords))
        return out

    def scalar(self, value):
        """Coerce ``value`` into the base field K."""
        return self.scalar_field.coerce(value)

    def from_coords(self, coords: Iterable) -> FieldElement:
        coords = tuple(self.scalar_field.coerce(c) for c in coords)
        if len(coords) != self.m:
            raise ValueError(f"expected {self.m} coordinates, got {len(coords)}")
        return FieldElement(self, coords)

    def embed_scalar(self, value) -> FieldElement:
        coords = [self.scalar_field.zero] * self.m
        coords[0] = self.scalar(value)
        return FieldElement(self, tuple(coords))

    def coerce(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.tower != self:
                raise ValueError("element from a different tower")
            return value
        return self.embed_scalar(value)

    def to_text(self, value) -> str:
        return scalar_to_text(self.coerce(value))

    def from_text(self, text: str) -> FieldElement:
        parts = _split_tuple(text)
        return self.from_coords([self.scalar_field.from_text(p) for p in parts])

    def _check_theta_order(self) -> None:
        # theta must have exact multiplicative order m, witnessed on a generator
        gen = self.generator()
        for j in range(1, self.m):
            if gen.theta(j) == gen:
                raise AssertionError(f"theta has order dividing {j}, expected {self.m}")
        if gen.theta(self.m) != gen:
            raise AssertionError("theta^m is not the identity")


class CyclotomicTower(Tower):
    """L = Q(zeta_p) over K = Q for prime p, theta: zeta -> zeta^g."""

    kind = "cyclotomic"

    def __init__(self, conductor: int):
        if not is_prime(conductor):
            raise ValueError(f"conductor {conductor} is not prime")
        if conductor < 3:
            raise ValueError("conductor must be at least 3")
        self.conductor = conductor
        self.m = conductor - 1
        self.scalar_field = QQ
        self.primitive_root = smallest_primitive_root(conductor)
        self._field = CyclotomicField(conductor)
        # reduced coordinates of zeta^e for e = 0..p-1
        self._zeta_pow = [self._field.zeta(e).coords for e in range(conductor)]
        self._check_theta_order()

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicTower) and other.conductor == self.conductor

    def __hash__(self) -> int:
        return hash(("CyclotomicTower", self.conductor))

    def __repr__(self) -> str:
        return f"CyclotomicTower({self.conductor})"

    def generator(self) -> FieldElement:
        return self.basis[1]  # zeta

    def _mul_coords(self, a: tuple, b: tuple) -> tuple:
        prod = _poly_mul(a, b)
        return self._field._reduce(_poly_trim(prod))

    def _theta_coords(self, coords: tuple, j: int) -> tuple:
        gj = pow(self.primitive_root, j % self.m, self.conductor)
        out = [Fraction(0)] * self.m
        for e, c in enumerate(coords):
            if c:
                image = self._zeta_pow[(gj * e) % self.conductor]
                for i, v in enumerate(image):
                    out[i] += c * v
        return tuple(out)


class KummerTower(Tower):
    """L = K(alpha) with alpha^n = radicand over K = Q(zeta_n), 4 | n."""

    kind = "kummer"

    def __init__(self, n: int, radicand: Rational = 2):
        if n <= 2:
            raise ValueError("n must exceed 2")
        if n % 4 != 0:
            raise ValueError("n must be divisible by 4 so that i lies in K")
        radicand = Fraction(radicand)
        self._check_radicand(n, radicand)
        self.n = n
        self.m = n
        self.radicand = radicand
        self.scalar_field = CyclotomicField(n)
        # zeta_n^e as K-elements, for the theta action on coordinates
        self._zeta_pows = [self.scalar_field.zeta(e) for e in range(n)]
        self._check_theta_order()

    @staticmethod
    def _check_radicand(n: int, c: Fraction) -> None:
        # Necessary conditions for x^n - c to stay irreducible over Q(zeta_n),
        # checkable in rational arithmetic: c must not be a d-th power for any
        # prime d | n (for d = 2 the test is on |c| since i is in K), and must
        # not equal -4*w^4.  Irreducibility beyond these checks is assumed.
        if c == 0 or c == 1 or c == -1:
            raise ValueError(f"radicand {c} has an n-th root in the base field")
        for d in prime_factors(n):
            probe = abs(c) if d == 2 else c
            if _is_rational_power(probe, d):
                raise ValueError(f"radicand {c} is a {d}-th power, extension collapses")
        if _is_rational_power(-c / 4, 4):
            raise ValueError(f"radicand {c} is -4 times a fourth power, extension collapses")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KummerTower)
            and other.n == self.n
            and other.radicand == self.radicand
        )

    def __hash__(self) -> int:
        return hash(("KummerTower", self.n, self.radicand))

    def __repr__(self) -> str:
        return f"KummerTower({self.n}, radicand={self.radicand})"

    def generator(self) -> FieldElement:
        return self.basis[1]  # alpha

    def imaginary_unit(self) -> CyclotomicElement:
        """i as an element of K (K contains a primitive 4th root of unity)."""
        return self.scalar_field.zeta(self.n // 4)

    def _mul_coords(self, a: tuple, b: tuple) -> tuple:
        n = self.n
        out = [self.scalar_field.zero] * n
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                term = x * y
                if i + j >= n:
                    out[i + j - n] = out[i + j - n] + term * self.radicand
                else:
                    out[i + j] = out[i + j] + term
        return tuple(out)

    def _theta_coords(self, coords: tuple, j: int) -> tuple:
        j %= self.m
        return tuple(
            c * self._zeta_pows[(i * j) % self.n] for i, c in enumerate(coords)
        )


def _is_rational_power(c: Fraction, d: int) -> bool:
    if c == 0:
        return True
    if c < 0:
        return d % 2 == 1 and _is_rational_power(-c, d)
    return _is_int_power(c.numerator, d) and _is_int_power(c.denominator, d)


def _is_int_power(v: int, d: int) -> bool:
    if v < 1:
        return False
    lo, hi = 0, 1
    while hi**d < v:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**d < v:
            lo = mid + 1
        else:
            hi = mid
    return lo**d == v


class FieldElement:
    """Element of L held as exact coordinates with respect to the power basis."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower: Tower, coords: tuple):
        self.tower = tower
        self.coords = coords

    def _match(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.tower != self.tower:
                raise ValueError("tower mismatch")
            return other
        try:
            return self.tower.embed_scalar(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(
            self.tower, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(
            self.tower, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FieldElement(self.tower, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            if other.tower != self.tower:
                raise ValueError("tower mismatch")
            return FieldElement(
                self.tower, self.tower._mul_coords(self.coords, other.coords)
            )
        try:
            scalar = self.tower.scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return FieldElement(self.tower, tuple(scalar * c for c in self.coords))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse, via the m-by-m multiplication system over K."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        from .exact_linalg import Matrix, solve

        tower = self.tower
        columns = [(self * b).coords for b in tower.basis]
        mat = Matrix(
            tower.scalar_field,
            [[columns[j][i] for j in range(tower.m)] for i in range(tower.m)],
        )
        solution = solve(mat, list(tower.one.coords))
        if solution is None:  # pragma: no cover - cannot happen in a field
            raise ArithmeticError("multiplication matrix is singular")
        return FieldElement(tower, tuple(solution))

    def __truediv__(self, other):
        other = self._match(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = self.tower.one
        base = self
        while exponent:
            if exponent & 1:
                out = out * base
            base = base * base
            exponent >>= 1
        return out

    def theta(self, j: int = 1) -> "FieldElement":
        """Image under the j-th power of the generating automorphism."""
        return FieldElement(self.tower, self.tower._theta_coords(self.coords, j))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            try:
                other = self.tower.embed_scalar(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.tower == other.tower and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.tower, self.coords))

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.coords)

    def __repr__(self) -> str:
        return scalar_to_text(self)


def apply_theta(a: FieldElement, j: int = 1) -> FieldElement:
    """theta^j applied to a; j is reduced modulo the extension degree."""
    return a.theta(j)


def make_tower(kind: str, param: int, radicand: Rational = 2) -> Tower:
    """Build a tower: ``make_tower("cyclotomic", p)`` or ``make_tower("kummer", n)``."""
    if kind == "cyclotomic":
        return CyclotomicTower(param)
    if kind == "kummer":
        return KummerTower(param, radicand)
    raise ValueError(f"unknown tower kind {kind!r}")


def tower_from_spec(spec: str) -> Tower:
    """Parse a tower description of the form ``cyclotomic:5`` or ``kummer:4``."""
    kind, sep, param = spec.partition(":")
    if not sep:
        raise ValueError(f"tower spec {spec!r} must look like 'cyclotomic:5' or 'kummer:4'")
    try:
        value = int(param)
    except ValueError:
        raise ValueError(f"tower parameter {param!r} is not an integer") from None
    return make_tower(kind.strip(), value)
