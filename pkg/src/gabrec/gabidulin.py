"""Rank-metric evaluation codes over a tower, with interpolation decoding.

A code of length n and dimension k evaluates twisted polynomials of degree
below k at n evaluation points that are linearly independent over K.  The
generator matrix G has entry theta^i(g_j); the parity-check matrix H is a
right-kernel basis of G, which is all the recovery pipeline needs.

Decoding interpolates a pair (V, N) with deg V <= t and deg N <= k-1+t
such that V(r_i) = N(g_i) at every point, then extracts the message as the
exact left quotient N = V * f.  The whole computation is one kernel of an
n-by-(2t+k+1) linear system over L plus one Euclidean division, hence cubic
in n; errors of rank weight up to t = floor((n-k)/2) are corrected uniquely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_algebra import FieldElement, Tower, make_tower
from .exact_linalg import Matrix, right_kernel, rref, solve
from .rank_metric import ext, rank_weight
from .skew_poly import SkewPoly, left_divide

__all__ = [
    "GabCode",
    "DecodeResult",
    "build_code",
    "encode",
    "wb_decode",
    "syndrome_decode",
    "code_to_descriptor",
    "code_from_descriptor",
]


@dataclass(frozen=True)
class GabCode:
    """Immutable code instance; build with :func:`build_code`."""

    tower: Tower
    n: int
    k: int
    points: tuple[FieldElement, ...]
    generator: Matrix  # k x n over L, entry (i, j) = theta^i(g_j)
    parity_check: Matrix  # (n-k) x n over L, rows span the kernel of G

    @property
    def radius(self) -> int:
        """Decoding radius t = floor((n-k)/2)."""
        return (self.n - self.k) // 2

    @property
    def design_distance(self) -> int:
        return self.n - self.k + 1


@dataclass(frozen=True)
class DecodeResult:
    success: bool
    codeword: tuple[FieldElement, ...] | None = None
    error: tuple[FieldElement, ...] | None = None
    message: SkewPoly | None = None


def build_code(tower: Tower, n: int, k: int, points: Sequence | None = None) -> GabCode:
    """Construct the code; evaluation points default to the first n basis elements."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > tower.m:
        raise ValueError(f"length n={n} exceeds the extension degree m={tower.m}")
    if points is None:
        points = tower.basis[:n]
    else:
        points = [tower.coerce(g) for g in points]
        if len(points) != n:
            raise ValueError(f"expected {n} evaluation points, got {len(points)}")
    if rref(ext(tower, points).matrix)[1] != n:
        raise ValueError("evaluation points are linearly dependent over the base field")
    rows = []
    current = list(points)
    for i in range(k):
        if i:
            current = [g.theta() for g in current]
        rows.append(list(current))
    generator = Matrix(tower, rows, cols=n)
    parity_check = right_kernel(generator)
    return GabCode(tower, n, k, tuple(points), generator, parity_check)


def encode(code: GabCode, message: SkewPoly) -> list[FieldElement]:
    """Evaluate the message polynomial at the code's points."""
    if message.tower != code.tower:
        raise ValueError("message polynomial belongs to a different tower")
    if message.degree >= code.k:
        raise ValueError(f"message degree {message.degree} not below k={code.k}")
    return [message.evaluate(g) for g in code.points]


def _coerce_word(code: GabCode, word: Sequence) -> list[FieldElement]:
    word = [code.tower.coerce(x) for x in word]
    if len(word) != code.n:
        raise ValueError(f"expected a length-{code.n} word, got {len(word)}")
    return word


def wb_decode(code: GabCode, received: Sequence) -> DecodeResult:
    """Bounded-minimum-distance decoding of a received word.

    Failure is reported through the result status, never an exception: it
    signals an error of rank weight above the decoding radius.
    """
    received = _coerce_word(code, received)
    tower, t, k = code.tower, code.radius, code.k
    # columns: V_0..V_t multiply theta-iterates of r, N_0..N_{k-1+t} of g (negated)
    r_iter = list(received)
    g_iter = list(code.points)
    columns: list[list[FieldElement]] = []
    for j in range(t + 1):
        if j:
            r_iter = [x.theta() for x in r_iter]
        columns.append(list(r_iter))
    for j in range(k + t):
        if j:
            g_iter = [x.theta() for x in g_iter]
        columns.append([-x for x in g_iter])
    rows = [[col[i] for col in columns] for i in range(code.n)]
    kernel = right_kernel(Matrix(tower, rows, cols=len(columns)))
    if kernel.rows == 0:
        return DecodeResult(success=False)
    vec = next((row for row in kernel.entries if any(row[: t + 1])), None)
    if vec is None:
        return DecodeResult(success=False)
    locator = SkewPoly(tower, vec[: t + 1])
    numerator = SkewPoly(tower, vec[t + 1 :])
    message, remainder = left_divide(numerator, locator)
    if not remainder.is_zero() or message.degree >= k:
        return DecodeResult(success=False)
    codeword = encode(code, message)
    error = [r - c for r, c in zip(received, codeword)]
    if rank_weight(tower, error, "B") > t:
        return DecodeResult(success=False)
    return DecodeResult(
        success=True, codeword=tuple(codeword), error=tuple(error), message=message
    )


def syndrome_decode(code: GabCode, syndrome: Sequence) -> list[FieldElement] | None:
    """Error vector of rank weight <= t whose parity-check image is the syndrome.

    Any preimage of the syndrome works as decoder input because preimages
    differ by codewords; None means the syndrome is not reachable from an
    error within the decoding radius.
    """
    syndrome = [code.tower.coerce(x) for x in syndrome]
    if len(syndrome) != code.n - code.k:
        raise ValueError(
            f"expected a length-{code.n - code.k} syndrome, got {len(syndrome)}"
        )
    preimage = solve(code.parity_check, syndrome)
    if preimage is None:  # pragma: no cover - H has full row rank
        return None
    result = wb_decode(code, preimage)
    if not result.success:
        return None
    return [x - c for x, c in zip(preimage, result.codeword)]


def code_to_descriptor(code: GabCode) -> dict:
    """JSON-ready descriptor; G and H are deterministic and recomputed on load."""
    tower = code.tower
    descriptor = {
        "towerKind": tower.kind,
        "towerParam": tower.conductor if tower.kind == "cyclotomic" else tower.n,
        "n": code.n,
        "k": code.k,
        "g": [tower.to_text(g) for g in code.points],
    }
    if tower.kind == "kummer":
        descriptor["radicand"] = str(tower.radicand)
    return descriptor


def code_from_descriptor(descriptor: dict) -> GabCode:
    kind = descriptor["towerKind"]
    param = int(descriptor["towerParam"])
    radicand = Fraction(descriptor.get("radicand", 2))
    tower = make_tower(kind, param, radicand) if kind == "kummer" else make_tower(kind, param)
    points = [tower.from_text(text) for text in descriptor["g"]]
    return build_code(tower, int(descriptor["n"]), int(descriptor["k"]), points)
