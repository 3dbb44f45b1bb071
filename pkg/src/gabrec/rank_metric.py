"""Coordinate matrices of vectors over L and the four rank weights.

A length-n vector over L corresponds to an m-by-n matrix over K whose
column j holds the coordinates of the j-th entry; ``ext`` and ``ext_inv``
convert between the two representations and are mutually inverse K-linear
bijections.  Four rank weights are computed, all agreeing with the usual
rank metric in the classical finite-field setting:

* kind "B":      rank over K of the coordinate matrix,
* kind "thetaK": rank over K of the theta-iterate matrix,
* kind "thetaL": rank over L of the theta-iterate matrix,
* kind "A":      degree of the minimal subspace polynomial of the entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact_algebra import FieldElement, Tower
from .exact_linalg import Matrix, rref
from .skew_poly import msp

__all__ = [
    "WEIGHT_KINDS",
    "ExtMatrix",
    "ext",
    "ext_inv",
    "theta_matrix",
    "coordinate_expansion",
    "rank_weight",
    "rank_distance",
]

WEIGHT_KINDS = ("A", "thetaL", "thetaK", "B")


@dataclass(frozen=True)
class ExtMatrix:
    """m-by-n coordinate matrix over K plus the basis order it was taken in."""

    matrix: Matrix
    basis_order: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape


def _default_order(tower: Tower) -> tuple[int, ...]:
    return tuple(range(tower.m))


def _check_order(tower: Tower, order: Sequence[int]) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(tower.m)):
        raise ValueError(f"basis order must permute 0..{tower.m - 1}")
    return order


def ext(tower: Tower, vector: Sequence, order: Sequence[int] | None = None) -> ExtMatrix:
    """Coordinate matrix of a vector over L: column j = coords of entry j."""
    order = _default_order(tower) if order is None else _check_order(tower, order)
    elements = [tower.coerce(x) for x in vector]
    rows = [[e.coords[i] for e in elements] for i in order]
    matrix = Matrix(tower.scalar_field, rows, cols=len(elements))
    return ExtMatrix(matrix, order)


def ext_inv(tower: Tower, coord_matrix) -> list[FieldElement]:
    """Vector over L from an m-by-n coordinate matrix (inverse of :func:`ext`)."""
    if isinstance(coord_matrix, ExtMatrix):
        order = _check_order(tower, coord_matrix.basis_order)
        matrix = coord_matrix.matrix
    else:
        order = _default_order(tower)
        matrix = coord_matrix
    if matrix.rows != tower.m:
        raise ValueError(f"coordinate matrix needs {tower.m} rows, has {matrix.rows}")
    out = []
    for j in range(matrix.cols):
        coords = [tower.scalar_field.zero] * tower.m
        for i, basis_index in enumerate(order):
            coords[basis_index] = matrix.entries[i][j]
        out.append(tower.from_coords(coords))
    return out


def theta_matrix(tower: Tower, vector: Sequence, s: int | None = None) -> Matrix:
    """s-by-n matrix over L with row j the j-th theta iterate of the vector."""
    s = tower.m if s is None else s
    row = [tower.coerce(x) for x in vector]
    rows = []
    for j in range(s):
        if j:
            row = [x.theta() for x in row]
        rows.append(list(row))
    return Matrix(tower, rows, cols=len(row))


def coordinate_expansion(tower: Tower, matrix: Matrix) -> Matrix:
    """Expand an L-matrix over K: each row becomes m rows of coordinates."""
    rows = []
    for row in matrix.entries:
        for i in range(tower.m):
            rows.append([entry.coords[i] for entry in row])
    return Matrix(tower.scalar_field, rows, cols=matrix.cols)


def rank_weight(tower: Tower, vector: Sequence, kind: str) -> int:
    """Rank weight of a vector over L; ``kind`` is one of ``WEIGHT_KINDS``."""
    if kind == "B":
        return rref(ext(tower, vector).matrix)[1]
    if kind == "thetaL":
        return rref(theta_matrix(tower, vector))[1]
    if kind == "thetaK":
        return rref(coordinate_expansion(tower, theta_matrix(tower, vector)))[1]
    if kind == "A":
        return msp(tower, [tower.coerce(x) for x in vector]).degree
    raise ValueError(f"unknown weight kind {kind!r}; expected one of {WEIGHT_KINDS}")


def rank_distance(tower: Tower, x: Sequence, y: Sequence, kind: str) -> int:
    """Rank weight of x - y; definiteness is only guaranteed for kinds A and B."""
    x = [tower.coerce(v) for v in x]
    y = [tower.coerce(v) for v in y]
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return rank_weight(tower, [a - b for a, b in zip(x, y)], kind)
