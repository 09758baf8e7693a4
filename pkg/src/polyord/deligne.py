"""The family of polytopes spanned by -e0 and e0 + d*e_i (i = 1..n),
together with the origin: closed-form lattice-point counts, Hodge
polygons, the grid cell decomposition of the big face, and ordinarity
predictions by residue class of p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Optional

from .decomposition import Decomposition, PointConfiguration
from .diagonal import DiagonalVerdict, ExponentMatrix, is_ordinary_diagonal
from .errors import InputError, InternalError
from .geometry import hull_vertex_indices, iter_box
from .hull import PlanarPolygon
from .linalg import IntVector, Matrix, hyperplane_through, intvec
from .polytope import (
    AffineFunctional,
    ConeRegion,
    LatticePolytope,
    hodge_polygon as polytope_hodge_polygon,
)

ORDINARY = "ordinary"
NON_ORDINARY = "non-ordinary"
CONJECTURAL = "conjectural"


@dataclass(frozen=True)
class DelignePolytope:
    d: int
    n: int
    full: LatticePolytope  # conv(origin, -e0, e0, e0 + d e_i)
    lower: LatticePolytope  # conv(origin, -e0, e0 + d e_i): the hard face
    upper: LatticePolytope  # conv(origin, e0, e0 + d e_i): the tame face
    hyperplane: AffineFunctional  # <V_h, x> = 1 on the face of ``lower``

    @property
    def ambient_dim(self) -> int:
        return self.n + 1


def build(d: int, n: int) -> DelignePolytope:
    """Construct the polytopes for parameters (d, n), with the supporting
    hyperplane of the hard face verified against its vertex set."""
    if d < 1 or n < 1:
        raise InputError("d and n must be positive")
    dim = n + 1
    minus_e0 = intvec([-1] + [0] * n)
    e0 = intvec([1] + [0] * n)
    spokes = [
        intvec([1] + [d if j == i else 0 for j in range(n)]) for i in range(n)
    ]
    origin = intvec([0] * dim)
    full = LatticePolytope([origin, minus_e0, e0] + spokes)
    lower = LatticePolytope([origin, minus_e0] + spokes)
    upper = LatticePolytope([origin, e0] + spokes)
    coeffs = hyperplane_through([minus_e0] + spokes)
    expected = (Fraction(-1),) + (Fraction(2, d),) * n
    if tuple(coeffs) != expected:
        raise InternalError("hard-face hyperplane differs from (-1, 2/d, ..., 2/d)")
    return DelignePolytope(
        d=d,
        n=n,
        full=full,
        lower=lower,
        upper=upper,
        hyperplane=AffineFunctional(tuple(coeffs), Fraction(1)),
    )


def weight_denominator(d: int) -> int:
    """d for odd d, d/2 for even d; checked against the generic engine."""
    if d < 1:
        raise InputError("d must be positive")
    return d if d % 2 else d // 2


def closed_form_weight_count(d: int, n: int, k: int) -> int:
    """Number of cone lattice points of weight k/D by the stars-and-bars
    formula: sum over u0 of C((d/2)(k/D + u0) + n - 1, n - 1), where a
    binomial with a non-integral top argument contributes 0."""
    if k < 0:
        raise InputError("k must be nonnegative")
    dd = weight_denominator(d)
    total = 0
    span = Fraction(k, dd)
    top = span.numerator // span.denominator
    for u0 in range(-top, top + 1):
        s = Fraction(d, 2) * (span + u0)
        if s.denominator != 1:
            continue
        s = int(s)
        if s < 0:
            continue
        total += comb(s + n - 1, n - 1)
    return total


def hodge_polygon(d: int, n: int, k_max: Optional[int] = None) -> PlanarPolygon:
    """Hodge polygon of the hard polytope from the closed-form counts.

    ``k_max`` must cover the whole support (n+1) * D of the inclusion-
    exclusion numbers; the defaults do.
    """
    dim = n + 1
    dd = weight_denominator(d)
    top = dim * dd
    if k_max is None:
        k_max = top
    if k_max < top:
        raise InputError(f"k_max must be at least (n+1)*D = {top}")
    w = [closed_form_weight_count(d, n, k) for k in range(k_max + 1)]

    def wval(k):
        return w[k] if 0 <= k <= k_max else 0

    vertices = [(Fraction(0), Fraction(0))]
    x = Fraction(0)
    y = Fraction(0)
    for k in range(k_max + 1):
        h = sum((-1) ** i * comb(dim, i) * wval(k - i * dd) for i in range(dim + 1))
        if h < 0:
            raise InternalError(f"negative Hodge number at level {k}")
        if k > top and h != 0:
            raise InternalError("Hodge numbers must vanish beyond (n+1)*D")
        x += h
        y += Fraction(k * h, dd)
        vertices.append((x, y))
    return PlanarPolygon(vertices)


def _simplex_grid_cells(d: int, n: int) -> list[list[IntVector]]:
    """Cells of the dilated simplex {u >= 0, sum u = d} sliced by the
    integer grid, each as its list of lattice points (in Z^n)."""
    if n == 1:
        return [[(d,)]]
    cells = []
    lo = [0] * n
    hi = [d - 1] * n
    for c in iter_box(lo, hi):
        total = sum(c)
        if not (d - n < total <= d - 1):
            continue
        residual = d - total
        pts = []
        for offsets in iter_box([0] * n, [1] * n):
            if sum(offsets) == residual:
                pts.append(intvec(ci + o for ci, o in zip(c, offsets)))
        cells.append(pts)
    return cells


def cell_decomposition(d: int, n: int) -> Decomposition:
    """Grid decomposition of the hard face: slice the top simplex by the
    hyperplanes x_i = j and join every cell to -e0.

    For n <= 3 the cells are simplices; each coned cell has normalized
    volume d in the ambient lattice.
    """
    geometry = build(d, n)
    minus_e0 = intvec([-1] + [0] * n)
    face_points = [minus_e0] + [
        intvec([1] + list(u))
        for u in sorted(
            tuple(pt) for pt in iter_box([0] * n, [d] * n) if sum(pt) == d
        )
    ]
    config = PointConfiguration(face_points)
    index = {p: i for i, p in enumerate(config.points)}
    cells = []
    for cell_pts in _simplex_grid_cells(d, n):
        cell = [index[minus_e0]] + [index[intvec([1] + list(u))] for u in cell_pts]
        cells.append(tuple(sorted(cell)))
    decomposition = Decomposition.make(config, cells)
    origin = intvec([0] * (n + 1))
    for i in range(len(decomposition.cells)):
        cone_piece = LatticePolytope(decomposition.cell_points(i) + [origin])
        if cone_piece.normalized_volume() != d:
            raise InternalError("grid cell with normalized volume != d")
    return decomposition


def cell_exponent_matrix(decomposition: Decomposition, cell_index: int) -> ExponentMatrix:
    """Exponent matrix of the diagonal polynomial carried by one cell."""
    pts = decomposition.cell_points(cell_index)
    verts = [pts[i] for i in hull_vertex_indices(pts)]
    dim = len(verts[0])
    if len(verts) != dim:
        raise InputError("cell is not a simplex; no diagonal polynomial")
    m = Matrix.from_columns(verts)
    det = m.det()
    if det == 0:
        raise InputError("cell vertices are linearly dependent")
    return ExponentMatrix(matrix=m, det=int(det))


def cells_ordinarity(d: int, n: int, p: int) -> tuple[bool, Optional[int], list[DiagonalVerdict]]:
    """Run the diagonal stability criterion on every grid cell.

    Returns (all ordinary?, index of the first non-ordinary cell or
    None, per-cell verdicts)."""
    decomposition = cell_decomposition(d, n)
    verdicts = []
    witness = None
    for i in range(len(decomposition.cells)):
        verdict = is_ordinary_diagonal(cell_exponent_matrix(decomposition, i), p)
        verdicts.append(verdict)
        if not verdict.ordinary and witness is None:
            witness = i
    return witness is None, witness, verdicts


def predict_ordinarity(d: int, p: int) -> str:
    """Generic-ordinarity prediction for the hard polytope at p.

    Odd d: ordinary iff p = 1 (mod d) (a theorem).  Even d: p != 1
    (mod d/2) forces non-ordinarity, while p = 1 (mod d/2) is only
    conjecturally ordinary.  Requires p prime to d.
    """
    from .finitefield import is_prime

    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if d % p == 0:
        raise InputError(f"p = {p} divides d = {d}; the family is degenerate")
    dd = weight_denominator(d)
    if d % 2 == 1:
        return ORDINARY if (p - 1) % d == 0 else NON_ORDINARY
    return CONJECTURAL if (p - 1) % dd == 0 else NON_ORDINARY
