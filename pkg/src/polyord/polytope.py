"""Lattice polytopes, weight functions, and the polygons built from
lattice-point counts (Hodge and chain polygons).

The weight of a lattice point u is the smallest c >= 0 with u in c*P,
infinite outside the cone spanned by P.  It is computed from the facet
functionals of the origin-avoiding facets and can be cross-checked
against an independent linear program over the vertex generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .errors import InputError, InternalError
from .geometry import (
    ConeDescription,
    hull_vertex_indices,
    integer_box,
    iter_box,
    lattice_points_in_hull,
    normalized_volume_points,
    facet_descriptions,
)
from .hull import PlanarPolygon
from .linalg import IntVector, intvec, lcm, vec_dot
from .rationals import INF, RationalOrInf
from .simplex import OPTIMAL, lp_optimize


@dataclass(frozen=True)
class AffineFunctional:
    """The functional <coefficients, x> = constant, exact rationals."""

    coefficients: tuple[Fraction, ...]
    constant: Fraction

    def __post_init__(self):
        if all(c == 0 for c in self.coefficients):
            raise InputError("affine functional needs a nonzero coefficient")

    def evaluate(self, x: Sequence) -> Fraction:
        return vec_dot(self.coefficients, x)


@dataclass(frozen=True)
class FaceDescriptor:
    vertex_indices: frozenset[int]
    functional: AffineFunctional
    dimension: int
    contains_origin: bool
    normal: IntVector = field(repr=False, default=())
    rhs: int = field(repr=False, default=0)


class LatticePolytope:
    """Full-dimensional polytope with integral vertices.

    The stored vertex list is minimal (no vertex inside the hull of the
    others) and lexicographically sorted, so equal polytopes compare
    equal.  ``contains_origin`` records whether the origin lies in the
    polytope at all; it need not be a vertex.
    """

    def __init__(self, points: Sequence[Sequence[int]]):
        pts = [intvec(p) for p in points]
        if not pts:
            raise InputError("polytope needs at least one point")
        dim = len(pts[0])
        if any(len(p) != dim for p in pts):
            raise InputError("points must share a dimension")
        vidx = hull_vertex_indices(pts)
        self.vertices: tuple[IntVector, ...] = tuple(sorted(pts[i] for i in vidx))
        self.dim = dim
        if len(self.vertices) < dim + 1:
            raise InputError("polytope is not full-dimensional")
        self._facets: Optional[list[FaceDescriptor]] = None
        self._cone: Optional[ConeDescription] = None
        origin = tuple(0 for _ in range(dim))
        self.origin_is_vertex = origin in self.vertices
        from .geometry import convex_hull_contains

        self.contains_origin = self.origin_is_vertex or convex_hull_contains(
            self.vertices, origin
        )

    @classmethod
    def from_points(cls, points: Sequence[Sequence[int]]) -> "LatticePolytope":
        return cls(points)

    @classmethod
    def from_newton(cls, exponents: Sequence[Sequence[int]]) -> "LatticePolytope":
        """Hull of the given exponent vectors together with the origin."""
        pts = [intvec(p) for p in exponents]
        if not pts:
            raise InputError("no exponent vectors")
        origin = tuple(0 for _ in range(len(pts[0])))
        return cls(pts + [origin])

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope({[list(v) for v in self.vertices]})"

    # -- faces ---------------------------------------------------------

    def facets(self) -> list[FaceDescriptor]:
        """All codimension-1 faces, each with its supporting functional.

        Origin-avoiding facets are normalized to <e, x> = 1; facets
        through the origin keep a primitive integer functional with
        constant 0 and the polytope on the <= side.
        """
        if self._facets is not None:
            return self._facets
        out = []
        for f in facet_descriptions(self.vertices):
            normal, rhs = f["normal"], int(f["rhs"])
            tight = frozenset(f["tight"])
            if self.contains_origin and rhs < 0:
                raise InternalError("origin outside its own polytope facet system")
            if rhs != 0:
                # normalize to <e, x> = 1 on the facet
                functional = AffineFunctional(
                    tuple(Fraction(a, rhs) for a in normal), Fraction(1)
                )
                contains_origin = False
            else:
                functional = AffineFunctional(
                    tuple(Fraction(a) for a in normal), Fraction(0)
                )
                contains_origin = self.contains_origin
            out.append(
                FaceDescriptor(
                    vertex_indices=tight,
                    functional=functional,
                    dimension=self.dim - 1,
                    contains_origin=contains_origin,
                    normal=normal,
                    rhs=rhs,
                )
            )
        self._facets = out
        return out

    def origin_avoiding_facets(self) -> list[FaceDescriptor]:
        if not self.contains_origin:
            raise InputError("polytope does not contain the origin")
        return [f for f in self.facets() if not f.contains_origin]

    # -- cone and weight ----------------------------------------------

    def nonzero_vertices(self) -> list[IntVector]:
        origin = tuple(0 for _ in range(self.dim))
        return [v for v in self.vertices if v != origin]

    def cone(self) -> ConeDescription:
        if self._cone is None:
            self._cone = ConeDescription(self.nonzero_vertices())
        return self._cone

    def cone_contains(self, u: Sequence) -> bool:
        return self.cone().contains(u)

    def weight(self, u: Sequence) -> RationalOrInf:
        """Smallest c >= 0 with u in c * P; INF outside the cone."""
        if not self.contains_origin:
            raise InputError("weights require a polytope containing the origin")
        if not self.cone_contains(u):
            return INF
        best = Fraction(0)
        for f in self.origin_avoiding_facets():
            v = Fraction(vec_dot(f.normal, u), f.rhs)
            if v > best:
                best = v
        return best

    def weight_lp(self, u: Sequence) -> RationalOrInf:
        """Weight via min sum(c_j), sum(c_j V_j) = u over nonzero vertices."""
        gens = self.nonzero_vertices()
        rows = [[Fraction(g[i]) for g in gens] for i in range(self.dim)]
        result = lp_optimize(
            "min", [Fraction(1)] * len(gens), rows, [Fraction(c) for c in u]
        )
        if result.status != OPTIMAL:
            return INF
        return result.value

    def weight_denominator(self) -> int:
        """lcm of the coefficient denominators over origin-avoiding facets."""
        denoms = []
        for f in self.origin_avoiding_facets():
            denoms.extend(c.denominator for c in f.functional.coefficients)
        return lcm(denoms)

    # -- counting and volumes -----------------------------------------

    def normalized_volume(self) -> int:
        vol = normalized_volume_points(self.vertices)
        if vol.denominator != 1:
            raise InternalError("normalized volume of a lattice polytope must be integral")
        return int(vol)

    def lattice_points(self) -> list[IntVector]:
        return lattice_points_in_hull(self.vertices)


@dataclass(frozen=True)
class ConeRegion:
    """A subcone of C(P), closed or relatively open, with exact membership.

    ``generators`` spans the region; the relatively open variant is the
    relative interior of the closed cone they generate.
    """

    polytope: LatticePolytope
    generators: tuple[IntVector, ...]
    relatively_open: bool = False

    @classmethod
    def full_cone(cls, polytope: LatticePolytope) -> "ConeRegion":
        return cls(polytope, tuple(polytope.nonzero_vertices()), False)

    @classmethod
    def origin_only(cls, polytope: LatticePolytope) -> "ConeRegion":
        return cls(polytope, (), False)

    def _description(self) -> ConeDescription:
        key = (self.generators,)
        cache = _cone_cache
        if key not in cache:
            cache[key] = ConeDescription(self.generators)
        return cache[key]

    @property
    def dimension(self) -> int:
        desc = self._description()
        return 0 if desc.chart is None else desc.chart.dim

    def contains(self, u: Sequence) -> bool:
        return self._description().contains(u, relatively_open=self.relatively_open)


_cone_cache: dict = {}


def count_by_weight(region: ConeRegion, k: int, denominator: int) -> int:
    """Number of lattice points of the region with weight exactly k/D."""
    return weight_counts(region, k, denominator)[k]


def weight_counts(region: ConeRegion, k_max: int, denominator: int) -> list[int]:
    """Counts of region lattice points at weights 0/D, ..., k_max/D.

    Enumerates the integer box around (k_max/D) * P once, in lexicographic
    order, and buckets by exact weight.
    """
    if k_max < 0:
        raise InputError("k_max must be nonnegative")
    polytope = region.polytope
    d = Fraction(denominator)
    scale = Fraction(k_max, denominator)
    counts = [0] * (k_max + 1)
    if k_max == 0:
        corners = [tuple(0 for _ in range(polytope.dim))]
    else:
        # (k_max / D) * P contains the origin, so its box does too
        corners = [tuple(scale * c for c in v) for v in polytope.vertices]
    lo, hi = integer_box(corners)
    full_cone = (
        not region.relatively_open
        and set(region.generators) == set(polytope.nonzero_vertices())
    )
    for u in iter_box(lo, hi):
        w = polytope.weight(u)
        if w is INF:
            continue
        scaled = w * d
        if scaled.denominator != 1 or scaled > k_max:
            continue
        if full_cone or region.contains(u):
            counts[int(scaled)] += 1
    return counts


def hodge_numbers(polytope: LatticePolytope, k_max: Optional[int] = None) -> list[int]:
    """Inclusion-exclusion lattice counts H(k) for k = 0..k_max.

    H(k) = sum_i (-1)^i C(n, i) W(k - i*D); every value is checked to be
    nonnegative, and H(k) = 0 for k > n*D.
    """
    n = polytope.dim
    d = polytope.weight_denominator()
    top = n * d
    if k_max is None:
        k_max = top
    w = weight_counts(ConeRegion.full_cone(polytope), max(k_max, top), d)

    def wval(k):
        return w[k] if 0 <= k < len(w) else 0

    out = []
    for k in range(k_max + 1):
        h = sum((-1) ** i * comb(n, i) * wval(k - i * d) for i in range(n + 1))
        if h < 0:
            raise InternalError(f"negative Hodge number H({k}) = {h}")
        if k > top and h != 0:
            raise InternalError(f"H({k}) = {h} should vanish beyond k = {top}")
        out.append(h)
    return out


def hodge_number(polytope: LatticePolytope, k: int) -> int:
    return hodge_numbers(polytope, k)[k]


def hodge_polygon(polytope: LatticePolytope) -> PlanarPolygon:
    """Convex polygon with a slope-(k/D) side of length H(k) for each k."""
    d = polytope.weight_denominator()
    numbers = hodge_numbers(polytope)
    vertices = [(Fraction(0), Fraction(0))]
    x = Fraction(0)
    y = Fraction(0)
    for k, h in enumerate(numbers):
        x += h
        y += Fraction(k * h, d)
        vertices.append((x, y))
    polygon = PlanarPolygon(vertices)
    if polygon.endpoint[0] != polytope.normalized_volume():
        raise InternalError(
            "Hodge polygon width disagrees with the normalized volume"
        )
    return polygon


def chain_polygon(region: ConeRegion, m_max: int) -> PlanarPolygon:
    """Polygon of cumulative weight-level counts of the region.

    The m-th vertex is (sum_{k<=m} W(k), (1/D) sum_{k<=m} k W(k)); the
    polygon is truncated at the caller's m_max since the full object is
    infinite.
    """
    d = region.polytope.weight_denominator()
    w = weight_counts(region, m_max, d)
    vertices = [(Fraction(0), Fraction(0))]
    x = Fraction(0)
    y = Fraction(0)
    for k, count in enumerate(w):
        x += count
        y += Fraction(k * count, d)
        vertices.append((x, y))
    return PlanarPolygon(vertices)
