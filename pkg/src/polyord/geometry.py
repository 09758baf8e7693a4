"""Exact convex geometry for small point sets.

Everything operates on tuples of Fractions (or ints).  Facet enumeration
is deliberately brute force over vertex subsets: at the dimensions this
package targets (ambient n <= 6, a couple dozen points) exactness and
determinism matter far more than asymptotics.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterator, Optional, Sequence

from .errors import InputError, InternalError
from .linalg import Matrix, nullspace, solve_linear, vec_dot, vec_sub
from .simplex import OPTIMAL, solve_lp

Point = tuple[Fraction, ...]


def _as_points(points: Sequence[Sequence]) -> list[Point]:
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if not pts:
        raise InputError("empty point set")
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise InputError("points must share a dimension")
    return pts


class AffineChart:
    """Exact coordinates on the affine hull of a point set."""

    def __init__(self, points: Sequence[Sequence]):
        pts = _as_points(points)
        self.origin = pts[0]
        ambient = len(self.origin)
        basis: list[Point] = []
        echelon: list[list[Fraction]] = []
        for p in pts[1:]:
            d = vec_sub(p, self.origin)
            reduced = list(d)
            for row in echelon:
                lead = next(i for i, x in enumerate(row) if x != 0)
                if reduced[lead]:
                    factor = reduced[lead] / row[lead]
                    reduced = [x - factor * y for x, y in zip(reduced, row)]
            if any(x != 0 for x in reduced):
                basis.append(d)
                echelon.append(reduced)
        self.basis = basis
        self.dim = len(basis)
        self._matrix = (
            Matrix.from_columns(basis) if basis else None
        )
        self.ambient_dim = ambient

    def coordinates(self, point: Sequence) -> Optional[Point]:
        """Chart coordinates of ``point``; None when it is off the hull."""
        d = vec_sub(tuple(Fraction(c) for c in point), self.origin)
        if self._matrix is None:
            return () if all(x == 0 for x in d) else None
        sol = solve_linear(self._matrix, d)
        if sol is None:
            return None
        if self._matrix.apply(sol) != tuple(d):
            return None
        return sol

    def to_ambient(self, coords: Sequence) -> Point:
        out = list(self.origin)
        for c, b in zip(coords, self.basis, strict=True):
            out = [x + Fraction(c) * y for x, y in zip(out, b)]
        return tuple(out)


def hull_vertex_indices(points: Sequence[Sequence]) -> list[int]:
    """Indices of the minimal vertex set of conv(points), in input order."""
    pts = _as_points(points)
    if len(pts) == 1:
        return [0]
    seen: dict[Point, int] = {}
    for i, p in enumerate(pts):
        seen.setdefault(p, i)
    candidates = sorted(seen.values())
    verts = []
    for i in candidates:
        others = [pts[j] for j in candidates if j != i]
        if not _in_convex_hull(others, pts[i]):
            verts.append(i)
    return verts


def _in_convex_hull(points: list[Point], x: Point) -> bool:
    if not points:
        return False
    n = len(x)
    rows = [[p[k] for p in points] for k in range(n)]
    rows.append([Fraction(1)] * len(points))
    rhs = list(x) + [Fraction(1)]
    result = solve_lp("min", [Fraction(0)] * len(points), eq=(rows, rhs))
    return result.status == OPTIMAL


def convex_hull_contains(points: Sequence[Sequence], x: Sequence) -> bool:
    pts = _as_points(points)
    return _in_convex_hull(pts, tuple(Fraction(c) for c in x))


def _primitive(normal: Sequence[Fraction], rhs: Fraction) -> tuple[tuple, Fraction]:
    """Scale (normal, rhs) to a primitive integer normal, fixed orientation."""
    denom = 1
    for x in list(normal) + [rhs]:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in normal]
    g = 0
    for x in ints + [int(rhs * denom)]:
        g = gcd(g, abs(x))
    if g == 0:
        raise InternalError("zero functional")
    ints = [x // g for x in ints]
    return tuple(ints), Fraction(int(rhs * denom) // g)


def facet_descriptions(points: Sequence[Sequence]) -> list[dict]:
    """Facets of a full-dimensional conv(points) in its own space R^k.

    Each facet is reported as {"normal": a, "rhs": c, "tight": frozenset}
    with <a, x> <= c over the hull, equality exactly on the tight point
    indices, and a primitive integer normal.  Brute force over k-subsets
    of hull vertices, validated by one-sidedness of all points.
    """
    pts = _as_points(points)
    k = len(pts[0])
    if k == 0:
        return []
    verts = hull_vertex_indices(pts)
    if len(verts) < k + 1:
        raise InputError("point set is not full-dimensional in its space")
    facets: dict[tuple, dict] = {}
    for subset in combinations(verts, k):
        base = pts[subset[0]]
        diffs = [vec_sub(pts[i], base) for i in subset[1:]]
        if diffs:
            kernel = nullspace(Matrix(diffs))
        else:
            kernel = [tuple(Fraction(int(i == j)) for j in range(k)) for i in range(k)]
        if len(kernel) != 1:
            continue  # affinely dependent subset spans no hyperplane
        normal = kernel[0]
        rhs = vec_dot(normal, base)
        values = [vec_dot(normal, p) for p in pts]
        if all(v <= rhs for v in values):
            pass
        elif all(v >= rhs for v in values):
            normal = tuple(-x for x in normal)
            rhs = -rhs
            values = [-v for v in values]
        else:
            continue
        pnormal, prhs = _primitive(normal, rhs)
        key = (pnormal, prhs)
        if key not in facets:
            facets[key] = {
                "normal": pnormal,
                "rhs": prhs,
                "tight": frozenset(i for i, v in enumerate(values) if v == rhs),
            }
    out = sorted(facets.values(), key=lambda f: (f["normal"], f["rhs"]))
    if len(out) < k + 1:
        raise InternalError("facet enumeration found too few facets")
    return out


def facet_inequalities(points: Sequence[Sequence]) -> list[tuple[tuple, Fraction]]:
    return [(f["normal"], f["rhs"]) for f in facet_descriptions(points)]


def point_satisfies(ineqs: Sequence[tuple], x: Sequence, strict: bool = False) -> bool:
    for normal, rhs in ineqs:
        v = vec_dot(normal, x)
        if v > rhs or (strict and v == rhs):
            return False
    return True


def triangulate(points: Sequence[Sequence]) -> list[tuple[int, ...]]:
    """Fan triangulation of a full-dimensional conv(points) in R^k.

    Returns simplices as (k+1)-tuples of indices into ``points``.  Pulls
    from the lexicographically smallest vertex, recursing into the facets
    that avoid it; deterministic.
    """
    pts = _as_points(points)
    k = len(pts[0])
    verts = hull_vertex_indices(pts)
    if k == 0:
        return [(verts[0],)]
    if len(verts) == k + 1:
        return [tuple(sorted(verts, key=lambda i: pts[i]))]
    apex = min(verts, key=lambda i: pts[i])
    simplices = []
    for facet in facet_descriptions(pts):
        if apex in facet["tight"]:
            continue
        facet_idx = sorted(facet["tight"])
        facet_pts = [pts[i] for i in facet_idx]
        chart = AffineChart(facet_pts)
        if chart.dim != k - 1:
            raise InternalError("facet of wrong dimension")
        local = [chart.coordinates(p) for p in facet_pts]
        for sub in triangulate(local):
            simplices.append(tuple(sorted((apex,) + tuple(facet_idx[i] for i in sub))))
    return sorted(set(simplices))


def normalized_volume_points(points: Sequence[Sequence]) -> Fraction:
    """k! times the k-volume of a full-dimensional conv(points) in R^k."""
    pts = _as_points(points)
    k = len(pts[0])
    if k == 0:
        return Fraction(1)
    total = Fraction(0)
    for simplex in triangulate(pts):
        base = pts[simplex[0]]
        m = Matrix([vec_sub(pts[i], base) for i in simplex[1:]])
        total += abs(m.det())
    return total


class ConeDescription:
    """A finitely generated cone with an exact membership test.

    The cone is stored as its linear span plus facet inequalities that
    are >= 0 on the cone (computed from conv({0} u generators)).  The
    relative interior corresponds to all inequalities strict.
    """

    def __init__(self, generators: Sequence[Sequence]):
        gens = [tuple(Fraction(c) for c in g) for g in generators]
        gens = [g for g in gens if any(x != 0 for x in g)]
        self.generators = tuple(gens)
        self.tight_generators: list[frozenset[int]] = []
        if not gens:
            self.ambient_dim = None
            self.chart = None
            self.ineqs: list = []
            self.ambient_ineqs: Optional[list] = None
            return
        self.ambient_dim = len(gens[0])
        zero = tuple(Fraction(0) for _ in range(self.ambient_dim))
        self.chart = AffineChart([zero] + list(gens))
        local = [self.chart.coordinates(g) for g in gens]
        k = self.chart.dim
        zero_local = tuple(Fraction(0) for _ in range(k))
        hull_pts = [zero_local] + local
        ineqs = []
        tight_sets = []
        if k > 0:
            for facet in facet_descriptions(hull_pts):
                if facet["rhs"] == 0 and 0 in facet["tight"]:
                    # polytope side is <= 0; flip so the cone side reads >= 0
                    ineqs.append(tuple(-x for x in facet["normal"]))
                    tight_sets.append(
                        frozenset(i - 1 for i in facet["tight"] if i != 0)
                    )
        self.ineqs = ineqs
        self.tight_generators = tight_sets
        # when the span is all of ambient space the chart is invertible and
        # the inequalities can be pulled back for a solve-free membership test
        self.ambient_ineqs = None
        if k == self.ambient_dim and k > 0:
            mt = Matrix(self.chart.basis)  # rows are basis vectors = M^T
            pulled = []
            for normal in ineqs:
                b = solve_linear(mt, normal)
                if b is None:
                    raise InternalError("cone chart is not invertible")
                pulled.append(b)
            self.ambient_ineqs = pulled

    def contains(self, x: Sequence, relatively_open: bool = False) -> bool:
        x = tuple(Fraction(c) for c in x)
        if self.chart is None:
            return all(c == 0 for c in x)
        if self.ambient_ineqs is not None:
            for normal in self.ambient_ineqs:
                v = vec_dot(normal, x)
                if v < 0 or (relatively_open and v == 0):
                    return False
            return True
        local = self.chart.coordinates(x)
        if local is None:
            return False
        for normal in self.ineqs:
            v = vec_dot(normal, local)
            if v < 0 or (relatively_open and v == 0):
                return False
        return True


def integer_box(corners: Sequence[Sequence[Fraction]]) -> tuple[list[int], list[int]]:
    """Smallest integer box containing all corner points."""
    dim = len(corners[0])
    lo, hi = [], []
    for i in range(dim):
        values = [Fraction(p[i]) for p in corners]
        lo.append(math.ceil(min(values)))
        hi.append(math.floor(max(values)))
    return lo, hi


def iter_box(lo: Sequence[int], hi: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Lexicographic iteration over integer points of a box."""
    if any(a > b for a, b in zip(lo, hi)):
        return
    dims = len(lo)
    current = list(lo)
    while True:
        yield tuple(current)
        for i in reversed(range(dims)):
            if current[i] < hi[i]:
                current[i] += 1
                break
            current[i] = lo[i]
        else:
            return


def lattice_points_in_hull(points: Sequence[Sequence]) -> list[tuple[int, ...]]:
    """All integer points of conv(points); the points may be lower-dimensional."""
    pts = _as_points(points)
    chart = AffineChart(pts)
    local_pts = [chart.coordinates(p) for p in pts]
    ineqs = facet_inequalities(local_pts) if chart.dim > 0 else []
    lo, hi = integer_box(pts)
    out = []
    for cand in iter_box(lo, hi):
        local = chart.coordinates(cand)
        if local is None:
            continue
        if chart.dim == 0 or point_satisfies(ineqs, local):
            out.append(cand)
    return out
