"""Decompositions of a point configuration (delta, A) and the linear
programming machinery around them.

A configuration is a duplicate-free list of integer points A whose hull
delta is usually a lower-dimensional polytope sitting inside R^n (the
origin-avoiding face of a Newton polytope).  All cell geometry runs in
exact chart coordinates on the affine hull of A.  Cells are index sets
into A and contain every A-point lying in them, so decompositions built
here round-trip through lifted-height subdivisions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional, Sequence

from .errors import InputError, InternalError
from .geometry import (
    AffineChart,
    facet_descriptions,
    hull_vertex_indices,
    integer_box,
    iter_box,
    lattice_points_in_hull,
    normalized_volume_points,
    point_satisfies,
)
from .linalg import IntVector, Matrix, intvec, solve_linear, vec_dot, vec_sub
from .polytope import ConeRegion, LatticePolytope
from .hull import PlanarPolygon
from .rationals import INF
from .simplex import OPTIMAL, UNBOUNDED, lp_optimize, solve_lp

HeightFunction = tuple[Fraction, ...]


class PointConfiguration:
    """Integer points A with exact coordinates on their affine hull."""

    def __init__(self, points: Sequence[Sequence[int]]):
        pts = [intvec(p) for p in points]
        if len(set(pts)) != len(pts):
            raise InputError("configuration points must be distinct")
        self.points: tuple[IntVector, ...] = tuple(pts)
        self.chart = AffineChart(self.points)
        self.dim = self.chart.dim
        self.local = [self.chart.coordinates(p) for p in self.points]
        self.vertex_indices = hull_vertex_indices(self.local)
        self._facets = None
        self._ambient: Optional[LatticePolytope] = None

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"PointConfiguration({[list(p) for p in self.points]})"

    def hull_facets(self) -> list[dict]:
        """Facets of conv(A) in chart coordinates, with tight index sets."""
        if self._facets is None:
            if self.dim == 0:
                self._facets = []
            else:
                self._facets = facet_descriptions(self.local)
        return self._facets

    def ambient_polytope(self) -> LatticePolytope:
        """conv(A and the origin): the polytope whose weight function the
        maximizing machinery uses."""
        if self._ambient is None:
            self._ambient = LatticePolytope.from_newton(self.points)
        return self._ambient

    def hull_vertices(self) -> list[IntVector]:
        return [self.points[i] for i in self.vertex_indices]

    def with_extra_points(self, extra: Sequence[IntVector]) -> "PointConfiguration":
        new_pts = list(self.points)
        for p in sorted(set(map(intvec, extra))):
            if p not in new_pts:
                new_pts.append(p)
        return PointConfiguration(new_pts)

    def index_of(self, point: Sequence[int]) -> int:
        return self.points.index(intvec(point))

    def cell_contains_local(self, cell_local: list, x_local) -> bool:
        """Exact hull membership in chart coordinates via an LP."""
        k = len(x_local)
        rows = [[p[i] for p in cell_local] for i in range(k)]
        rows.append([Fraction(1)] * len(cell_local))
        rhs = list(x_local) + [Fraction(1)]
        res = lp_optimize("min", [Fraction(0)] * len(cell_local), rows, rhs)
        return res.status == OPTIMAL


@dataclass(frozen=True)
class Decomposition:
    config: PointConfiguration
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.cells:
            raise InputError("decomposition needs at least one cell")
        for cell in self.cells:
            if not cell:
                raise InputError("empty cell")
            if any(not 0 <= i < len(self.config) for i in cell):
                raise InputError("cell index out of range")

    @classmethod
    def make(cls, config: PointConfiguration, cells) -> "Decomposition":
        canon = tuple(sorted(tuple(sorted(set(c))) for c in cells))
        return cls(config=config, cells=canon)

    def cell_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(c) for c in self.cells)

    def cell_points(self, i: int) -> list[IntVector]:
        return [self.config.points[j] for j in self.cells[i]]

    def same_cells(self, other: "Decomposition") -> bool:
        return (
            self.config.points == other.config.points
            and self.cell_sets() == other.cell_sets()
        )


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[str, ...]


def validate_decomposition(decomposition: Decomposition) -> ValidationReport:
    """Check the defining properties of a decomposition of (delta, A).

    (i) each cell hull is full-dimensional in the hull of A, (ii) cell
    normalized volumes add up to the volume of conv(A), (iii) no two
    cells share an interior point (certified by a strict-interior LP).
    """
    config = decomposition.config
    k = config.dim
    violations = []
    if k == 0:
        if decomposition.cell_sets() != frozenset({frozenset(range(len(config)))}):
            violations.append("zero-dimensional hull admits only the trivial cell")
        return ValidationReport(valid=not violations, violations=tuple(violations))

    cell_locals = []
    full_dim = []
    for idx, cell in enumerate(decomposition.cells):
        local = [config.local[i] for i in cell]
        cell_locals.append(local)
        chart = AffineChart(local)
        ok = chart.dim == k
        full_dim.append(ok)
        if not ok:
            violations.append(f"cell {idx} is not full-dimensional")

    if all(full_dim):
        total = sum(normalized_volume_points(local) for local in cell_locals)
        hull_total = normalized_volume_points(config.local)
        if total != hull_total:
            violations.append(
                f"cell volumes sum to {total}, hull volume is {hull_total}"
            )
        ineqs = [facet_descriptions(local) for local in cell_locals]
        for i, j in combinations(range(len(cell_locals)), 2):
            rows = []
            rhs = []
            for f in ineqs[i] + ineqs[j]:
                rows.append(list(f["normal"]) + [Fraction(1)])
                rhs.append(f["rhs"])
            rows.append([Fraction(0)] * k + [Fraction(1)])
            rhs.append(Fraction(1))
            res = solve_lp(
                "max",
                [Fraction(0)] * k + [Fraction(1)],
                ub=(rows, rhs),
                nonneg=[k],
            )
            if res.status == OPTIMAL and res.value > 0:
                violations.append(f"cells {i} and {j} share an interior point")
    return ValidationReport(valid=not violations, violations=tuple(violations))


# -- decompositions inherited from the ambient polytope ----------------


def facial_decomposition(polytope: LatticePolytope) -> list[LatticePolytope]:
    """One sub-polytope conv(origin, facet) per origin-avoiding facet."""
    origin = tuple(0 for _ in range(polytope.dim))
    pieces = []
    for facet in polytope.origin_avoiding_facets():
        pts = [polytope.vertices[i] for i in sorted(facet.vertex_indices)]
        pieces.append(LatticePolytope(pts + [origin]))
    return pieces


@dataclass(frozen=True)
class BoundaryDecomposition:
    """Partition of the cone over a polytope into relatively open faces."""

    polytope: LatticePolytope
    pieces: tuple[ConeRegion, ...]

    def classify(self, point: Sequence[int]):
        """Index of the unique piece containing the point, or None when the
        point is outside the cone."""
        if not self.polytope.cone_contains(point):
            return None
        hits = [i for i, piece in enumerate(self.pieces) if piece.contains(point)]
        if len(hits) != 1:
            raise InternalError(
                f"boundary pieces are not a partition at {tuple(point)}: {hits}"
            )
        return hits[0]


def boundary_decomposition(polytope: LatticePolytope) -> BoundaryDecomposition:
    """Relatively open faces of C(polytope), smallest dimension first."""
    cone = polytope.cone()
    gens = list(cone.generators)
    all_idx = frozenset(range(len(gens)))
    face_sets = {all_idx}
    n_facets = len(cone.tight_generators)
    for size in range(1, n_facets + 1):
        for subset in combinations(range(n_facets), size):
            tight = all_idx
            for i in subset:
                tight = tight & cone.tight_generators[i]
            face_sets.add(frozenset(tight))
    regions = []
    for fs in face_sets:
        generators = tuple(
            intvec(int(c) for c in gens[i]) for i in sorted(fs)
        )
        regions.append(ConeRegion(polytope, generators, relatively_open=True))
    regions.sort(key=lambda r: (r.dimension, r.generators))
    return BoundaryDecomposition(polytope=polytope, pieces=tuple(regions))


# -- height-based constructions ----------------------------------------


def induced_subdivision(
    config: PointConfiguration, heights: Sequence
) -> Decomposition:
    """Projection of the upper hull of A lifted by the given heights.

    Cells are the tight sets of the non-vertical upper faces; points
    lying strictly below the upper hull appear in no cell.
    """
    h = [Fraction(x) for x in heights]
    if len(h) != len(config):
        raise InputError("need one height per configuration point")
    k = config.dim
    npts = len(config)
    if k == 0:
        return Decomposition.make(config, [tuple(range(npts))])
    cells = set()
    for subset in combinations(range(npts), k + 1):
        base = config.local[subset[0]]
        diffs = [vec_sub(config.local[i], base) for i in subset[1:]]
        if Matrix(diffs).rank() != k:
            continue
        rows = [list(config.local[i]) + [Fraction(1)] for i in subset]
        sol = solve_linear(Matrix(rows), [h[i] for i in subset])
        if sol is None:
            continue
        w, b = sol[:k], sol[k]
        values = [vec_dot(w, config.local[i]) + b for i in range(npts)]
        if all(values[i] >= h[i] for i in range(npts)):
            cells.add(frozenset(i for i in range(npts) if values[i] == h[i]))
    if not cells:
        raise InternalError("no upper faces found")
    return Decomposition.make(config, [tuple(sorted(c)) for c in cells])


def star_decomposition(
    config: PointConfiguration, apex_index: int
) -> tuple[Decomposition, HeightFunction]:
    """Cells conv(apex, facet) over the hull facets avoiding the apex.

    The returned heights are the tent function that is 1 at the apex and
    0 on every facet avoiding it; its induced subdivision reproduces the
    star cells.
    """
    if not 0 <= apex_index < len(config):
        raise InputError("apex index out of range")
    if config.dim == 0:
        raise InputError("cannot star a zero-dimensional configuration")
    apex_local = config.local[apex_index]
    avoiding = [
        f for f in config.hull_facets() if apex_index not in f["tight"]
    ]
    if not avoiding:
        raise InternalError("every facet contains the apex")
    cells = []
    for f in avoiding:
        cell_local = [config.local[i] for i in sorted(f["tight"])] + [apex_local]
        cell = [
            i
            for i in range(len(config))
            if config.cell_contains_local(cell_local, config.local[i])
        ]
        cells.append(tuple(cell))
    heights = []
    for i in range(len(config)):
        value = None
        for f in avoiding:
            gap_apex = f["rhs"] - vec_dot(f["normal"], apex_local)
            gap = f["rhs"] - vec_dot(f["normal"], config.local[i])
            candidate = gap / gap_apex
            if value is None or candidate < value:
                value = candidate
        heights.append(value)
    decomposition = Decomposition.make(config, cells)
    if len(decomposition.cells) != len(avoiding):
        raise InternalError("star cells collided")
    return decomposition, tuple(heights)


def hyperplane_split(
    config: PointConfiguration,
    normal: Sequence,
    rhs,
) -> tuple[Decomposition, HeightFunction, PointConfiguration]:
    """Cut conv(A) by the hyperplane <normal, x> = rhs into two cells.

    The cut must meet the interior (hull vertices strictly on both
    sides) and all vertices of the cut polytope must be integral; they
    are appended to the configuration.  Returns the decomposition, the
    concave heights 1 - d(H, x)/d_max realizing it, and the augmented
    configuration.
    """
    normal = tuple(Fraction(c) for c in normal)
    rhs = Fraction(rhs)
    values = {i: vec_dot(normal, config.points[i]) - rhs for i in range(len(config))}
    vertex_vals = [values[i] for i in config.vertex_indices]
    if not (min(vertex_vals) < 0 < max(vertex_vals)):
        raise InputError("hyperplane does not cut the interior of the hull")

    cut_points = [config.points[i] for i in config.vertex_indices if values[i] == 0]
    for v_idx, w_idx in _hull_edges(config):
        tv, tw = values[v_idx], values[w_idx]
        if tv * tw < 0:
            t = -tv / (tw - tv)
            point = tuple(
                Fraction(a) + t * (Fraction(b) - Fraction(a))
                for a, b in zip(config.points[v_idx], config.points[w_idx])
            )
            if any(c.denominator != 1 for c in point):
                raise InputError(
                    f"cut vertex {tuple(str(c) for c in point)} is not integral"
                )
            cut_points.append(intvec(int(c) for c in point))

    augmented = config.with_extra_points(cut_points)
    aug_values = [
        vec_dot(normal, p) - rhs for p in augmented.points
    ]
    low = tuple(i for i, v in enumerate(aug_values) if v <= 0)
    high = tuple(i for i, v in enumerate(aug_values) if v >= 0)
    d_max = max(abs(v) for v in aug_values)
    heights = tuple(1 - abs(v) / d_max for v in aug_values)
    decomposition = Decomposition.make(augmented, [low, high])
    return decomposition, heights, augmented


def _hull_edges(config: PointConfiguration) -> list[tuple[int, int]]:
    """Edges of conv(A) as index pairs, via common tight facet sets."""
    if config.dim == 1:
        verts = config.vertex_indices
        if len(verts) != 2:
            raise InternalError("segment with vertex count != 2")
        return [tuple(sorted(verts))]
    facets = config.hull_facets()
    vertex_set = set(config.vertex_indices)
    tight_by_facet = [set(f["tight"]) & vertex_set for f in facets]
    edges = []
    for v, w in combinations(sorted(vertex_set), 2):
        common = [t for t in tight_by_facet if v in t and w in t]
        if not common:
            continue
        face = set.intersection(*common)
        if face == {v, w}:
            edges.append((v, w))
    return edges


def hyperplane_grid_decomposition(
    config: PointConfiguration,
    hyperplanes: Sequence[tuple[Sequence, object]],
) -> tuple[Decomposition, HeightFunction, PointConfiguration]:
    """Iterated hyperplane splits applied cell by cell.

    Each hyperplane splits every current cell it cuts, collecting the
    (integral) cut vertices as new configuration points.  The returned
    heights are the sum of the individual concave tent functions, one
    per hyperplane that actually cut something, so the common refinement
    is realized by a single concave lift and is regular.
    """
    cells_points: list[list[IntVector]] = [list(config.points)]
    extra: list[IntVector] = []
    tents = []
    for normal, rhs in hyperplanes:
        normal = tuple(Fraction(c) for c in normal)
        rhs = Fraction(rhs)
        new_cells = []
        cut_any = False
        for cell in cells_points:
            sub = PointConfiguration(cell)
            vertex_vals = [
                vec_dot(normal, sub.points[i]) - rhs for i in sub.vertex_indices
            ]
            if not (min(vertex_vals) < 0 < max(vertex_vals)):
                new_cells.append(cell)
                continue
            cut_any = True
            split, _, augmented = hyperplane_split(sub, normal, rhs)
            extra.extend(augmented.points)
            for c in split.cells:
                new_cells.append([augmented.points[i] for i in c])
        cells_points = new_cells
        if cut_any:
            d_max = max(
                abs(vec_dot(normal, config.points[i]) - rhs)
                for i in config.vertex_indices
            )
            tents.append((normal, rhs, d_max))
    final = config.with_extra_points(extra)
    heights = []
    for p in final.points:
        total = Fraction(0)
        for normal, rhs, d_max in tents:
            total += 1 - abs(vec_dot(normal, p) - rhs) / d_max
        heights.append(total)
    decomposition = induced_subdivision(final, heights)
    if len(decomposition.cells) != len(cells_points):
        raise InternalError(
            "lifted refinement disagrees with the iterated splitting"
        )
    return decomposition, tuple(heights), final


def collapsing_decomposition(
    config: PointConfiguration, drop_index: int
) -> Decomposition:
    """Collapse A at one of its hull vertices V.

    The first cell is conv(A minus V); the others join V to the facets
    of that hull visible from V.  Fails when conv(A minus V) is not
    full-dimensional.
    """
    if not 0 <= drop_index < len(config):
        raise InputError("index out of range")
    if drop_index not in config.vertex_indices:
        raise InputError("collapsing point must be a hull vertex")
    rest = [i for i in range(len(config)) if i != drop_index]
    rest_local = [config.local[i] for i in rest]
    if AffineChart(rest_local).dim != config.dim:
        raise InputError("remaining points are degenerate after collapsing")
    cells = [tuple(rest)]
    v_local = config.local[drop_index]
    for f in facet_descriptions(rest_local):
        if vec_dot(f["normal"], v_local) <= f["rhs"]:
            continue  # facet not visible from the dropped vertex
        cell_local = [rest_local[j] for j in sorted(f["tight"])] + [v_local]
        cell = [
            i
            for i in range(len(config))
            if config.cell_contains_local(cell_local, config.local[i])
        ]
        cells.append(tuple(cell))
    if len(cells) == 1:
        raise InternalError("no facet is visible from a hull vertex")
    return Decomposition.make(config, cells)


# -- regularity ---------------------------------------------------------


@dataclass(frozen=True)
class RegularityCertificate:
    regular: bool
    heights: Optional[HeightFunction]
    slack: Fraction
    dual: Optional[tuple[Fraction, ...]] = None


def is_regular(decomposition: Decomposition) -> RegularityCertificate:
    """Decide regularity by maximizing the strictness slack of a concave
    piecewise-linear certificate.

    Unknowns are heights on A, one affine functional per cell, and a
    slack eps <= 1; the functionals must agree with the heights on their
    own cells and exceed them by eps elsewhere.  The decomposition is
    regular iff max eps > 0; the returned heights then regenerate the
    decomposition through induced_subdivision.  A zero optimum comes
    with the LP dual certificate.
    """
    config = decomposition.config
    k = config.dim
    npts = len(config)
    cells = decomposition.cells
    ncells = len(cells)
    # variable layout: heights | (w_i, b_i) per cell | eps
    nvars = npts + ncells * (k + 1) + 1
    eps_col = nvars - 1

    def functional_cols(cell_idx):
        start = npts + cell_idx * (k + 1)
        return list(range(start, start + k)), start + k

    eq_rows, eq_rhs = [], []
    ub_rows, ub_rhs = [], []
    for ci, cell in enumerate(cells):
        wcols, bcol = functional_cols(ci)
        members = set(cell)
        for a in range(npts):
            row = [Fraction(0)] * nvars
            for wc, coord in zip(wcols, config.local[a]):
                row[wc] = coord
            row[bcol] = Fraction(1)
            row[a] -= 1
            if a in members:
                eq_rows.append(row)
                eq_rhs.append(Fraction(0))
            else:
                # heights + eps <= functional value
                neg = [-x for x in row]
                neg[eps_col] = Fraction(1)
                ub_rows.append(neg)
                ub_rhs.append(Fraction(0))
    # pin heights on an affinely independent set to remove the affine gauge
    pinned = _affinely_independent_subset(config)
    for a in pinned:
        row = [Fraction(0)] * nvars
        row[a] = Fraction(1)
        eq_rows.append(row)
        eq_rhs.append(Fraction(0))
    cap = [Fraction(0)] * nvars
    cap[eps_col] = Fraction(1)
    ub_rows.append(cap)
    ub_rhs.append(Fraction(1))

    objective = [Fraction(0)] * nvars
    objective[eps_col] = Fraction(1)
    result = solve_lp(
        "max",
        objective,
        eq=(eq_rows, eq_rhs),
        ub=(ub_rows, ub_rhs),
        nonneg=[eps_col],
    )
    if result.status != OPTIMAL:
        raise InternalError(f"regularity LP ended with status {result.status}")
    slack = result.value
    if slack > 0:
        heights = tuple(result.witness[:npts])
        regenerated = induced_subdivision(config, heights)
        if not regenerated.same_cells(decomposition):
            raise InternalError(
                "certified heights fail to regenerate the decomposition"
            )
        return RegularityCertificate(regular=True, heights=heights, slack=slack)
    return RegularityCertificate(
        regular=False, heights=None, slack=slack, dual=result.dual
    )


def _affinely_independent_subset(config: PointConfiguration) -> list[int]:
    chosen = [0]
    for i in range(1, len(config)):
        pts = [config.local[j] for j in chosen + [i]]
        if AffineChart(pts).dim == len(chosen):
            chosen.append(i)
        if len(chosen) == config.dim + 1:
            break
    if len(chosen) != config.dim + 1:
        raise InternalError("configuration is not full-dimensional in its hull")
    return chosen


# -- completeness -------------------------------------------------------


def is_indecomposable(points: Sequence[Sequence[int]]) -> bool:
    """A polytope is indecomposable when its only lattice points are its
    vertices."""
    pts = [intvec(p) for p in points]
    verts = {pts[i] for i in hull_vertex_indices(pts)}
    return set(lattice_points_in_hull(pts)) == verts


def is_complete(decomposition: Decomposition) -> bool:
    return all(
        is_indecomposable(decomposition.cell_points(i))
        for i in range(len(decomposition.cells))
    )


# -- maximizing functions and degree polygons ---------------------------


def maximizing_value(
    phi: Sequence,
    config: PointConfiguration,
    r: Sequence,
    sense: str = "sup",
) -> Fraction:
    """sup (or inf) of sum u_j phi_j over nonnegative representations
    sum u_j A_j = r; defined as 0 outside the cone spanned by A."""
    if sense not in ("sup", "inf"):
        raise InputError("sense must be 'sup' or 'inf'")
    values = [Fraction(x) for x in phi]
    if len(values) != len(config):
        raise InputError("need one phi value per configuration point")
    n = len(config.points[0])
    rows = [[Fraction(p[i]) for p in config.points] for i in range(n)]
    rhs = [Fraction(c) for c in r]
    result = lp_optimize(
        "max" if sense == "sup" else "min", values, rows, rhs
    )
    if result.status == UNBOUNDED:
        raise InternalError(
            "maximizing function unbounded; the configuration spans a line "
            "through the origin"
        )
    if result.status != OPTIMAL:
        return Fraction(0)  # r is outside the cone
    return result.value


def is_homogeneous(
    phi: Sequence,
    config: PointConfiguration,
    weight_bound,
) -> tuple[bool, Optional[tuple]]:
    """Sampled homogeneity check: sup = inf for every lattice point of the
    cone with weight at most the bound.

    This verifies homogeneity on a finite window, it does not prove it
    for the whole cone.  Returns (True, None) or (False, witness) where
    the witness is (r, sup, inf).
    """
    bound = Fraction(weight_bound)
    if bound < 0:
        raise InputError("weight bound must be nonnegative")
    ambient = config.ambient_polytope()
    corners = [tuple(bound * Fraction(c) for c in v) for v in ambient.vertices]
    lo, hi = integer_box(corners)
    for u in iter_box(lo, hi):
        w = ambient.weight(u)
        if w is INF or w > bound:
            continue
        sup = maximizing_value(phi, config, u, "sup")
        inf = maximizing_value(phi, config, u, "inf")
        if sup != inf:
            return False, (u, sup, inf)
    return True, None


def degree_polygon(
    region: ConeRegion,
    phi: Sequence,
    config: PointConfiguration,
    p: int,
    m_max: int,
) -> PlanarPolygon:
    """Graph through (sum_{k<=m} W(region,k), (p-1) sum m(phi,A;r)) where
    the inner sum runs over region lattice points of weight <= m/D.

    The second coordinates are exact and nonnegative; the polygon is not
    required to be convex.
    """
    if m_max < 0:
        raise InputError("m_max must be nonnegative")
    polytope = region.polytope
    d = polytope.weight_denominator()
    scale = Fraction(m_max, d)
    corners = [tuple(scale * Fraction(c) for c in v) for v in polytope.vertices]
    if m_max == 0:
        corners = [tuple(Fraction(0) for _ in range(polytope.dim))]
    counts = [0] * (m_max + 1)
    sums = [Fraction(0)] * (m_max + 1)
    lo, hi = integer_box(corners)
    for u in iter_box(lo, hi):
        w = polytope.weight(u)
        if w is INF:
            continue
        scaled = w * d
        if scaled.denominator != 1 or scaled > m_max:
            continue
        if not region.contains(u):
            continue
        level = int(scaled)
        counts[level] += 1
        sums[level] += maximizing_value(phi, config, u, "sup")
    vertices = [(Fraction(0), Fraction(0))]
    x = Fraction(0)
    q = Fraction(0)
    for k in range(m_max + 1):
        x += counts[k]
        q += (p - 1) * sums[k]
        if q < 0:
            raise InternalError("degree polygon ordinate went negative")
        vertices.append((x, q))
    return PlanarPolygon(vertices, require_convex=False)


# -- piecewise linear lifts ---------------------------------------------


class PiecewiseLinearLift:
    """Heights interpolated affinely inside each cell of a decomposition.

    Construction fails when the heights are not affine on some cell, so
    a lift always matches its decomposition's linearity domains.
    """

    def __init__(self, decomposition: Decomposition, heights: Sequence):
        self.decomposition = decomposition
        self.heights = tuple(Fraction(x) for x in heights)
        config = decomposition.config
        if len(self.heights) != len(config):
            raise InputError("need one height per configuration point")
        k = config.dim
        self._functionals = []
        self._cell_ineqs = []
        for cell in decomposition.cells:
            local = [config.local[i] for i in cell]
            rows = [list(x) + [Fraction(1)] for x in local]
            sol = solve_linear(Matrix(rows), [self.heights[i] for i in cell])
            if sol is None:
                raise InputError("heights are not affine on a cell")
            w, b = sol[:k], sol[k]
            for i in cell:
                if vec_dot(w, config.local[i]) + b != self.heights[i]:
                    raise InputError("heights are not affine on a cell")
            self._functionals.append((w, b))
            self._cell_ineqs.append(
                facet_descriptions(local) if k > 0 else []
            )

    def evaluate_local(self, x_local) -> Fraction:
        for (w, b), ineqs in zip(self._functionals, self._cell_ineqs):
            if point_satisfies([(f["normal"], f["rhs"]) for f in ineqs], x_local):
                return vec_dot(w, x_local) + b
        raise InputError("point is outside every cell of the lift")

    def evaluate(self, point) -> Fraction:
        local = self.decomposition.config.chart.coordinates(point)
        if local is None:
            raise InputError("point is outside the affine hull of the lift")
        return self.evaluate_local(local)

    def values_on_points(self) -> HeightFunction:
        return self.heights


def extend_to_cone(
    lift: PiecewiseLinearLift,
) -> Callable[[Sequence], Fraction]:
    """Positively homogeneous extension phi(r) = w(r) * phi(r / w(r)) of a
    lift on delta to the cone over it; phi(0) = 0."""
    config = lift.decomposition.config
    ambient = config.ambient_polytope()

    def extended(r: Sequence) -> Fraction:
        r = tuple(Fraction(c) for c in r)
        if all(c == 0 for c in r):
            return Fraction(0)
        w = ambient.weight(r)
        if w is INF:
            raise InputError("point lies outside the cone")
        if w == 0:
            raise InternalError("nonzero point of zero weight")
        return w * lift.evaluate(tuple(c / w for c in r))

    return extended
