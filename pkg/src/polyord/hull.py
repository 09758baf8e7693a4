"""Lower convex hulls in the plane and the piecewise-linear polygons built
from them (Newton, Hodge, chain, and degree polygons)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .rationals import INF, RationalOrInf


def lower_convex_hull(points: Sequence[tuple]) -> list[tuple[Fraction, Fraction]]:
    """Vertices of the lower convex hull of a left-to-right point list.

    Input points must have strictly increasing first coordinates; a second
    coordinate of INF means the point is omitted (it lies infinitely far
    above the axis and cannot support the hull).  Collinear interior
    points are dropped, so the output is the minimal vertex list.
    """
    cleaned: list[tuple[Fraction, Fraction]] = []
    last_x = None
    saw_any = False
    for x, y in points:
        x = Fraction(x)
        if last_x is not None and x <= last_x:
            raise InputError("hull points must have strictly increasing x coordinates")
        last_x = x
        saw_any = True
        if y is INF:
            continue
        cleaned.append((x, Fraction(y)))
    if not saw_any:
        raise InputError("hull of an empty point list")
    if not cleaned:
        raise InputError("all points are infinite; hull undefined")

    hull: list[tuple[Fraction, Fraction]] = []
    for p in cleaned:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep only strict right turns: drop hull[-1] when p lies on or
            # below the segment through the previous two points
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


class PlanarPolygon:
    """Piecewise-linear graph through canonical vertices, starting at (0, 0).

    Vertices have strictly increasing x coordinates and no three are
    collinear.  Hodge, Newton, and chain polygons are convex (slopes
    non-decreasing); degree polygons need not be, so convexity is an
    optional constraint checked by the convex constructors.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Sequence[tuple], require_convex: bool = True):
        pts = [(Fraction(x), Fraction(y)) for x, y in vertices]
        if not pts:
            raise InputError("polygon needs at least one vertex")
        if pts[0] != (Fraction(0), Fraction(0)):
            raise InputError("polygon must start at the origin")
        canon = [pts[0]]
        for p in pts[1:]:
            if p[0] < canon[-1][0]:
                raise InputError("polygon x coordinates must be non-decreasing")
            if p[0] == canon[-1][0]:
                if p[1] != canon[-1][1]:
                    raise InputError("polygon has two vertices with equal x")
                continue
            if len(canon) >= 2:
                (x1, y1), (x2, y2) = canon[-2], canon[-1]
                if (y2 - y1) * (p[0] - x1) == (p[1] - y1) * (x2 - x1):
                    canon.pop()
            canon.append(p)
        self.vertices = tuple(canon)
        if require_convex and not self.is_convex():
            raise InputError(f"polygon slopes must be non-decreasing: {canon}")

    @classmethod
    def from_lower_hull(cls, points: Sequence[tuple]) -> "PlanarPolygon":
        return cls(lower_convex_hull(points))

    def is_convex(self) -> bool:
        slopes = self.slopes()
        return all(a < b for a, b in zip(slopes, slopes[1:]))

    def slopes(self) -> list[Fraction]:
        out = []
        for (x1, y1), (x2, y2) in zip(self.vertices, self.vertices[1:]):
            out.append((y2 - y1) / (x2 - x1))
        return out

    @property
    def endpoint(self) -> tuple[Fraction, Fraction]:
        return self.vertices[-1]

    def value_at(self, x) -> Fraction:
        x = Fraction(x)
        if x < 0 or x > self.vertices[-1][0]:
            raise InputError(f"x = {x} outside polygon domain")
        for (x1, y1), (x2, y2) in zip(self.vertices, self.vertices[1:]):
            if x1 <= x <= x2:
                return y1 + (y2 - y1) * (x - x1) / (x2 - x1)
        return self.vertices[-1][1]

    def dominates(self, other: "PlanarPolygon") -> bool:
        """True when this polygon lies on or above ``other`` pointwise.

        Both polygons must share the domain [0, X].  Piecewise-linear
        functions compare at the union of their breakpoints.
        """
        if self.vertices[-1][0] != other.vertices[-1][0]:
            raise InputError("polygons with different endpoints are not comparable")
        xs = sorted({x for x, _ in self.vertices} | {x for x, _ in other.vertices})
        return all(self.value_at(x) >= other.value_at(x) for x in xs)

    def __eq__(self, other):
        return isinstance(other, PlanarPolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        pts = ", ".join(f"({x}, {y})" for x, y in self.vertices)
        return f"PlanarPolygon([{pts}])"


def pointwise_min_polygon(polygons: Sequence[PlanarPolygon]) -> PlanarPolygon:
    """Lower convex envelope of the pointwise minimum of convex polygons.

    All inputs must share their final x coordinate.  Because every input
    has integer breakpoints in this package, sampling at the union of
    breakpoints is exact.
    """
    if not polygons:
        raise InputError("need at least one polygon")
    end = polygons[0].vertices[-1][0]
    for p in polygons:
        if p.vertices[-1][0] != end:
            raise InputError("polygons with different endpoints are not comparable")
    xs = sorted({x for p in polygons for x, _ in p.vertices})
    pts = [(x, min(p.value_at(x) for p in polygons)) for x in xs]
    return PlanarPolygon.from_lower_hull(pts)
