"""JSON input formats and rational-safe serialization.

Rationals serialize as plain ints when integral and as "num/den"
strings otherwise, so every emitted document re-parses to exactly the
same values.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .decomposition import Decomposition, PointConfiguration
from .errors import InputError
from .expsum import LaurentPolynomial
from .finitefield import make_field
from .hull import PlanarPolygon
from .linalg import intvec
from .polytope import LatticePolytope
from .rationals import format_rational, parse_rational


def load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(
            f"malformed JSON in {path} at line {exc.lineno}, column {exc.colno}: "
            f"{exc.msg}"
        ) from exc


def parse_json_text(text: str) -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _int_vectors(data, what: str) -> list[tuple[int, ...]]:
    if not isinstance(data, list) or not data:
        raise InputError(f"{what} must be a non-empty array of integer arrays")
    out = []
    for row in data:
        if not isinstance(row, list) or not all(isinstance(c, int) for c in row):
            raise InputError(f"{what} entries must be arrays of integers")
        out.append(intvec(row))
    return out


def polytope_from_json(doc: dict) -> LatticePolytope:
    """{"vertices": [[...], ...]}; the origin is implicit and must not be
    listed."""
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise InputError('polytope JSON needs a "vertices" field')
    vertices = _int_vectors(doc["vertices"], "vertices")
    dim = len(vertices[0])
    origin = tuple(0 for _ in range(dim))
    if origin in vertices:
        raise InputError("the origin is implicit and must not be listed")
    return LatticePolytope.from_newton(vertices)


def polytope_to_json(polytope: LatticePolytope) -> dict:
    origin = tuple(0 for _ in range(polytope.dim))
    return {"vertices": [list(v) for v in polytope.vertices if v != origin]}


def laurent_from_json(doc: dict) -> LaurentPolynomial:
    """{"p": 3, "a": 1, "n": 3, "terms": [{"exp": [...], "coeff": [...]}]}
    with "coeff" the coordinate vector in the polynomial basis."""
    for key in ("p", "a", "n", "terms"):
        if key not in doc:
            raise InputError(f'Laurent JSON needs a "{key}" field')
    p, a, n = doc["p"], doc["a"], doc["n"]
    if not all(isinstance(x, int) and x > 0 for x in (p, a, n)):
        raise InputError("p, a, n must be positive integers")
    field = make_field(p, a)
    terms = []
    for term in doc["terms"]:
        if not isinstance(term, dict) or "exp" not in term or "coeff" not in term:
            raise InputError('each term needs "exp" and "coeff"')
        exp = intvec(term["exp"])
        if len(exp) != n:
            raise InputError(f"exponent {list(exp)} has wrong dimension")
        coeff_vec = term["coeff"]
        if not isinstance(coeff_vec, list) or not all(
            isinstance(c, int) for c in coeff_vec
        ):
            raise InputError("coefficients are arrays of integers")
        if len(coeff_vec) > a:
            raise InputError("coefficient vector longer than the field degree")
        code = field.encode(coeff_vec)
        terms.append((exp, code))
    return LaurentPolynomial.make(field, n, terms)


def laurent_to_json(f: LaurentPolynomial) -> dict:
    return {
        "p": f.field.p,
        "a": f.field.a,
        "n": f.n,
        "terms": [
            {"exp": list(e), "coeff": f.field.decode(c)} for e, c in f.terms
        ],
    }


def configuration_from_json(doc: dict) -> tuple[PointConfiguration, Optional[Decomposition]]:
    """{"polytope": {...}?, "points": [[...]], "cells": [[i, ...]]?}

    The optional polytope block is validated against the hull of the
    points; cells, when present, produce a Decomposition.
    """
    if "points" not in doc:
        raise InputError('decomposition JSON needs a "points" field')
    points = _int_vectors(doc["points"], "points")
    config = PointConfiguration(points)
    if "polytope" in doc and doc["polytope"] is not None:
        listed = _int_vectors(doc["polytope"].get("vertices"), "polytope vertices")
        hull = sorted(config.hull_vertices())
        if sorted(listed) != hull:
            raise InputError(
                "polytope vertices do not match the hull of the points"
            )
    decomposition = None
    if "cells" in doc and doc["cells"] is not None:
        cells = doc["cells"]
        if not isinstance(cells, list) or not all(
            isinstance(c, list) and all(isinstance(i, int) for i in c) for c in cells
        ):
            raise InputError("cells must be arrays of point indices")
        decomposition = Decomposition.make(config, [tuple(c) for c in cells])
    return config, decomposition


def decomposition_to_json(decomposition: Decomposition) -> dict:
    config = decomposition.config
    return {
        "polytope": {"vertices": [list(p) for p in sorted(config.hull_vertices())]},
        "points": [list(p) for p in config.points],
        "cells": [list(c) for c in decomposition.cells],
    }


def polygon_to_json(polygon: PlanarPolygon) -> list:
    return [[format_rational(x), format_rational(y)] for x, y in polygon.vertices]


def polygon_from_json(data) -> PlanarPolygon:
    if not isinstance(data, list):
        raise InputError("polygon JSON must be an array of [x, y] pairs")
    vertices = []
    for pair in data:
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError("polygon vertices are [x, y] pairs")
        vertices.append((parse_rational(pair[0]), parse_rational(pair[1])))
    return PlanarPolygon(vertices, require_convex=False)


def polygon_to_tsv(polygon: PlanarPolygon) -> str:
    lines = [
        f"{format_rational(x)}\t{format_rational(y)}" for x, y in polygon.vertices
    ]
    return "\n".join(lines) + "\n"


def polygon_to_svg(polygon: PlanarPolygon, width: int = 400, height: int = 300) -> str:
    """Straight-line rendering of the polygon vertices as a standalone SVG."""
    xs = [float(x) for x, _ in polygon.vertices]
    ys = [float(y) for _, y in polygon.vertices]
    x_span = max(xs[-1], 1.0)
    y_span = max(max(ys), 1.0)
    margin = 20.0
    sx = (width - 2 * margin) / x_span
    sy = (height - 2 * margin) / y_span
    coords = [
        (margin + float(x) * sx, height - margin - float(y) * sy)
        for x, y in polygon.vertices
    ]
    pts = " ".join(f"{cx:.3f},{cy:.3f}" for cx, cy in coords)
    circles = "".join(
        f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="3" fill="black"/>'
        for cx, cy in coords
    )
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
        f'<polyline points="{pts}" fill="none" stroke="black" stroke-width="1.5"/>'
        f"{circles}</svg>\n"
    )


def dump_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(", ", ": ")) + "\n"
