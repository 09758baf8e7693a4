"""Brute-force exponential sums, L-functions, and Newton polygons.

The sum S_k over (F_{q^k}^*)^n is computed by counting, for each t in
GF(p), the points where the trace of f equals t.  Points are indexed by
discrete logarithms, so a monomial evaluation is an index dot product
modulo q^k - 1 followed by a trace-table lookup; the whole sweep is
exact integer work, vectorized with numpy and chunked to bound memory.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .cyclotomic import CyclotomicInteger, ord_q
from .errors import BudgetExceeded, InputError, InternalError
from .finitefield import FiniteField, make_field
from .hull import PlanarPolygon, pointwise_min_polygon
from .linalg import IntVector, intvec
from .polytope import LatticePolytope
from .rationals import INF

DEFAULT_BUDGET = 10**8
_CHUNK_ELEMENTS = 1 << 22


@dataclass(frozen=True)
class LaurentPolynomial:
    """f = sum_j a_j x^(V_j) over GF(p^a), exponents in Z^n."""

    field: FiniteField
    n: int
    terms: tuple[tuple[IntVector, int], ...]

    def __post_init__(self):
        if not self.terms:
            raise InputError("Laurent polynomial needs at least one term")
        seen = set()
        for exponent, coeff in self.terms:
            if len(exponent) != self.n:
                raise InputError("exponent dimension mismatch")
            if exponent in seen:
                raise InputError(f"duplicate exponent {exponent}")
            seen.add(exponent)
            if not 0 < coeff < self.field.q:
                raise InputError("coefficients must be nonzero field elements")

    @classmethod
    def make(cls, field: FiniteField, n: int, terms) -> "LaurentPolynomial":
        canon = tuple(sorted((intvec(e), int(c)) for e, c in terms))
        return cls(field=field, n=n, terms=canon)

    def newton_polytope(self) -> LatticePolytope:
        return LatticePolytope.from_newton([e for e, _ in self.terms])

    def __str__(self):
        parts = []
        for exponent, coeff in self.terms:
            mono = "*".join(f"x{i + 1}^{e}" for i, e in enumerate(exponent) if e != 0)
            parts.append(f"{coeff}*{mono}" if mono else str(coeff))
        return " + ".join(parts)


@dataclass(frozen=True)
class LPolynomial:
    """Coefficients A_0 = 1, A_1, ... of L*(f,T)^((-1)^(n-1))."""

    p: int
    a: int
    coefficients: tuple[CyclotomicInteger, ...]
    sign_exponent: int  # (-1)^(n-1)

    def degree(self) -> int:
        return len(self.coefficients) - 1


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("POLYORD_WORKERS", "1")))
    except ValueError:
        return 1


def exp_sum_counts(
    f: LaurentPolynomial,
    k: int,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> list[int]:
    """Per-residue counts N_t = #{x in (F_{q^k}^*)^n : Tr(f(x)) = t}."""
    if k < 1:
        raise InputError("k must be a positive integer")
    field = f.field
    p = field.p
    big = make_field(p, field.a * k)
    group = big.q - 1
    points = group**f.n
    limit = DEFAULT_BUDGET if budget is None else int(budget)
    if points > limit:
        raise BudgetExceeded(required=points, budget=limit)

    exp_codes, log = big.log_tables()
    trace_codes = big.trace_table()
    trace_of_log = np.array([trace_codes[code] for code in exp_codes], dtype=np.int64)

    embed = big.embedding_from(field)
    coeff_logs = [log[embed(coeff)] for _, coeff in f.terms]
    exponents = [e for e, _ in f.terms]

    n = f.n
    bins = len(f.terms) * (p - 1) + 1
    inner_shape = (group,) * (n - 1)
    inner_size = group ** (n - 1)
    grids = np.meshgrid(
        *[np.arange(group, dtype=np.int64) for _ in range(n - 1)], indexing="ij"
    )
    partials = []
    for c_log, exponent in zip(coeff_logs, exponents):
        part = np.full(inner_shape, c_log, dtype=np.int64)
        for axis in range(n - 1):
            if exponent[axis + 1]:
                part = part + exponent[axis + 1] * grids[axis]
        partials.append(part.ravel() % group)

    chunk = max(1, _CHUNK_ELEMENTS // max(1, inner_size))
    spans = [(s, min(group, s + chunk)) for s in range(0, group, chunk)]

    def count_span(span):
        start, stop = span
        block = np.arange(start, stop, dtype=np.int64)[:, None]
        acc = np.zeros((stop - start, inner_size), dtype=np.int64)
        for c_log, exponent, part in zip(coeff_logs, exponents, partials):
            term_idx = (part[None, :] + exponent[0] * block) % group
            acc += trace_of_log[term_idx]
        return np.bincount(acc.ravel(), minlength=bins)

    workers = _workers()
    if workers > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partial_counts = list(pool.map(count_span, spans))
    else:
        partial_counts = [count_span(span) for span in spans]
    counts = np.zeros(bins, dtype=np.int64)
    for c in partial_counts:
        counts += c

    folded = [0] * p
    for value, c in enumerate(counts.tolist()):
        folded[value % p] += c
    if sum(folded) != points:
        raise InternalError("exponential sum counts do not cover all points")
    return folded


def exp_sum(
    f: LaurentPolynomial,
    k: int,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> CyclotomicInteger:
    """S_k(f) = sum over (F_{q^k}^*)^n of zeta_p^(trace of f), exactly."""
    counts = exp_sum_counts(f, k, budget)
    return CyclotomicInteger.from_counts(f.field.p, counts)


def _l_coefficients_from_sums(
    p: int, n: int, sums: Sequence[CyclotomicInteger], degree: int
) -> list[CyclotomicInteger]:
    sign = (-1) ** (n - 1)
    coeffs = [CyclotomicInteger.from_int(p, 1)]
    for m in range(1, degree + 1):
        acc = CyclotomicInteger.from_int(p, 0)
        for k in range(1, m + 1):
            s = sums[k - 1] if sign == 1 else -sums[k - 1]
            acc = acc + s * coeffs[m - k]
        try:
            coeffs.append(acc.divide_exact(m))
        except InputError as exc:
            raise InputError(
                "L-series is not a polynomial of the expected degree "
                f"(coefficient {m} is not integral); the input is degenerate"
            ) from exc
    return coeffs


def l_polynomial(
    f: LaurentPolynomial,
    budget: Optional[int] = DEFAULT_BUDGET,
    check_degree: bool = False,
) -> LPolynomial:
    """Exact coefficients of L*(f,T)^((-1)^(n-1)) for non-degenerate f.

    The degree is n!Vol of the Newton polytope; coefficients come from
    the recursion m A_m = sum_k S'_k A_(m-k) whose divisions must all be
    exact in Z[zeta_p].  With ``check_degree`` the sum S_(d+1) is also
    computed and the degree-(d+1) coefficient is asserted to vanish.
    """
    p = f.field.p
    degree = f.newton_polytope().normalized_volume()
    sign = (-1) ** (f.n - 1)
    sums = [exp_sum(f, k, budget) for k in range(1, degree + 1)]
    coeffs = _l_coefficients_from_sums(p, f.n, sums, degree)
    if check_degree:
        extra = exp_sum(f, degree + 1, budget)
        acc = extra if sign == 1 else -extra
        for k in range(1, degree + 1):
            s = sums[k - 1] if sign == 1 else -sums[k - 1]
            acc = acc + s * coeffs[degree + 1 - k]
        failed = False
        try:
            failed = not acc.divide_exact(degree + 1).is_zero()
        except InputError:
            failed = True
        if failed:
            raise InputError(
                "L-series is not a polynomial of the expected degree; "
                "the input is degenerate"
            )
    return LPolynomial(p=p, a=f.field.a, coefficients=tuple(coeffs), sign_exponent=sign)


def newton_polygon_of(lpoly: LPolynomial) -> PlanarPolygon:
    """Lower convex hull of (i, ord_q A_i); zero coefficients are omitted."""
    points = []
    for i, coeff in enumerate(lpoly.coefficients):
        v = ord_q(coeff, lpoly.p, lpoly.a)
        points.append((Fraction(i), v if v is not INF else INF))
    return PlanarPolygon.from_lower_hull(points)


def newton_polygon(
    f: LaurentPolynomial,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> PlanarPolygon:
    return newton_polygon_of(l_polynomial(f, budget))


@dataclass(frozen=True)
class OrdinarityVerdict:
    ordinary: bool
    newton: PlanarPolygon
    hodge: PlanarPolygon


def is_ordinary(
    f: LaurentPolynomial,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> OrdinarityVerdict:
    """Exact comparison of the Newton polygon with the Hodge polygon."""
    from .polytope import hodge_polygon

    np_poly = newton_polygon(f, budget)
    hp_poly = hodge_polygon(f.newton_polytope())
    if np_poly.vertices[-1][0] != hp_poly.vertices[-1][0]:
        raise InputError(
            "L-polynomial degree dropped below n!Vol; the input is degenerate"
        )
    if not np_poly.dominates(hp_poly):
        raise InputError(
            "Newton polygon dips below the Hodge polygon; the input is degenerate"
        )
    return OrdinarityVerdict(ordinary=np_poly == hp_poly, newton=np_poly, hodge=hp_poly)


def sample_gnp(
    polytope: LatticePolytope,
    p: int,
    a: int,
    trials: int,
    seed: int,
    budget: Optional[int] = DEFAULT_BUDGET,
) -> PlanarPolygon:
    """Pointwise minimum of Newton polygons over random f with the given
    Newton polytope.

    This is an empirical upper-bound estimate of the generic Newton
    polygon, not the generic polygon itself.  Vertex monomials always get
    nonzero coefficients; the other nonzero lattice points of the
    polytope get arbitrary ones.  Draws whose L-series fails to be a
    polynomial of full degree (degenerate f) are skipped; the outcome is
    deterministic for a fixed seed.
    """
    if trials < 1:
        raise InputError("trials must be positive")
    if not polytope.contains_origin:
        raise InputError("sampling requires a polytope containing the origin")
    field = make_field(p, a)
    rng = random.Random(seed)
    origin = tuple(0 for _ in range(polytope.dim))
    vertex_exponents = polytope.nonzero_vertices()
    optional_exponents = [
        pt
        for pt in polytope.lattice_points()
        if pt != origin and pt not in vertex_exponents
    ]
    expected_degree = polytope.normalized_volume()
    polygons = []
    attempts = 0
    while len(polygons) < trials:
        attempts += 1
        if attempts > 20 * trials + 100:
            raise InternalError("sampling keeps drawing degenerate polynomials")
        terms = [(v, rng.randrange(1, field.q)) for v in vertex_exponents]
        for pt in optional_exponents:
            c = rng.randrange(0, field.q)
            if c:
                terms.append((pt, c))
        f = LaurentPolynomial.make(field, polytope.dim, terms)
        try:
            lpoly = l_polynomial(f, budget)
        except InputError:
            continue  # degenerate draw
        if lpoly.coefficients[-1].is_zero():
            continue  # degree dropped: degenerate draw
        polygon = newton_polygon_of(lpoly)
        if polygon.vertices[-1][0] != expected_degree:
            raise InternalError("sampled Newton polygon has unexpected width")
        polygons.append(polygon)
    return pointwise_min_polygon(polygons)
