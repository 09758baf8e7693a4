"""polyord: exact Hodge and Newton polygons for exponential sums over
finite fields, with lattice polytope decomposition tools.

Everything is computed in exact rational arithmetic; polygon equalities
are genuine equalities, never tolerance checks.
"""

from .errors import BudgetExceeded, InputError, InternalError, PolyordError
from .hull import PlanarPolygon, lower_convex_hull, pointwise_min_polygon
from .linalg import Matrix, hyperplane_through, smith_normal_form
from .polytope import (
    AffineFunctional,
    ConeRegion,
    FaceDescriptor,
    LatticePolytope,
    chain_polygon,
    count_by_weight,
    hodge_numbers,
    hodge_polygon,
)
from .rationals import INF, ExactRational
from .simplex import LpResult, lp_optimize

__version__ = "0.1.0"

__all__ = [
    "AffineFunctional",
    "BudgetExceeded",
    "ConeRegion",
    "ExactRational",
    "FaceDescriptor",
    "INF",
    "InputError",
    "InternalError",
    "LatticePolytope",
    "LpResult",
    "Matrix",
    "PlanarPolygon",
    "PolyordError",
    "chain_polygon",
    "count_by_weight",
    "hodge_numbers",
    "hodge_polygon",
    "hyperplane_through",
    "lower_convex_hull",
    "lp_optimize",
    "pointwise_min_polygon",
    "smith_normal_form",
    "__version__",
]
