import functools
import random

import pytest

from polyord.decomposition import PointConfiguration
from polyord.expsum import LaurentPolynomial
from polyord.finitefield import make_field
from polyord.polytope import LatticePolytope


@pytest.fixture(scope="session")
def example_polytope():
    """conv(0, (-1,0,0), (1,2,0), (1,0,2)): the worked three-variable case."""
    return LatticePolytope.from_newton([(-1, 0, 0), (1, 2, 0), (1, 0, 2)])


@pytest.fixture(scope="session")
def example_f():
    """1/x1 + x1 x2^2 + x1 x3^2 over GF(3)."""
    return LaurentPolynomial.make(
        make_field(3, 1),
        3,
        [((-1, 0, 0), 1), ((1, 2, 0), 1), ((1, 0, 2), 1)],
    )


def example_f_at(p):
    return LaurentPolynomial.make(
        make_field(p, 1),
        3,
        [((-1, 0, 0), 1), ((1, 2, 0), 1), ((1, 0, 2), 1)],
    )


@pytest.fixture(scope="session")
def pinwheel():
    """The 7-cell spiral triangulation of conv((0,0),(4,0),(0,4)) around
    the inner triangle (1,1),(2,1),(1,2); valid but not regular."""
    from polyord.decomposition import Decomposition

    config = PointConfiguration([(0, 0), (4, 0), (0, 4), (1, 1), (2, 1), (1, 2)])
    o1, o2, o3, i1, i2, i3 = range(6)
    cells = [
        (o1, o2, i2),
        (o1, i2, i1),
        (o2, o3, i3),
        (o2, i3, i2),
        (o3, o1, i1),
        (o3, i1, i3),
        (i1, i2, i3),
    ]
    return Decomposition.make(config, cells)


@pytest.fixture(scope="session")
def pentagon_config():
    """Convex lattice pentagon with one interior and one edge lattice point."""
    return PointConfiguration(
        [(0, 0), (2, 0), (3, 2), (1, 4), (-1, 2), (1, 2), (1, 0)]
    )


def seeded(seed):
    return random.Random(seed)


def acceptance(number, title):
    """Print one PASS/FAIL line per acceptance criterion."""

    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                result = fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {number} ({title}): FAIL")
                raise
            print(f"ACCEPTANCE {number} ({title}): PASS")
            return result

        return wrapper

    return decorate
