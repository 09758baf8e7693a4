"""Exact arithmetic in Z[zeta_p] and the q-adic valuation.

Elements are stored on the power basis 1, zeta, ..., zeta^(p-2) with the
relation zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).  Valuations go
through the field norm: p is totally ramified in Q(zeta_p), so every
conjugate shares the valuation and ord_p(c) = ord_p(Norm(c)) / (p - 1)
with integer-only computation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InputError, InternalError
from .finitefield import is_prime
from .linalg import Matrix
from .rationals import INF, RationalOrInf


class CyclotomicInteger:
    """An element of Z[zeta_p] in canonical reduced coordinates."""

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords: Sequence[int]):
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        coords = tuple(int(c) for c in coords)
        if len(coords) != p - 1:
            raise InputError(f"need {p - 1} coordinates for Z[zeta_{p}]")
        self.p = p
        self.coords = coords

    @classmethod
    def from_int(cls, p: int, value: int) -> "CyclotomicInteger":
        return cls(p, (int(value),) + (0,) * (p - 2))

    @classmethod
    def zeta_power(cls, p: int, exponent: int) -> "CyclotomicInteger":
        return cls.from_counts(p, [1 if t == exponent % p else 0 for t in range(p)])

    @classmethod
    def from_counts(cls, p: int, counts: Sequence[int]) -> "CyclotomicInteger":
        """sum_t counts[t] * zeta^t reduced onto the power basis."""
        counts = [int(c) for c in counts]
        if len(counts) != p:
            raise InputError(f"need {p} exponent counts")
        top = counts[p - 1]
        return cls(p, [counts[i] - top for i in range(p - 1)])

    def _check_compatible(self, other: "CyclotomicInteger"):
        if self.p != other.p:
            raise InputError("mixed cyclotomic orders")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.p, other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        self._check_compatible(other)
        return CyclotomicInteger(
            self.p, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.p, tuple(-a for a in self.coords))

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.p, other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.p, tuple(other * a for a in self.coords))
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        self._check_compatible(other)
        p = self.p
        conv = [0] * (2 * (p - 1) - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    conv[i + j] += a * b
        # fold zeta^k for k >= p-1 using zeta^(p-1) = -(1 + ... + zeta^(p-2)),
        # equivalently zeta^k = zeta^(k mod p) and counts reduce as in from_counts
        counts = [0] * p
        for k, c in enumerate(conv):
            counts[k % p] += c
        return CyclotomicInteger.from_counts(p, counts)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.from_int(self.p, other)
        return (
            isinstance(other, CyclotomicInteger)
            and self.p == other.p
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.p, self.coords))

    def __repr__(self):
        return f"CyclotomicInteger(p={self.p}, {list(self.coords)})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def as_int(self) -> int:
        """The rational integer this element equals; raises otherwise."""
        if any(c != 0 for c in self.coords[1:]):
            raise InputError("element is not a rational integer")
        return self.coords[0]

    def galois(self, s: int) -> "CyclotomicInteger":
        """Apply the automorphism zeta -> zeta^s, gcd(s, p) = 1."""
        if s % self.p == 0:
            raise InputError("galois exponent must be prime to p")
        counts = [0] * self.p
        for i, c in enumerate(self.coords):
            counts[(i * s) % self.p] += c
        return CyclotomicInteger.from_counts(self.p, counts)

    def divide_exact(self, m: int) -> "CyclotomicInteger":
        """Divide by a nonzero integer, requiring exact divisibility."""
        if m == 0:
            raise InputError("division by zero")
        if any(c % m for c in self.coords):
            raise InputError(f"element is not divisible by {m}")
        return CyclotomicInteger(self.p, tuple(c // m for c in self.coords))

    def norm(self) -> int:
        """Field norm to Z, as the resultant of Phi_p with the coordinate
        polynomial (a Sylvester determinant over the integers)."""
        p = self.p
        if self.is_zero():
            return 0
        if p == 2:
            return self.coords[0]
        c = list(self.coords)
        while c and c[-1] == 0:
            c.pop()
        deg_c = len(c) - 1
        if deg_c == 0:
            return c[0] ** (p - 1)
        phi = [1] * p  # 1 + x + ... + x^(p-1)
        n_phi = p - 1
        size = n_phi + deg_c
        rows = []
        for i in range(deg_c):
            rows.append([0] * i + phi[::-1] + [0] * (size - n_phi - 1 - i))
        for i in range(n_phi):
            rows.append([0] * i + c[::-1] + [0] * (size - deg_c - 1 - i))
        det = Matrix(rows).det()
        if det.denominator != 1:
            raise InternalError("resultant of integer polynomials must be integral")
        return int(det)


def ord_p(value: CyclotomicInteger) -> RationalOrInf:
    """p-adic valuation on Z[zeta_p], normalized with ord_p(p) = 1."""
    if value.is_zero():
        return INF
    norm = value.norm()
    if norm == 0:
        raise InternalError("nonzero element with zero norm")
    p = value.p
    v = 0
    n = abs(norm)
    while n % p == 0:
        n //= p
        v += 1
    return Fraction(v, p - 1)


def ord_q(value: CyclotomicInteger, p: int, a: int = 1) -> RationalOrInf:
    """q-adic valuation with q = p^a, normalized so ord_q(q) = 1."""
    if value.p != p:
        raise InputError("valuation prime does not match the element")
    v = ord_p(value)
    if v is INF:
        return INF
    return v / a
