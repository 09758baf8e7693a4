"""Arithmetic in GF(p^a) with a deterministic choice of modulus.

Elements are encoded as integers in [0, p^a): the base-p digits of the
code are the coefficients of the residue polynomial, constant term
first.  The modulus is the lexicographically smallest monic irreducible
of its degree (ordered by the code of its non-leading coefficients), so
two fields with the same (p, a) are identical.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from .errors import InputError, InternalError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _poly_trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_divmod(prod, modulus, p)


def _poly_divmod(a: list[int], modulus: list[int], p: int) -> list[int]:
    a = list(a)
    deg_m = len(modulus) - 1
    inv_lead = pow(modulus[-1], -1, p)
    while len(a) > deg_m:
        coef = a[-1] * inv_lead % p
        if coef:
            shift = len(a) - 1 - deg_m
            for i, m in enumerate(modulus):
                a[shift + i] = (a[shift + i] - coef * m) % p
        a.pop()
    return _poly_trim(a)


def _poly_powmod(base: list[int], exp: int, modulus: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_divmod(list(base), modulus, p)
    while exp:
        if exp & 1:
            result = _poly_mulmod(result, base, modulus, p)
        base = _poly_mulmod(base, base, modulus, p)
        exp >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        r = list(a)
        while len(r) >= len(b) and r:
            coef = r[-1] * inv % p
            shift = len(r) - len(b)
            for i, x in enumerate(b):
                r[shift + i] = (r[shift + i] - coef * x) % p
            _poly_trim(r)
        a, b = b, r
    return a


def _sub_pad(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _poly_trim([(x - y) % p for x, y in zip(a, b)])


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over GF(p)."""
    n = len(poly) - 1
    if n <= 0:
        return False
    x = [0, 1]
    xq = _poly_powmod(x, p**n, poly, p)
    if _sub_pad(xq, x, p):
        return False  # x^(p^n) != x mod poly
    for r in prime_factors(n):
        xq_r = _poly_powmod(x, p ** (n // r), poly, p)
        g = _poly_gcd(poly, _sub_pad(xq_r, x, p), p)
        if len(g) - 1 != 0:
            return False
    return True


def _smallest_irreducible(p: int, a: int) -> list[int]:
    """Monic irreducible of degree a with the smallest coefficient code."""
    if a == 1:
        return [0, 1]  # the polynomial x; GF(p)[x]/(x) = GF(p)
    for code in range(p**a):
        coeffs = []
        c = code
        for _ in range(a):
            coeffs.append(c % p)
            c //= p
        poly = coeffs + [1]
        if _is_irreducible(poly, p):
            return poly
    raise InternalError(f"no irreducible of degree {a} over GF({p})")


class FiniteField:
    """GF(p^a) with integer-coded elements and absolute trace to GF(p)."""

    def __init__(self, p: int, a: int):
        if not is_prime(p):
            raise InputError(f"{p} is not prime")
        if a < 1:
            raise InputError("extension degree must be positive")
        self.p = p
        self.a = a
        self.q = p**a
        self.modulus = tuple(_smallest_irreducible(p, a))
        self._log: Optional[dict[int, int]] = None
        self._exp: Optional[list[int]] = None
        self._trace: Optional[list[int]] = None

    def __repr__(self):
        return f"FiniteField({self.p}, {self.a})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.a) == (other.p, other.a)

    def __hash__(self):
        return hash(("FiniteField", self.p, self.a))

    # -- encoding ------------------------------------------------------

    def decode(self, code: int) -> list[int]:
        coeffs = []
        for _ in range(self.a):
            coeffs.append(code % self.p)
            code //= self.p
        return coeffs

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.a:
            coeffs = _poly_divmod([c % self.p for c in coeffs], list(self.modulus), self.p)
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + (c % self.p)
        return code

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def units(self) -> Iterator[int]:
        return iter(range(1, self.q))

    # -- arithmetic ----------------------------------------------------

    def add(self, x: int, y: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.a):
            out += ((x + y) % p) * mult
            x //= p
            y //= p
            mult *= p
        return out

    def neg(self, x: int) -> int:
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.a):
            out += (-x % p) * mult
            x //= p
            mult *= p
        return out

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        prod = _poly_mulmod(self.decode(x), self.decode(y), list(self.modulus), self.p)
        return self.encode(prod)

    def pow(self, x: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(x), -e)
        out = 1
        base = x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, x: int) -> int:
        if x == 0:
            raise InputError("zero has no inverse")
        return self.pow(x, self.q - 2)

    # -- structure -----------------------------------------------------

    def trace(self, x: int) -> int:
        """Absolute trace to the prime field, returned as an int in [0, p)."""
        if self._trace is not None:
            return self._trace[x]
        acc = 0
        power = x
        for _ in range(self.a):
            acc = self.add(acc, power)
            power = self.pow(power, self.p)
        if acc >= self.p:
            raise InternalError("trace landed outside the prime field")
        return acc

    def generator(self) -> int:
        """Smallest-code generator of the multiplicative group."""
        if self.q == 2:
            return 1
        factors = prime_factors(self.q - 1)
        for cand in range(2, self.q):
            if all(self.pow(cand, (self.q - 1) // r) != 1 for r in factors):
                return cand
        raise InternalError("no multiplicative generator found")

    def log_tables(self) -> tuple[list[int], dict[int, int]]:
        """(exp, log): exp[i] = g^i codes; log maps codes back to exponents."""
        if self._exp is None:
            g = self.generator()
            exp = [1]
            cur = 1
            for _ in range(self.q - 2):
                cur = self.mul(cur, g)
                exp.append(cur)
            self._exp = exp
            self._log = {code: i for i, code in enumerate(exp)}
            if len(self._log) != self.q - 1:
                raise InternalError("multiplicative group enumeration collided")
        return self._exp, self._log

    def trace_table(self) -> list[int]:
        """Traces of all q element codes, index = code."""
        if self._trace is None:
            # traces are linear over GF(p): combine per-basis-element traces
            basis_traces = [self.trace(self.p**i) for i in range(self.a)]
            table = []
            for code in range(self.q):
                c = code
                acc = 0
                for i in range(self.a):
                    acc += (c % self.p) * basis_traces[i]
                    c //= self.p
                table.append(acc % self.p)
            self._trace = table
        return self._trace

    def embedding_from(self, subfield: "FiniteField"):
        """Ring embedding GF(p^a) -> GF(p^(a*k)), deterministic root choice."""
        if subfield.p != self.p or self.a % subfield.a != 0:
            raise InputError("no embedding between these fields")
        if subfield.a == self.a and subfield.modulus == self.modulus:
            return lambda code: code
        mod = list(subfield.modulus)
        root = None
        for cand in range(self.q):
            # evaluate the subfield modulus at cand via Horner's rule
            acc = 0
            for c in reversed(mod):
                acc = self.add(self.mul(acc, cand), c % self.p)
            if acc == 0:
                root = cand
                break
        if root is None:
            raise InternalError("subfield modulus has no root in the extension")

        powers = [1]
        for _ in range(subfield.a - 1):
            powers.append(self.mul(powers[-1], root))

        def embed(code: int) -> int:
            coeffs = subfield.decode(code)
            acc = 0
            for c, pw in zip(coeffs, powers):
                term = self.mul(c % self.p, pw)
                acc = self.add(acc, term)
            return acc

        return embed


@lru_cache(maxsize=None)
def make_field(p: int, a: int) -> FiniteField:
    """Deterministic GF(p^a); cached so repeated calls share tables."""
    return FiniteField(p, a)
