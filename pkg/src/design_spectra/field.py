"""Arithmetic in GF(p^k) and enumeration of projective points.

An element of GF(p^k) is stored as a polynomial of degree < k over GF(p).
It is encoded as the integer ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``, so
elements are plain ints in ``range(q)``.  ``0`` is zero and ``1`` is one.
:meth:`Field.coeffs` and :meth:`Field.from_coeffs` convert to and from
coefficient vectors (low degree first).
"""

from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, k)`` with ``q == p**k``, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(f for f in itertools.count(2) if q % f == 0)
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    return (p, k) if q == 1 else None


# -- polynomials over GF(p) as coefficient lists, low degree first -----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo monic m over GF(p)."""
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead, shift = a[-1], len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * mi) % p
        _trim(a)
    return a


def _has_factor_of_degree(poly: list[int], deg: int, p: int) -> bool:
    for tail in itertools.product(range(p), repeat=deg):
        if _poly_mod(poly, list(tail) + [1], p) == []:
            return True
    return False


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division of a monic polynomial by all monic polys of degree <= deg/2."""
    k = len(poly) - 1
    if k < 1:
        return False
    return not any(_has_factor_of_degree(poly, j, p) for j in range(1, k // 2 + 1))


def smallest_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree k (low-degree first)."""
    # product order varies the last slot fastest, so reverse to compare c_0 first
    for tail in itertools.product(range(p), repeat=k):
        poly = list(reversed(tail)) + [1]
        if is_irreducible(poly, p):
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


class Field:
    """The finite field GF(p^k) with a fixed, deterministic modulus."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.q = p**k
        # degree 1: x - 0, so reduction leaves constants unchanged
        self.modulus = [0, 1] if k == 1 else smallest_irreducible(p, k)

    def __repr__(self) -> str:
        return f"Field(p={self.p}, k={self.k})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.k, self.modulus) == (
            other.p, other.k, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, tuple(self.modulus)))

    @property
    def elements(self) -> range:
        return range(self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, coeffs) -> int:
        reduced = _poly_mod(list(coeffs), self.modulus, self.p)
        return sum(c * self.p**i for i, c in enumerate(reduced))

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")

    # arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.k == 1:
            return (a + b) % self.p
        return self.from_coeffs([x + y for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def neg(self, a: int) -> int:
        self._check(a)
        if self.k == 1:
            return -a % self.p
        return self.from_coeffs([-x for x in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.k == 1:
            return a * b % self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        return self.from_coeffs(prod)

    def inv(self, a: int) -> int:
        """Multiplicative inverse via the extended Euclidean algorithm."""
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.k == 1:
            return pow(a, -1, self.p)
        p = self.p
        # invariant: s_i * a == r_i  (mod modulus)
        r0, r1 = list(self.modulus), _trim(list(self.coeffs(a)))
        s0, s1 = [], [1]
        while r1:
            q, r = _poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
        # r0 is a nonzero constant since the modulus is irreducible
        c = pow(r0[0], -1, p)
        return self.from_coeffs([c * x for x in s0])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # lookup tables for vectorized work ----------------------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        return np.array([[self.add(a, b) for b in self.elements] for a in self.elements],
                        dtype=np.int64)

    @cached_property
    def mul_table(self) -> np.ndarray:
        return np.array([[self.mul(a, b) for b in self.elements] for a in self.elements],
                        dtype=np.int64)

    # vectors ------------------------------------------------------------

    def dot(self, u, v) -> int:
        if len(u) != len(v):
            raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
        acc = 0
        for x, y in zip(u, v):
            acc = self.add(acc, self.mul(x, y))
        return acc

    def normalize(self, v) -> tuple[int, ...]:
        """Scale a nonzero vector so its first nonzero coordinate is 1."""
        lead = next((x for x in v if x != 0), None)
        if lead is None:
            raise ValueError("the zero vector spans no projective point")
        s = self.inv(lead)
        return tuple(self.mul(s, x) for x in v)


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_divmod(a, b, p):
    a = _trim([x % p for x in a])
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] * inv_lead % p
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        _trim(a)
    return _trim(q), a


def field_make(p: int, k: int = 1) -> Field:
    return Field(p, k)


def field_of_order(q: int) -> Field:
    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    return Field(*pk)


def dot_product(f: Field, u, v) -> int:
    return f.dot(u, v)


def projective_points(f: Field, n: int) -> list[tuple[int, ...]]:
    """Normalized representatives of the 1-subspaces of GF(q)^n, in lex order."""
    if n < 2:
        raise ValueError(f"projective points need dimension n >= 2, got {n}")
    pts = []
    for lead_pos in range(n - 1, -1, -1):
        # vectors (0,..,0,1,*,...,*) with the 1 at lead_pos; earlier lead_pos sort later
        for tail in itertools.product(f.elements, repeat=n - 1 - lead_pos):
            pts.append((0,) * lead_pos + (1,) + tail)
    return pts


def incidence_matrix(f: Field, points, hyperplanes) -> np.ndarray:
    """Boolean matrix with ``[i, j]`` true iff point i lies on hyperplane j.

    Hyperplane ``h`` is the kernel of ``x -> <x, h>``.
    """
    P = np.asarray(points, dtype=np.int64)
    H = np.asarray(hyperplanes, dtype=np.int64)
    if f.k == 1:
        return (P @ H.T) % f.p == 0
    add, mul = f.add_table, f.mul_table
    acc = np.zeros((len(P), len(H)), dtype=np.int64)
    for i in range(P.shape[1]):
        acc = add[acc, mul[P[:, i][:, None], H[:, i][None, :]]]
    return acc == 0
