"""Exact and numeric eigenvalues of integer symmetric matrices.

Exact eigenvalues are plain ``int`` or :class:`Quadratic` (a real quadratic
surd).  Numeric eigenvalues are ``float``.  A :class:`Spectrum` holds either
kind with repetition.

Characteristic polynomials are computed exactly.  The matrix is reduced to
Hessenberg form modulo many word-sized primes, and the coefficients are
recombined by CRT under a rigorous size bound.  For large symmetric matrices,
:func:`char_poly_exact` can instead *certify* a candidate polynomial read
off the numeric spectrum (see :func:`certified_char_poly`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np


class ConvergenceError(RuntimeError):
    pass


# -- exact values -------------------------------------------------------------

def squarefree_decompose(r: int) -> tuple[int, int]:
    """Return ``(f, s)`` with ``r == f*f*s`` and ``s`` squarefree, for ``r >= 1``."""
    if r < 1:
        raise ValueError(f"expected a positive integer, got {r}")
    f, s = 1, 1
    p = 2
    while p * p * p <= r:
        e = 0
        while r % p == 0:
            r //= p
            e += 1
        f *= p ** (e // 2)
        s *= p ** (e % 2)
        p += 1 if p == 2 else 2
    # what is left has at most two prime factors: 1, p, p*p or p*q
    root = math.isqrt(r)
    if root * root == r:
        f *= root
    else:
        s *= r
    return f, s


@dataclass(frozen=True)
class Quadratic:
    """The irrational real number ``(a + b*sqrt(s)) / t`` in canonical form."""

    a: int
    b: int
    s: int
    t: int

    def __post_init__(self):
        if self.t <= 0 or self.b == 0 or self.s <= 1:
            raise ValueError(f"non-canonical surd {self!r}")
        if squarefree_decompose(self.s)[0] != 1:
            raise ValueError(f"radicand {self.s} is not squarefree")
        if math.gcd(self.a, self.b, self.t) != 1:
            raise ValueError(f"surd {self!r} is not in lowest terms")

    def __float__(self) -> float:
        return (self.a + self.b * math.sqrt(self.s)) / self.t

    def conjugate(self) -> Quadratic:
        return Quadratic(self.a, -self.b, self.s, self.t)

    def __str__(self) -> str:
        sign = "+" if self.b > 0 else "-"
        coef = "" if abs(self.b) == 1 else str(abs(self.b))
        num = f"{self.a} {sign} {coef}√{self.s}" if self.a else (
            f"{'-' if self.b < 0 else ''}{coef}√{self.s}")
        return f"({num})/{self.t}" if self.t != 1 else num


Exact = Union[int, Quadratic]
Value = Union[int, Quadratic, float]


def surd(a: int, b: int, radicand: int, t: int = 1) -> Exact:
    """Canonical form of ``(a + b*sqrt(radicand)) / t``.

    Returns an ``int`` when the value is rational.  Raises ValueError for
    rationals that are not integers, which never arise from monic integer
    polynomials.
    """
    if t == 0:
        raise ZeroDivisionError("zero denominator")
    if radicand < 0:
        raise ValueError("negative radicand: value is not real")
    if t < 0:
        a, b, t = -a, -b, -t
    if radicand == 0 or b == 0:
        f, s = 0, 1
    else:
        f, s = squarefree_decompose(radicand)
    b *= f
    if s == 1 or b == 0:
        num = a + b
        if num % t:
            raise ValueError(f"({num})/{t} is not an integer")
        return num // t
    g = math.gcd(a, b, t)
    return Quadratic(a // g, b // g, s, t // g)


def value_key(v: Value) -> float:
    return float(v)


def value_to_json(v: Value) -> dict:
    if isinstance(v, Quadratic):
        return {"kind": "quad", "a": v.a, "b": v.b, "s": v.s, "t": v.t}
    if isinstance(v, (int, np.integer)):
        return {"kind": "int", "v": int(v)}
    return {"kind": "approx", "v": float(v)}


def value_from_json(obj: dict) -> Value:
    kind = obj["kind"]
    if kind == "int":
        return int(obj["v"])
    if kind == "quad":
        return Quadratic(obj["a"], obj["b"], obj["s"], obj["t"])
    if kind == "approx":
        return float(obj["v"])
    raise ValueError(f"unknown value kind {kind!r}")


def is_exact(v: Value) -> bool:
    return isinstance(v, (int, np.integer, Quadratic))


# -- integer polynomials ------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients in ascending degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) if c else (0,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        c = [1]
        for r in roots:
            c = [-r * c[0]] + [c[i - 1] - r * c[i] for i in range(1, len(c))] + [c[-1]]
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs != (0,) else -1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: IntPoly) -> IntPoly:
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    def __pow__(self, k: int) -> IntPoly:
        result, base = IntPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod_monic(self, d: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Quotient and remainder by a monic divisor; exact over the integers."""
        if not d.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = d.degree
        if len(rem) - 1 < dd:
            return IntPoly((0,)), self
        quot = [0] * (len(rem) - dd)
        dc = d.coeffs
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = rem[shift + dd]
            quot[shift] = c
            if c:
                for i in range(dd + 1):
                    rem[shift + i] -= c * dc[i]
        return IntPoly(tuple(quot)), IntPoly(tuple(rem[:dd]) or (0,))

    def deflate(self, r: int) -> IntPoly:
        """Divide by ``x - r``, which must be an exact root."""
        out = [0] * self.degree
        acc = 0
        for i in range(self.degree, 0, -1):
            acc = acc * r + self.coeffs[i]
            out[i - 1] = acc
        if acc * r + self.coeffs[0] != 0:
            raise ValueError(f"{r} is not a root")
        return IntPoly(tuple(out))

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0 and self.degree > 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = abs(c)
            body = f"{mag}{mono}" if (mag != 1 or not mono) else mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


# -- modular characteristic polynomial ----------------------------------------

def _primes_below(limit: int):
    """Primes descending from ``limit``, tested by trial division."""
    c = limit - 1 if limit % 2 == 0 else limit - 2
    while c > 2:
        if all(c % f for f in range(3, math.isqrt(c) + 1, 2)):
            yield c
        c -= 2


_PRIME_CACHE: dict[int, list[int]] = {}


def _prime_list(bits: int, count: int) -> list[int]:
    primes = _PRIME_CACHE.setdefault(bits, [])
    if len(primes) < count:
        gen = _primes_below(primes[-1] if primes else 1 << bits)
        while len(primes) < count:
            primes.append(next(gen))
    return primes[:count]


def _hessenberg_charpoly_mod(a: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial of ``a`` modulo prime ``p`` (ascending coeffs)."""
    n = a.shape[0]
    h = np.mod(a, p).astype(np.int64)
    for j in range(n - 2):
        nz = np.nonzero(h[j + 1:, j])[0]
        if nz.size == 0:
            continue
        i = j + 1 + int(nz[0])
        if i != j + 1:
            h[[i, j + 1], :] = h[[j + 1, i], :]
            h[:, [i, j + 1]] = h[:, [j + 1, i]]
        inv = pow(int(h[j + 1, j]), -1, p)
        u = (h[j + 2:, j] * inv) % p
        if not u.any():
            continue
        # row_i -= u_i * row_{j+1}; then column_{j+1} += sum_i u_i * column_i
        h[j + 2:, :] = (h[j + 2:, :] - np.outer(u, h[j + 1, :]) % p) % p
        h[:, j + 1] = (h[:, j + 1] + (h[:, j + 2:] @ u) % p) % p
    # p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik * (prod_{i<j<=k} h_{j,j-1}) p_{i-1}
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for k in range(1, n + 1):
        prev = polys[k - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur = (cur - (int(h[k - 1, k - 1]) * prev) % p) % p
        if k > 1:
            weights = np.zeros(k - 1, dtype=np.int64)
            prod = 1
            for i in range(k - 1, 0, -1):
                prod = prod * int(h[i, i - 1]) % p
                weights[i - 1] = int(h[i - 1, k - 1]) * prod % p
            if weights.any():
                cur = (cur - (weights @ polys[:k - 1]) % p) % p
        polys[k] = cur
    return [int(x) for x in polys[n]]


def _coefficient_bits(a: np.ndarray) -> int:
    """Bits needed to hold any signed char-poly coefficient of ``a``.

    Every eigenvalue is bounded by the max absolute row sum rho, so
    |c_k| <= C(n, k) rho^(n-k) <= (1 + rho)^n.
    """
    n = a.shape[0]
    rho = int(np.abs(a).sum(axis=1).max()) if n else 0
    return n * (1 + rho).bit_length() + 2


def _modular_char_poly(a: np.ndarray) -> IntPoly:
    n = a.shape[0]
    bits = _coefficient_bits(a)
    pbits = 23  # keeps every int64 product and length-n dot below 2^63
    primes = _prime_list(pbits, bits // (pbits - 1) + 2)
    modulus = 1
    coeffs = [0] * (n + 1)
    for p in primes:
        res = _hessenberg_charpoly_mod(a, p)
        inv = pow(modulus % p, -1, p)
        for i in range(n + 1):
            t = (res[i] - coeffs[i]) * inv % p
            coeffs[i] += modulus * t
        modulus *= p
    half = modulus // 2
    return IntPoly(tuple(c - modulus if c > half else c for c in coeffs))


def _as_int_matrix(m) -> np.ndarray:
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.dtype == object:
        if any(abs(int(x)) >= 1 << 62 for x in a.flat):
            raise ValueError("entries too large for the modular charpoly")
        a = a.astype(np.int64)
    if not np.issubdtype(a.dtype, np.integer):
        if not np.all(a == np.round(a)):
            raise ValueError("matrix has non-integer entries")
        a = a.astype(np.int64)
    return a.astype(np.int64)


CERTIFY_ABOVE = 300


def char_poly_exact(m, method: str = "auto") -> IntPoly:
    """Exact ``det(xI - m)`` of a square integer matrix.

    ``method`` is ``"modular"`` (Hessenberg reduction mod primes + CRT),
    ``"certified"`` (symmetric matrices only, see :func:`certified_char_poly`)
    or ``"auto"``, which certifies symmetric matrices larger than
    ``CERTIFY_ABOVE`` and falls back to the modular route if certification
    fails.
    """
    a = _as_int_matrix(m)
    if a.shape[0] == 0:
        return IntPoly((1,))
    if method == "modular":
        return _modular_char_poly(a)
    symmetric = np.array_equal(a, a.T)
    if method == "certified":
        if not symmetric:
            raise ValueError("certified route needs a symmetric matrix")
        poly = certified_char_poly(a)
        if poly is None:
            raise ValueError("could not certify a candidate characteristic polynomial")
        return poly
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if symmetric and a.shape[0] > CERTIFY_ABOVE:
        poly = certified_char_poly(a)
        if poly is not None:
            return poly
    return _modular_char_poly(a)


# -- certified route ------------------------------------------------------------

def _crt_signed(residues: Sequence[int], primes: Sequence[int]) -> int:
    x, m = 0, 1
    for r, p in zip(residues, primes):
        t = (r - x) * pow(m % p, -1, p) % p
        x += m * t
        m *= p
    return x - m if x > m // 2 else x


def _blas_primes(n: int, need_bits: int) -> list[int]:
    # float64 matmul is exact while n * (p-1)^2 < 2^53
    pbits = (53 - max(n, 1).bit_length()) // 2
    if pbits < 8:
        raise ValueError("matrix too large for exact float64 modular products")
    return _prime_list(pbits, need_bits // (pbits - 1) + 2)


def _mulmod(x: np.ndarray, y: np.ndarray, p: int) -> np.ndarray:
    return np.mod(x @ y, p)


def _factor_candidates(values: np.ndarray, tol: float):
    """Group numeric eigenvalues into integer roots and integer quadratics.

    Returns ``[(IntPoly factor, multiplicity), ...]`` or None when some
    cluster cannot be explained that way.
    """
    groups = _cluster_floats(np.sort(values), tol)
    factors = []
    loose = []
    for centre, count in groups:
        r = round(centre)
        if abs(centre - r) <= tol:
            factors.append((IntPoly((-r, 1)), count))
        else:
            loose.append((centre, count))
    used = [False] * len(loose)
    for i, (x, k) in enumerate(loose):
        if used[i]:
            continue
        for j in range(i + 1, len(loose)):
            y, k2 = loose[j]
            if used[j] or k2 != k:
                continue
            s, pr = x + y, x * y
            rs, rp = round(s), round(pr)
            if abs(s - rs) <= tol and abs(pr - rp) <= tol * max(1.0, abs(x) + abs(y)):
                disc = rs * rs - 4 * rp
                if disc > 0 and math.isqrt(disc) ** 2 != disc:
                    used[i] = used[j] = True
                    factors.append((IntPoly((rp, -rs, 1)), k))
                    break
        if not used[i]:
            return None
    return factors


def _power_sums(factors, jmax: int) -> list[int]:
    """sum_i mult_i * lambda_i^j for j = 0..jmax, exactly, from the factor list."""
    sums = [0] * (jmax + 1)
    for poly, mult in factors:
        if poly.degree == 1:
            r = -poly.coeffs[0]
            for j in range(jmax + 1):
                sums[j] += mult * r**j
        else:
            prod, neg_sum = poly.coeffs[0], poly.coeffs[1]
            s = [2, -neg_sum]  # Newton: s_j = sigma s_{j-1} - pi s_{j-2}
            while len(s) <= jmax:
                s.append(-neg_sum * s[-1] - prod * s[-2])
            for j in range(jmax + 1):
                sums[j] += mult * s[j]
    return sums


def _exact_traces_float(a: np.ndarray, jmax: int, rho: int) -> list[int] | None:
    """``tr(A^j)`` for ``j <= jmax`` in float64, or None if that could round.

    ``tr(A^j) = sum(A^h * (A^(j-h))^T)`` with ``h = ceil(j/2)``, so only powers
    up to ``ceil(jmax/2)`` are formed; every intermediate is below ``n rho^j``.
    """
    n = a.shape[0]
    if n * max(rho, 1) ** max(jmax, 1) >= 2**53:
        return None
    af = a.astype(np.float64)
    powers = [np.eye(n)]
    for _ in range((jmax + 1) // 2):
        powers.append(powers[-1] @ af)
    out = []
    for j in range(jmax + 1):
        h = (j + 1) // 2
        out.append(int(np.sum(powers[h] * powers[j - h].T)))
    return out


def certified_char_poly(a: np.ndarray, tol: float = 1e-6) -> IntPoly | None:
    """Read a factored candidate off ``eigh`` and prove it exactly, or return None.

    Proof: with ``mu`` the product of the distinct candidate factors,
    ``mu(A) == 0`` is checked modulo enough primes to pin every entry
    of ``mu(A)``.  A symmetric ``A`` is diagonalizable, so every eigenvalue
    is then a root of ``mu``.  The multiplicities of those roots are unique
    given ``tr(A^j)`` for ``j < #roots`` (a Vandermonde system), so matching
    these traces exactly proves the candidate multiplicities.
    """
    a = _as_int_matrix(a)
    n = a.shape[0]
    scale = max(1.0, float(np.abs(a).max()))
    values = np.linalg.eigvalsh(a.astype(np.float64))
    factors = _factor_candidates(values, tol * scale)
    if factors is None:
        return None

    rho = int(np.abs(a).sum(axis=1).max())
    # ||mu(A)||_max <= prod ||F(A)||_inf over the distinct factors
    bound = 1
    for poly, _ in factors:
        bound *= sum(abs(c) * rho**i for i, c in enumerate(poly.coeffs))
    primes = _blas_primes(n, bound.bit_length() + 1)
    eye = np.eye(n)
    for p in primes:
        ap = np.mod(a, p).astype(np.float64)
        acc = None
        for poly, _ in factors:
            # F(A) by Horner from the monic leading term
            term = eye
            for c in reversed(poly.coeffs[:-1]):
                term = np.mod(_mulmod(term, ap, p) + (c % p) * eye, p)
            acc = term if acc is None else _mulmod(acc, term, p)
        if acc.any():
            return None

    nroots = sum(poly.degree for poly, _ in factors)
    jmax = nroots - 1
    want = _power_sums(factors, jmax)
    if got_traces := _exact_traces_float(a, jmax, rho):
        got = got_traces
    else:
        trace_bits = (n * max(rho, 1) ** max(jmax, 1)).bit_length() + 1
        primes = _blas_primes(n, trace_bits)
        residues = [[0] * len(primes) for _ in range(jmax + 1)]
        for pi, p in enumerate(primes):
            ap = np.mod(a, p).astype(np.float64)
            power = np.eye(n)
            for j in range(jmax + 1):
                residues[j][pi] = int(np.trace(power)) % p
                power = _mulmod(power, ap, p)
        got = [_crt_signed(r, primes) for r in residues]
    if got != want:
        return None

    result = IntPoly((1,))
    for poly, mult in factors:
        result = result * poly**mult
    return result


# -- root extraction ----------------------------------------------------------

def _root_bound(coeffs: Sequence[int]) -> int:
    """Fujiwara's bound on |root| of a monic polynomial, rounded up."""
    n = len(coeffs) - 1
    best = 0.0
    for k in range(1, n + 1):
        c = abs(coeffs[n - k])
        if c == 0:
            continue
        log_c = math.log(c) - (math.log(2) if k == n else 0.0)
        best = max(best, math.exp(log_c / k))
    return int(2 * best * (1 + 1e-9)) + 1


def integer_roots(poly: IntPoly) -> tuple[dict[int, int], IntPoly]:
    """Integer roots with multiplicity, and the integer-root-free cofactor.

    Candidates are divisors of the constant term (after peeling zero roots)
    that lie within Fujiwara's root bound; each is confirmed by exact
    evaluation and deflated to full multiplicity.
    """
    if not poly.is_monic:
        raise ValueError("polynomial must be monic")
    roots: dict[int, int] = {}
    c = list(poly.coeffs)
    zeros = 0
    while len(c) > 1 and c[0] == 0:
        c.pop(0)
        zeros += 1
    if zeros:
        roots[0] = zeros
    rest = IntPoly(tuple(c))
    if rest.degree <= 0:
        return roots, rest
    c0 = rest.coeffs[0]
    bound = min(_root_bound(rest.coeffs), abs(c0))
    found: list[int] = []
    for mag in range(1, bound + 1):
        if c0 % mag:
            continue
        for r in (mag, -mag):
            if rest(r) == 0:
                found.append(r)
    for r in sorted(found, reverse=True):
        k = 0
        while rest.degree > 0 and rest(r) == 0:
            rest = rest.deflate(r)
            k += 1
        roots[r] = k
    return dict(sorted(roots.items(), reverse=True)), rest


def quadratic_roots(poly: IntPoly) -> tuple[Exact, Exact]:
    """Both roots of a monic integer quadratic, larger first."""
    if poly.degree != 2 or not poly.is_monic:
        raise ValueError("expected a monic quadratic")
    c, b, _ = poly.coeffs
    disc = b * b - 4 * c
    if disc < 0:
        raise ArithmeticError(f"negative discriminant {disc}: roots are not real")
    hi = surd(-b, 1, disc, 2)
    lo = surd(-b, -1, disc, 2)
    return hi, lo


def exact_roots(poly: IntPoly, hints: Iterable[float] = (), tol: float = 1e-6):
    """Exact roots with multiplicity, as far as integers and quadratics reach.

    Integer roots come from :func:`integer_roots`.  Quadratic factors of the
    residual are found by rounding pairs of ``hints`` (numeric eigenvalues)
    to integer quadratics and confirming them by exact division.  Returns
    ``(roots, residual)``, where ``roots`` maps exact value -> multiplicity
    and ``residual`` is the unexplained monic cofactor (degree 0 if none).
    """
    ints, rest = integer_roots(poly)
    roots: dict[Exact, int] = dict(ints)
    if rest.degree == 2:
        for r in quadratic_roots(rest):
            roots[r] = roots.get(r, 0) + 1
        return roots, IntPoly((1,))
    if rest.degree > 2:
        loose = [x for x in hints if all(abs(x - r) > tol for r in ints)]
        for (x, _), (y, _) in _pairs(_cluster_floats(np.sort(np.asarray(loose, float)), tol)):
            cand = IntPoly((round(x * y), -round(x + y), 1))
            disc = cand.coeffs[1] ** 2 - 4 * cand.coeffs[0]
            if disc <= 0 or math.isqrt(disc) ** 2 == disc:
                continue
            k = 0
            while rest.degree >= 2:
                quot, rem = rest.divmod_monic(cand)
                if rem.coeffs != (0,):
                    break
                rest, k = quot, k + 1
            if k:
                for r in quadratic_roots(cand):
                    roots[r] = roots.get(r, 0) + k
        if rest.degree == 2:
            for r in quadratic_roots(rest):
                roots[r] = roots.get(r, 0) + 1
            rest = IntPoly((1,))
    return dict(sorted(roots.items(), key=lambda kv: -value_key(kv[0]))), rest


def _pairs(items):
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            yield items[i], items[j]


# -- numeric spectra ----------------------------------------------------------

def _cluster_floats(sorted_values: np.ndarray, tol: float) -> list[tuple[float, int]]:
    groups: list[list[float]] = []
    for x in sorted_values:
        if groups and x - groups[-1][-1] <= tol:
            groups[-1].append(float(x))
        else:
            groups.append([float(x)])
    return [(sum(g) / len(g), len(g)) for g in groups]


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with repetition, descending; optionally with eigenvectors.

    ``vectors[:, i]`` belongs to ``values[i]``.
    """

    values: tuple
    vectors: np.ndarray | None = field(default=None, repr=False, compare=False)
    residual: IntPoly | None = None

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.values)

    def as_floats(self) -> np.ndarray:
        return np.array([float(v) for v in self.values])


def jacobi_eigh(m: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100):
    """Cyclic Jacobi rotations until the off-diagonal norm is below ``tol``.

    Returns ``(eigenvalues, eigenvectors)`` unsorted.
    """
    a = np.array(m, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    scale = max(1.0, np.abs(a).max())
    for _ in range(max_sweeps):
        off = math.sqrt(max(0.0, np.sum(a * a) - np.sum(np.diag(a) ** 2)))
        if off <= tol * scale:
            return np.diag(a).copy(), v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def numeric_spectrum(m, tol: float = 1e-8, method: str = "eigh") -> Spectrum:
    """All eigenpairs of a symmetric matrix, eigenvalues descending.

    ``method="eigh"`` uses LAPACK; ``method="jacobi"`` uses :func:`jacobi_eigh`.
    Either way the result is checked: ``V^T M V`` must be diagonal within
    ``tol`` times the largest entry.
    """
    a = np.asarray(m, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.abs(a).max())) if a.size else 1.0
    if not np.allclose(a, a.T, rtol=0, atol=tol * scale):
        raise ValueError("matrix is not symmetric")
    if method == "eigh":
        w, v = np.linalg.eigh(a)
    elif method == "jacobi":
        w, v = jacobi_eigh(a, tol=min(tol, 1e-12))
    else:
        raise ValueError(f"unknown method {method!r}")
    order = np.argsort(-w, kind="stable")
    w, v = w[order], v[:, order]
    t = v.T @ a @ v
    off = t - np.diag(np.diag(t))
    if np.abs(off).max(initial=0.0) > tol * scale * max(1, a.shape[0]):
        raise ConvergenceError("eigenvector check failed: V^T M V is not diagonal")
    return Spectrum(tuple(float(x) for x in w), v)


def exact_spectrum(poly: IntPoly, hints: Iterable[float] = ()) -> Spectrum:
    roots, residual = exact_roots(poly, hints)
    values: list[Value] = []
    for r, k in roots.items():
        values.extend([r] * k)
    return Spectrum(tuple(values), residual=residual if residual.degree > 0 else None)


def clusters(s: Spectrum, tol: float = 1e-8) -> list[tuple[Value, int]]:
    """Distinct values with multiplicities, descending.

    Exact values are grouped by equality; floats are single-linkage
    clustered with gap ``tol`` and represented by their mean.
    """
    exact: dict[Value, int] = {}
    floats = []
    for v in s.values:
        if is_exact(v):
            exact[v] = exact.get(v, 0) + 1
        else:
            floats.append(float(v))
    out: list[tuple[Value, int]] = list(exact.items())
    out.extend(_cluster_floats(np.sort(np.asarray(floats)), tol))
    return sorted(out, key=lambda kv: -value_key(kv[0]))


def distinct_values(s: Spectrum | Sequence[Value], tol: float = 1e-8) -> list[Value]:
    if not isinstance(s, Spectrum):
        s = Spectrum(tuple(s))
    return [v for v, _ in clusters(s, tol)]


def values_close(x: Value, y: Value, tol: float) -> bool:
    if is_exact(x) and is_exact(y):
        return x == y
    return abs(float(x) - float(y)) <= tol


def spectrum_subset(sub: Iterable[Value], full: Spectrum | Sequence[Value],
                    tol: float = 1e-8) -> bool:
    """Every value of ``sub`` occurs in ``full`` (exactly, or within ``tol``)."""
    pool = full.values if isinstance(full, Spectrum) else tuple(full)
    return all(any(values_close(x, y, tol) for y in pool) for x in sub)


def same_value_sets(xs: Iterable[Value], ys: Iterable[Value], tol: float = 1e-8) -> bool:
    xs, ys = list(xs), list(ys)
    return spectrum_subset(xs, ys, tol) and spectrum_subset(ys, xs, tol)


def spectrum_to_json(s: Spectrum, tol: float = 1e-8, integral: bool | None = None) -> dict:
    groups = clusters(s, tol)
    if integral is None:
        integral = all(isinstance(v, (int, np.integer)) for v, _ in groups)
    return {
        "distinct": [value_to_json(v) for v, _ in groups],
        "multiplicities": [k for _, k in groups],
        "integral": bool(integral),
    }


# -- integrality and oracle agreement -------------------------------------------

@dataclass(frozen=True)
class Integrality:
    integral: bool
    char_poly: IntPoly
    integer_roots: dict
    residual: IntPoly

    def __bool__(self) -> bool:
        return self.integral


def is_distance_integral(g, tol: float = 1e-8) -> Integrality:
    """Decide distance integrality from the exact characteristic polynomial."""
    from .graph import distance_matrix

    dm = distance_matrix(g)
    poly = char_poly_exact(dm)
    roots, residual = integer_roots(poly)
    integral = sum(roots.values()) == dm.shape[0]
    return Integrality(integral, poly, roots, residual)


@dataclass
class OracleReport:
    integer_roots_match: bool
    residual_ok: bool
    trace_exact: bool
    trace_numeric: bool
    details: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.integer_roots_match and self.residual_ok and self.trace_exact
                and self.trace_numeric)


def oracle_agreement(matrix, poly: IntPoly, numeric: Spectrum, tol: float = 1e-8,
                     residual_tol: float = 1e-6) -> OracleReport:
    """Compare exact characteristic-polynomial roots with a numeric spectrum.

    Integer roots must appear in the numeric spectrum with exactly the same
    multiplicity.  Every remaining numeric eigenvalue ``x`` must satisfy
    ``|r(x)| <= residual_tol * sum_i |r_i| |x|^i`` for the integer-root-free
    cofactor ``r``.  The trace is checked exactly against the ``x^(n-1)``
    coefficient and numerically against the eigenvalue sum.
    """
    a = np.asarray(matrix)
    n = a.shape[0]
    scale = max(1.0, float(np.abs(a).max()))
    atol = tol * scale
    details = []
    roots, residual = integer_roots(poly)
    vals = numeric.as_floats()
    claimed = np.zeros(len(vals), dtype=bool)
    ints_ok = True
    for r, k in roots.items():
        near = np.abs(vals - r) <= atol
        if int(near.sum()) != k:
            ints_ok = False
            details.append(f"root {r}: exact multiplicity {k}, numeric {int(near.sum())}")
        claimed |= near
    rest = vals[~claimed]
    res_ok = len(rest) == residual.degree
    if not res_ok:
        details.append(f"{len(rest)} unexplained eigenvalues vs residual degree {residual.degree}")
    coeffs = residual.coeffs
    for x, _ in _cluster_floats(np.sort(rest), atol):
        fx = Fraction(float(x))
        val = abs(residual(fx))
        mag = sum(abs(c) * abs(fx) ** i for i, c in enumerate(coeffs))
        if val > Fraction(residual_tol) * mag:
            res_ok = False
            details.append(f"residual at {x}: relative {float(val / mag):.3g}")
    trace = int(np.trace(a.astype(np.int64))) if n else 0
    trace_exact = n == 0 or poly.coeffs[n - 1] == -trace
    trace_num = abs(float(np.sum(vals)) - trace) <= atol * max(1, n)
    if not trace_exact:
        details.append(f"x^(n-1) coefficient {poly.coeffs[n - 1]} != -trace {-trace}")
    return OracleReport(ints_ok, res_ok, trace_exact, trace_num, details)
