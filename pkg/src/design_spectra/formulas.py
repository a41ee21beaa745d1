"""Closed-form distance-spectrum results for design graphs, in exact arithmetic."""

from __future__ import annotations

import math

from .design import DesignParams
from .spectra import Exact, surd


def gamma_pair(p: DesignParams) -> tuple[int, int]:
    """Distance eigenvalues of the all-ones and the +1/-1 side vectors."""
    return 5 * p.m - 2 * p.d - 2, -p.m + 2 * p.d - 2


def part_quotient(p: DesignParams) -> list[list[int]]:
    """Quotient of the distance matrix over the two sides."""
    same, across = 2 * (p.m - 1), 3 * p.m - 2 * p.d
    return [[same, across], [across, same]]


def quotient_P(p: DesignParams) -> list[list[int]]:
    """Quotient over ``{v}, side(v) - v, N(v), other side - N(v)``."""
    m, d, c = p.m, p.d, p.c
    return [
        [0, 2 * m - 2, d, 3 * m - 3 * d],
        [2, 2 * m - 4, 3 * d - 2 * c, 3 * m - 5 * d + 2 * c],
        [1, 3 * m - 2 * d - 1, 2 * d - 2, 2 * m - 2 * d],
        [3, 3 * m - 2 * d - 3, 2 * d, 2 * m - 2 * d - 2],
    ]


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def s_parameters(q: int, n: int) -> DesignParams:
    _check_qn(q, n)
    return DesignParams(gaussian_binomial(n, 1, q), gaussian_binomial(n - 1, 1, q),
                        gaussian_binomial(n - 2, 1, q))


def s_spectrum(q: int, n: int) -> tuple[Exact, Exact, Exact, Exact]:
    """Distinct distance eigenvalues of S(q, n, 1), largest closed forms first.

    ``r1 = (5q^n - 2q^(n-1) - 2q - 1)/(q-1)``, ``r2 = (-q^n + 2q^(n-1) - 2q + 1)/(q-1)``
    and ``r3, r4 = (-2q^2 -/+ 2 sqrt(q^(n+2))) / q^2``, i.e. ``-2 -/+ 2 q^((n-2)/2)``.
    """
    _check_qn(q, n)
    r1, rem1 = divmod(5 * q**n - 2 * q ** (n - 1) - 2 * q - 1, q - 1)
    r2, rem2 = divmod(-(q**n) + 2 * q ** (n - 1) - 2 * q + 1, q - 1)
    assert rem1 == rem2 == 0
    r3 = surd(-2 * q * q, -2, q ** (n + 2), q * q)
    r4 = surd(-2 * q * q, 2, q ** (n + 2), q * q)
    return r1, r2, r3, r4


def s_is_integral(q: int, n: int) -> bool:
    """True iff every distance eigenvalue of S(q, n, 1) is an integer.

    That happens exactly when ``q^(n+2)`` is a perfect square. Even ``n`` is
    sufficient but not necessary: a square ``q`` works for every ``n``.
    """
    _check_qn(q, n)
    r = q ** (n + 2)
    return math.isqrt(r) ** 2 == r


def even_n_condition(n: int) -> bool:
    return n % 2 == 0


def _check_qn(q: int, n: int) -> None:
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
