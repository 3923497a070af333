"""Rational root extraction for univariate polynomials over Q.

Candidates p/q come from divisors of the trailing and leading coefficients,
so an integer factorization helper (trial division + Miller-Rabin + Pollard
rho) is included; the coefficients met in practice factor into small primes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List

from .poly import SuperPolynomial
from .scalars import GaussianRational

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"failed to factor {n}")


def factorize(n: int) -> dict:
    """Prime factorization {prime: exponent} of a positive integer."""
    if n <= 0:
        raise ValueError("factorize needs a positive integer")
    factors: dict = {}
    for p in range(2, 10000):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        if p * p > n:
            break
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return factors


def divisors(n: int) -> List[int]:
    """All positive divisors of |n| (n != 0)."""
    out = [1]
    for p, e in factorize(abs(n)).items():
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


def _poly_to_int_coeffs(p) -> List[int]:
    if isinstance(p, SuperPolynomial):
        coeffs = p.univariate_coeffs()
        rat = []
        for c in coeffs:
            if not c.is_real():
                raise ValueError("rational_roots needs real coefficients")
            rat.append(c.re)
    else:
        rat = [Fraction(c.re) if isinstance(c, GaussianRational) else Fraction(c)
               for c in p]
    if not rat or all(c == 0 for c in rat):
        raise ValueError("rational_roots of the zero polynomial")
    denom = 1
    for c in rat:
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    ints = [int(c * denom) for c in rat]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints]


def _eval_int(coeffs: List[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: List[int], root: Fraction) -> List[int]:
    """Divide by (q*x - p) exactly for root p/q; returns integer coefficients."""
    p, q = root.numerator, root.denominator
    # synthetic division by (x - p/q), then clear q powers
    n = len(coeffs) - 1
    out = [Fraction(0)] * n
    acc = Fraction(0)
    for k in range(n, 0, -1):
        acc = acc * root + coeffs[k]
        out[k - 1] = acc
    return _poly_to_int_coeffs(out)


def rational_roots(p) -> List[Fraction]:
    """All rational roots with multiplicity, ascending.

    Accepts a univariate SuperPolynomial (real coefficients) or a coefficient
    list [c0, c1, ...].
    """
    coeffs = _poly_to_int_coeffs(p)
    roots: List[Fraction] = []
    # powers of x give the root 0
    k = 0
    while coeffs[k] == 0:
        k += 1
    roots.extend([Fraction(0)] * k)
    coeffs = coeffs[k:]
    if len(coeffs) > 1:
        num_divs = divisors(coeffs[0])
        den_divs = divisors(coeffs[-1])
        candidates = sorted({Fraction(s * pn, qn)
                             for pn in num_divs for qn in den_divs for s in (1, -1)})
        for cand in candidates:
            while len(coeffs) > 1 and _eval_int(coeffs, cand) == 0:
                roots.append(cand)
                coeffs = _deflate(coeffs, cand)
            if len(coeffs) == 1:
                break
    return sorted(roots)
