"""Hilbert symbols (a, b)_v over Q at the odd primes, at 2 and at infinity."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .exactnum import as_rational, factorize, is_prime, legendre

INF = "inf"
Place = Union[int, str]


def parse_place(text: str) -> Place:
    t = text.strip().lower()
    if t in ("inf", "infinity", "oo"):
        return INF
    return int(t)


def split_valuation(x: Fraction, p: int) -> tuple[int, int, int]:
    """Write x = p^alpha * x1 / x2 with p dividing neither x1 nor x2."""
    num, den = x.numerator, x.denominator
    alpha = 0
    while num % p == 0:
        num //= p
        alpha += 1
    while den % p == 0:
        den //= p
        alpha -= 1
    return alpha, num, den


def hilbert_symbol(a, b, place: Place) -> int:
    """The Hilbert symbol (a, b)_v of two nonzero rationals; returns +1 or -1."""
    a, b = as_rational(a), as_rational(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol is defined for nonzero arguments only")
    if place == INF:
        return -1 if (a < 0 and b < 0) else 1
    p = place
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"place must be a prime or 'inf', got {place!r}")
    alpha, a1, a2 = split_valuation(a, p)
    beta, b1, b2 = split_valuation(b, p)
    if p == 2:
        u = (a1 * a2) % 8
        w = (b1 * b2) % 8
        e = ((u - 1) // 2) * ((w - 1) // 2)
        e += alpha * ((w * w - 1) // 8) + beta * ((u * u - 1) // 8)
        return -1 if e % 2 else 1
    s = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        s *= legendre(a1 * a2, p)
    if alpha % 2:
        s *= legendre(b1 * b2, p)
    return s


def support_places(a, b) -> list[Place]:
    """Places where (a, b)_v can differ from +1: infinity, 2 and odd primes of a, b."""
    a, b = as_rational(a), as_rational(b)
    primes = {2}
    for n in (a.numerator, a.denominator, b.numerator, b.denominator):
        primes.update(p for p, _ in factorize(abs(n)))
    return [INF, *sorted(primes)]


def hilbert_product_check(a, b) -> bool:
    """Whether the product of (a, b)_v over all places equals +1."""
    prod = 1
    for v in support_places(a, b):
        prod *= hilbert_symbol(a, b, v)
    return prod == 1
