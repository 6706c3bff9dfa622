"""Exact integer and rational helpers.

Rationals are :class:`fractions.Fraction` values throughout the package;
they are always normalized with the sign carried by the numerator.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC

# Trial division is the only factoring method; inputs above this bound are
# refused rather than left to run for hours.
FACTOR_LIMIT = 10**12
# Primality is decided deterministically by trial division below this bound.
PRIME_CHECK_LIMIT = 2**64

Factorization = list[tuple[int, int]]


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction, refusing floats."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        text = x.strip()
        if any(c in text for c in ".eE") and "/" not in text:
            raise ValueError(f"floating-point literal {x!r} not accepted; use p/q")
        try:
            num, _, den = text.partition("/")
            return Fraction(int(num), int(den) if den else 1)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {x!r}") from exc
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def factorize(n: int) -> Factorization:
    """Prime factorization of ``n >= 1`` as increasing ``(prime, exponent)`` pairs.

    >>> factorize(9999)
    [(3, 2), (11, 1), (101, 1)]
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    if n > FACTOR_LIMIT:
        raise ValueError(f"{n} exceeds the trial-division limit {FACTOR_LIMIT}")
    out: Factorization = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    # 6k +/- 1 wheel
    p = 5
    step = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n >= PRIME_CHECK_LIMIT:
        raise ValueError(f"{n} is beyond the deterministic primality bound")
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    p = 5
    while p * p <= n:
        if n % p == 0 or n % (p + 2) == 0:
            return False
        p += 6
    return True


def odd_primes(limit: int) -> list[int]:
    """Odd primes strictly below ``limit``."""
    return [p for p in range(3, limit, 2) if is_prime(p)]


def squarefree_int(n: int) -> int:
    """Square-free part of a positive integer."""
    out = 1
    for p, e in factorize(n):
        if e % 2:
            out *= p
    return out


def squarefree_part(x) -> int:
    """Smallest positive integer N with x/N the square of a rational.

    >>> squarefree_part(Fraction(5, 12))
    15
    """
    x = as_rational(x)
    if x <= 0:
        raise ValueError(f"square-free part needs a positive rational, got {x}")
    # num/den and num*den differ by the square den^2; num, den are coprime
    return squarefree_int(x.numerator) * squarefree_int(x.denominator)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def is_rational_square(x) -> bool:
    x = as_rational(x)
    return x >= 0 and is_square(x.numerator) and is_square(x.denominator)


def rational_sqrt(x) -> Fraction:
    x = as_rational(x)
    if not is_rational_square(x):
        raise ValueError(f"{x} is not the square of a rational")
    return Fraction(isqrt(x.numerator), isqrt(x.denominator))


def legendre(u: int, p: int) -> int:
    """Legendre symbol (u/p) for an odd prime p, by Euler's criterion."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"legendre needs an odd prime modulus, got {p}")
    r = pow(u % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def is_three_square(n: int) -> bool:
    """True iff n is a sum of three integer squares (n not of the form 4^k(8m+7))."""
    if n < 0:
        return False
    if n == 0:
        return True
    while n % 4 == 0:
        n //= 4
    return n % 8 != 7


def three_square_decomp(n: int) -> tuple[int, int, int] | None:
    """First (r, s, t) with r >= s >= t >= 0 and r^2+s^2+t^2 = n, r then s largest.

    Returns None when n is not a sum of three squares.
    """
    if not is_three_square(n):
        return None
    for r in range(isqrt(n), -1, -1):
        rest = n - r * r
        if rest > 2 * r * r:
            break
        for s in range(min(r, isqrt(rest)), -1, -1):
            tt = rest - s * s
            if tt > s * s:
                break
            t = isqrt(tt)
            if t * t == tt:
                return r, s, t
    raise AssertionError(f"three-square theorem violated for {n}")  # unreachable


def is_rational_three_square(x) -> bool:
    """True iff the positive rational x is a sum of three rational squares."""
    return squarefree_part(x) % 8 != 7
