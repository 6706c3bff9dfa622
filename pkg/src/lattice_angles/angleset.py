"""Which angles a fixed integer vector can make with other integer vectors.

Membership of an oblique angle in dimension 3 is decided by a local
condition at odd primes p::

    (N, N)_p (N, t)_p (t, t)_p = +1

where N is the squared norm of the fixed vector and t the squared tangent.
Every other dimension admits all lattice angles of that dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .angles import (
    AngleClass,
    IntVec,
    RIGHT_KIND,
    STRAIGHT_KIND,
    ZERO_KIND,
    check_nonzero,
    norm2,
)
from .exactnum import (
    as_rational,
    factorize,
    is_prime,
    is_rational_square,
    is_rational_three_square,
    is_three_square,
    legendre,
    squarefree_int,
    squarefree_part,
    three_square_decomp,
)
from .hilbert import hilbert_symbol

CLOSED_FORM = "closed_form"
HILBERT = "hilbert_criterion"
CONSTRUCTION = "construction"
ORACLE = "oracle"

EXCLUDED_VECTOR_CAP = 10**6


@dataclass(frozen=True)
class WitnessCert:
    vector: IntVec

    def to_json(self) -> dict:
        return {"witness": list(self.vector)}


@dataclass(frozen=True)
class ExclusionCert:
    """An odd prime where the local product is -1, with its three factors."""

    prime: int
    symbols: tuple[int, int, int]

    def to_json(self) -> dict:
        return {"prime": self.prime, "symbols": list(self.symbols)}


@dataclass(frozen=True)
class Verdict:
    member: bool
    method: str
    certificate: Union[WitnessCert, ExclusionCert, None] = None

    def to_json(self) -> dict:
        out = {"member": self.member, "method": self.method}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def theta_n_contains(n: int, angle: AngleClass) -> bool:
    """Is ``angle`` the angle between some pair of integer vectors in Z^n?"""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got {n}")
    if not angle.is_oblique:
        return True
    if n == 2:
        return is_rational_square(angle.tan2)
    if n in (3, 4):
        return is_rational_three_square(angle.tan2)
    return True


def _odd_primes_of(n: int) -> list[int]:
    return [p for p, _ in factorize(n) if p != 2]


def local_factors(norm_a2: int, tan2, p: int) -> tuple[int, int, int]:
    t = as_rational(tan2)
    return (
        hilbert_symbol(norm_a2, norm_a2, p),
        hilbert_symbol(norm_a2, t, p),
        hilbert_symbol(t, t, p),
    )


def hilbert_criterion(norm_a2: int, tan2) -> Verdict:
    """Decide whether a vector of squared norm ``norm_a2`` makes the oblique angle with tan^2 = ``tan2``.

    Only odd primes dividing the product of the two square-free parts can
    contribute -1. On failure the first such prime is reported together with
    the three symbol values.
    """
    t = as_rational(tan2)
    if norm_a2 < 1 or not is_three_square(norm_a2):
        raise ValueError(f"{norm_a2} is not the squared norm of any integer 3-vector")
    if t <= 0 or not is_rational_three_square(t):
        raise ValueError(f"tan^2 = {t} is not an oblique lattice angle in dimension 3")
    support = squarefree_int(norm_a2) * squarefree_part(t)
    for p in _odd_primes_of(support):
        symbols = local_factors(norm_a2, t, p)
        if symbols[0] * symbols[1] * symbols[2] == -1:
            return Verdict(False, HILBERT, ExclusionCert(p, symbols))
    return Verdict(True, HILBERT)


def theta_n_of_a_contains(a: Sequence[int], angle: AngleClass, budget=None) -> Verdict:
    """Is ``angle`` realized between ``a`` and some integer vector?"""
    from .witness import perpendicular, witness_for_angle

    a = check_nonzero(a)
    dim = len(a)
    if angle.kind == ZERO_KIND:
        return Verdict(True, CONSTRUCTION, WitnessCert(a))
    if angle.kind == STRAIGHT_KIND:
        return Verdict(True, CONSTRUCTION, WitnessCert(tuple(-x for x in a)))
    if angle.kind == RIGHT_KIND:
        return Verdict(True, CONSTRUCTION, WitnessCert(perpendicular(a)))
    if not theta_n_contains(dim, angle):
        return Verdict(False, CLOSED_FORM)
    if dim == 3:
        return hilbert_criterion(norm2(a), angle.tan2)
    w = witness_for_angle(a, angle, budget)
    return Verdict(True, CONSTRUCTION, WitnessCert(w) if w is not None else None)


def vector_with_norm(n: int) -> IntVec:
    """A 3-vector of squared norm n from the canonical three-square decomposition."""
    rst = three_square_decomp(n) if n >= 1 else None
    if rst is None:
        raise ValueError(f"{n} is not a positive sum of three squares")
    return rst


def excluded_angle_with_case(a: Sequence[int]) -> tuple[AngleClass, str]:
    """An oblique angle of Z^3 that ``a`` cannot make, plus the case label a-d."""
    a = check_nonzero(a)
    if len(a) != 3:
        raise ValueError("excluded angles exist only in dimension 3")
    n = norm2(a)
    core = squarefree_int(n)
    odd = _odd_primes_of(core)
    if core == 1:
        case, t = "a", 3
    elif any(p % 4 == 3 for p in odd):
        case, t = "b", 1
    elif odd:
        p = min(odd)
        case = "c"
        t = next(c for c in range(1, p) if legendre(c, p) == -1 and is_three_square(c))
    else:
        case = "d"
        t = next(l for l in range(5, 10**6, 8) if is_prime(l) and n % l)
    angle = AngleClass.oblique(t)
    if not theta_n_contains(3, angle) or hilbert_criterion(n, t).member:
        raise AssertionError(f"case ({case}) produced a non-excluded angle for {a}")
    return angle, case


def excluded_angle(a: Sequence[int]) -> AngleClass:
    return excluded_angle_with_case(a)[0]


def excluded_vector(angle: AngleClass) -> IntVec:
    """A 3-vector of smallest squared norm that cannot make ``angle``."""
    if not angle.is_oblique or not theta_n_contains(3, angle):
        raise ValueError(f"{angle} is not an oblique lattice angle of Z^3")
    for n in range(1, EXCLUDED_VECTOR_CAP + 1):
        if is_three_square(n) and not hilbert_criterion(n, angle.tan2).member:
            return vector_with_norm(n)
    raise RuntimeError(f"no excluding norm found up to {EXCLUDED_VECTOR_CAP}")


def s_theta_contains(n: int, angle: AngleClass) -> bool:
    """Is n the squared norm of some 3-vector that makes ``angle``?"""
    if n < 1:
        raise ValueError("n must be positive")
    if not is_three_square(n):
        return False
    if not angle.is_oblique:
        return True
    if not theta_n_contains(3, angle):
        return False
    return hilbert_criterion(n, angle.tan2).member


def _split(core: int, special: Optional[int] = None) -> tuple[int, int, list[int]]:
    """(power of 2, power of special, remaining odd primes) of a square-free integer."""
    b = 1 if core % 2 == 0 else 0
    b_special = 1 if special and core % special == 0 else 0
    rest = [p for p in _odd_primes_of(core) if p != special]
    return b, b_special, rest


def _count_3mod4(primes: Sequence[int]) -> int:
    return sum(1 for p in primes if p % 4 == 3)


def _residue_rule(core: int, q: int, literal_odd_branch: bool = False) -> bool:
    """Membership rule when the other square-free part is a single odd prime q."""
    b, _, ps = _split(core, q)
    qmod = q % 8
    if qmod == 3:
        return b == 1 and all(legendre(p, q) == 1 for p in ps)
    if qmod == 7:
        raise ValueError(f"q = {q} = 7 mod 8 cannot occur")
    twisted = all(legendre(p, q) == (-1) ** ((p - 1) // 2) for p in ps)
    parity_even = _count_3mod4(ps) % 2 == 0
    if qmod == 1:
        return twisted and parity_even
    # q = 5 mod 8
    if b == 0:
        return twisted and parity_even
    if literal_odd_branch:
        # an odd product halved is never an integer, so this branch is always False
        prod = 1
        for p in ps:
            prod *= p
        return twisted and prod % 2 == 0 and (prod // 2) % 2 == 1
    return twisted and not parity_even


def _check_theta3(t: Fraction) -> None:
    if t <= 0 or not is_rational_three_square(t):
        raise ValueError(f"tan^2 = {t} is not an oblique lattice angle of Z^3")


def classify_by_norm(norm_a2: int, tan2) -> bool:
    """Closed-form membership when |a|^2 is M^2, 2M^2 or qM^2 with q an odd prime."""
    t = as_rational(tan2)
    _check_theta3(t)
    if norm_a2 < 1 or not is_three_square(norm_a2):
        raise ValueError(f"{norm_a2} is not a sum of three squares")
    q = squarefree_int(norm_a2)
    s = squarefree_part(t)
    if q == 1:
        return all(p % 4 == 1 for p in _odd_primes_of(s))
    if q == 2:
        return all(p % 8 in (1, 3) for p in _odd_primes_of(s))
    if not is_prime(q):
        raise ValueError(f"square-free part {q} of |a|^2 is not 1, 2 or an odd prime")
    return _residue_rule(s, q)


def classify_by_tangent(norm_a2: int, tan2, literal: bool = False) -> bool:
    """Closed-form membership when tan^2 has square-free part 1, 2 or an odd prime p.

    ``literal=True`` makes the even-|a|^2, p = 5 (mod 8) branch require the
    odd product q_1...q_t, halved, to be an odd integer. That never holds.
    The default asks for an odd number of q_j = 3 (mod 4) instead.
    """
    t = as_rational(tan2)
    _check_theta3(t)
    if norm_a2 < 1 or not is_three_square(norm_a2):
        raise ValueError(f"{norm_a2} is not a sum of three squares")
    p = squarefree_part(t)
    s = squarefree_int(norm_a2)
    if p == 1:
        return all(q % 4 == 1 for q in _odd_primes_of(s))
    if p == 2:
        return all(q % 8 in (1, 3) for q in _odd_primes_of(s))
    if not is_prime(p):
        raise ValueError(f"square-free part {p} of tan^2 is not 1, 2 or an odd prime")
    return _residue_rule(s, p, literal_odd_branch=literal)


def norm_rule_applies(norm_a2: int) -> bool:
    q = squarefree_int(norm_a2)
    return q in (1, 2) or (is_prime(q) and q % 8 != 7)


def tangent_rule_applies(tan2) -> bool:
    p = squarefree_part(tan2)
    return p in (1, 2) or (is_prime(p) and p % 8 != 7)
