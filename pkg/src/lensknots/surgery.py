"""Lens space and dual-knot class produced by surgery on a double-primitive curve.

A curve with homology class ``A*[A] + B*[B] + a*[a] + b*[b]`` on the genus two
Heegaard surface yields ``L(p, q)`` with ``p = |A*a + B*b|``. The dual knot
represents ``lambda = -B/a`` (or ``A/b`` when ``a`` is not a unit mod ``p``), and
``q = -lambda**2`` up to the usual ``+-q^(+-1)`` ambiguity.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NonPrimitive, NotLensSurgery
from .lens import LambdaClass, LensSpace, canonical_lambda, normalize


@dataclass(frozen=True)
class HomologyCoordinates:
    A: int
    B: int
    a: int
    b: int

    def __post_init__(self):
        if not (self.A or self.B or self.a or self.b):
            raise ValueError("homology coordinates cannot all be zero")

    def __iter__(self):
        return iter((self.A, self.B, self.a, self.b))

    def __neg__(self) -> HomologyCoordinates:
        return HomologyCoordinates(-self.A, -self.B, -self.a, -self.b)

    @property
    def p_raw(self) -> int:
        return abs(self.A * self.a + self.B * self.b)


@dataclass(frozen=True)
class SurgeryResult:
    space: LensSpace
    lam: LambdaClass
    p_raw: int
    q_raw: int
    lambda_raw: int


def surgery_lens_space(c: HomologyCoordinates) -> SurgeryResult:
    """The lens space and canonical dual class for the coordinates ``c``.

    >>> r = surgery_lens_space(HomologyCoordinates(5, 3, 7, -1))
    >>> str(r.space), r.lam.value
    ('L(32,7)', 5)
    """
    A, B, a, b = c.A, c.B, c.a, c.b
    p = abs(A * a + B * b)
    if p == 0:
        raise NotLensSurgery(f"A*a + B*b = 0 for {tuple(c)}")
    if p == 1:
        return SurgeryResult(LensSpace(1, 0), LambdaClass(1, 0), 1, 0, 0)
    if gcd(a, p) == 1:
        lam = -B * pow(a, -1, p) % p
    elif gcd(b, p) == 1:
        lam = A * pow(b, -1, p) % p
    else:
        raise NonPrimitive(f"neither a nor b is a unit modulo {p} for {tuple(c)}")
    if gcd(lam, p) != 1:
        # a unit while B is not forces gcd(A, B) > 1
        raise NonPrimitive(f"gcd(A, B) > 1 for {tuple(c)}")
    q = -lam * lam % p
    return SurgeryResult(normalize(p, q), canonical_lambda(p, lam), p, q, lam)


def _matches_power_class(lhs: int, base: int, p: int) -> bool:
    """``lhs = +-base^(+-2) (mod p)``; the inverse branch needs a unit base."""
    targets = {base * base % p}
    if gcd(base, p) == 1:
        targets.add(pow(base, -2, p))
    return any(lhs % p in (t, -t % p) for t in targets)


def check_surgery_congruences(c: HomologyCoordinates, r: SurgeryResult) -> bool:
    """Check ``a^2 q = +-B^(+-2)`` and ``b^2 q = +-A^(+-2)`` modulo ``p``."""
    p = r.p_raw
    if p == 1:
        return True
    if p != c.p_raw:
        return False
    return (_matches_power_class(c.a * c.a * r.q_raw, c.B, p)
            and _matches_power_class(c.b * c.b * r.q_raw, c.A, p))
