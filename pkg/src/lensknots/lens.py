"""Canonical forms for lens spaces and for the dual-knot class lambda.

Both ``q`` and ``lambda`` are only defined up to ``x ~ +-x^(+-1) (mod p)``. The
canonical representative of that orbit is its minimum in ``[1, p-1]``. The
3-sphere is kept in the same types as ``p = 1`` with value 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import NonCanonical, NonUnit


def orbit(p: int, x: int) -> frozenset[int]:
    """The set ``{x, -x, 1/x, -1/x}`` reduced mod ``p``.

    >>> sorted(orbit(32, 13))
    [5, 13, 19, 27]
    """
    if p < 2:
        raise ValueError(f"orbit needs p >= 2, got {p}")
    x %= p
    if gcd(x, p) != 1:
        raise NonUnit(f"{x} is not a unit modulo {p}")
    inv = pow(x, -1, p)
    return frozenset((x, p - x, inv, p - inv))


def orbit_min(p: int, x: int) -> int:
    """Canonical representative of ``x`` (0 when ``p == 1``)."""
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if p == 1:
        return 0
    x %= p
    if gcd(x, p) != 1:
        raise NonUnit(f"{x} is not a unit modulo {p}")
    inv = pow(x, -1, p)
    return min(x, p - x, inv, p - inv)


def _check_canonical(p: int, x: int, what: str) -> None:
    if p < 1:
        raise ValueError(f"p must be positive, got {p}")
    if p == 1:
        if x != 0:
            raise NonCanonical(f"{what} for p = 1 must be 0, got {x}")
        return
    if not 0 < x < p or gcd(x, p) != 1:
        raise NonUnit(f"{what} = {x} is not a unit residue modulo {p}")
    if orbit_min(p, x) != x:
        raise NonCanonical(f"{what} = {x} is not orbit-minimal modulo {p}")


@dataclass(frozen=True, order=True)
class LensSpace:
    """A lens space ``L(p, q)`` in canonical form; build it with :func:`normalize`."""

    p: int
    q: int

    def __post_init__(self):
        _check_canonical(self.p, self.q, "q")

    @property
    def is_sphere(self) -> bool:
        return self.p == 1

    def __str__(self) -> str:
        return "S3" if self.p == 1 else f"L({self.p},{self.q})"


@dataclass(frozen=True, order=True)
class LambdaClass:
    p: int
    value: int

    def __post_init__(self):
        _check_canonical(self.p, self.value, "lambda")

    def __str__(self) -> str:
        return str(self.value)


def normalize(p: int, q_raw: int) -> LensSpace:
    """Canonical ``L(p, q)`` for any ``q_raw`` prime to ``p``.

    >>> normalize(32, 9)
    LensSpace(p=32, q=7)
    >>> str(normalize(1, 42))
    'S3'
    """
    return LensSpace(p, orbit_min(p, q_raw))


def same_space(x: LensSpace, y: LensSpace) -> bool:
    return x.p == y.p and x.q == y.q


def canonical_lambda(p: int, lambda_raw: int) -> LambdaClass:
    return LambdaClass(p, orbit_min(p, lambda_raw))
