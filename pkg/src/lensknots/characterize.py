"""Which families can produce a given lens space.

Two closed-form tests cover the fiber families: ``p`` is represented by the
trefoil form ``m^2 + mn + n^2`` or by the figure-eight form ``|n^2 - mn - m^2|``
exactly when its prime factorization passes a congruence test. Everything else
is decided by a reverse search that rebuilds candidate coordinates from
``(p, q)`` and keeps only those that survive surgery.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import NamedTuple

from .families import (
    SPORADIC_FAMILIES, TWISTED_FAMILIES, FamilyId, KnotDescriptor,
    coords_of, descriptor_from_coords, fig8_window,
)
from .errors import NonPrimitive, NotLensSurgery
from .lens import LambdaClass, LensSpace, orbit_min
from .modmath import check_bound, divisors, factorize, solve_monic_quadratic_mod
from .surgery import HomologyCoordinates, surgery_lens_space


class FormTest(NamedTuple):
    representable: bool
    q_set: frozenset[int]


def _q_set(p: int, c0: int) -> frozenset[int]:
    # p = form(m, n) makes lambda = m/n a root of x^2 + x + c0 mod p
    return frozenset(orbit_min(p, x * x) for x in solve_monic_quadratic_mod(1, c0, p))


def trefoil_predicate(p: int) -> FormTest:
    """Whether ``p = m^2 + mn + n^2`` with ``gcd(m, n) = 1``, and the reachable ``q``.

    >>> trefoil_predicate(19)
    FormTest(representable=True, q_set=frozenset({7}))
    >>> trefoil_predicate(9).representable
    False
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    check_bound(p)
    ok = (p % 2 == 1 and p % 9 != 0
          and all(r == 3 or r % 6 == 1 for r in factorize(p).primes))
    return FormTest(ok, _q_set(p, 1) if ok else frozenset())


def fig8_predicate(p: int) -> FormTest:
    """Whether ``p = |n^2 - mn - m^2|`` with ``gcd(m, n) = 1``, and the reachable ``q``.

    >>> fig8_predicate(31).q_set
    frozenset({11})
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    check_bound(p)
    ok = p % 25 != 0 and all(r == 5 or r % 5 in (1, 4) for r in factorize(p).primes)
    return FormTest(ok, _q_set(p, -1) if ok else frozenset())


def represent_form(form: str, p: int) -> list[tuple[int, int]]:
    """All coprime ``(m, n)`` with ``|m|, |n| <= ceil(3 sqrt(p))`` representing ``p``.

    ``form`` is ``"trefoil"`` or ``"fig8"``. Pairs are given up to overall
    sign, normalized so the first nonzero entry is positive. For each ``m`` the
    equation is quadratic in ``n``, so ``n`` is read off an exact square root.

    >>> represent_form("trefoil", 7)
    [(1, -3), (1, 2), (2, -3), (2, 1), (3, -2), (3, -1)]
    """
    if form not in ("trefoil", "fig8"):
        raise ValueError(f"unknown form {form!r}")
    w = fig8_window(p)
    found = set()
    for m in range(0, w + 1):
        if form == "trefoil":
            # n^2 + m n + (m^2 - p) = 0
            discs = [4 * p - 3 * m * m]
        else:
            # n^2 - m n - (m^2 +- p) = 0
            discs = [5 * m * m + 4 * p, 5 * m * m - 4 * p]
        for disc in discs:
            if disc < 0:
                continue
            s = isqrt(disc)
            if s * s != disc:
                continue
            for root in {s, -s}:
                twice = (-m if form == "trefoil" else m) + root
                if twice % 2 or abs(twice // 2) > w:
                    continue
                n = twice // 2
                if gcd(m, n) == 1 and (m > 0 or n > 0):
                    found.add((m, n))
    return sorted(found)


@dataclass(frozen=True)
class Witness:
    family: FamilyId
    descriptor: KnotDescriptor
    lam: LambdaClass


@dataclass(frozen=True)
class ClassificationReport:
    query: LensSpace
    witnesses: tuple[Witness, ...]
    trefoil: FormTest
    fig8: FormTest

    @property
    def predicates(self) -> tuple[bool, bool]:
        return self.trefoil.representable, self.fig8.representable


# (linear, constant) coefficients of p = 22 J^2 + beta J + gamma
SPORADIC_P = {
    FamilyId.SPORADIC_A: (9, 1),
    FamilyId.SPORADIC_B: (13, 2),
    FamilyId.SPORADIC_C: (31, 11),
    FamilyId.SPORADIC_D: (35, 14),
}


def _torus_and_cable(p: int):
    # A = 1 and a = 1, so B b = p - 1 or B b = -(p + 1); cables have B b = 4 n s
    for target in (p - 1, -p - 1):
        for B in divisors(abs(target)):
            if B >= 2 and gcd(B, target // B) == 1:
                yield KnotDescriptor(FamilyId.TORUS, (B, target // B, 1))
        if target % 4 == 0:
            for n in divisors(abs(target) // 4):
                s = target // (4 * n)
                if n >= 2 and gcd(n, s) == 1:
                    yield KnotDescriptor(FamilyId.CABLE, (n, s, 1))


def _fibers(p: int):
    for f, form in ((FamilyId.TREFOIL, "trefoil"), (FamilyId.FIG8, "fig8")):
        for m, n in represent_form(form, p):
            if abs(m) >= 2 and abs(n) >= 2:
                yield KnotDescriptor(f, (m, n))


def _sporadics(p: int):
    for f in SPORADIC_FAMILIES:
        beta, gamma = SPORADIC_P[f]
        disc = beta * beta - 88 * (gamma - p)
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s == disc and (s - beta) % 44 == 0 and s >= beta:
            yield KnotDescriptor(f, ((s - beta) // 44,))


def _twisted(space: LensSpace):
    p, q = space.p, space.q
    for B in range(2, max(8, 2 * p // 5) + 1):
        if gcd(B, p) != 1 or orbit_min(p, B * B) != q:
            continue
        seen = set()
        for a in (1, -1):
            for sign in (1, -1):
                # A a + B b = sign * p
                A = sign * a * p % B
                if A == 0 or 2 * A > B:
                    continue
                b, rest = divmod(sign * p - a * A, B)
                if rest:
                    continue
                # (A, B, -1, b) and (A, B, 1, -b) give the same space and lambda
                c = HomologyCoordinates(A, B, 1, a * b)
                if c in seen:
                    continue
                seen.add(c)
                for f in TWISTED_FAMILIES:
                    d = descriptor_from_coords(c, f)
                    if d is not None:
                        yield d


def _simplest(d: KnotDescriptor):
    return sum(map(abs, d.params)), d.params


def classify(space: LensSpace) -> ClassificationReport:
    """Every family that produces ``space``, one witness per ``(family, lambda)``.

    Each candidate descriptor is pushed back through surgery and kept only if
    it lands on ``space``. Among descriptors sharing a family and lambda, the
    one with the smallest parameters (by sum of absolute values) is reported.
    """
    p = space.p
    if p < 2:
        raise ValueError("classify needs p >= 2")
    found: dict[tuple[FamilyId, int], KnotDescriptor] = {}
    candidates = [*_torus_and_cable(p), *_fibers(p), *_sporadics(p), *_twisted(space)]
    for d in candidates:
        try:
            r = surgery_lens_space(coords_of(d))
        except (NonPrimitive, NotLensSurgery):
            continue
        if r.space != space:
            continue
        key = (d.family, r.lam.value)
        if key not in found or _simplest(d) < _simplest(found[key]):
            found[key] = d
    witnesses = tuple(
        Witness(f, d, LambdaClass(p, lam))
        for (f, lam), d in sorted(found.items(), key=lambda kv: (kv[0][0].rank, kv[0][1])))
    return ClassificationReport(space, witnesses, trefoil_predicate(p), fig8_predicate(p))
