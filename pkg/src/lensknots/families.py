"""The twelve families of double-primitive knots.

Each family is a parametrised set of curves on the genus two Heegaard surface.
This module gives, per family, the homology coordinates ``(A, B, a, b)``, the
word the curve spells in the free group on ``A, B`` (non-fiber families only),
the coordinate-level constraint system, and a bounded, deterministic
enumeration of every member whose surgery gives ``L(p, q)`` with ``p <= p_max``.

Coordinates of the four twisted families (types III to VI):

* type III: ``A = J+1``, ``B = (2n+eps)A - eps``, ``b = -a(2 eps A + B K)``
* type IV:  ``A = 2J+1``, ``B = nA + J eps``, ``b = -a(eps A + B K)``
* type V:   ``A = 2J+3``, ``B = nA + eps``, ``b = -a(eps A + B K)``
* type VI:  ``A = 2J+2``, ``B = 2A+1``, ``b = a(A - 1 + B K)``
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd, isqrt
from typing import Iterator

from .errors import InvalidDescriptor, NoWordForm, NonPrimitive
from .surgery import HomologyCoordinates, SurgeryResult, surgery_lens_space


class FamilyId(str, Enum):
    TORUS = "torus"
    CABLE = "cable"
    TYPE_III = "type-iii"
    TYPE_IV = "type-iv"
    TYPE_V = "type-v"
    TYPE_VI = "type-vi"
    TREFOIL = "trefoil"
    FIG8 = "fig8"
    SPORADIC_A = "sporadic-a"
    SPORADIC_B = "sporadic-b"
    SPORADIC_C = "sporadic-c"
    SPORADIC_D = "sporadic-d"

    def __str__(self) -> str:
        return self.value

    @property
    def rank(self) -> int:
        return _RANK[self]


_RANK = {f: i for i, f in enumerate(FamilyId)}

FIBER_FAMILIES = frozenset({FamilyId.TREFOIL, FamilyId.FIG8})
TWISTED_FAMILIES = (FamilyId.TYPE_III, FamilyId.TYPE_IV, FamilyId.TYPE_V, FamilyId.TYPE_VI)
SPORADIC_FAMILIES = (FamilyId.SPORADIC_A, FamilyId.SPORADIC_B,
                     FamilyId.SPORADIC_C, FamilyId.SPORADIC_D)

PARAM_NAMES: dict[FamilyId, tuple[str, ...]] = {
    FamilyId.TORUS: ("n", "s", "a"),
    FamilyId.CABLE: ("n", "s", "a"),
    FamilyId.TYPE_III: ("J", "n", "eps", "a", "K"),
    FamilyId.TYPE_IV: ("J", "n", "eps", "a", "K"),
    FamilyId.TYPE_V: ("J", "n", "eps", "a", "K"),
    FamilyId.TYPE_VI: ("J", "a", "K"),
    FamilyId.TREFOIL: ("m", "n"),
    FamilyId.FIG8: ("m", "n"),
    **{f: ("J",) for f in SPORADIC_FAMILIES},
}


@dataclass(frozen=True)
class SporadicTuple:
    """Exponents of the sporadic word template ``A^p B^n (A^m B^q A^m B^n)^J``.

    The primed entries are the exponents of the same curve read in the
    complementary handlebody (letters ``a``, ``b``). Embedding requires
    ``p m' - m p' = q n' - n q' = 1``.
    """

    p: int
    p_prime: int
    m: int
    m_prime: int
    q: int
    q_prime: int
    n: int
    n_prime: int

    def __post_init__(self):
        if self.p * self.m_prime - self.m * self.p_prime != 1:
            raise ValueError("p m' - m p' must equal 1")
        if self.q * self.n_prime - self.n * self.q_prime != 1:
            raise ValueError("q n' - n q' must equal 1")

    def coordinates(self, J: int) -> tuple[int, int, int, int]:
        # exponent sums of the word and of its primed counterpart
        return (self.p + 2 * self.m * J, self.n + (self.q + self.n) * J,
                self.p_prime + 2 * self.m_prime * J,
                self.n_prime + (self.q_prime + self.n_prime) * J)


SPORADIC_TUPLES: dict[FamilyId, SporadicTuple] = {
    FamilyId.SPORADIC_A: SporadicTuple(1, 1, 2, 3, 1, -1, 1, 0),
    FamilyId.SPORADIC_B: SporadicTuple(2, 1, 3, 2, 1, -1, 1, 0),
    FamilyId.SPORADIC_C: SporadicTuple(4, -3, 3, -2, 1, 0, 1, 1),
    FamilyId.SPORADIC_D: SporadicTuple(3, -5, 2, -3, 1, 0, 1, 1),
}


def _validate(family: FamilyId, v: dict[str, int]) -> None:
    def need(cond, msg):
        if not cond:
            raise InvalidDescriptor(f"{family}: {msg} (params {v})")

    if "a" in v:
        need(v["a"] in (1, -1), "a must be +-1")
    if "eps" in v:
        need(v["eps"] in (1, -1), "eps must be +-1")
    if family in (FamilyId.TORUS, FamilyId.CABLE):
        need(v["n"] >= 2, "n >= 2")
        need(gcd(v["n"], v["s"]) == 1, "gcd(n, s) = 1")
    elif family is FamilyId.TYPE_III:
        need(v["J"] >= 1 and v["n"] >= 1, "J >= 1, n >= 1")
        need(v["n"] != 1 or v["eps"] == 1, "eps = 1 when n = 1")
    elif family is FamilyId.TYPE_IV:
        need(v["J"] >= 2 and v["n"] >= 2, "J >= 2, n >= 2")
        need(v["n"] != 2 or v["eps"] == 1, "eps = 1 when n = 2")
    elif family is FamilyId.TYPE_V:
        need(v["J"] >= 0 and v["n"] >= 2, "J >= 0, n >= 2")
        need(v["n"] != 2 or v["eps"] == 1, "eps = 1 when n = 2")
    elif family is FamilyId.TYPE_VI:
        need(v["J"] >= 1, "J >= 1")
    elif family in FIBER_FAMILIES:
        need(abs(v["m"]) >= 2 and abs(v["n"]) >= 2, "|m|, |n| >= 2")
        need(gcd(v["m"], v["n"]) == 1, "gcd(m, n) = 1")
    else:
        need(v["J"] >= 0, "J >= 0")


@dataclass(frozen=True)
class KnotDescriptor:
    """A family plus its parameter tuple, in the order of ``PARAM_NAMES``."""

    family: FamilyId
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "family", FamilyId(self.family))
        names = PARAM_NAMES[self.family]
        if len(self.params) != len(names):
            raise InvalidDescriptor(f"{self.family} takes parameters {names}, got {self.params}")
        _validate(self.family, dict(zip(names, self.params)))

    @classmethod
    def of(cls, family: FamilyId | str, **params: int) -> KnotDescriptor:
        family = FamilyId(family)
        names = PARAM_NAMES[family]
        if set(params) != set(names):
            raise InvalidDescriptor(f"{family} takes parameters {names}, got {sorted(params)}")
        return cls(family, tuple(params[k] for k in names))

    def __getitem__(self, name: str) -> int:
        return self.params[PARAM_NAMES[self.family].index(name)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(PARAM_NAMES[self.family], self.params))

    def params_str(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.as_dict().items())

    def sort_key(self):
        return (self.family.rank, self.params)

    def __str__(self) -> str:
        return f"{self.family}({self.params_str()})"


def coords_of(d: KnotDescriptor) -> HomologyCoordinates:
    f, v = d.family, d.as_dict()
    if f is FamilyId.TORUS:
        return HomologyCoordinates(1, v["n"], v["a"], v["s"])
    if f is FamilyId.CABLE:
        return HomologyCoordinates(1, 2 * v["n"], v["a"], 2 * v["s"])
    if f in SPORADIC_FAMILIES:
        return HomologyCoordinates(*SPORADIC_TUPLES[f].coordinates(v["J"]))
    if f in FIBER_FAMILIES:
        m, n = v["m"], v["n"]
        return HomologyCoordinates(m, n, -(m + n), -n if f is FamilyId.TREFOIL else n)
    J, a, K = v["J"], v["a"], v["K"]
    if f is FamilyId.TYPE_VI:
        A = 2 * J + 2
        B = 2 * A + 1
        return HomologyCoordinates(A, B, a, a * (A - 1) + a * B * K)
    n, eps = v["n"], v["eps"]
    if f is FamilyId.TYPE_III:
        A = J + 1
        B = (2 * n + eps) * A - eps
        return HomologyCoordinates(A, B, a, -a * 2 * eps * A - a * B * K)
    if f is FamilyId.TYPE_IV:
        A = 2 * J + 1
        B = n * A + J * eps
    else:
        A = 2 * J + 3
        B = n * A + eps
    return HomologyCoordinates(A, B, a, -a * eps * A - a * B * K)


# -- words -------------------------------------------------------------------

Word = tuple[tuple[str, int], ...]


def _syllables(*parts) -> Word:
    out: list[tuple[str, int]] = []
    for letter, exp in parts:
        if exp == 0:
            continue
        if out and out[-1][0] == letter:
            out[-1] = (letter, out[-1][1] + exp)
        else:
            out.append((letter, exp))
    return tuple(out)


def word_of(d: KnotDescriptor) -> Word:
    """The curve as a word in ``A, B`` with positive exponents, as syllables.

    >>> format_word(word_of(KnotDescriptor.of("type-vi", J=1, a=1, K=0)))
    'BAB^2AB^3AB^2AB'
    """
    f, v = d.family, d.as_dict()
    A, B = "A", "B"
    if f in FIBER_FAMILIES:
        raise NoWordForm(f"{f} knots are curves on a fiber surface, not words")
    if f is FamilyId.TORUS:
        return _syllables((A, 1), (B, v["n"]))
    if f is FamilyId.CABLE:
        return _syllables((B, v["n"]), (A, 1), (B, v["n"]))
    if f in SPORADIC_FAMILIES:
        t = SPORADIC_TUPLES[f]
        body = [(A, t.m), (B, t.q), (A, t.m), (B, t.n)] * v["J"]
        return _syllables((A, t.p), (B, t.n), *body)
    J = v["J"]
    if f is FamilyId.TYPE_VI:
        twist = [(A, 1), (B, 2)] * J
        return _syllables((B, 1), *twist, (A, 1), (B, 3), *twist, (A, 1), (B, 1))
    n, eps = v["n"], v["eps"]
    if f is FamilyId.TYPE_III:
        return _syllables((B, n), *[(A, 1), (B, 2 * n + eps)] * J, (A, 1), (B, n))
    if f is FamilyId.TYPE_IV:
        return _syllables((A, 1), (B, n), *[(A, 1), (B, n + eps), (A, 1), (B, n)] * J)
    side = [(A, 1), (B, n)] * (J + 1)
    return _syllables(*side, (A, 1), (B, n + eps), *side)


def format_word(w: Word) -> str:
    return "".join(letter if exp == 1 else f"{letter}^{exp}" for letter, exp in w)


def abelianization(w: Word) -> tuple[int, int]:
    """Exponent sums ``(A_total, B_total)`` of a word."""
    totals = {"A": 0, "B": 0}
    for letter, exp in w:
        totals[letter] += exp
    return totals["A"], totals["B"]


# -- coordinate constraints --------------------------------------------------

def _is_sporadic(c: HomologyCoordinates, f: FamilyId) -> bool:
    if c.B < 1 or c.B % 2 == 0:
        return False
    return SPORADIC_TUPLES[f].coordinates((c.B - 1) // 2) == tuple(c)


def check_constraints(c: HomologyCoordinates, f: FamilyId | str) -> bool:
    """Whether ``c`` satisfies the coordinate-level constraints of family ``f``.

    These are the forms used by the reverse search in ``classify``. For the
    twisted families they are looser than the parameter ranges that
    :class:`KnotDescriptor` enforces, e.g. type III with ``n = 0`` passes here.
    """
    f = FamilyId(f)
    A, B, a, b = c
    unit_a = a in (1, -1)
    if f is FamilyId.TORUS:
        return A == 1 and unit_a and B >= 2 and gcd(B, b) == 1
    if f is FamilyId.CABLE:
        return A == 1 and unit_a and B >= 4 and gcd(B, b) == 2
    if f in FIBER_FAMILIES:
        sign = -1 if f is FamilyId.TREFOIL else 1
        return (abs(A) >= 2 and abs(B) >= 2 and gcd(A, B) == 1
                and a == -(A + B) and b == sign * B)
    if f in SPORADIC_FAMILIES:
        return _is_sporadic(c, f)
    if not unit_a or B < 1:
        return False
    if f is FamilyId.TYPE_III:
        return A > 1 and any(
            (B + e) % A == 0 and (B + e) // A % 2 == 1 and (b + 2 * e * A * a) % B == 0
            for e in (1, -1))
    if f is FamilyId.TYPE_IV:
        return A > 3 and any(
            (2 * B + e) % A == 0 and (b + e * A * a) % B == 0 for e in (1, -1))
    if f is FamilyId.TYPE_V:
        return A > 1 and A % 2 == 1 and any(
            (B - e) % A == 0 and (b + e * A * a) % B == 0 for e in (1, -1))
    return A > 2 and A % 2 == 0 and B == 2 * A + 1 and (b - a * (A - 1)) % B == 0


def _candidates(c: HomologyCoordinates, f: FamilyId) -> Iterator[dict[str, int]]:
    A, B, a, b = c
    if f in (FamilyId.TORUS, FamilyId.CABLE):
        k = 1 if f is FamilyId.TORUS else 2
        if A == 1 and B % k == 0 and b % k == 0:
            yield dict(n=B // k, s=b // k, a=a)
        return
    if f in FIBER_FAMILIES:
        yield dict(m=A, n=B)
        return
    if f in SPORADIC_FAMILIES:
        if B % 2 == 1:
            yield dict(J=(B - 1) // 2)
        return
    if a not in (1, -1) or B < 1:
        return
    if f is FamilyId.TYPE_VI:
        if A % 2 == 0 and (a * b - (A - 1)) % B == 0:
            yield dict(J=(A - 2) // 2, a=a, K=(a * b - (A - 1)) // B)
        return
    for e in (1, -1):
        if f is FamilyId.TYPE_III:
            J, u = A - 1, B + e
            if u % A or (u // A - e) % 2:
                continue
            n, rest = (u // A - e) // 2, -a * b - 2 * e * A
        elif f is FamilyId.TYPE_IV:
            if A % 2 == 0 or (B - (A - 1) // 2 * e) % A:
                continue
            J = (A - 1) // 2
            n, rest = (B - J * e) // A, -a * b - e * A
        else:
            if A % 2 == 0 or (B - e) % A:
                continue
            J = (A - 3) // 2
            n, rest = (B - e) // A, -a * b - e * A
        if rest % B == 0:
            yield dict(J=J, n=n, eps=e, a=a, K=rest // B)


def descriptor_from_coords(c: HomologyCoordinates, f: FamilyId | str) -> KnotDescriptor | None:
    """The descriptor of family ``f`` whose coordinates are exactly ``c``, if any."""
    f = FamilyId(f)
    for params in _candidates(c, f):
        try:
            d = KnotDescriptor.of(f, **params)
        except InvalidDescriptor:
            continue
        if coords_of(d) == c:
            return d
    return None


# -- enumeration -------------------------------------------------------------

def _k_window(u: int, v: int, p_max: int) -> range:
    """Integers ``K`` with ``|u + v K| <= p_max`` (``v != 0``)."""
    if v < 0:
        u, v = -u, -v
    return range(-((p_max + u) // v), (p_max - u) // v + 1)


def ceil_sqrt(n: int) -> int:
    r = isqrt(n)
    return r if r * r == n else r + 1


def fig8_window(p: int) -> int:
    """Search bound ``ceil(3 sqrt(p))`` for representations by the fig-8 form."""
    return ceil_sqrt(9 * p)


def trefoil_window(p: int) -> int:
    # m^2 + mn + n^2 >= 3/4 max(m^2, n^2)
    return isqrt(4 * p // 3) + 1


_FIRST_J = {FamilyId.TYPE_III: 1, FamilyId.TYPE_IV: 2, FamilyId.TYPE_V: 0, FamilyId.TYPE_VI: 1}


def _twisted_rows(f: FamilyId, J: int):
    """Lists of ``(n, eps, A, B, b0, slope)`` at a = 1, one list per ``n``.

    ``b = b0 + slope * K``. Along each ``eps`` branch ``B`` grows with ``n``,
    and the first ``eps = -1`` entry is never below the first ``eps = 1`` one.
    """
    if f is FamilyId.TYPE_VI:
        A = 2 * J + 2
        B = 2 * A + 1
        yield [(None, None, A, B, A - 1, B)]
        return
    if f is FamilyId.TYPE_III:
        A, n0 = J + 1, 1
    elif f is FamilyId.TYPE_IV:
        A, n0 = 2 * J + 1, 2
    else:
        A, n0 = 2 * J + 3, 2
    n = n0
    while True:
        row = []
        for eps in (1, -1) if n > n0 else (1,):
            if f is FamilyId.TYPE_III:
                B, b0 = (2 * n + eps) * A - eps, -2 * eps * A
            elif f is FamilyId.TYPE_IV:
                B, b0 = n * A + J * eps, -eps * A
            else:
                B, b0 = n * A + eps, -eps * A
            row.append((n, eps, A, B, b0, -B))
        yield row
        n += 1


def _twisted(f: FamilyId, p_max: int) -> Iterator[KnotDescriptor]:
    # |A a + B b| >= B|b| - A >= B - A since b is never 0 mod B in these
    # families. B - A grows with n and with J, so both loops stop once that
    # lower bound passes p_max.
    J, prev_floor = _FIRST_J[f], None
    while True:
        rows = _twisted_rows(f, J)
        row = next(rows)
        floor = min(B - A for _, _, A, B, _, _ in row)
        assert prev_floor is None or floor > prev_floor, "lower bound must grow with J"
        if floor > p_max:
            return
        prev_floor = floor
        while True:
            live = [s for s in row if s[3] - s[2] <= p_max]
            if not live:
                break
            for n, eps, A, B, b0, slope in live:
                for K in _k_window(A + B * b0, B * slope, p_max):
                    if f is FamilyId.TYPE_VI:
                        yield KnotDescriptor(f, (J, 1, K))
                    else:
                        yield KnotDescriptor(f, (J, n, eps, 1, K))
            row = next(rows, None)
            if row is None:
                break
        J += 1


def _descriptors(f: FamilyId, p_max: int) -> Iterator[KnotDescriptor]:
    """Candidate descriptors with ``a = 1`` covering every member with ``p <= p_max``.

    Flipping ``a`` and ``b`` together negates ``A a + B b`` and leaves both
    ``q`` and the canonical lambda unchanged, so ``a = -1`` is never emitted.
    """
    if f in TWISTED_FAMILIES:
        yield from _twisted(f, p_max)
    elif f in (FamilyId.TORUS, FamilyId.CABLE):
        k = 1 if f is FamilyId.TORUS else 4
        n = 2
        while k * n - 1 <= p_max:
            for s in _k_window(1, k * n, p_max):
                if gcd(n, s) == 1:
                    yield KnotDescriptor(f, (n, s, 1))
            n += 1
    elif f in FIBER_FAMILIES:
        w = trefoil_window(p_max) if f is FamilyId.TREFOIL else fig8_window(p_max)
        for m in range(2, w + 1):
            for n in range(-w, w + 1):
                if abs(n) >= 2 and gcd(m, n) == 1:
                    yield KnotDescriptor(f, (m, n))
    else:
        J = 0
        while coords_of(KnotDescriptor(f, (J,))).p_raw <= p_max:
            yield KnotDescriptor(f, (J,))
            J += 1


@dataclass(frozen=True)
class FamilyMember:
    descriptor: KnotDescriptor
    coords: HomologyCoordinates
    result: SurgeryResult

    def sort_key(self):
        r = self.result
        return (r.space.p, r.space.q, r.lam.value, self.descriptor.sort_key())


def member(d: KnotDescriptor) -> FamilyMember:
    c = coords_of(d)
    return FamilyMember(d, c, surgery_lens_space(c))


def enumerate_family(f: FamilyId | str, p_max: int) -> list[FamilyMember]:
    """Every member of ``f`` with ``2 <= p <= p_max``, sorted by ``(p, q, lambda)``.

    Members landing on the 3-sphere or on a non-lens result are skipped.
    """
    f = FamilyId(f)
    out = []
    for d in _descriptors(f, p_max):
        c = coords_of(d)
        if not 2 <= c.p_raw <= p_max:
            continue
        try:
            out.append(FamilyMember(d, c, surgery_lens_space(c)))
        except NonPrimitive:
            continue
    out.sort(key=FamilyMember.sort_key)
    return out
