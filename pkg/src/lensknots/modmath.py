"""Exact integer and modular arithmetic.

Everything here works on Python integers, so nothing wraps around. The
magnitude bound ``MAX_INT`` (2**63 - 1) is enforced explicitly where the
contract requires it and is reported as :class:`~lensknots.errors.Overflow`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, isqrt

from .errors import NonUnit, NotPrime, Overflow

MAX_INT = (1 << 63) - 1

TRIAL_DIVISION_LIMIT = 10**6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# (bound, k): the first k bases decide primality for every n below bound.
# The last row covers n < 3.3 * 10**24, far above MAX_INT.
_MR_THRESHOLDS = (
    (2047, 1),
    (1373653, 2),
    (25326001, 3),
    (3215031751, 4),
    (2152302898747, 5),
    (3474749660383, 6),
    (341550071728321, 7),
    (3825123056546413051, 9),
    (318665857834031151167461, 12),
)


def check_bound(n: int) -> None:
    if abs(n) > MAX_INT:
        raise Overflow(f"{n} exceeds the supported bound 2**63 - 1")


def ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``g = gcd(|x|, |y|)`` and ``u*x + v*y = g``."""
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_u, u = u, old_u - k * u
        old_v, v = v, old_v - k * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    if old_r == 0:
        return 0, 0, 0
    return old_r, old_u, old_v


def mod_inv(x: int, m: int) -> int:
    """Inverse of ``x`` modulo ``m`` as a residue in ``[1, m-1]``."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    try:
        return pow(x, -1, m)
    except ValueError:
        raise NonUnit(f"{x} is not invertible modulo {m}") from None


def _miller_rabin(n: int) -> bool:
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    k = next(k for bound, k in _MR_THRESHOLDS if n < bound)
    for a in _MR_BASES[:k]:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for r in _MR_BASES:
        if n % r == 0:
            return n == r
    if n < 41 * 41:
        return True
    return _miller_rabin(n)


def _pollard_brent(n: int) -> int:
    """A non-trivial factor of the odd composite ``n`` (deterministic seeds)."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"no factor found for {n}")


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.factors)

    def prime_powers(self) -> tuple[int, ...]:
        return tuple(r**e for r, e in self.factors)


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Prime factorization by trial division, then Pollard rho (Brent)."""
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    check_bound(n)
    found: dict[int, int] = {}
    rest = n
    for r in (2, 3):
        while rest % r == 0:
            found[r] = found.get(r, 0) + 1
            rest //= r
    limit = min(TRIAL_DIVISION_LIMIT, isqrt(rest))
    d = 5
    while d <= limit:
        for r in (d, d + 2):
            if rest % r == 0:
                while rest % r == 0:
                    found[r] = found.get(r, 0) + 1
                    rest //= r
                limit = min(limit, isqrt(rest))
        d += 6
    if rest > 1:
        if rest <= TRIAL_DIVISION_LIMIT**2:
            # no divisor up to sqrt(rest) remained
            found[rest] = found.get(rest, 0) + 1
        else:
            _split(rest, found)
    return Factorization(n, tuple(sorted(found.items())))


def _tonelli_shanks(a: int, r: int) -> int:
    """One square root of the quadratic residue ``a`` modulo the odd prime ``r``."""
    if r % 4 == 3:
        return pow(a, (r + 1) // 4, r)
    q, s = r - 1, 0
    while not q & 1:
        q >>= 1
        s += 1
    z = 2
    while pow(z, (r - 1) // 2, r) != r - 1:
        z += 1
    m, c, t, x = s, pow(z, q, r), pow(a, q, r), pow(a, (q + 1) // 2, r)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % r
            i += 1
        b = pow(c, 1 << (m - i - 1), r)
        m, c = i, b * b % r
        t, x = t * c % r, x * b % r
    return x


def sqrt_mod_prime(a: int, r: int) -> frozenset[int]:
    """All ``x`` in ``[0, r-1]`` with ``x*x = a (mod r)`` for a prime ``r``.

    >>> sorted(sqrt_mod_prime(4, 7))
    [2, 5]
    >>> sqrt_mod_prime(3, 7)
    frozenset()
    """
    check_bound(r)
    if not is_prime(r):
        raise NotPrime(f"{r} is not prime")
    a %= r
    if r == 2 or a == 0:
        return frozenset((a,))
    if pow(a, (r - 1) // 2, r) != 1:
        return frozenset()
    x = _tonelli_shanks(a, r)
    return frozenset((x, r - x))


def _sqrt_unit_prime_power(u: int, r: int, e: int) -> set[int]:
    """Roots of ``z*z = u (mod r**e)`` for ``u`` prime to ``r``."""
    q = r**e
    if r == 2:
        if e == 1:
            return {1}
        if e == 2:
            return {1, 3} if u % 4 == 1 else set()
        if u % 8 != 1:
            return set()
        roots = {1, 3, 5, 7}
        for j in range(3, e):
            mod = 1 << (j + 1)
            roots = {z for y in roots for z in (y, y + (1 << j)) if (z * z - u) % mod == 0}
        return {z % q for z in roots}
    roots = set()
    for z in sqrt_mod_prime(u, r):
        mod = r
        for _ in range(e - 1):
            mod *= r
            # derivative 2z is a unit, so the lift is unique
            z = (z - (z * z - u) * pow(2 * z, -1, mod)) % mod
        roots.add(z)
    return roots


def sqrt_mod_prime_power(a: int, r: int, e: int) -> frozenset[int]:
    """All square roots of ``a`` modulo ``r**e`` (``r`` prime, ``e >= 1``)."""
    return _sqrt_prime_power(a % r**e, r, e)


@lru_cache(maxsize=1 << 16)
def _sqrt_prime_power(a: int, r: int, e: int) -> frozenset[int]:
    q = r**e
    if a == 0:
        step = r ** ((e + 1) // 2)
        return frozenset(range(0, q, step))
    v = 0
    while a % r**(v + 1) == 0:
        v += 1
    if v & 1:
        return frozenset()
    h = v // 2
    scale, period = r**h, r ** (e - v)
    zs = _sqrt_unit_prime_power(a // r**v, r, e - v)
    return frozenset((scale * (z + t * period)) % q for z in zs for t in range(r**h))


def crt_combine(parts: list[tuple[frozenset[int] | set[int], int]]) -> frozenset[int]:
    """Combine residue sets modulo pairwise coprime moduli into one set."""
    acc, mod = {0}, 1
    for residues, m in parts:
        if not residues:
            return frozenset()
        inv = pow(mod, -1, m) if m > 1 else 0
        acc = {x + mod * ((y - x) * inv % m) for x, y in product(acc, residues)}
        mod *= m
    return frozenset(acc)


@lru_cache(maxsize=1 << 16)
def sqrt_mod(a: int, m: int) -> frozenset[int]:
    """All square roots of ``a`` modulo ``m`` (any ``m >= 1``)."""
    if m == 1:
        return frozenset((0,))
    parts = [(sqrt_mod_prime_power(a, r, e), r**e) for r, e in factorize(m)]
    return crt_combine(parts)


@lru_cache(maxsize=1 << 12)
def _half_roots(d: int, m: int) -> tuple[int, ...]:
    # x^2 + c1 x + c0 = 0 (mod m)  <=>  (2x + c1)^2 = d (mod 4m), d = c1^2 - 4 c0;
    # every root y has the parity of c1, and x = (y >> 1) - (c1 >> 1) (mod m)
    powers = dict(factorize(m).factors)
    powers[2] = powers.get(2, 0) + 2
    ys = crt_combine([(sqrt_mod_prime_power(d, r, e), r**e) for r, e in sorted(powers.items())])
    return tuple(sorted({(y >> 1) % m for y in ys}))


# Per-modulus memo of _half_roots indexed by the discriminant mod 4m. The
# exhaustive sweeps call the solver millions of times with small moduli;
# entries are idempotent, so a racing double fill is harmless.
_TABLE_MODULUS_LIMIT = 4096
_MAX_TABLES = 64
_tables: dict[int, list] = {}
_EMPTY: frozenset[int] = frozenset()


def solve_monic_quadratic_mod(c1: int, c0: int, m: int) -> frozenset[int]:
    """All ``x`` in ``[0, m-1]`` with ``x*x + c1*x + c0 = 0 (mod m)``.

    The discriminant is square-rooted prime power by prime power (Tonelli-Shanks
    on each prime, Hensel lifting, explicit handling of the ramified case where
    the prime divides the discriminant), then recombined by CRT.

    >>> sorted(solve_monic_quadratic_mod(1, 1, 7))
    [2, 4]
    >>> sorted(solve_monic_quadratic_mod(1, -1, 5))
    [2]
    """
    table = _tables.get(m)
    if table is None:
        if m < 2:
            raise ValueError(f"modulus must be >= 2, got {m}")
        check_bound(m)
        if m > _TABLE_MODULUS_LIMIT:
            half = _half_roots((c1 * c1 - 4 * c0) % (m << 2), m)
            s = c1 >> 1
            return frozenset([(v - s) % m for v in half])
        if len(_tables) >= _MAX_TABLES:
            _tables.pop(next(iter(_tables)), None)
        table = _tables[m] = [None] * (m << 2)
    d = (c1 * c1 - 4 * c0) % (m << 2)
    half = table[d]
    if half is None:
        half = table[d] = _half_roots(d, m)
    if not half:
        return _EMPTY
    s = c1 >> 1
    if len(half) == 2:
        return frozenset(((half[0] - s) % m, (half[1] - s) % m))
    return frozenset([(v - s) % m for v in half])


def divisors(n: int) -> list[int]:
    """Positive divisors of ``n >= 1`` in increasing order."""
    out = [1]
    for r, e in factorize(n):
        out = [d * r**k for d in out for k in range(e + 1)]
    return sorted(out)
