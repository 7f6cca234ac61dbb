from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from lensknots.errors import NonUnit, NotPrime, Overflow
from lensknots.modmath import (
    MAX_INT, crt_combine, divisors, ext_gcd, factorize, is_prime, mod_inv,
    solve_monic_quadratic_mod, sqrt_mod, sqrt_mod_prime, sqrt_mod_prime_power,
)


@pytest.mark.parametrize("x, y, g", [(5, 18, 1), (6, 4, 2), (0, 7, 7), (-12, 18, 6), (0, 0, 0)])
def test_ext_gcd_examples(x, y, g):
    got, u, v = ext_gcd(x, y)
    assert got == g
    assert u * x + v * y == g


def test_ext_gcd_exact_values():
    assert ext_gcd(5, 18) == (1, -7, 2)
    assert ext_gcd(6, 4) == (2, 1, -1)
    assert ext_gcd(0, 0) == (0, 0, 0)


@given(st.integers(-10**20, 10**20), st.integers(-10**20, 10**20))
def test_ext_gcd_bezout(x, y):
    g, u, v = ext_gcd(x, y)
    assert g == gcd(x, y)
    assert u * x + v * y == g


def test_mod_inv():
    assert mod_inv(5, 18) == 11
    assert mod_inv(1, 7) == 1
    with pytest.raises(NonUnit):
        mod_inv(4, 8)
    with pytest.raises(ValueError):
        mod_inv(1, 1)


@given(st.integers(2, 10**12), st.integers(-10**12, 10**12))
def test_mod_inv_property(m, x):
    if gcd(x, m) == 1:
        assert mod_inv(x, m) * x % m == 1
        assert 1 <= mod_inv(x, m) < m or m == 1
    else:
        with pytest.raises(NonUnit):
            mod_inv(x, m)


def test_factorize_examples():
    assert factorize(91).factors == ((7, 1), (13, 1))
    assert factorize(1).factors == ()
    assert factorize(500).factors == ((2, 2), (5, 3))


def test_factorize_large():
    m61 = (1 << 61) - 1
    assert factorize(m61).factors == ((m61, 1),)
    n = (2**31 - 1) * (2**31 + 11)
    assert prod(r**e for r, e in factorize(n)) == n
    assert all(is_prime(r) for r in factorize(n).primes)
    assert factorize(MAX_INT).value == MAX_INT
    with pytest.raises(Overflow):
        factorize(MAX_INT + 1)


@given(st.integers(1, 10**15))
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert prod(r**e for r, e in f) == n
    assert list(f.primes) == sorted(set(f.primes))
    assert all(is_prime(r) and e >= 1 for r, e in f)


def _sieve(n):
    flags = bytearray([1]) * n
    flags[:2] = b"\0\0"
    for i in range(2, int(n**0.5) + 1):
        if flags[i]:
            flags[i * i::i] = bytearray(len(flags[i * i::i]))
    return flags


def test_is_prime_matches_sieve():
    flags = _sieve(20000)
    assert all(is_prime(n) == bool(flags[n]) for n in range(20000))
    # strong pseudoprimes to several small bases
    for n in (2047, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383,
              341550071728321, 3825123056546413051):
        assert not is_prime(n)


def test_sqrt_mod_prime_examples():
    assert sqrt_mod_prime(4, 7) == {2, 5}
    assert sqrt_mod_prime(-3, 7) == {2, 5}
    assert sqrt_mod_prime(3, 7) == set()
    assert sqrt_mod_prime(1, 101) == {1, 100}
    assert sqrt_mod_prime(1, 2) == {1}
    with pytest.raises(NotPrime):
        sqrt_mod_prime(1, 9)


def test_sqrt_mod_prime_large():
    r = (1 << 61) - 1
    roots = sqrt_mod_prime(12345 ** 2, r)
    assert roots == {12345, r - 12345}


@pytest.mark.parametrize("r, e", [(2, 1), (2, 3), (2, 6), (3, 4), (5, 3), (7, 2)])
def test_sqrt_prime_power_brute(r, e):
    q = r**e
    for a in range(q):
        assert sqrt_mod_prime_power(a, r, e) == {x for x in range(q) if (x * x - a) % q == 0}


def test_sqrt_mod_composite_brute():
    for m in range(1, 200):
        for a in range(m):
            assert sqrt_mod(a, m) == {x for x in range(m) if (x * x - a) % m == 0}


def test_crt_combine():
    assert crt_combine([({1, 2}, 3), ({0}, 5)]) == {10, 5}
    assert crt_combine([(set(), 3), ({0}, 5)]) == set()


def test_solve_monic_examples():
    assert solve_monic_quadratic_mod(1, 1, 7) == {2, 4}
    assert solve_monic_quadratic_mod(1, 1, 3) == {1}
    assert solve_monic_quadratic_mod(1, -1, 5) == {2}
    assert solve_monic_quadratic_mod(1, 1, 19) == {7, 11}
    assert solve_monic_quadratic_mod(1, 1, 9) == set()
    assert solve_monic_quadratic_mod(1, 1, 91) == {9, 16, 74, 81}
    with pytest.raises(ValueError):
        solve_monic_quadratic_mod(1, 1, 1)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(4097, 10**5))
def test_solve_monic_large_modulus(c1, c0, m):
    got = solve_monic_quadratic_mod(c1, c0, m)
    assert all((x * x + c1 * x + c0) % m == 0 for x in got)
    if m < 30000:
        assert got == {x for x in range(m) if (x * x + c1 * x + c0) % m == 0}


def test_solve_monic_huge_prime_modulus():
    r = 10**18 + 9
    roots = solve_monic_quadratic_mod(1, 1, r)
    assert len(roots) == 2
    assert all((x * x + x + 1) % r == 0 for x in roots)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
