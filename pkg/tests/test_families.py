from itertools import product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from lensknots.errors import InvalidDescriptor, NonPrimitive, NoWordForm
from lensknots.families import (
    FIBER_FAMILIES, PARAM_NAMES, SPORADIC_TUPLES, TWISTED_FAMILIES, FamilyId, KnotDescriptor, SporadicTuple, abelianization,
    check_constraints, coords_of, descriptor_from_coords, enumerate_family, format_word, word_of,
)
from lensknots.lens import LensSpace
from lensknots.surgery import HomologyCoordinates, surgery_lens_space

D = KnotDescriptor.of


def test_coords_examples():
    assert tuple(coords_of(D("type-iii", J=1, n=1, eps=1, a=1, K=0))) == (2, 5, 1, -4)
    assert tuple(coords_of(D("sporadic-b", J=1))) == (8, 3, 5, -1)
    assert tuple(coords_of(D("trefoil", m=2, n=3))) == (2, 3, -5, -3)
    assert tuple(coords_of(D("type-vi", J=1, a=1, K=0))) == (4, 9, 1, 3)
    assert tuple(coords_of(D("fig8", m=2, n=3))) == (2, 3, -5, 3)
    assert tuple(coords_of(D("torus", n=3, s=2, a=-1))) == (1, 3, -1, 2)
    assert tuple(coords_of(D("cable", n=2, s=-1, a=1))) == (1, 4, 1, -2)


@pytest.mark.parametrize("J", range(0, 30))
def test_sporadic_coords_match_listed_formulas(J):
    listed = {
        FamilyId.SPORADIC_A: (4 * J + 1, 2 * J + 1, 6 * J + 1, -J),
        FamilyId.SPORADIC_B: (6 * J + 2, 2 * J + 1, 4 * J + 1, -J),
        FamilyId.SPORADIC_C: (6 * J + 4, 2 * J + 1, -4 * J - 3, J + 1),
        FamilyId.SPORADIC_D: (4 * J + 3, 2 * J + 1, -6 * J - 5, J + 1),
    }
    for f, expected in listed.items():
        assert tuple(coords_of(KnotDescriptor(f, (J,)))) == expected


def test_sporadic_tuple_determinants():
    for t in SPORADIC_TUPLES.values():
        assert t.p * t.m_prime - t.m * t.p_prime == 1
        assert t.q * t.n_prime - t.n * t.q_prime == 1
    with pytest.raises(ValueError):
        SporadicTuple(1, 1, 2, 2, 1, -1, 1, 0)


def test_word_examples():
    assert format_word(word_of(D("sporadic-a", J=1))) == "ABA^2BA^2B"
    assert format_word(word_of(D("type-vi", J=1, a=1, K=0))) == "BAB^2AB^3AB^2AB"
    assert format_word(word_of(D("torus", n=3, s=2, a=1))) == "AB^3"
    assert format_word(word_of(D("cable", n=2, s=1, a=1))) == "B^2AB^2"
    assert format_word(word_of(D("type-iii", J=2, n=1, eps=1, a=1, K=0))) == "BAB^3AB^3AB"
    assert format_word(word_of(D("type-iv", J=2, n=2, eps=1, a=1, K=0))) == "AB^2AB^3AB^2AB^3AB^2"
    assert format_word(word_of(D("type-v", J=0, n=2, eps=1, a=1, K=0))) == "AB^2AB^3AB^2"
    with pytest.raises(NoWordForm):
        word_of(D("trefoil", m=2, n=3))


def test_abelianization_examples():
    assert abelianization(word_of(D("sporadic-a", J=1))) == (5, 3)
    assert abelianization(word_of(D("type-vi", J=1, a=1, K=0))) == (4, 9)
    assert abelianization(()) == (0, 0)


def test_check_constraints_examples():
    assert check_constraints(HomologyCoordinates(2, 5, -1, 4), FamilyId.TYPE_III)
    assert check_constraints(HomologyCoordinates(1, 3, 1, 2), FamilyId.TORUS)
    assert not check_constraints(HomologyCoordinates(2, 5, -1, 3), FamilyId.TYPE_III)
    assert not check_constraints(HomologyCoordinates(1, 3, 1, -2), FamilyId.TYPE_III)
    # n = 0 satisfies the coordinate constraints but is no valid descriptor
    loose = HomologyCoordinates(2, 1, 1, 0)
    assert check_constraints(loose, FamilyId.TYPE_III)
    assert descriptor_from_coords(loose, FamilyId.TYPE_III) is None
    assert not check_constraints(HomologyCoordinates(1, 4, 1, 3), FamilyId.CABLE)


@pytest.mark.parametrize("family, params", [
    ("torus", dict(n=1, s=1, a=1)),
    ("torus", dict(n=4, s=2, a=1)),
    ("cable", dict(n=3, s=1, a=2)),
    ("type-iii", dict(J=0, n=1, eps=1, a=1, K=0)),
    ("type-iii", dict(J=1, n=1, eps=-1, a=1, K=0)),
    ("type-iv", dict(J=1, n=2, eps=1, a=1, K=0)),
    ("type-iv", dict(J=2, n=2, eps=-1, a=1, K=0)),
    ("type-v", dict(J=0, n=1, eps=1, a=1, K=0)),
    ("type-vi", dict(J=0, a=1, K=0)),
    ("trefoil", dict(m=1, n=3)),
    ("fig8", dict(m=4, n=6)),
    ("sporadic-c", dict(J=-1)),
])
def test_invalid_descriptors(family, params):
    with pytest.raises(InvalidDescriptor):
        D(family, **params)


def test_descriptor_rendering():
    d = D("type-iii", J=1, n=1, eps=1, a=1, K=0)
    assert d.params_str() == "J=1,n=1,eps=1,a=1,K=0"
    assert str(d) == "type-iii(J=1,n=1,eps=1,a=1,K=0)"
    assert d["K"] == 0
    with pytest.raises(InvalidDescriptor):
        D("type-vi", J=1)


def test_enumerate_examples():
    spor = enumerate_family(FamilyId.SPORADIC_A, 500)
    assert [m.descriptor["J"] for m in spor] == [1, 2, 3, 4]
    assert [m.result.space for m in spor] == [
        LensSpace(32, 7), LensSpace(107, 41), LensSpace(226, 69), LensSpace(389, 91)]
    tref = {(m.result.space, m.result.lam.value) for m in enumerate_family("trefoil", 20)}
    assert (LensSpace(19, 7), 7) in tref
    assert {s.p for s, _ in tref} == {7, 13, 19}
    iii = {(m.result.space, m.result.lam.value) for m in enumerate_family("type-iii", 18)}
    assert (LensSpace(18, 5), 5) in iii


@pytest.mark.parametrize("J", range(0, 51))
def test_sporadic_a_closed_form_by_orbit_brute_force(J):
    p = 22 * J * J + 9 * J + 1
    if p < 2:
        return
    r = surgery_lens_space(coords_of(D("sporadic-a", J=J)))
    q = (11 * J + 2) ** 2 % p
    orbit = {x for x in range(1, p) if x in (q, p - q) or x * q % p in (1, p - 1)}
    assert r.space.q == min(orbit)


@pytest.fixture(scope="module")
def members_500():
    return {f: enumerate_family(f, 500) for f in FamilyId}


def test_enumeration_sorted_and_valid(members_500):
    for f, members in members_500.items():
        keys = [m.sort_key() for m in members]
        assert keys == sorted(keys)
        assert len(set(m.descriptor for m in members)) == len(members)
        for m in members:
            assert 2 <= m.result.space.p <= 500
            assert check_constraints(m.coords, f)
            assert descriptor_from_coords(m.coords, f) == m.descriptor
            if f not in FIBER_FAMILIES:
                assert abelianization(word_of(m.descriptor)) == (abs(m.coords.A), abs(m.coords.B))


def _brute_params(f, p_max, box):
    """(space, lambda) pairs from an explicit parameter box, a = +-1 included."""
    r = range(-box, box + 1)
    if f in (FamilyId.TORUS, FamilyId.CABLE):
        grid = (dict(n=n, s=s, a=a) for n, s, a in product(range(2, box), r, (1, -1)))
    elif f in FIBER_FAMILIES:
        grid = (dict(m=m, n=n) for m, n in product(r, r))
    else:
        grid = (dict(J=J) for J in range(box))
    out = set()
    for params in grid:
        try:
            c = coords_of(D(f, **params))
            if 2 <= c.p_raw <= p_max:
                res = surgery_lens_space(c)
                out.add((res.space, res.lam.value))
        except (InvalidDescriptor, NonPrimitive):
            continue
    return out


def _brute_coords(f, p_max):
    """Sweep coordinates directly: every twisted member has 0 < 2A <= B and |a| = 1,
    so p >= B|b| - A forces B <= 2 p_max + 2."""
    out = set()
    for B in range(2, 2 * p_max + 3):
        for A in range(1, B // 2 + 1):
            for a in (1, -1):
                lo, hi = -(p_max + A * a) // B, (p_max - A * a) // B
                for b in range(lo - 1, hi + 2):
                    c = HomologyCoordinates(A, B, a, b)
                    if not 2 <= c.p_raw <= p_max or not check_constraints(c, f):
                        continue
                    if descriptor_from_coords(c, f) is not None:
                        res = surgery_lens_space(c)
                        out.add((res.space, res.lam.value))
    return out


@pytest.mark.parametrize("family", list(FamilyId))
def test_enumeration_complete_against_wider_sweep(family):
    p_max = 150
    if family in TWISTED_FAMILIES:
        expected = _brute_coords(family, p_max)
    else:
        # torus n runs to p_max + 1; fiber windows are below 3 sqrt(p_max) < 40
        box = p_max + 10 if family in (FamilyId.TORUS, FamilyId.CABLE) else 45
        expected = _brute_params(family, p_max, box)
    got = {(m.result.space, m.result.lam.value) for m in enumerate_family(family, p_max)}
    assert got == expected


@given(st.sampled_from([f for f in FamilyId if f not in FIBER_FAMILIES]),
       st.integers(0, 12), st.integers(1, 12), st.sampled_from([1, -1]),
       st.sampled_from([1, -1]), st.integers(-20, 20))
def test_descriptor_roundtrip_property(f, J, n, eps, a, K):
    params = {"J": J, "n": n, "eps": eps, "a": a, "K": K, "s": K}
    try:
        d = D(f, **{k: params[k] for k in PARAM_NAMES[f]})
    except InvalidDescriptor:
        return
    c = coords_of(d)
    assert check_constraints(c, f)
    assert descriptor_from_coords(c, f) == d
    assert abelianization(word_of(d)) == (abs(c.A), abs(c.B))


@given(st.integers(-40, 40), st.integers(-40, 40))
def test_fiber_coords_property(m, n):
    if abs(m) < 2 or abs(n) < 2 or gcd(m, n) != 1:
        return
    for f in FIBER_FAMILIES:
        c = coords_of(KnotDescriptor(f, (m, n)))
        assert check_constraints(c, f)
        assert descriptor_from_coords(c, f) == KnotDescriptor(f, (m, n))
