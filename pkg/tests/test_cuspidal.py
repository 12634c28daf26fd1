import random

import pytest

from macvogan.cuspidal import (
    CuspidalDatum,
    FieldParams,
    cuspidal_count,
    enumerate_cuspidals,
    frobenius_orbit,
    necklace_count,
    random_cuspidal,
    twist_cuspidal,
)
from macvogan.exceptions import CapacityError, DomainError


def brute_regular_orbits(q, d):
    n = q**d - 1
    orbits = set()
    for a in range(n):
        orb = frozenset(a * q**i % n for i in range(d))
        if len(orb) == d:
            orbits.add(orb)
    return orbits


@pytest.mark.parametrize(
    "q,d,expected",
    [(2, 1, 1), (3, 1, 2), (2, 2, 1), (3, 2, 3), (4, 2, 6), (5, 2, 10), (2, 3, 2), (3, 3, 8)],
)
def test_counts_against_brute_orbits(q, d, expected):
    assert len(brute_regular_orbits(q, d)) == expected
    assert necklace_count(q, d) == expected
    assert cuspidal_count(q, d) == expected


def test_enumeration_is_sorted_and_canonical():
    cs = enumerate_cuspidals(3, 2)
    assert [c.orbit for c in cs] == [1, 2, 5]
    assert cs == sorted(cs)
    for c in cs:
        assert frobenius_orbit(c.orbit, 3, 2)[0] == c.orbit


def test_field_validation():
    assert FieldParams(9).p == 3 and FieldParams(9).r == 2
    for bad in (1, 6, 12, 0):
        with pytest.raises(DomainError):
            FieldParams(bad)


def test_non_regular_and_non_minimal_rejected():
    with pytest.raises(DomainError):
        CuspidalDatum(2, 0, 3)  # orbit {0}
    with pytest.raises(DomainError):
        CuspidalDatum(2, 3, 3)  # orbit {1, 3}
    assert CuspidalDatum.from_index(3, 3, 2) == CuspidalDatum(2, 1, 3)


def test_twist_degree_one_is_translation():
    for q in (3, 5, 7):
        for a in range(q - 1):
            for b in range(q - 1):
                t = twist_cuspidal(CuspidalDatum(1, a, q), b)
                assert t.orbit == (a + b) % (q - 1)


@pytest.mark.parametrize("q,d", [(3, 2), (5, 2), (3, 3), (7, 2), (4, 3)])
def test_twist_is_an_action_that_permutes_cuspidals(q, d):
    cs = set(enumerate_cuspidals(q, d))
    for t in cs:
        assert twist_cuspidal(t, 0) == t
        for b1 in range(q - 1):
            assert twist_cuspidal(t, b1) in cs
            for b2 in range(q - 1):
                assert twist_cuspidal(twist_cuspidal(t, b1), b2) == twist_cuspidal(t, b1 + b2)


def test_capacity_bound():
    with pytest.raises(CapacityError):
        frobenius_orbit(1, 2, 64)


def test_random_cuspidal_is_regular():
    rng = random.Random(1)
    for _ in range(50):
        t = random_cuspidal(7, 3, rng)
        assert len(t.orbit_elements()) == 3
