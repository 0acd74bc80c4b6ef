import itertools

import pytest
from hypothesis import given, settings, strategies as st

from abelian_points.errors import NotSquarefreeError
from abelian_points.ffield import (
    GF,
    count_distinct_roots,
    cycle_type,
    field_of_order,
    find_irreducible,
    is_irreducible,
    splits_completely,
)

FIELDS = [GF(2, 2), GF(2, 3), GF(3, 2), GF(5, 2), GF(7), GF(2, 4)]


def test_f4_multiplication():
    F = GF(2, 2)
    assert F.mul(2, 3) == 1
    assert F.mul(2, 2) == 3


def test_canonical_moduli():
    assert find_irreducible(2, 3) == (1, 1, 0, 1)
    assert find_irreducible(2, 2) == (1, 1, 1)


def _brute_irreducible(f, p):
    """Degree <= 3: irreducible iff no root; degree 4: also no quadratic factor."""
    deg = len(f) - 1
    if any(sum(c * x**i for i, c in enumerate(f)) % p == 0 for x in range(p)):
        return False
    if deg <= 3:
        return True
    for b, a in itertools.product(range(p), repeat=2):
        g = [b, a, 1]
        r = list(f)
        for i in range(deg - 2, -1, -1):
            q = r[i + 2] % p
            for j in range(3):
                r[i + j] -= q * g[j]
        if all(c % p == 0 for c in r):
            return False
    return True


@pytest.mark.parametrize("p", [2, 3, 5])
def test_irreducibility_against_brute_force(p):
    for deg in (2, 3, 4):
        for tail in itertools.product(range(p), repeat=deg):
            f = list(tail) + [1]
            assert is_irreducible(f, p) == _brute_irreducible(f, p), (f, p)


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"F{F.q}")
def test_field_axioms_exhaustive(F):
    els = list(F.elements())
    assert len(els) == F.q
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    for a in els[1:]:
        assert sorted(F.mul(a, b) for b in els) == sorted(els)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_field_distributive(F, data):
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.pow(a, F.q) == a


@pytest.mark.parametrize("F", [GF(2, 3), GF(3, 2), GF(2, 5)], ids=lambda F: f"F{F.q}")
def test_tables_agree_with_scalar_ops(F):
    t = F.tables()
    for a in range(F.q):
        for b in range(F.q):
            assert t.add[a, b] == F.add(a, b)
            assert t.mul[a, b] == F.mul(a, b)
    squares = [0] * F.q
    for y in range(F.q):
        squares[F.mul(y, y)] += 1
    if F.p != 2:
        assert list(t.nsqrt) == squares


def test_field_of_order():
    assert field_of_order(9) == GF(3, 2)
    with pytest.raises(ValueError):
        field_of_order(12)


def test_cycle_types():
    assert cycle_type([-1, -1, 0, 1], 2) == (3,)
    assert sorted(cycle_type([-1, -1, 0, 1], 5)) == [1, 2]
    with pytest.raises(NotSquarefreeError):
        cycle_type([-1, -1, 0, 1], 23)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=6), st.sampled_from([3, 5, 7, 11, 13]))
def test_splits_completely_matches_root_count(tail, p):
    f = tail + [1]
    roots = [x for x in range(p) if sum(c * x**i for i, c in enumerate(f)) % p == 0]
    assert count_distinct_roots(f, p) == len(roots)
    try:
        ct = cycle_type(f, p)
    except NotSquarefreeError:
        assert not splits_completely(f, p)
        return
    assert sum(ct) == len(f) - 1
    assert ct.count(1) == len(roots)
    assert splits_completely(f, p) == (len(roots) == len(f) - 1)
