import math

import pytest
from hypothesis import given, settings, strategies as st

from abelian_points.arith import is_prime_power, prime_factors
from abelian_points.elliptic import (
    CurveModel,
    admissible_order,
    count_points,
    find_ell,
    format_curve,
    group_structure,
    has_point_of_order,
    is_supersingular,
    normal_form_models,
    parse_curve,
    search_curve_with_order,
    selmer_jacobian,
)
from abelian_points.errors import NotFoundError
from abelian_points.ffield import GF, field_of_order

from conftest import naive_count


def _naive(E):
    F = E.field
    return naive_count(list(F.elements()), F.add, F.mul, E.coeffs)


def test_small_known_counts():
    assert count_points(CurveModel(GF(2), 0, 0, 1, 0, 0)) == 3
    assert count_points(CurveModel.short(GF(5), 0, 1)) == 6
    assert count_points(CurveModel.short(GF(7), 0, 1)) == 12
    E = CurveModel.short(GF(5), 1, 0)
    assert count_points(E) == 4
    gs = group_structure(E)
    assert (gs.m, gs.n) == (2, 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
def test_kernel_count_matches_naive_for_every_model(q):
    F = field_of_order(q)
    for E in normal_form_models(F):
        assert count_points(E) == _naive(E), format_curve(E)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 4, 8, 3, 9, 11, 13]), st.data())
def test_random_long_models_match_naive(q, data):
    F = field_of_order(q)
    coeffs = [data.draw(st.integers(0, q - 1)) for _ in range(5)]
    try:
        E = CurveModel(F, *coeffs)
    except ValueError:
        return
    n = count_points(E)
    assert n == _naive(E)
    assert (q + 1 - n) ** 2 <= 4 * q
    assert n == len(E.points())


def test_singular_model_rejected():
    with pytest.raises(ValueError):
        CurveModel.short(GF(5), 0, 0)


@pytest.mark.parametrize("p,order", [(11, 12), (17, 18), (23, 24), (29, 30), (41, 42)])
def test_selmer_jacobian_supersingular_primes(p, order):
    Ep = selmer_jacobian().reduce(p)
    assert count_points(Ep) == order
    assert is_supersingular(Ep)


def test_selmer_jacobian_structure_mod_11():
    gs = group_structure(selmer_jacobian().reduce(11))
    assert gs.order == 12 and gs.is_cyclic and str(gs) == "Z/12"
    assert gs.to_dict() == {"order": 12, "invariants": [1, 12], "cyclic": True}


def test_selmer_bad_primes():
    assert selmer_jacobian().bad_primes() == [2, 3, 5]
    with pytest.raises(ValueError):
        selmer_jacobian().reduce(5)


@pytest.mark.parametrize("q", [5, 7, 8, 9, 13])
def test_group_law_axioms(q):
    F = field_of_order(q)
    E = next(iter(normal_form_models(F)))
    pts = E.points()
    N = len(pts)
    for P in pts:
        assert E.contains(P)
        assert E.mul(N, P) is None
        assert E.add(P, E.neg(P)) is None
    for P in pts[:6]:
        for Q in pts[:6]:
            assert E.add(P, Q) == E.add(Q, P)
            for R in pts[:4]:
                assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))


def test_group_structure_invariants_by_brute_force():
    F = GF(13)
    for E in list(normal_form_models(F))[::7]:
        gs = group_structure(E)
        pts = E.points()
        orders = []
        for P in pts:
            k = 1
            R = P
            while R is not None:
                R = E.add(R, P)
                k += 1
            orders.append(k)
        assert gs.n == max(orders)
        assert gs.m * gs.n == len(pts)
        assert gs.n % gs.m == 0 and (F.q - 1) % gs.m == 0
        assert has_point_of_order(E, gs.n)


@pytest.mark.parametrize(
    "q,expected",
    [(2, (3, 3)), (3, (5, 5)), (4, (5, 5)), (8, (10, 5)), (9, (10, 5)), (16, (17, 17)), (25, (23, 23)), (27, (28, 7))],
)
def test_find_ell_cases(q, expected):
    assert tuple(find_ell(q)) == expected


def test_find_ell_postconditions_range():
    for q in range(2, 3000):
        if not is_prime_power(q):
            continue
        N, ell = find_ell(q)
        assert ell in prime_factors(N)
        assert math.gcd(ell, q * (q - 1)) == 1
        assert admissible_order(q, N)


def test_search_curve_with_order():
    E = search_curve_with_order(7, 5)
    assert format_curve(E) == "y^2 = x^3 + x + 1 over F_7"
    assert count_points(search_curve_with_order(256, 258)) == 258
    with pytest.raises(NotFoundError):
        search_curve_with_order(7, 20)


def test_curve_text_round_trip():
    for q in (4, 7, 9):
        for E in list(normal_form_models(field_of_order(q)))[:10]:
            assert parse_curve(format_curve(E)) == E
    E = parse_curve("y^2 + x*y = x^3 + 3*x^2 + 1 over F_4")
    assert E.coeffs == (1, 3, 0, 0, 1)
