import itertools

import pytest
from hypothesis import given, settings, strategies as st

from abelian_points.errors import HypothesisError, ResourceLimitError
from abelian_points.local_certificates import (
    DiagonalForm,
    brute_force_primitive,
    build_cy_form,
    build_theorem1_form,
    certify_no_abelian_points,
    certify_staircase_local,
    hensel_lift,
    local_solve_diagonal,
    local_witness_certificate,
    scan_primes_for_certificate,
    staircase_check,
    valuation_profile,
)

SELMER = DiagonalForm(3, (3, 4, 5))


def naive_primitive_zero(form, p, m):
    P = p**m
    for xs in itertools.product(range(P), repeat=form.nvars):
        if any(x % p for x in xs) and form(xs) % P == 0:
            return True
    return False


def test_form_text_round_trip():
    f = DiagonalForm.parse("x^3 + 2*y^3 + 4*z^3")
    assert f == DiagonalForm(3, (1, 2, 4))
    assert str(f) == "x^3 + 2*y^3 + 4*z^3"
    assert DiagonalForm.parse(str(DiagonalForm(5, (1, -3, 9, 27, 81)))) == DiagonalForm(5, (1, -3, 9, 27, 81))
    assert DiagonalForm.from_dict(f.to_dict()) == f


def test_form_rejects_zero_coefficient():
    with pytest.raises(ValueError):
        DiagonalForm(3, (1, 0, 4))


def test_valuation_profile():
    prof = valuation_profile(DiagonalForm(3, (7, 2 * 12, 3 * 4)), 2)
    assert prof.valuations == (0, 3, 2)
    assert prof.units == (7, 3, 3)


def test_staircase_check_residues():
    assert staircase_check((0, 1, 2), 3)
    assert not staircase_check((0, 3, 2), 3)
    assert not staircase_check((0, 1, 2), 3, e=3)
    assert staircase_check((0, 1, 2), 3, e=2)
    with pytest.raises(ValueError):
        staircase_check((0, 1), 3, e=0)


def test_theorem1_builder_hypotheses():
    assert build_theorem1_form(1, 1, 1, 2) == DiagonalForm(3, (1, 2, 4))
    for args in [(1, 1, 1, 7), (1, 1, 1, 4), (1, 5, 1, 5)]:
        with pytest.raises(HypothesisError):
            build_theorem1_form(*args)


def test_cy_builder_hypotheses():
    assert build_cy_form(5, 2) == DiagonalForm(5, (1, 2, 4, 8, 16))
    for args in [(4, 2), (5, 11), (3, 7), (5, 6)]:
        with pytest.raises(HypothesisError):
            build_cy_form(*args)


def test_certificate_for_cubic_instance():
    cert = certify_no_abelian_points(DiagonalForm(3, (1, 2, 4)), 2)
    assert cert.kind == "NoAbelianPoints" and cert.all_verified
    names = [c.name for c in cert.conditions]
    assert names == ["prime", "staircase_profile", "ramification_coprime", "residues_distinct_for_every_unit_e"]
    assert any("Kronecker-Weber" in s for s in cert.lemma_chain)


def test_certificate_refused_when_p_is_1_mod_3():
    f = DiagonalForm(3, (1, 7, 49))
    assert certify_no_abelian_points(f, 7) is None
    # the weaker local statement still holds
    assert certify_staircase_local(f, 7).all_verified


def test_certificate_refused_for_non_staircase():
    assert certify_no_abelian_points(DiagonalForm(3, (1, 1, 4)), 2) is None
    assert certify_staircase_local(DiagonalForm(3, (1, 1, 4)), 2) is None


def test_permuted_staircase_accepted():
    cert = certify_no_abelian_points(DiagonalForm(3, (4, 1, 2)), 2)
    assert cert is not None
    assert any("permutation" in s for s in cert.lemma_chain)


def test_scan_selmer_finds_nothing():
    assert scan_primes_for_certificate(SELMER, 1000) == []


def test_scan_cubic_finds_its_prime():
    certs = scan_primes_for_certificate(DiagonalForm(3, (1, 5, 25)), 100)
    assert [c.prime for c in certs] == [5]


@pytest.mark.parametrize("form,p,m", [
    (DiagonalForm(3, (1, 2, 4)), 2, 3),
    (DiagonalForm(3, (1, 1, 1)), 2, 3),
    (DiagonalForm(3, (1, 3, 9)), 3, 2),
    (DiagonalForm(3, (3, 4, 5)), 3, 2),
    (DiagonalForm(3, (1, 5, 25)), 5, 2),
    (DiagonalForm(2, (1, 1, -3)), 3, 2),
    (DiagonalForm(2, (1, 1, 1)), 2, 3),
])
def test_brute_force_against_naive_enumeration(form, p, m):
    expected = naive_primitive_zero(form, p, m)
    assert brute_force_primitive(form, p, m, mode="exhaustive") == expected
    assert brute_force_primitive(form, p, m, mode="cascade") == expected


@settings(max_examples=80, deadline=None)
@given(
    st.sampled_from([2, 3, 5]),
    st.integers(1, 3),
    st.lists(st.integers(1, 200), min_size=3, max_size=3),
    st.sampled_from([2, 3]),
)
def test_exhaustive_and_cascade_agree(p, m, coeffs, d):
    if p**m > 125:
        m = 2
    form = DiagonalForm(d, tuple(coeffs))
    assert brute_force_primitive(form, p, m, mode="exhaustive") == brute_force_primitive(form, p, m, mode="cascade")


def test_brute_force_budget():
    with pytest.raises(ResourceLimitError):
        brute_force_primitive(DiagonalForm(3, (1, 5, 25)), 5, 5, mode="exhaustive", budget=1000)
    with pytest.raises(ValueError):
        brute_force_primitive(SELMER, 2, 0)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_selmer_local_witnesses_lift(p):
    w = local_solve_diagonal(SELMER, p)
    assert w is not None
    assert any(x % p for x in w.point)
    assert SELMER(w.point) % p**w.precision == 0
    assert 2 * w.derivative_valuation + 1 <= w.precision
    lifted = hensel_lift(SELMER, w, 30)
    assert SELMER(lifted) % p**30 == 0
    assert all(a % p**w.precision == b % p**w.precision for a, b in zip(lifted, w.point))


def test_selmer_witness_at_3():
    w = local_solve_diagonal(SELMER, 3)
    assert (w.precision, w.point) == (3, (0, 1, 4))


def test_no_witness_for_staircase():
    assert local_solve_diagonal(DiagonalForm(3, (1, 2, 4)), 2) is None


def test_local_witness_certificate():
    cert = local_witness_certificate(SELMER, 5)
    assert cert.kind == "LocalWitness" and cert.all_verified
    assert cert.parameters["precision_ladder"] == [1, 3, 5]
