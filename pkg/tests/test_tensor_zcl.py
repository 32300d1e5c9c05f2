"""Zero-divisor cup length in H*(K_n x K_n) and the TC bounds built on it."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kleinforge import cohomology_f2 as coh
from kleinforge import tensor_zcl as tz


# -------------------------------------------------------- tensor structure

def test_outer_products_multiply_componentwise():
    n = 3
    r = coh.CohomologyClass.r(n)
    v1 = coh.CohomologyClass.v(n, 1)
    v2 = coh.CohomologyClass.v(n, 2)
    lhs = tz.tensor_mul(tz.TensorClass.outer(r, v1), tz.TensorClass.outer(v2, v2))
    rhs = tz.TensorClass.outer(coh.cup(r, v2), coh.cup(v1, v2))
    assert lhs == rhs


def random_class(n):
    keys = st.sets(st.integers(0, 2**n - 1), max_size=4)
    return keys.map(
        lambda ks: coh.CohomologyClass.from_monomials(
            n, [coh.Monomial.from_key(n, k) for k in ks]
        )
    )


@given(
    st.integers(2, 4).flatmap(
        lambda n: st.tuples(
            random_class(n), random_class(n), random_class(n), random_class(n)
        )
    )
)
def test_outer_bilinearity(quad):
    a, b, c, d = quad
    lhs = tz.tensor_mul(tz.TensorClass.outer(a, b), tz.TensorClass.outer(c, d))
    assert lhs == tz.TensorClass.outer(a * c, b * d)


@given(st.integers(2, 5).flatmap(random_class))
def test_zero_divisors_restrict_to_zero_on_the_diagonal(x):
    assert tz.diagonal_restriction(tz.zero_divisor(x)).is_zero()


def test_generator_zero_divisor_relations():
    for n in (2, 3, 4):
        r = tz.rbar(n)
        assert tz.tensor_mul(r, r).is_zero(), "Rbar^2 = 0 since R^2 = 0"
        v = tz.vbar(n, 1)
        v2 = tz.tensor_mul(v, v)
        v3 = tz.tensor_mul(v2, v)
        assert not v3.is_zero(), "Vbar^3 survives"
        assert tz.tensor_mul(v3, v).is_zero(), "Vbar^4 dies"


# ------------------------------------------------------- exhaustive search

def test_k2_zero_divisor_length_three_not_four():
    found = tz.zcl_exhaustive(2, 3)
    assert not found.all_zero
    assert found.witness.text() == "Vbar1^3"
    assert tz.zcl_exhaustive(2, 4).all_zero


def test_vanishing_at_length_n_plus_three():
    checked = {}
    for n in range(3, 7):
        res = tz.zcl_exhaustive(n, n + 3)
        assert res.all_zero, n
        assert res.witness is None
        checked[n] = res.checked
    # canonical multiset counts; a symmetry regression would change these
    assert checked == {3: 16, 4: 31, 5: 53, 6: 83}


def test_nonzero_at_length_n_plus_two():
    for n in range(3, 7):
        res = tz.zcl_exhaustive(n, n + 2)
        assert not res.all_zero, n


def test_canonical_reduction_agrees_with_full_enumeration():
    # n=3: evaluate every (r, e1, e2) product directly and compare against
    # the canonical (sorted-exponent) evaluation of its orbit representative
    n = 3
    for length in (4, 5, 6):
        seen_nonzero = False
        for r in (0, 1):
            for e1 in range(length - r + 1):
                e2 = length - r - e1
                value = tz._evaluate_multiset_class(n, r, (e1, e2))
                canon = tz._evaluate_multiset_class(n, r, tuple(sorted((e1, e2), reverse=True)))
                assert value.is_zero() == canon.is_zero(), (r, e1, e2)
                seen_nonzero |= not value.is_zero()
        assert seen_nonzero == (not tz.zcl_exhaustive(n, length).all_zero)


def test_threads_match_serial():
    for n, length in ((3, 5), (4, 7)):
        a = tz.zcl_exhaustive(n, length, threads=1)
        b = tz.zcl_exhaustive(n, length, threads=2)
        assert (a.all_zero, a.checked, a.witness) == (b.all_zero, b.checked, b.witness)


# ----------------------------------------------------------------- witness

def test_witness_shape_and_anchor_term():
    for n in range(3, 7):
        factors, value = tz.zcl_witness(n)
        assert factors.length() == n + 2
        assert not value.is_zero()
        left = coh.Monomial(n, 1, (1 << (n - 2)) - 1)    # R V1..V(n-2)
        right = coh.Monomial(n, 1, 1 | (1 << (n - 2)))   # R V1 V(n-1)
        assert (left, right) in value.sorted_terms(), n


def test_witness_rejects_small_n():
    with pytest.raises(ValueError):
        tz.zcl_witness(2)


# ------------------------------------------------------------------ bounds

def test_compute_zcl_values():
    assert tz.compute_zcl(2)[0] == 3
    assert tz.compute_zcl(3)[0] == 5
    assert tz.compute_zcl(4)[0] == 6
    assert tz.compute_zcl(5)[0] == 7


def test_tc_bounds_frozen():
    assert (tz.tc_bounds(2).lower, tz.tc_bounds(2).upper) == (4, 5)
    assert (tz.tc_bounds(3).lower, tz.tc_bounds(3).upper) == (6, 7)
    b4 = tz.tc_bounds(4)
    assert (b4.lower, b4.upper) == (7, 9)
    assert b4.zcl == 6
    assert "exhaustive-search" in b4.method


def test_tc_bounds_general_shape():
    for m in (2, 3, 4, 5):
        b = tz.tc_bounds(m)
        assert b.upper == 2 * m + 1
        assert b.lower == b.zcl + 1
        assert b.lower <= b.upper


def test_tc_json_shape():
    data = tz.tc_bounds(3).to_json()
    assert data == {
        "m": 3,
        "zcl": 5,
        "lower": 6,
        "upper": 7,
        "method": data["method"],
    }


def test_search_result_json():
    data = tz.zcl_exhaustive(3, 6).to_json()
    assert data["all_zero"] is True
    assert data["witness"] is None
    assert data["checked"] == 16
