"""Sequence recurrence, integer shadow, specializations, cross-check."""

import pytest

from fibhess.ring import ONE, X, Y, BivarPoly, ZERO
from fibhess.sequences import (
    FAMILIES,
    cross_check,
    f_poly,
    f_poly_prefix,
    fib_p_number,
    family_value,
    get_family,
)


def P(terms):
    return BivarPoly(terms)


# --- the defining recurrence ----------------------------------------------


def test_term_list_p3():
    expected = [
        ZERO,
        ONE,
        X,
        X**2,
        X**3,
        Y + X**4,
        P({(1, 1): 2, (5, 0): 1}),
    ]
    assert f_poly_prefix(3, 6) == expected


def test_term_list_p4():
    expected = [
        ZERO,
        ONE,
        X,
        X**2,
        X**3,
        X**4,
        Y + X**5,
        P({(1, 1): 2, (6, 0): 1}),
    ]
    assert f_poly_prefix(4, 7) == expected


def test_p2_hand_unrolled():
    # F(2,4) = x^3 + y, F(2,5) = x*F(2,4) + y*F(2,2) = x^4 + 2xy
    assert f_poly(2, 4) == X**3 + Y
    assert f_poly(2, 5) == P({(4, 0): 1, (1, 1): 2})


def test_f_poly_rejects_bad_args():
    with pytest.raises(ValueError):
        f_poly(0, 3)
    with pytest.raises(ValueError):
        f_poly(2, -1)


@pytest.mark.parametrize("p", [1, 2, 3, 5])
def test_leading_monomial(p):
    for n in range(1, 20):
        poly = f_poly(p, n)
        assert poly.coeff(n - 1, 0).re == 1
        assert poly.coeff(n - 1, 0).im == 0
        assert poly.x_degree() == n - 1


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_coefficients_real_nonnegative(p):
    for n in range(0, 25):
        for _, c in f_poly(p, n).terms():
            assert c.im == 0
            assert c.re > 0


# --- integer sequence -------------------------------------------------------


def test_fib_p_number_boundary():
    for n in range(1, 5):
        assert fib_p_number(3, n) == 1


def test_fib_p_number_values():
    assert fib_p_number(3, 5) == 2
    assert [fib_p_number(1, n) for n in range(1, 7)] == [1, 1, 2, 3, 5, 8]


def test_fib_p_number_rejects_bad_args():
    with pytest.raises(ValueError):
        fib_p_number(0, 3)
    with pytest.raises(ValueError):
        fib_p_number(2, 0)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_integer_specialization(p):
    for n in range(1, 21):
        assert f_poly(p, n).eval_at(1, 1).re == fib_p_number(p, n)


# --- specialization families ------------------------------------------------
#
# Each family is re-derived from its own defining recurrence, independent
# of the substitution implementation, over the first ten indices.


def seq_from_recurrence(initial, step, count):
    vals = list(initial)
    while len(vals) < count:
        vals.append(step(vals))
    return vals


def test_fibonacci_numbers():
    expected = seq_from_recurrence([ZERO, ONE], lambda v: v[-1] + v[-2], 10)
    fam = get_family("fibonacci-numbers")
    assert [family_value(fam, n) for n in range(10)] == expected
    assert [int(family_value(fam, n).eval_at(0, 0).re) for n in range(8)] == [
        0, 1, 1, 2, 3, 5, 8, 13,
    ]


def test_pell_numbers():
    expected = seq_from_recurrence(
        [ZERO, ONE], lambda v: v[-1].scale(2) + v[-2], 10
    )
    fam = get_family("pell-numbers")
    assert [family_value(fam, n) for n in range(10)] == expected
    assert family_value(fam, 5) == BivarPoly.constant(29)


def test_jacobsthal_numbers():
    expected = seq_from_recurrence(
        [ZERO, ONE], lambda v: v[-1] + v[-2].scale(2), 10
    )
    fam = get_family("jacobsthal-numbers")
    assert [family_value(fam, n) for n in range(10)] == expected
    assert [int(family_value(fam, n).eval_at(0, 0).re) for n in range(6)] == [
        0, 1, 1, 3, 5, 11,
    ]


def test_chebyshev_second_kind():
    # U_0 = 1, U_1 = 2x, U_{n+1} = 2x U_n - U_{n-1}
    two_x = X.scale(2)
    expected = seq_from_recurrence(
        [ONE, two_x], lambda v: two_x * v[-1] - v[-2], 10
    )
    fam = get_family("chebyshev-U")
    assert [family_value(fam, n) for n in range(10)] == expected
    assert family_value(fam, 2) == P({(2, 0): 4, (0, 0): -1})


def test_fibonacci_polynomials():
    # f_0 = 0, f_1 = 1, f_{n+1} = x f_n + f_{n-1}
    expected = seq_from_recurrence([ZERO, ONE], lambda v: X * v[-1] + v[-2], 10)
    fam = get_family("fibonacci-poly")
    assert [family_value(fam, n) for n in range(10)] == expected


def test_pell_polynomials():
    # P_0 = 0, P_1 = 1, P_{n+1} = 2x P_n + P_{n-1}
    two_x = X.scale(2)
    expected = seq_from_recurrence(
        [ZERO, ONE], lambda v: two_x * v[-1] + v[-2], 10
    )
    fam = get_family("pell-poly")
    assert [family_value(fam, n) for n in range(10)] == expected


def test_jacobsthal_polynomials():
    # substitution semantics: a_{n+1} = a_n + 2y a_{n-1}
    two_y = Y.scale(2)
    expected = seq_from_recurrence(
        [ZERO, ONE], lambda v: v[-1] + two_y * v[-2], 10
    )
    fam = get_family("jacobsthal-poly")
    assert [family_value(fam, n) for n in range(10)] == expected


def test_bivariate_families():
    # each p=1 bivariate row satisfies a_{n+1} = xsub*a_n + ysub*a_{n-1}
    for name in ("fibonacci-bivariate", "pell-bivariate", "jacobsthal-bivariate"):
        fam = get_family(name)
        expected = seq_from_recurrence(
            [ZERO, ONE], lambda v: fam.xsub * v[-1] + fam.ysub * v[-2], 10
        )
        assert [family_value(fam, n) for n in range(10)] == expected


@pytest.mark.parametrize("p", [1, 2, 3])
def test_p_parameterized_families(p):
    for name in ("fibonacci-p-poly", "pell-bivariate-p", "jacobsthal-bivariate-p"):
        fam = get_family(name)
        # p-step recurrence a_n = xsub*a_{n-1} + ysub*a_{n-p-1}
        vals = [family_value(fam, n, p=p) for n in range(12)]
        for n in range(p + 2, 12):
            assert vals[n] == fam.xsub * vals[n - 1] + fam.ysub * vals[n - p - 1]


@pytest.mark.parametrize("p", [1, 2, 3])
def test_fibonacci_p_numbers_family(p):
    fam = get_family("fibonacci-p-numbers")
    for n in range(1, 12):
        assert family_value(fam, n, p=p) == BivarPoly.constant(fib_p_number(p, n))


def test_p_required_for_parameterized_families():
    with pytest.raises(ValueError):
        family_value(get_family("fibonacci-p-poly"), 3)


def test_unknown_family():
    with pytest.raises(KeyError):
        get_family("lucas-numbers")


def test_registry_covers_remark_rows():
    assert len(FAMILIES) == 15


# --- cross-check --------------------------------------------------------------


def test_cross_check_paper_examples():
    r = cross_check(4, 5)
    assert r.all_equal
    assert r.first_mismatch is None
    assert set(r.values.values()) == {Y + X**5}

    r = cross_check(3, 5)
    assert r.all_equal
    assert set(r.values.values()) == {P({(1, 1): 2, (5, 0): 1})}


def test_cross_check_smallest():
    r = cross_check(1, 1)
    assert r.all_equal
    assert set(r.values.values()) == {X}


def test_cross_check_degenerate_band():
    # n <= p: all matrices upper bidiagonal, every route gives x^n
    for p, n in [(3, 2), (5, 4), (4, 4)]:
        r = cross_check(p, n)
        assert r.all_equal
        assert set(r.values.values()) == {X**n}


@pytest.mark.parametrize("p", [1, 2, 3, 4, 5])
def test_five_way_agreement_grid(p):
    for n in range(1, 26):
        assert cross_check(p, n).all_equal


def test_cross_check_rejects_bad_args():
    with pytest.raises(ValueError):
        cross_check(1, 0)
    with pytest.raises(ValueError):
        cross_check(0, 1)
