import random

import pytest

from klrpoly.bruhat import bruhat_leq
from klrpoly.perm import Permutation, length, parse_permutation
from klrpoly.poly import ONE, ZERO, IntPolynomial, substitute_shift
from klrpoly.rpoly import (
    RTable,
    inversion_sum,
    rpoly_from_rtilde,
    rpoly_r,
    rtilde,
    rtilde_by_paths,
)


def poly(*coeffs):
    return IntPolynomial(tuple(coeffs))


# --- the nonnegative variant -------------------------------------------------

def test_rtilde_diagonal_is_one():
    u = parse_permutation("3142")
    assert rtilde(u, u) == ONE


def test_rtilde_identity_to_top_s3():
    assert rtilde(parse_permutation("123"), parse_permutation("321")) == poly(0, 1, 0, 1)


def test_rtilde_vanishes_exactly_off_the_order_s4(s4):
    table = RTable()
    for u in s4:
        for v in s4:
            assert rtilde(u, v, table).is_zero == (not bruhat_leq(u, v))


def test_rtilde_degree_law_s4(comparable_s4):
    table = RTable()
    for u, v in comparable_s4:
        if u == v:
            continue
        value = rtilde(u, v, table)
        gap = length(v) - length(u)
        assert value.degree == gap
        assert value.coeffs[-1] == 1
        assert all(c >= 0 for c in value.coeffs)
        assert all(c == 0 for d, c in enumerate(value.coeffs) if (d - gap) % 2)


def test_rtilde_descent_choice_does_not_matter_s4(s4):
    for u in s4:
        for v in s4:
            assert rtilde(u, v, RTable()) == rtilde(u, v, RTable(), descent="largest")


def test_rtilde_descent_choice_randomized_s5():
    rng = random.Random(5150)
    words = [tuple(rng.sample(range(1, 6), 5)) for _ in range(40)]
    for u_word in words[:20]:
        for v_word in words[20:]:
            u, v = Permutation(u_word), Permutation(v_word)
            assert rtilde(u, v, RTable()) == rtilde(u, v, RTable(), descent="largest")


def test_rtilde_rejects_bad_descent_choice():
    u = parse_permutation("123")
    with pytest.raises(ValueError):
        rtilde(u, u, descent="middle")


def test_rtilde_rejects_mixed_sizes():
    with pytest.raises(ValueError):
        rtilde(parse_permutation("12"), parse_permutation("123"))


def test_rtable_is_shared_and_counts():
    u, v = parse_permutation("123"), parse_permutation("321")
    table = RTable()
    first = rtilde(u, v, table)
    entries = len(table)
    misses = table.misses
    second = rtilde(u, v, table)
    assert first == second
    assert len(table) == entries
    assert table.hits > 0
    assert table.misses == misses


# --- the signed polynomial ----------------------------------------------------

def test_rpoly_diagonal_is_one():
    u = parse_permutation("231")
    assert rpoly_r(u, u) == ONE


def test_rpoly_single_step():
    assert rpoly_r(parse_permutation("123"), parse_permutation("213")) == poly(-1, 1)


def test_rpoly_identity_to_top_s3():
    value = rpoly_r(parse_permutation("123"), parse_permutation("321"))
    assert value == poly(-1, 2, -2, 1)
    assert value == substitute_shift(poly(0, 1, 0, 1), 3)


def test_change_of_variable_matches_direct_recurrence_s3(s3):
    table = RTable()
    for u in s3:
        for v in s3:
            assert rpoly_r(u, v) == rpoly_from_rtilde(u, v, table)


def test_rpoly_from_rtilde_examples():
    u = parse_permutation("2143")
    assert rpoly_from_rtilde(u, u) == ONE
    assert rpoly_from_rtilde(parse_permutation("123"), parse_permutation("213")) == poly(-1, 1)
    assert rpoly_from_rtilde(parse_permutation("123"), parse_permutation("321")) == poly(-1, 2, -2, 1)
    # incomparable pairs are zero through either route
    assert rpoly_from_rtilde(parse_permutation("132"), parse_permutation("213")) == ZERO


# --- path-counting route --------------------------------------------------------

def test_rtilde_by_paths_trivial():
    u = parse_permutation("1324")
    assert rtilde_by_paths(u, u, "increasing") == ONE


def test_rtilde_by_paths_identity_to_top_s3():
    e, top = parse_permutation("123"), parse_permutation("321")
    assert rtilde_by_paths(e, top, "increasing") == poly(0, 1, 0, 1)


def test_rtilde_by_paths_matches_recurrence_s3_both_directions(s3):
    table = RTable()
    for u in s3:
        for v in s3:
            want = rtilde(u, v, table)
            assert rtilde_by_paths(u, v, "increasing") == want
            assert rtilde_by_paths(u, v, "decreasing") == want


def test_rtilde_by_paths_zero_when_unrelated():
    assert rtilde_by_paths(parse_permutation("321"), parse_permutation("123"), "increasing") == ZERO


# --- the alternating interval sum ------------------------------------------------

def test_inversion_sum_point():
    u = parse_permutation("1342")
    assert inversion_sum(u, u) == ONE


def test_inversion_sum_cover_and_full_s3():
    e = parse_permutation("123")
    assert inversion_sum(e, parse_permutation("213")) == ZERO
    assert inversion_sum(e, parse_permutation("321")) == ZERO


def test_inversion_sum_delta_on_all_of_s3(comparable_s3):
    table = RTable()
    for u, v in comparable_s3:
        want = ONE if u == v else ZERO
        assert inversion_sum(u, v, table) == want


def test_inversion_sum_requires_comparability():
    with pytest.raises(ValueError):
        inversion_sum(parse_permutation("213"), parse_permutation("132"))
