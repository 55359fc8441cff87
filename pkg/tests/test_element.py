"""Canonical-form arithmetic against the word-rewriting oracle and pinned values."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicyclic import (
    IDENTITY,
    BicyclicElement,
    Half,
    format_element,
    half_membership,
    invert,
    is_idempotent,
    multiply,
    natural_leq,
    natural_leq_witness,
    parse_element,
    power,
    reduce_word,
    solve_left,
    solve_right,
    word_of,
)

E = BicyclicElement

elements = st.builds(E, st.integers(0, 30), st.integers(0, 30))
small_elements = st.builds(E, st.integers(0, 8), st.integers(0, 8))


# --- pinned products and normal forms ----------------------------------------


def test_pinned_products():
    assert multiply(E(2, 3), E(5, 1)) == E(4, 1)
    assert multiply(E(0, 1), E(1, 0)) == IDENTITY          # ab = 1
    assert multiply(E(1, 0), E(0, 1)) == E(1, 1)           # ba stays
    assert multiply(E(3, 3), E(3, 3)) == E(3, 3)
    assert multiply(E(0, 2), E(5, 0)) == E(3, 0)
    assert multiply(E(4, 1), E(1, 2)) == E(4, 2)


def test_identity_is_neutral():
    for k in range(5):
        for l in range(5):
            x = E(k, l)
            assert multiply(x, IDENTITY) == x
            assert multiply(IDENTITY, x) == x


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        E(-1, 0)
    with pytest.raises(ValueError):
        E(0, -2)


def test_word_reduction_examples():
    assert reduce_word("ab") == IDENTITY
    assert reduce_word("ba") == E(1, 1)
    assert reduce_word("bbabaa") == E(2, 2)
    assert reduce_word("") == IDENTITY
    assert reduce_word("qqp") == E(2, 1)  # alias letters
    assert reduce_word("B A") == E(1, 1)  # case and spaces


@given(elements, elements)
def test_multiply_matches_word_oracle(x, y):
    assert multiply(x, y) == reduce_word(word_of(x) + word_of(y))


@given(small_elements, small_elements, small_elements)
def test_associativity(x, y, z):
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


# --- inversion --------------------------------------------------------------


@given(elements)
def test_inverse_axioms(x):
    xi = invert(x)
    assert multiply(multiply(x, xi), x) == x
    assert multiply(multiply(xi, x), xi) == xi


@given(elements, elements)
def test_inversion_reverses_products(x, y):
    assert invert(multiply(x, y)) == multiply(invert(y), invert(x))


def test_idempotents_are_the_diagonal():
    assert is_idempotent(E(4, 4))
    assert not is_idempotent(E(4, 3))
    assert E(0, 0).is_idempotent


def test_half_membership():
    assert half_membership(E(1, 3)) is Half.PLUS_STRICT
    assert half_membership(E(3, 1)) is Half.MINUS_STRICT
    assert half_membership(E(2, 2)) is Half.DIAGONAL


# --- powers --------------------------------------------------------------------


@given(small_elements, st.integers(1, 10))
def test_power_matches_iterated_multiply(x, n):
    acc = x
    for _ in range(n - 1):
        acc = multiply(acc, x)
    assert power(x, n) == acc


def test_power_closed_forms():
    assert power(E(1, 3), 4) == E(1, 1 + 4 * 2)
    assert power(E(3, 1), 4) == E(1 + 4 * 2, 1)
    assert power(E(2, 2), 7) == E(2, 2)


def test_power_needs_positive_exponent():
    with pytest.raises(ValueError):
        power(E(1, 2), 0)


# --- natural partial order -------------------------------------------------------


def test_order_pinned():
    w = natural_leq_witness(E(5, 3), E(4, 2))
    assert w == E(3, 3)
    assert multiply(E(4, 2), w) == E(5, 3)
    assert not natural_leq(E(4, 2), E(5, 3))
    assert natural_leq(E(2, 2), E(0, 0))  # idempotents decrease along the diagonal
    assert not natural_leq(E(1, 2), E(2, 1))


@given(small_elements, small_elements)
def test_order_against_brute_witness_search(x, y):
    brute = any(
        multiply(y, E(i, i)) == x for i in range(max(x.k, x.l, y.k, y.l) + 3)
    )
    assert natural_leq(x, y) == brute
    w = natural_leq_witness(x, y)
    if w is not None:
        assert w.is_idempotent and multiply(y, w) == x


# --- division ----------------------------------------------------------------------


def _brute_left(a, c, box=40):
    return frozenset(
        E(m, n) for m in range(box) for n in range(box) if multiply(a, E(m, n)) == c
    )


def _brute_right(c, b, box=40):
    return frozenset(
        E(m, n) for m in range(box) for n in range(box) if multiply(E(m, n), b) == c
    )


def test_solve_pinned_values():
    assert solve_left(E(0, 1), E(0, 1)) == frozenset({E(0, 0), E(1, 1)})
    assert solve_left(E(0, 1), E(5, 0)) == frozenset({E(6, 0)})
    assert solve_left(E(0, 2), E(0, 2)) == frozenset({E(0, 0), E(1, 1), E(2, 2)})
    assert solve_left(E(2, 1), E(1, 1)) == frozenset()
    assert solve_right(E(0, 5), E(1, 0)) == frozenset({E(0, 6)})
    assert solve_right(E(5, 0), E(0, 1)) == frozenset()


@given(small_elements, small_elements)
def test_solve_left_matches_brute(a, c):
    assert solve_left(a, c) == _brute_left(a, c)


@given(small_elements, small_elements)
def test_solve_right_matches_brute(c, b):
    assert solve_right(c, b) == _brute_right(c, b)


@given(small_elements, small_elements)
def test_solve_left_cardinality_law(a, c):
    got = len(solve_left(a, c))
    if c.k > a.k:
        assert got == 1
    elif c.k == a.k:
        assert got == 1 + min(a.l, c.l)
    else:
        assert got == 0


@settings(max_examples=40)
@given(small_elements, small_elements)
def test_solutions_actually_solve(a, c):
    for x in solve_left(a, c):
        assert multiply(a, x) == c
    for x in solve_right(c, a):
        assert multiply(x, a) == c


# --- text form ----------------------------------------------------------------------


def test_parse_format_roundtrip():
    for x in (E(0, 0), E(3, 0), E(0, 7), E(12, 5)):
        assert parse_element(format_element(x)) == x
    assert parse_element("1") == IDENTITY
    assert parse_element(" b^2 a^9 ") == E(2, 9)
    with pytest.raises(ValueError):
        parse_element("a^2b^3")


def test_word_of_roundtrip():
    assert word_of(E(2, 1)) == "bba"
    assert reduce_word(word_of(E(4, 7))) == E(4, 7)
