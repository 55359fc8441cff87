"""Continuity decision procedure: verdicts, certificates, known sweep results."""

import pytest

from bicyclic import (
    BicyclicElement,
    CarrierError,
    ContinuousAt,
    DiscontinuousAt,
    Discrete,
    Full,
    PAdicMinus,
    PAdicPlus,
    RefutedUpToBound,
    ShiftSide,
    WindowPAdic,
    apply_shift,
    basic_nbhd,
    carrier,
    check_joint,
    check_joint_at,
    check_shift,
    check_shift_at,
    enumerate_members,
    equation_replay,
    find_discontinuity,
    invert,
    is_isolated,
    member,
    multiply,
    shift_image,
    subset,
    window_joint_report,
)

E = BicyclicElement
LEFT, RIGHT = ShiftSide.LEFT, ShiftSide.RIGHT


def _pts(top, bound):
    return enumerate_members(carrier(top), bound)


# --- shift maps -----------------------------------------------------------------


def test_apply_shift():
    assert apply_shift(LEFT, E(1, 2), E(0, 3)) == multiply(E(1, 2), E(0, 3))
    assert apply_shift(RIGHT, E(1, 2), E(0, 3)) == multiply(E(0, 3), E(1, 2))


def test_shift_image_agrees_pointwise():
    top = PAdicPlus(2)
    v = basic_nbhd(top, E(1, 3), 2)
    img = shift_image(RIGHT, E(2, 1), v)
    for t in range(6):
        assert member(img, multiply(E(1, 3 + 4 * t), E(2, 1)))


# --- single-point shift checks ------------------------------------------------------


def test_left_shift_always_continuous_on_plus_padic():
    top = PAdicPlus(2)
    for s in _pts(top, 3):
        for x in _pts(top, 3):
            for t in (1, 2, 3):
                v = check_shift_at(top, LEFT, s, x, t)
                assert isinstance(v, ContinuousAt), (s, x, t, v)
                k = v.modulus_for(t)
                img = shift_image(LEFT, s, basic_nbhd(top, x, k))
                target = basic_nbhd(top, multiply(s, x), t)
                assert subset(img, target).holds


def test_right_shift_on_plus_padic_fails_iff_row_moves():
    top = PAdicPlus(2)
    for s in _pts(top, 3):
        for x in _pts(top, 3):
            v = check_shift_at(top, RIGHT, s, x, 1)
            assert not isinstance(v, RefutedUpToBound)
            assert isinstance(v, DiscontinuousAt) == (x.l < s.k), (s, x, v)


def test_discontinuity_certificate_content():
    top = PAdicPlus(2)
    v = check_shift_at(top, RIGHT, E(1, 1), E(0, 0), 1)
    assert isinstance(v, DiscontinuousAt)
    assert "row" in v.structural_reason
    target = basic_nbhd(top, multiply(E(0, 0), E(1, 1)), 1)
    for k, escape in v.counterexamples:
        img = shift_image(RIGHT, E(1, 1), basic_nbhd(top, E(0, 0), k))
        assert member(img, escape) and not member(target, escape)


def test_structural_claim_holds_beyond_witness_bound():
    # the certificate asserts failure for every k; spot-check far past it
    top = PAdicPlus(2)
    target = basic_nbhd(top, multiply(E(0, 0), E(1, 1)), 1)
    for k in (5, 9, 12):
        img = shift_image(RIGHT, E(1, 1), basic_nbhd(top, E(0, 0), k))
        assert not subset(img, target).holds


def test_minus_padic_mirrors_plus():
    top = PAdicMinus(2)
    for s in _pts(top, 3):
        for x in _pts(top, 3):
            assert isinstance(check_shift_at(top, RIGHT, s, x, 2), ContinuousAt)
            v = check_shift_at(top, LEFT, s, x, 1)
            assert isinstance(v, DiscontinuousAt) == (x.k < s.l)


def test_minus_behavior_is_plus_under_inversion():
    # lambda_s on the minus side mirrors rho_{s^-1} on the plus side
    plus, minus = PAdicPlus(3), PAdicMinus(3)
    for s in _pts(minus, 2):
        for x in _pts(minus, 2):
            direct = check_shift_at(minus, LEFT, s, x, 1)
            mirrored = check_shift_at(plus, RIGHT, invert(s), invert(x), 1)
            assert type(direct) is type(mirrored)


def test_window_shifts_both_sides_continuous():
    top = WindowPAdic(2, 0, 2)
    for s in _pts(top, 4):
        for x in _pts(top, 4):
            for side in (LEFT, RIGHT):
                assert isinstance(check_shift_at(top, side, s, x, 1), ContinuousAt)


def test_discrete_everything_continuous():
    top = Discrete(Full())
    for s in _pts(top, 2):
        for x in _pts(top, 2):
            for side in (LEFT, RIGHT):
                v = check_shift_at(top, side, s, x, 2)
                assert isinstance(v, ContinuousAt) and v.modulus_for(2) == 1


def test_shift_validation():
    with pytest.raises(ValueError):
        check_shift_at(PAdicPlus(2), LEFT, E(2, 1), E(0, 0), 1)  # s not in carrier
    with pytest.raises(CarrierError):
        check_shift_at(PAdicPlus(2), LEFT, E(0, 1), E(2, 0), 1)  # x not in carrier


# --- grid reports ----------------------------------------------------------------------


def test_check_shift_grid_report():
    rep = check_shift(PAdicPlus(2), RIGHT, bound=2, t_max=2)
    assert not rep.all_continuous
    assert all(isinstance(c.verdict, DiscontinuousAt) for c in rep.failures)
    assert {(c.s, c.x) for c in rep.failures} == {
        (s, x) for s in _pts(PAdicPlus(2), 2) for x in _pts(PAdicPlus(2), 2) if x.l < s.k
    }


def test_check_shift_explicit_pairs():
    pairs = [(E(0, 1), E(0, 0)), (E(2, 2), E(0, 0))]
    rep = check_shift(PAdicPlus(2), RIGHT, pairs=pairs, t_max=1)
    assert len(rep.cells) == 2
    assert isinstance(rep.cells[0].verdict, ContinuousAt)
    assert isinstance(rep.cells[1].verdict, DiscontinuousAt)
    with pytest.raises(ValueError):
        check_shift(PAdicPlus(2), RIGHT)
    with pytest.raises(ValueError):
        check_shift(PAdicPlus(2), RIGHT, bound=2, pairs=pairs)


# --- joint continuity ----------------------------------------------------------------


def test_joint_window_all_continuous():
    rep = window_joint_report(2, 0, 2, bound=5, t_max=2)
    assert rep.all_continuous
    assert set(rep.cases()) == {
        "both-isolated",
        "left-isolated-only",
        "right-isolated-only",
        "neither-isolated",
    }


def test_joint_window_equality_dichotomy():
    top = WindowPAdic(2, 0, 2)
    rep = check_joint(top, bound=5, t_max=2)
    for c in rep.cells:
        z_isolated = is_isolated(top, multiply(c.x, c.y))
        expected = not (c.case == "both-isolated" and not z_isolated)
        assert c.equality == expected, c


def test_joint_isolated_pair_modulus_one():
    top = WindowPAdic(2, 0, 2)
    v = check_joint_at(top, E(0, 1), E(1, 1), 3)
    assert isinstance(v, ContinuousAt) and v.modulus_for(3) == 1


def test_joint_on_plus_padic_depends_on_the_pair():
    top = PAdicPlus(2)
    bad = check_joint_at(top, E(0, 0), E(1, 1), 1)
    assert isinstance(bad, DiscontinuousAt)
    target = basic_nbhd(top, multiply(E(0, 0), E(1, 1)), 1)
    for k, escape in bad.counterexamples:
        prod = shift_image(LEFT, E(0, 0), basic_nbhd(top, E(1, 1), k))
        # escape comes from the full product set; membership in the slice is
        # not guaranteed, but escaping the target is
        assert not member(target, escape)
    good = check_joint_at(top, E(1, 1), E(0, 0), 1)
    assert isinstance(good, ContinuousAt)


def test_no_refutations_in_scope():
    # every in-scope verdict is decisive: continuous or certified discontinuous
    for top in (PAdicPlus(2), PAdicMinus(2), WindowPAdic(2, 0, 1)):
        for side in (LEFT, RIGHT):
            rep = check_shift(top, side, bound=3, t_max=2)
            assert not any(isinstance(c.verdict, RefutedUpToBound) for c in rep.cells)
    rep = check_joint(WindowPAdic(2, 0, 1), bound=3, t_max=2)
    assert not any(isinstance(c.verdict, RefutedUpToBound) for c in rep.cells)


# --- witness scan ------------------------------------------------------------------------


def test_find_discontinuity_pinned_first_witness():
    w = find_discontinuity(PAdicPlus(2), RIGHT, 4)
    assert w is not None
    assert (w.s, w.x, w.t) == (E(1, 1), E(0, 0), 1)
    assert isinstance(w.verdict, DiscontinuousAt)


def test_find_discontinuity_none_for_continuous_side():
    assert find_discontinuity(PAdicPlus(2), LEFT, 3) is None
    assert find_discontinuity(PAdicMinus(2), RIGHT, 3) is None
    assert find_discontinuity(Discrete(Full()), LEFT, 2) is None
    assert find_discontinuity(WindowPAdic(2, 0, 2), RIGHT, 4) is None


def test_find_discontinuity_minus_mirror():
    w = find_discontinuity(PAdicMinus(2), LEFT, 4)
    assert w is not None and (w.s, w.x, w.t) == (E(1, 1), E(0, 0), 1)


# --- division replay -----------------------------------------------------------------------


def test_equation_replay_pinned():
    r = equation_replay(0, 5, 1, 3)
    assert r.left_factor == E(0, 3)
    assert r.distinguished == E(1, 3)
    assert r.target == E(0, 5)
    assert r.solutions == frozenset({E(3, 5), E(0, 2), E(1, 3), E(2, 4)})


def test_equation_replay_verifies_all_solutions():
    for params in ((0, 3, 0, 0), (1, 6, 2, 4), (2, 9, 0, 5)):
        r = equation_replay(*params)
        x0, y0, i0, j0 = params
        assert r.distinguished in r.solutions
        assert len(r.solutions) == 1 + (y0 + i0 - j0)
        for sol in r.solutions:
            assert multiply(r.left_factor, sol) == r.target


def test_equation_replay_validation():
    with pytest.raises(ValueError):
        equation_replay(0, 2, 0, 3)  # y0 - j0 not > x0
    with pytest.raises(ValueError):
        equation_replay(0, 9, 4, 2)  # i0 > j0
    with pytest.raises(ValueError):
        equation_replay(-1, 5, 0, 0)
