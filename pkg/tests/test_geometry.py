import itertools
import math

import pytest

from infrared.errors import DegeneratePosition, PathNotGeneric
from infrared.geometry import (
    AlgebraicTime,
    Config,
    Dir,
    Pt,
    anti_stokes_sequence,
    chirotope,
    config,
    convex_hull,
    direction,
    dominance_order,
    general_position,
    orient,
    segment_wall_events,
)
from infrared.randomgen import rand_config, rng

Z_RIGHT = direction(1, 0)


def test_orient_examples():
    assert orient(config((0, 0), (1, 0), (0, 1)), 0, 1, 2) == 1
    assert orient(config((0, 0), (1, 1), (2, 2)), 0, 1, 2) == 0
    # hand determinant 3*2 - 1*1 = 5 > 0
    assert orient(config((0, 0), (3, 1), (1, 2)), 0, 1, 2) == 1


def test_orient_alternating_random():
    r = rng(1)
    A = rand_config(r, 6, require_strong=False)
    for i, j, k in itertools.permutations(range(6), 3):
        assert orient(A, i, j, k) == -orient(A, j, i, k)
        assert orient(A, i, j, k) == -orient(A, i, k, j)


def test_chirotope_small():
    tri = config((0, 0), (1, 0), (0, 1))
    chi = chirotope(tri)
    assert chi.signs == {(0, 1, 2): 1}
    quad = config((0, 0), (2, 0), (3, 2), (1, 3))  # convex ccw
    chi4 = chirotope(quad)
    assert all(v == 1 for v in chi4.signs.values())
    degen = config((0, 0), (1, 1), (2, 2), (0, 5))
    chd = chirotope(degen)
    assert chd.signs[(0, 1, 2)] == 0
    assert not chd.lin_general


def test_exchange_axiom_exhaustive():
    r = rng(2)
    for n in (4, 5, 6, 7):
        A = rand_config(r, n, require_strong=False)
        chi = chirotope(A)
        assert chi.lin_general
        assert chi.exchange_axiom_holds()


def test_general_position_flags():
    rep = general_position(config((0, 0), (1, 0), (0, 1)), Z_RIGHT)
    assert rep.lin_general and rep.strong_lin_general
    # two points share y = 0, so the horizontal infinity form ties
    assert rep.incl_infinity is False
    collinear = general_position(config((0, 0), (1, 0), (2, 0)))
    assert not collinear.lin_general
    two = general_position(config((0, 0), (0, 1)), direction(0, 1))
    assert two.incl_infinity is False
    generic = general_position(config((0, 0), (3, 1), (1, 2)), Z_RIGHT)
    assert generic.lin_general and generic.strong_lin_general
    assert generic.incl_infinity is True


def test_convex_hull_examples():
    assert convex_hull(config((0, 0), (1, 0), (0, 1))) == [0, 1, 2]
    square_center = config((0, 0), (1, 0), (1, 1), (0, 1), ("1/2", "1/2"))
    assert convex_hull(square_center) == [0, 1, 2, 3]


def brute_force_hull(A):
    """A point is a hull corner iff some closed half-plane through it
    contains all others strictly on one side except collinear mates."""
    n = len(A)
    corners = set()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            left = sum(
                1 for k in range(n) if k not in (i, j) and orient(A, i, j, k) > 0
            )
            right = sum(
                1 for k in range(n) if k not in (i, j) and orient(A, i, j, k) < 0
            )
            if left == 0 or right == 0:
                corners.add(i)
                corners.add(j)
    return corners


def test_convex_hull_against_halfplane_oracle():
    r = rng(3)
    for _ in range(10):
        A = rand_config(r, 5, require_strong=False)
        assert set(convex_hull(A)) == brute_force_hull(A)


def test_dominance_orders():
    A = config((0, 0), (3, 1), (1, 2))
    assert dominance_order(A, Z_RIGHT) == [0, 2, 1]
    assert dominance_order(A, direction(-1, 0)) == [1, 2, 0]
    # zeta = i: Re(i w) = -y
    assert dominance_order(A, direction(0, 1)) == [2, 1, 0]
    with pytest.raises(DegeneratePosition):
        dominance_order(config((0, 0), (0, 5)), Z_RIGHT)


def test_dominance_reversal_random():
    r = rng(4)
    for _ in range(5):
        A = rand_config(r, 5, extra_dirs=(Z_RIGHT,))
        fwd = dominance_order(A, Z_RIGHT)
        assert dominance_order(A, direction(-1, 0)) == fwd[::-1]


def test_anti_stokes_two_points():
    A = config((0, 0), (2, 1))
    assert anti_stokes_sequence(A, Z_RIGHT) == [1]


def test_anti_stokes_triangle_patterns():
    # positively oriented triple in initial dominance order: ccw rotation
    # runs (ijk)->(ikj)->(kij)->(kji), i.e. word s2 s1 s2
    pos = config((0, 0), (1, -2), (3, -1))
    assert orient(pos, 0, 1, 2) == 1
    assert dominance_order(pos, Z_RIGHT) == [0, 1, 2]
    assert anti_stokes_sequence(pos, Z_RIGHT, "ccw") == [2, 1, 2]
    assert anti_stokes_sequence(pos, Z_RIGHT, "cw") == [1, 2, 1]
    neg = config((0, 0), (1, 2), (3, 1))
    assert orient(neg, 0, 1, 2) == -1
    assert anti_stokes_sequence(neg, Z_RIGHT, "ccw") == [1, 2, 1]
    assert anti_stokes_sequence(neg, Z_RIGHT, "cw") == [2, 1, 2]


def apply_word(order, word):
    order = list(order)
    for s in word:
        order[s - 1], order[s] = order[s], order[s - 1]
    return order


def sampled_rotation_oracle(A, rotation, steps=20011):
    """Track the dominance order through finely sampled directions."""
    sgn = 1 if rotation == "ccw" else -1

    def numeric_order(theta):
        z = (math.cos(theta), math.sin(theta))
        return tuple(
            sorted(
                range(len(A)),
                key=lambda i: z[0] * float(A[i].x) - z[1] * float(A[i].y),
            )
        )

    seq = [numeric_order(0.0)]
    word = []
    for s in range(1, steps + 1):
        o = numeric_order(sgn * math.pi * s / steps)
        if o != seq[-1]:
            prev = seq[-1]
            diff = [t for t in range(len(A)) if prev[t] != o[t]]
            assert len(diff) == 2 and diff[1] == diff[0] + 1
            word.append(diff[0] + 1)
            seq.append(o)
    return word


def test_anti_stokes_words_against_sampled_oracle():
    r = rng(5)
    for n in (3, 4, 5, 6):
        # distinct y for the infinity form, distinct x so the start
        # direction is not itself anti-Stokes
        A = rand_config(r, n, extra_dirs=(Z_RIGHT, direction(0, 1)))
        for rotation in ("ccw", "cw"):
            word = anti_stokes_sequence(A, Z_RIGHT, rotation)
            assert len(word) == n * (n - 1) // 2
            start = dominance_order(A, Z_RIGHT)
            assert apply_word(start, word) == start[::-1]
            assert word == sampled_rotation_oracle(A, rotation)


def test_wall_events_constant_path():
    A = config((0, 0), (2, 1), (1, 3))
    assert segment_wall_events(A, A) == []


def test_wall_events_single_horizontality():
    # point 1 moves from below point 0 to above; Im difference is linear;
    # point 2 is far enough that no collinearity occurs on the leg
    a0 = config((0, 0), (3, -1), (10, 50))
    a1 = config((0, 0), (3, 3), (10, 50))
    events = segment_wall_events(a0, a1)
    assert len(events) == 1
    ev = events[0]
    assert ev.kind == "horiz" and (ev.i, ev.j) == (0, 1)
    # crossing time solves -1 + 4t = 0
    assert ev.time.rational == pytest.approx(0.25)
    assert ev.motion == "above" and ev.re_cmp == "right"


def test_wall_events_collinearity_quadratic():
    # w_1 carried across the segment [w_0, w_2]
    a0 = config((-4, -2), (-1, 2), (4, "5/2"))
    a1 = config((-4, -2), (0, -3), (4, "5/2"))
    events = segment_wall_events(a0, a1)
    colls = [e for e in events if e.kind == "coll"]
    assert len(colls) == 1
    ev = colls[0]
    assert (ev.i, ev.j, ev.k) == (0, 1, 2)
    assert ev.eps_before == -1  # j starts on the ccw-negative side


def test_wall_events_reversed_path():
    a0 = config((-4, -2), (-1, 2), (4, "5/2"))
    a1 = config((-4, -2), (0, -3), (4, "5/2"))
    fwd = segment_wall_events(a0, a1)
    bwd = segment_wall_events(a1, a0)
    assert len(fwd) == len(bwd)
    for e, f in zip(fwd, reversed(bwd)):
        assert e.kind == f.kind
        if e.kind == "coll":
            assert (e.i, e.j, e.k) == (f.i, f.j, f.k)
            assert e.eps_before == -f.eps_before
        else:
            assert {e.i, e.j} == {f.i, f.j}
            assert e.motion != f.motion


def test_wall_events_reject_endpoint_and_tangency():
    # endpoint horizontality: points 0, 1 aligned at t = 0
    with pytest.raises(PathNotGeneric):
        segment_wall_events(
            config((0, 0), (3, 0), (1, 5)), config((0, 0), (3, 2), (1, 5))
        )


def test_algebraic_time_ordering():
    roots = AlgebraicTime.quadratic_roots(1, 0, -2)  # +-sqrt(2)
    assert len(roots) == 2
    lo, hi = roots[0][0], roots[1][0]
    assert lo < hi and not (hi < lo)
    third = AlgebraicTime.from_rational(1)
    assert lo < third < hi
    again = AlgebraicTime.quadratic_roots(2, 0, -4)  # same numbers
    assert again[0][0] == lo and again[1][0] == hi
