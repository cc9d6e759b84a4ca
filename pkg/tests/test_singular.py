import pytest
from hypothesis import given, settings, strategies as st

from lltilt.alcove import Orbit, Pattern, is_regular
from lltilt.laurent import ONE, Q
from lltilt.partition import enumerate_partitions
from lltilt.singular import (
    InvalidPathError, StabilizerError, canonical_path, compute_pattern, intermediate_orbit,
    reduce_singular, scale_pattern, theta_down, theta_general, theta_up, unscale_pattern,
)
from lltilt.soergel import dominant_alcoves, regular_pattern

WALL = Orbit.of((4, 1, 0), 3)
REG = Orbit.of((4, 2, 0), 3)
qi = Q.bar()


def test_theta_down_examples():
    assert theta_down(Pattern(3), WALL).is_zero()
    assert theta_down(Pattern.single((4, 1, 0), 3, Q), WALL) == Pattern.single((4, 1, 0), 3, Q)
    # above the single wall: o = 1
    assert theta_down(Pattern.single((5, 1, 0), 3), WALL) == Pattern.single((4, 1, 0), 3, qi)
    assert theta_down(Pattern.single((4, 2, 0), 3), WALL) == Pattern.single((4, 1, 0), 3)


def test_theta_up_examples():
    out = theta_up(Pattern.single((4, 1, 0), 3), REG)
    assert out == Pattern(3, {(5, 1, 0): ONE, (4, 2, 0): Q})


def test_preimages_of_dominant_wall_points_stay_dominant():
    # closure intervals keep every coordinate difference positive, so nothing is ever dropped
    from lltilt.alcove import is_dominant, preimages
    for z in [(a, b, c) for a in range(7) for b in range(a) for c in range(-2, b)]:
        target = Orbit.of((z[0] + 1, z[1], z[2]), 3)
        if Orbit.of(z, 3).n_walls() == 1 and target.is_regular():
            ys = preimages(z, target)
            assert ys and all(is_dominant(y) for y in ys)


def test_stabilizer_checks():
    with pytest.raises(StabilizerError):
        theta_up(Pattern.single((4, 2, 0), 3), WALL)


def test_theta_general_same_block_is_identity():
    p = compute_pattern((5, 1, 0), 3)
    assert theta_general(p, (5, 1, 0)) == p
    assert theta_general(p, (6, 1, -1)) == p


def test_theta_general_onto_wall_equals_theta_down():
    p = regular_pattern((5, 1, 0), 3)
    assert theta_general(p, (4, 1, 0)) == theta_down(p, WALL)


def test_scaling_roundtrip():
    p = compute_pattern((5, 1, 0), 3)
    s = scale_pattern(p, 2)
    assert s.level == 6 and s.top == (10, 2, 0)
    assert unscale_pattern(s, 2) == p
    assert intermediate_orbit((4, 2, 0), (4, 1, 0), 3).level == 6


def test_reduce_singular_examples():
    p = compute_pattern((5, 1, 0), 3)
    assert reduce_singular(p, {})[0] == p
    low = compute_pattern((4, 2, 0), 3)
    assert reduce_singular(p + low.scale(Q + qi + 1), {(4, 2, 0): low})[0] == p


def test_compute_pattern_examples():
    assert compute_pattern((3, 2, 1), 3) == Pattern.single((3, 2, 1), 3)
    assert compute_pattern((3, 1), 2) == Pattern.single((3, 1), 2)
    assert compute_pattern((4, 2, 0), 3) == regular_pattern((4, 2, 0), 3)
    assert canonical_path((5, 2, 1), 2) == [(3, 2, 1), (4, 2, 1), (5, 2, 1)]
    with pytest.raises(InvalidPathError):
        compute_pattern((5, 2, 1), 2, path=[(3, 2, 1), (5, 2, 1), (4, 2, 1)])


regular = st.sampled_from([(x, L) for L, x0 in ((3, (3, 2, 1)), (4, (4, 3, 2)), (4, (4, 2, 1)))
                           for x in dominant_alcoves(Orbit.of(x0, L), 6)])


@settings(max_examples=40, deadline=None)
@given(regular)
def test_regular_route_agrees(case):
    x, L = case
    assert compute_pattern(x, L) == regular_pattern(x, L)


parts = st.sampled_from([(lam, l) for l in (2, 3) for n in range(6) for lam in enumerate_partitions(n, True, l)])


@settings(max_examples=40, deadline=None)
@given(parts)
def test_singular_patterns_indecomposable(case):
    lam, l = case
    m = len(lam) + 1
    x = tuple(lam.part(i + 1) + m - i for i in range(m))
    p = compute_pattern(x, l)
    assert p.top == x and p.is_indecomposable()


def test_rank_four_agrees_near_the_fundamental_alcove():
    orb = Orbit.of((4, 3, 2, 1), 4)
    for x in dominant_alcoves(orb, 10):
        assert compute_pattern(x, 4) == regular_pattern(x, 4)
