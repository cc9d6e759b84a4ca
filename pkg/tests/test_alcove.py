import itertools

import pytest
from hypothesis import given, strategies as st

from lltilt.alcove import (
    Hyperplane, Orbit, Pattern, ProjectionError, Weight, is_dominant, kill_nondominant, n_walls,
    orbit_points_below, preimages, project, reflect, rho, shift, side, u_o_counts, unshift, walls_through,
)
from lltilt.laurent import ONE, Q


def test_walls_examples():
    assert walls_through((3, 1), 2) == [Hyperplane(1, 2, 1)]
    assert walls_through((2, 1), 2) == []
    assert n_walls((6, 3, 0), 3) == 3
    assert Orbit.of((6, 3, 0), 3).n_walls() == 3
    assert Orbit.of((6, 3, 0), 3).stabilizer_order() == 6


def test_side_examples():
    H = Hyperplane(1, 2, 1)
    assert side((3, 1), H, 2) == 0
    assert side((4, 1), H, 2) == 1
    assert side((2, 1), H, 2) == -1


def test_shift_roundtrip():
    assert rho(3) == (3, 2, 1)
    assert shift((2, 1, 0)) == (5, 3, 1)
    assert unshift((5, 3, 1)) == (2, 1, 0)
    assert Weight((2, 1, 0), 3).x == (5, 3, 1)


def test_projection_examples():
    wall = Orbit.of((3, 1), 2)
    assert project((3, 1), wall) == (3, 1)
    assert project((4, 1), wall) == (3, 1)
    assert project((3, 2), wall) == (3, 1)
    assert preimages((3, 1), Orbit.of((4, 1), 2)) == [(4, 1), (3, 2)]
    assert u_o_counts((4, 1), (3, 1), 2) == (0, 1)
    assert u_o_counts((3, 2), (3, 1), 2) == (1, 0)
    with pytest.raises(ProjectionError):
        project((3, 1), Orbit.of((4, 1), 2))


def test_dominance_and_killing():
    assert is_dominant((3, 2, 1))
    assert not is_dominant((2, 2, 1))
    p = Pattern(3, {(3, 2, 1): Q, (2, 2, 1): Q})
    assert kill_nondominant(p) == Pattern(3, {(3, 2, 1): Q})
    assert kill_nondominant(Pattern(3)).is_zero()


def _closure_by_reflection(x, level, bound):
    m = len(x)
    seen, todo = {x}, [x]
    while todo:
        y = todo.pop()
        for i, j in itertools.combinations(range(1, m + 1), 2):
            for k in range(-4, 5):
                z = reflect(y, Hyperplane(i, j, k), level)
                if z not in seen and max(map(abs, z)) <= bound:
                    seen.add(z)
                    todo.append(z)
    return seen


def test_orbit_points_match_reflection_closure():
    level = 3
    x = (3, 2, 1)
    orb = Orbit.of(x, level)
    bound = (6, 1, -1)
    brute = {y for y in _closure_by_reflection(x, level, 12) if is_dominant(y)
             and all(sum(y[:k]) <= sum(bound[:k]) for k in range(1, 4))}
    assert set(orbit_points_below(orb, bound)) == brute
    assert orbit_points_below(orb, (3, 2, 1)) == [(3, 2, 1)]


coords = st.lists(st.integers(-8, 8), min_size=2, max_size=4).map(lambda v: tuple(sorted(set(v), reverse=True))).filter(lambda v: len(v) >= 2)


@given(coords, st.sampled_from([2, 3, 4]))
def test_reflection_preserves_orbit(x, level):
    o = Orbit.of(x, level)
    for H in walls_through(x, level):
        assert reflect(x, H, level) == x
    m = len(x)
    z = reflect(x, Hyperplane(1, m, 1), level)
    assert o.contains(z)


@given(coords, st.sampled_from([2, 3]))
def test_project_is_idempotent(x, level):
    o = Orbit.of(x, level)
    assert project(x, o) == x
    assert x in preimages(x, o)


def test_pattern_algebra():
    a = Pattern.single((3, 2, 1), 3)
    b = Pattern.single((4, 2, 0), 3, Q)
    p = a + b
    assert p.top == (4, 2, 0)
    assert (p - b) == a
    assert p.scale(Q)[(3, 2, 1)] == Q
    assert p.at_one() == {(4, 2, 0): 1, (3, 2, 1): 1}
    assert not p.is_indecomposable()
    assert (Pattern.single((4, 2, 0), 3) + a.scale(Q)).is_indecomposable()
    d = p.to_dict()
    assert d["top"] == [1, 0, -1] and d["block"]["total"] == 6
    assert p.items()[0][1] == Q and a[(3, 2, 1)] == ONE
