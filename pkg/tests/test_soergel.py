import pytest
from hypothesis import given, settings, strategies as st

from lltilt.alcove import Orbit, Pattern, is_dominant
from lltilt.laurent import ONE, Q, q_int
from lltilt.soergel import (
    MissingPatternError, alcove_distance, dominant_alcoves, fundamental_point, mirror,
    reduce_to_indecomposable, regular_pattern, simple_reflection, theta_s,
)

O3 = Orbit.of((3, 2, 1), 3)
X0 = (3, 2, 1)
A1 = (4, 2, 0)


def test_fundamental_point():
    assert fundamental_point(O3) == X0
    assert alcove_distance(X0, 3) == 0
    with pytest.raises(ValueError):
        fundamental_point(Orbit.of((3, 3, 1), 3))


def test_theta_s_examples():
    assert theta_s(Pattern(3), 0, O3).is_zero()
    # finite walls of the fundamental alcove lead out of the dominant chamber
    assert theta_s(Pattern.single(X0, 3), 1, O3).is_zero()
    assert theta_s(Pattern.single(X0, 3), 2, O3).is_zero()
    # crossing the affine wall upward
    assert mirror(X0, 0, O3) == A1
    assert theta_s(Pattern.single(X0, 3), 0, O3) == Pattern(3, {A1: ONE, X0: Q})


def test_theta_s_on_descent_is_quantum_two():
    p = regular_pattern(A1, 3)
    assert theta_s(p, 0, O3) == p.scale(q_int(2))


def test_regular_pattern_examples():
    assert regular_pattern(X0, 3) == Pattern.single(X0, 3)
    assert regular_pattern(A1, 3) == Pattern(3, {A1: ONE, X0: Q})
    with pytest.raises(ValueError):
        regular_pattern((3, 3, 1), 3)


def test_reduce_examples():
    pa = regular_pattern(A1, 3)
    assert reduce_to_indecomposable(pa, {}) == (pa, [])
    top = (5, 1, 0)
    pt = regular_pattern(top, 3)
    out, log = reduce_to_indecomposable(pt + pa, {A1: pa})
    assert out == pt and log == [(A1, ONE)]
    with pytest.raises(MissingPatternError):
        reduce_to_indecomposable(pt + pa, {})


def test_simple_reflection_involution():
    for s in range(3):
        y = simple_reflection(X0, s, 3)
        assert y != X0 and simple_reflection(y, s, 3) == X0


alcoves = st.sampled_from([(x, L) for L, x0 in ((3, X0), (4, (4, 3, 2)), (4, (4, 2, 1)), (5, (5, 3, 1)))
                           for x in dominant_alcoves(Orbit.of(x0, L), 5)])


@settings(max_examples=60, deadline=None)
@given(alcoves)
def test_regular_patterns_are_indecomposable(case):
    x, L = case
    p = regular_pattern(x, L)
    assert p.top == x and p.is_indecomposable()
    assert all(is_dominant(y) for y, _ in p.items())
    assert all(c.at_one() > 0 for _, c in p.items())
    assert all(c.coeffs[e] > 0 for _, c in p.items() for e in c.coeffs)
