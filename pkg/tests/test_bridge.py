import random

from hypothesis import given, settings, strategies as st

from lltilt.alcove import Orbit
from lltilt.bridge import (
    Dictionary, check_corollary1, check_main, check_path_independence, check_theorem1,
    check_theorem2, check_walls, corollary1_sums, end_residue, partition_of, random_path, scale,
    shift_from_geometry, shift_from_nodes, weight_of, x_of,
)
from lltilt.partition import Partition, addable_nodes, enumerate_partitions

small = [lam for n in range(6) for lam in enumerate_partitions(n)]


def test_dictionary_examples():
    assert weight_of((), 3, 2).coords == (0, 0, 0)
    assert weight_of((2, 1), 3, 2).coords == (2, 1, 0)
    assert x_of((2, 1), 3) == (5, 3, 1)
    assert partition_of((5, 3, 1), shifted=True) == Partition((2, 1))
    assert Dictionary(l=2, m=3).x_of((1,)) == (4, 2, 1)
    w = weight_of((2, 1), 3, 2)
    assert scale(w, 1) == w


def test_end_residues():
    assert end_residue((2, 1), 1, 3) == 1
    assert end_residue((1,), 1, 2) == 0
    assert end_residue((), 1, 2) == 1  # -1 mod 2
    assert end_residue((), 1, 3) == 2


@given(st.sampled_from(small), st.sampled_from([2, 3, 4]))
def test_walls_match_end_residues(lam, l):
    m = len(lam) + 2
    assert check_walls(lam, m, l)


@given(st.sampled_from(small), st.sampled_from([2, 3]), st.data())
def test_node_shift_matches_geometry(lam, l, data):
    i = data.draw(st.integers(0, l - 1))
    for g in addable_nodes(lam, i, l):
        m = len(lam) + 2
        assert shift_from_nodes(lam, g, i, l) == shift_from_geometry(lam, g, l, m)


def test_theorem1_examples():
    for l in (2, 3):
        assert check_theorem1((), 0, l).ok
    assert check_theorem1((1,), 1, 2).ok
    assert not check_theorem1((1,), 1, 2, perturb=True).ok


def test_theorem2_examples():
    assert check_theorem2((2, 1), 0, 1, 3).to_dict() == check_theorem1((2, 1), 0, 3).to_dict()
    # the A2 picture: τ = (9,6,3) at l = 4, two nodes of residue 1 at once
    assert check_theorem2((9, 6, 3), 1, 2, 4, m=3).ok


def test_main_examples():
    for n in (0, 1, 2):
        assert check_main(2, n).ok
    rep = check_main(2, 2)
    assert rep.checked == 1


def test_random_paths_are_admissible():
    rng = random.Random(3)
    lam = Partition((3, 1))
    path = random_path(lam, 2, 5, rng)
    assert path[0] == x_of((), 5) and path[-1] == x_of(lam, 5)
    assert check_path_independence(lam, 2, pairs=4).ok


def test_corollary_stabilizer_form():
    sing, reg, n_h, n_w = corollary1_sums((4, 1, 0), 2)
    assert (n_h, n_w) == (1, 2)
    assert reg == {k: 2 * v for k, v in sing.items()}
    assert check_corollary1((4, 1, 0), 2, "stabilizer").ok


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([(lam, l) for l in (2, 3) for n in range(5) for lam in enumerate_partitions(n)]),
       st.data())
def test_theorem1_sampled(case, data):
    lam, l = case
    i = data.draw(st.integers(0, l - 1))
    assert check_theorem1(lam, i, l).ok
