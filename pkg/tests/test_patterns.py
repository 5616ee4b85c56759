import random

import pytest

from cornerforge.patterns import (
    GridSet,
    Group,
    GroupSet,
    Pattern,
    corner_count_group,
    count_pattern,
    spectrum,
)
from oracles import corner_count_oracle, grid_count_oracle


def random_grid(rng, dim, side, density=0.4):
    pts = [
        p
        for p in __import__("itertools").product(range(1, side + 1), repeat=dim)
        if rng.random() < density
    ]
    return GridSet(dim, side, pts)


def test_full_grid_corner_counts():
    g = GridSet.full(3, 4)
    assert count_pattern(g, Pattern.corner(3), 1) == 27
    for d in (1, 2, 3, -1, -2, -3):
        assert count_pattern(g, Pattern.corner(3), d) == (4 - abs(d)) ** 3


def test_empty_set_counts_zero():
    g = GridSet.empty(3, 5)
    assert count_pattern(g, Pattern.corner(3), 2) == 0


def test_rejects_bad_inputs():
    g = GridSet.full(2, 3)
    with pytest.raises(ValueError):
        count_pattern(g, Pattern.corner(3), 1)
    with pytest.raises(ValueError):
        count_pattern(g, Pattern.corner(2), 0)
    with pytest.raises(ValueError):
        Pattern(2, ((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        GridSet(2, 3, [(0, 1)])


def test_anchor_may_fall_outside_the_grid():
    # pattern without the origin: anchors contribute without being members
    g = GridSet(1, 10, [(5,), (7,)])
    pat = Pattern.one_dim([5, 7])
    assert count_pattern(g, pat, 1) == 1  # x = 0, outside [1,10]


def test_random_grids_match_oracle():
    rng = random.Random(1)
    for _ in range(25):
        dim = rng.randint(1, 3)
        side = rng.randint(2, 9)
        g = random_grid(rng, dim, side)
        pat = (
            Pattern.corner(dim)
            if rng.random() < 0.5
            else Pattern(
                dim,
                tuple(
                    {tuple(rng.randint(-2, 2) for _ in range(dim)) for _ in range(3)}
                ),
            )
        )
        d = rng.choice([x for x in range(-side + 1, side) if x])
        expected = grid_count_oracle(set(g), dim, side, pat.points, d)
        assert count_pattern(g, pat, d) == expected


def test_reflection_symmetry():
    rng = random.Random(7)
    for _ in range(10):
        dim = rng.randint(1, 3)
        side = rng.randint(3, 7)
        g = random_grid(rng, dim, side)
        pat = Pattern.corner(dim)
        axis = rng.randrange(dim)
        d = rng.choice([x for x in range(-side + 1, side) if x])
        assert count_pattern(g, pat, d) == count_pattern(
            g.reflect(axis), pat.reflect(axis), d
        )


def test_grid_set_round_trip():
    g = GridSet(2, 4, [(1, 1), (4, 3), (2, 2)])
    assert set(g) == {(1, 1), (4, 3), (2, 2)}
    assert (4, 3) in g and (3, 4) not in g
    assert len(g) == 3


# -- group sets --------------------------------------------------------------


def test_full_group_and_singleton():
    g5 = Group.zmod(5)
    assert corner_count_group(GroupSet.full(g5), 1) == 25
    single = GroupSet(g5, [(0, 0)])
    assert corner_count_group(single, 1) == 0
    with pytest.raises(ValueError):
        corner_count_group(single, 0)


def random_group_set(rng, group, density=0.4):
    members = [
        (x, y)
        for x in group.elements()
        for y in group.elements()
        if rng.random() < density
    ]
    return GroupSet(group, members)


def test_group_kernel_matches_triple_loop():
    rng = random.Random(3)
    groups = [Group.zmod(7), Group.zmod(12), Group.vector(3, 2), Group.vector(2, 3), Group.vector(3, 4)]
    for group in groups:
        pairs = random_group_set(rng, group, 0.35)
        members = set(pairs)
        for _ in range(4):
            d = group.canon(
                rng.randrange(1, group.order)
                if group.kind == "zN"
                else tuple(rng.randrange(group.params[0]) for _ in range(group.params[1]))
            )
            if d == group.identity:
                continue
            assert corner_count_group(pairs, d) == corner_count_oracle(members, group, d)


def test_translation_invariance():
    rng = random.Random(11)
    group = Group.vector(3, 2)
    pairs = random_group_set(rng, group, 0.4)
    for _ in range(5):
        u = tuple(rng.randrange(3) for _ in range(2))
        v = tuple(rng.randrange(3) for _ in range(2))
        d = (1, 2)
        assert corner_count_group(pairs, d) == corner_count_group(pairs.translate(u, v), d)


# -- spectra -----------------------------------------------------------------


def test_full_grid_spectrum_values():
    g = GridSet.full(3, 4)
    spec = spectrum(g, Pattern.corner(3))
    assert set(spec.counts) == {d for d in range(-3, 4) if d}
    for d, c in spec.counts.items():
        assert c == (4 - abs(d)) ** 3
    assert spectrum(GridSet.empty(2, 4), Pattern.corner(2)).total() == 0


def test_spectrum_total_matches_oracle_sum():
    rng = random.Random(5)
    g = random_grid(rng, 2, 6)
    pat = Pattern.corner(2)
    spec = spectrum(g, pat)
    oracle_total = sum(
        grid_count_oracle(set(g), 2, 6, pat.points, d) for d in range(-5, 6) if d
    )
    assert spec.total() == oracle_total


def test_spectrum_threads_bit_identical():
    rng = random.Random(9)
    g = random_grid(rng, 2, 8)
    pat = Pattern.corner(2)
    assert spectrum(g, pat).counts == spectrum(g, pat, threads=4).counts
    group = Group.vector(2, 3)
    pairs = random_group_set(rng, group)
    assert spectrum(pairs).counts == spectrum(pairs, threads=3).counts


def test_group_spectrum_max_entry():
    group = Group.zmod(5)
    pairs = GroupSet.full(group)
    spec = spectrum(pairs)
    assert spec.max_entry() == (1, 25)
    assert len(spec.counts) == 4
