import itertools
import random
from fractions import Fraction

import pytest

from cornerforge.hypergraph import (
    Hypergraph,
    StepKernel,
    edge_density,
    hom_count,
    kforce_density,
    kforce_motif,
    prune_sparse_pairs,
    single_edge_motif,
    triforce_motif,
    triforce_weighted,
)
from oracles import hom_count_oracle, prune_oracle, triforce_weighted_oracle

SINGLE_TRIPLE = Hypergraph(3, 3, frozenset({frozenset({0, 1, 2})}))


def random_hypergraph(rng, k, n, density=0.5):
    edges = frozenset(
        frozenset(e) for e in itertools.combinations(range(n), k) if rng.random() < density
    )
    return Hypergraph(k, n, edges)


def random_kernel(rng, g, denominator=16):
    vals = [
        [[Fraction(rng.randint(0, denominator), denominator) for _ in range(g)] for _ in range(g)]
        for _ in range(g)
    ]
    return StepKernel(g, vals)


def test_edge_density_examples():
    assert edge_density(SINGLE_TRIPLE) == Fraction(2, 9)
    assert edge_density(Hypergraph.complete(3, 3)) == Fraction(2, 9)
    assert edge_density(Hypergraph(3, 5, frozenset())) == 0
    with pytest.raises(ValueError):
        edge_density(Hypergraph(3, 0, frozenset()))


def test_hom_count_examples():
    assert hom_count(triforce_motif(), SINGLE_TRIPLE) == 6
    assert hom_count_oracle(triforce_motif(), SINGLE_TRIPLE) == 6
    four = Hypergraph(4, 4, frozenset({frozenset(range(4))}))
    assert hom_count(kforce_motif(4), four) == 24
    assert hom_count_oracle(kforce_motif(4), four) == 24
    with pytest.raises(ValueError):
        hom_count(kforce_motif(3), four)


def test_edge_density_equals_single_edge_homs():
    rng = random.Random(2)
    for _ in range(8):
        k = rng.choice([2, 3, 4])
        n = rng.randint(k, 6)
        h = random_hypergraph(rng, k, n)
        assert edge_density(h) == Fraction(hom_count(single_edge_motif(k), h), n**k)


def test_kforce_density_examples():
    assert kforce_density(SINGLE_TRIPLE) == Fraction(2, 243)
    assert kforce_density(Hypergraph(3, 6, frozenset())) == 0


def test_kforce_density_matches_hom_count():
    rng = random.Random(4)
    for _ in range(12):
        k = rng.choice([3, 4])
        n = rng.randint(k, 6)
        h = random_hypergraph(rng, k, n, density=0.5)
        assert kforce_density(h) == Fraction(hom_count(kforce_motif(k), h), n ** (2 * k))


def test_kforce_sparse_path_agrees_with_subset_oracle():
    # comb(110, 3) exceeds the dense-path cutoff, forcing the sparse route;
    # the oracle walks support triples with its own codegree bookkeeping
    rng = random.Random(6)
    small = random_hypergraph(rng, 3, 7, density=0.4)
    shifted = Hypergraph(3, 110, small.edges)
    codeg = {}
    for e in shifted.edges:
        for v in e:
            codeg[e - {v}] = codeg.get(e - {v}, 0) + 1
    support = sorted({v for e in shifted.edges for v in e})
    total = 0
    for s in itertools.combinations(support, 3):
        prod = 1
        for v in s:
            prod *= codeg.get(frozenset(s) - {v}, 0)
        total += prod
    assert kforce_density(shifted) == Fraction(6 * total, 110**6)


def test_triforce_weighted_examples():
    assert triforce_weighted(StepKernel.constant(1, 1)) == 1
    assert triforce_weighted(StepKernel.constant(2, Fraction(1, 2))) == Fraction(1, 8)
    assert triforce_weighted(StepKernel.indicator(2, (1, 0, 1))) == Fraction(1, 64)


def test_triforce_weighted_matches_six_loop_oracle():
    rng = random.Random(8)
    for _ in range(6):
        w = random_kernel(rng, rng.choice([1, 2, 3]))
        assert triforce_weighted(w) == triforce_weighted_oracle(w)


def test_triforce_weighted_dominates_fourth_power_of_mean():
    rng = random.Random(10)
    for _ in range(20):
        w = random_kernel(rng, rng.choice([2, 3]))
        assert triforce_weighted(w) >= w.mean() ** 4


def test_kernel_validation():
    with pytest.raises(ValueError):
        StepKernel(1, [[[Fraction(3, 2)]]])
    with pytest.raises(ValueError):
        StepKernel(0, [])


def test_prune_trivial_cases():
    single = SINGLE_TRIPLE
    result = prune_sparse_pairs(single, Fraction(1, 2))  # threshold 1.5 >= 1
    assert not result.pruned.edges and result.deleted == (frozenset({0, 1, 2}),)
    complete6 = Hypergraph.complete(3, 6)
    kept = prune_sparse_pairs(complete6, Fraction(1, 6))  # pairs in 4 > 1 triples
    assert kept.pruned.edges == complete6.edges
    assert len(kept.link_edges) == 15


def test_prune_threshold_is_inclusive():
    # pair degree exactly delta * n must be deleted
    h = Hypergraph(3, 4, frozenset({frozenset({0, 1, 2}), frozenset({0, 1, 3})}))
    result = prune_sparse_pairs(h, Fraction(1, 2))  # delta*n = 2, pair {0,1} has 2
    assert not result.pruned.edges


def test_prune_fixpoint_and_deletion_bound():
    rng = random.Random(12)
    for _ in range(8):
        n = rng.randint(4, 10)
        h = random_hypergraph(rng, 3, n, density=rng.uniform(0.2, 0.7))
        delta = Fraction(rng.randint(1, 3), rng.randint(4, 9))
        if not 0 < delta < 1:
            continue
        result = prune_sparse_pairs(h, delta)
        assert result.pruned.edges == prune_oracle(h, delta, rng)
        assert len(result.deleted) <= Fraction(n * (n - 1), 2) * delta * n
        # surviving covered pairs really do exceed the threshold
        for pair in result.link_edges:
            cover = sum(1 for e in result.pruned.edges if pair <= e)
            assert cover > delta * n


def test_motif_shapes():
    tri = triforce_motif()
    assert tri.n == 6 and len(tri.edges) == 3
    assert frozenset({0, 1, 5}) in tri.edges  # base 1,2 with third slot primed
    k4 = kforce_motif(4)
    assert k4.n == 8 and len(k4.edges) == 4
