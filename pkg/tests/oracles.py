"""Independent brute-force oracles.

Everything here is deliberately naive: plain loops over points, maps, and
tuples, sharing no code with the library kernels it checks.
"""

import itertools
from fractions import Fraction


def grid_count_oracle(members, dim, side, points, d):
    """Count anchors by looping over the valid anchor box and testing each
    translated pattern point for membership."""
    members = set(map(tuple, members))
    lo = [max(1 - d * p[j] for p in points) for j in range(dim)]
    hi = [min(side - d * p[j] for p in points) for j in range(dim)]
    if any(lo[j] > hi[j] for j in range(dim)):
        return 0
    count = 0
    for x in itertools.product(*(range(lo[j], hi[j] + 1) for j in range(dim))):
        if all(tuple(x[j] + d * p[j] for j in range(dim)) in members for p in points):
            count += 1
    return count


def corner_count_oracle(members, group, d):
    """Triple-membership loop over all of G x G."""
    members = set(members)
    count = 0
    for x in group.elements():
        for y in group.elements():
            if (
                (x, y) in members
                and (group.add(x, d), y) in members
                and (x, group.add(y, d)) in members
            ):
                count += 1
    return count


def hom_count_oracle(motif, target):
    """Enumerate every vertex map and test every edge image."""
    count = 0
    for images in itertools.product(range(target.n), repeat=motif.n):
        ok = True
        for e in motif.edges:
            img = frozenset(images[v] for v in e)
            if len(img) != target.k or img not in target.edges:
                ok = False
                break
        if ok:
            count += 1
    return count


def triforce_weighted_oracle(kernel):
    """Six nested loops over the cells, no factoring."""
    g = kernel.g
    total = Fraction(0)
    for x in range(g):
        for y in range(g):
            for z in range(g):
                for xp in range(g):
                    for yp in range(g):
                        for zp in range(g):
                            total += (
                                kernel.values[xp][y][z]
                                * kernel.values[x][yp][z]
                                * kernel.values[x][y][zp]
                            )
    return total / g**6


def relation_witness_oracle(members, relation):
    """Full product search, all coordinates enumerated."""
    members = sorted(set(members))
    for tup in itertools.product(members, repeat=len(relation)):
        if sum(c * y for c, y in zip(relation, tup)) == 0 and len(set(tup)) > 1:
            return tup
    return None


def qc_witness_oracle(a, members, coeff_bound=None):
    """Search quadratics P(t) = p0 + p1 t + p2 t^2 with values in the set.

    Used only at tiny scales; the coefficient ranges are solved from the
    first three members rather than enumerated blindly.
    """
    members = sorted(set(members))
    pool = set(members)
    a1, a2, a3, a4, a5 = a
    for y1, y2, y3 in itertools.product(members, repeat=3):
        # interpolate P through (a1,y1), (a2,y2), (a3,y3) with rationals
        denom = [
            (a1 - a2) * (a1 - a3),
            (a2 - a1) * (a2 - a3),
            (a3 - a1) * (a3 - a2),
        ]
        def P(t):
            return (
                Fraction(y1 * (t - a2) * (t - a3), denom[0])
                + Fraction(y2 * (t - a1) * (t - a3), denom[1])
                + Fraction(y3 * (t - a1) * (t - a2), denom[2])
            )
        v4, v5 = P(a4), P(a5)
        if v4.denominator == 1 and v5.denominator == 1 and int(v4) in pool and int(v5) in pool:
            tup = (y1, y2, y3, int(v4), int(v5))
            if len(set(tup)) > 1:
                return tup
    return None


def prune_oracle(h, delta, rng):
    """Randomized-order pruning: repeatedly delete the triples through a
    randomly chosen sparse pair until no sparse covered pair remains."""
    threshold = Fraction(delta) * h.n
    alive = set(h.edges)
    while True:
        pair_count = {}
        for e in alive:
            for pair in itertools.combinations(sorted(e), 2):
                pair_count[frozenset(pair)] = pair_count.get(frozenset(pair), 0) + 1
        sparse = [p for p, c in pair_count.items() if c <= threshold]
        if not sparse:
            return frozenset(alive)
        victim = rng.choice(sorted(sparse, key=sorted))
        alive = {e for e in alive if not victim <= e}
