"""k-uniform hypergraph densities: edges, homomorphisms, k-force, kernels.

Density conventions are exact rationals throughout.  A map between
hypergraphs counts as a homomorphism when the image of every motif edge is
an edge of the target with all k images distinct; maps collapsing an edge
are not homomorphisms.  (The convention is forced by the single-triple
count: one triple admits exactly 6 triforce homomorphisms.)  Vertices not
sharing an edge may still collide.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, NamedTuple

__all__ = [
    "Hypergraph",
    "StepKernel",
    "triforce_motif",
    "kforce_motif",
    "single_edge_motif",
    "edge_density",
    "hom_count",
    "kforce_density",
    "triforce_weighted",
    "prune_sparse_pairs",
    "PruneResult",
]


@dataclass(frozen=True)
class Hypergraph:
    """k-uniform hypergraph on vertices 0..n-1 with a set of k-element edges."""

    k: int
    n: int
    edges: frozenset

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("uniformity must be at least 2")
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        edges = frozenset(frozenset(e) for e in self.edges)
        for e in edges:
            if len(e) != self.k:
                raise ValueError(f"edge {sorted(e)} does not have {self.k} distinct vertices")
            if any(not (0 <= v < self.n) for v in e):
                raise ValueError(f"edge {sorted(e)} has a vertex outside [0, {self.n})")
        object.__setattr__(self, "edges", edges)

    @staticmethod
    def complete(k: int, n: int) -> "Hypergraph":
        return Hypergraph(k, n, frozenset(map(frozenset, itertools.combinations(range(n), k))))


# Motifs are just small hypergraphs used as the pattern side of hom counts.


def kforce_motif(k: int) -> Hypergraph:
    """2k vertices 0..k-1 (base) and k..2k-1 (primed); edge i swaps base
    vertex i for its primed copy."""
    if k < 2:
        raise ValueError("k-force needs k >= 2")
    base = frozenset(range(k))
    edges = frozenset((base - {i}) | {k + i} for i in range(k))
    return Hypergraph(k, 2 * k, edges)


def triforce_motif() -> Hypergraph:
    return kforce_motif(3)


def single_edge_motif(k: int) -> Hypergraph:
    return Hypergraph(k, k, frozenset({frozenset(range(k))}))


def edge_density(h: Hypergraph) -> Fraction:
    """Labeled edge density k! * |E| / n^k."""
    if h.n == 0:
        raise ValueError("edge density of an empty vertex set is undefined")
    return Fraction(factorial(h.k) * len(h.edges), h.n**h.k)


def hom_count(motif: Hypergraph, h: Hypergraph) -> int:
    """Number of vertex maps V(motif) -> V(h) sending every motif edge onto
    an edge of h (k distinct images per edge).

    Plain depth-first enumeration with per-level edge checks; deliberately
    independent of the codegree shortcut in kforce_density so the two can
    cross-check each other.
    """
    if motif.k != h.k:
        raise ValueError(f"uniformity mismatch: motif {motif.k}, target {h.k}")
    if motif.n > 10:
        raise ValueError("motif too large (at most 10 vertices)")
    k = h.k
    target = h.edges
    # edges become checkable once their last vertex (in assignment order) lands
    checks: list[list[tuple[int, ...]]] = [[] for _ in range(motif.n)]
    for e in motif.edges:
        verts = sorted(e)
        checks[verts[-1]].append(tuple(verts))
    assign = [0] * motif.n
    n = h.n

    def descend(level: int) -> int:
        if level == motif.n:
            return 1
        total = 0
        todo = checks[level]
        for v in range(n):
            assign[level] = v
            for e in todo:
                img = frozenset(assign[u] for u in e)
                if len(img) != k or img not in target:
                    break
            else:
                total += descend(level + 1)
        return total

    return descend(0)


def _codegrees(h: Hypergraph) -> Counter:
    codeg: Counter = Counter()
    for e in h.edges:
        for v in e:
            codeg[e - {v}] += 1
    return codeg


def kforce_density(h: Hypergraph) -> Fraction:
    """k-force homomorphism density hom(k-force, H) / n^(2k).

    Evaluated through codegree products: for a base tuple (x_1..x_k) the
    number of valid primed completions at slot i is the number of vertices
    extending {x_j : j != i} to an edge, and the completions multiply.
    Tuples sharing a coordinate contribute nothing for k >= 3, so the sum
    collapses to k! times a sum over k-subsets.
    """
    if h.n == 0:
        raise ValueError("density of an empty vertex set is undefined")
    k, n = h.k, h.n
    if not h.edges:
        return Fraction(0)
    codeg = _codegrees(h)
    total = 0
    if k == 2:
        # coordinate collisions can survive at k = 2; keep the raw tuple sum
        for tup in itertools.product(range(n), repeat=2):
            total += codeg.get(frozenset({tup[1]}), 0) * codeg.get(frozenset({tup[0]}), 0)
        return Fraction(total, n ** (2 * k))
    if comb(n, k) <= 200_000:
        subsets: Iterable = itertools.combinations(range(n), k)
    elif k == 3:
        # sparse path: only triples whose three pairs all have positive
        # codegree can contribute, i.e. triangles of the codegree support
        adj = defaultdict(set)
        for pair in codeg:
            u, v = sorted(pair)
            adj[u].add(v)
            adj[v].add(u)
        subsets = (
            (u, v, w)
            for u in sorted(adj)
            for v in sorted(adj[u])
            if v > u
            for w in sorted(adj[u] & adj[v])
            if w > v
        )
    else:
        subsets = itertools.combinations(range(n), k)
    for sub in subsets:
        s = frozenset(sub)
        prod = 1
        for v in sub:
            prod *= codeg.get(s - {v}, 0)
            if not prod:
                break
        total += prod
    return Fraction(factorial(k) * total, n ** (2 * k))


# ---------------------------------------------------------------------------
# step kernels
# ---------------------------------------------------------------------------


class StepKernel:
    """Piecewise-constant W on a g x g x g grid of [0,1]^3, values in [0,1].

    Values are exact rationals so the weighted triforce integral is exact;
    floats passed in are rationalized via Fraction (exact binary value).
    """

    __slots__ = ("g", "values")

    def __init__(self, g: int, values) -> None:
        if g < 1:
            raise ValueError("grid resolution must be positive")
        vals = tuple(
            tuple(tuple(Fraction(values[x][y][z]) for z in range(g)) for y in range(g))
            for x in range(g)
        )
        for plane in vals:
            for row in plane:
                for v in row:
                    if not 0 <= v <= 1:
                        raise ValueError(f"kernel value {v} outside [0, 1]")
        self.g = g
        self.values = vals

    @staticmethod
    def constant(g: int, value) -> "StepKernel":
        v = Fraction(value)
        return StepKernel(g, [[[v] * g for _ in range(g)] for _ in range(g)])

    @staticmethod
    def indicator(g: int, cell: tuple[int, int, int]) -> "StepKernel":
        vals = [[[Fraction(0)] * g for _ in range(g)] for _ in range(g)]
        x, y, z = cell
        vals[x][y][z] = Fraction(1)
        return StepKernel(g, vals)

    def __getitem__(self, cell: tuple[int, int, int]) -> Fraction:
        x, y, z = cell
        return self.values[x][y][z]

    def mean(self) -> Fraction:
        return sum(v for plane in self.values for row in plane for v in row) / self.g**3

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StepKernel) and (self.g, self.values) == (other.g, other.values)

    def __repr__(self) -> str:
        return f"StepKernel(g={self.g}, mean={self.mean()})"


def triforce_weighted(w: StepKernel) -> Fraction:
    """Exact value of the triforce integral of a step kernel.

    Integrating W(x',y,z) W(x,y',z) W(x,y,z') over [0,1]^6 factors per cell:
    sum the three one-axis marginals and contract, then divide by g^6.
    """
    g = w.g
    v = w.values
    sum_x = [[sum(v[x][y][z] for x in range(g)) for z in range(g)] for y in range(g)]
    sum_y = [[sum(v[x][y][z] for y in range(g)) for z in range(g)] for x in range(g)]
    sum_z = [[sum(v[x][y][z] for z in range(g)) for y in range(g)] for x in range(g)]
    total = Fraction(0)
    for x in range(g):
        for y in range(g):
            for z in range(g):
                total += sum_x[y][z] * sum_y[x][z] * sum_z[x][y]
    return total / g**6


# ---------------------------------------------------------------------------
# pair pruning
# ---------------------------------------------------------------------------


class PruneResult(NamedTuple):
    pruned: Hypergraph
    link_edges: frozenset  # pairs (2-element frozensets) covered by a surviving triple
    deleted: tuple  # triples removed, in deletion order


def prune_sparse_pairs(h: Hypergraph, delta) -> PruneResult:
    """Iteratively delete triples through pairs lying in at most delta*n
    triples, until every covered pair lies in more than delta*n.

    The fixpoint is order-independent (degrees only drop, so a pair once
    sparse stays sparse); a canonical worklist keeps the run deterministic.
    Also returns the link graph of surviving pairs.
    """
    delta = Fraction(delta)
    if h.k != 3:
        raise ValueError("pair pruning is defined for 3-uniform hypergraphs")
    if not 0 < delta < 1:
        raise ValueError("delta must lie strictly between 0 and 1")
    threshold = delta * h.n
    by_pair: dict = defaultdict(set)
    for e in h.edges:
        for pair in itertools.combinations(sorted(e), 2):
            by_pair[frozenset(pair)].add(e)
    alive = set(h.edges)
    queue = deque(sorted((p for p, es in by_pair.items() if len(es) <= threshold), key=sorted))
    queued = set(queue)
    deleted = []
    while queue:
        pair = queue.popleft()
        queued.discard(pair)
        doomed = [e for e in by_pair[pair] if e in alive]
        for e in sorted(doomed, key=sorted):
            alive.remove(e)
            deleted.append(e)
            for q in itertools.combinations(sorted(e), 2):
                q = frozenset(q)
                by_pair[q].discard(e)
                if by_pair[q] and len(by_pair[q]) <= threshold and q not in queued:
                    queue.append(q)
                    queued.add(q)
    link = frozenset(p for p, es in by_pair.items() if any(e in alive for e in es))
    return PruneResult(Hypergraph(3, h.n, frozenset(alive)), link, tuple(deleted))
