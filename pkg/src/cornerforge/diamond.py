"""Tripartite graphs from progression-free sets, and their triangle
hypergraphs.

A cyclically 3-AP-free A in Z/N gives a tripartite graph on parts X, Y, Z
(each a copy of Z/N) whose triangles are exactly (x, x+a, x+2a) for a in A:
any triangle needs differences a, b, c in A with a + b = 2c, which
progression-freeness collapses to a = b = c.  Every edge then lies in
exactly one triangle ("diamond-free"), which the checker verifies directly
rather than trusting the argument.  a = 0 is allowed; its triangles pair
the three copies of each vertex and the checker remains the arbiter.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .hypergraph import Hypergraph

__all__ = [
    "TripartiteGraph",
    "ProgressionWitness",
    "diamond_free_from_ap_free",
    "verify_diamond_free",
    "triangle_hypergraph",
    "find_cyclic_3ap",
]


@dataclass(frozen=True)
class TripartiteGraph:
    """Parts X, Y, Z of size `side` each; edges stored per part pair as
    ordered index pairs in [0, side)^2."""

    side: int
    xy: frozenset
    yz: frozenset
    xz: frozenset

    def __post_init__(self) -> None:
        for name in ("xy", "yz", "xz"):
            pairs = frozenset((int(u), int(v)) for u, v in getattr(self, name))
            if any(not (0 <= u < self.side and 0 <= v < self.side) for u, v in pairs):
                raise ValueError(f"{name} edge outside [0, {self.side})^2")
            object.__setattr__(self, name, pairs)

    def edge_count(self) -> int:
        return len(self.xy) + len(self.yz) + len(self.xz)

    def triangles(self) -> Iterator[tuple[int, int, int]]:
        """All (x, y, z) with xy, yz, xz edges present."""
        z_by_y = defaultdict(set)
        for y, z in self.yz:
            z_by_y[y].add(z)
        z_by_x = defaultdict(set)
        for x, z in self.xz:
            z_by_x[x].add(z)
        for x, y in sorted(self.xy):
            for z in sorted(z_by_y[y] & z_by_x[x]):
                yield (x, y, z)


class ProgressionWitness(ValueError):
    """Raised when the input set is not progression-free; carries a witness."""

    def __init__(self, witness: tuple[int, int, int], modulus: int):
        self.witness = witness
        self.modulus = modulus
        x, y, z = witness
        super().__init__(f"{x} + {z} = 2*{y} (mod {modulus}): not 3-AP-free")


def find_cyclic_3ap(members: Iterable[int], modulus: int) -> Optional[tuple[int, int, int]]:
    """A nontrivial (x, y, z) in the set with x + z = 2y mod N, or None."""
    members = sorted({m % modulus for m in members})
    for x in members:
        for z in members:
            for y in members:
                if (x + z - 2 * y) % modulus == 0 and not (x == y == z):
                    return (x, y, z)
    return None


def diamond_free_from_ap_free(members: Iterable[int], modulus: int) -> TripartiteGraph:
    """The tripartite graph with edges (x, x+a), (y, y+a), (x, x+2a) over
    all a in the set and all x, y in Z/N.

    The set must be cyclically 3-AP-free (checked, with witness); odd N
    keeps the XZ family collision-free since doubling is then a bijection.
    """
    members = sorted({m % modulus for m in members})
    witness = find_cyclic_3ap(members, modulus)
    if witness is not None:
        raise ProgressionWitness(witness, modulus)
    n = modulus
    xy = frozenset((x, (x + a) % n) for a in members for x in range(n))
    yz = frozenset((y, (y + a) % n) for a in members for y in range(n))
    xz = frozenset((x, (x + 2 * a) % n) for a in members for x in range(n))
    return TripartiteGraph(n, xy, yz, xz)


def verify_diamond_free(graph: TripartiteGraph):
    """True when every edge of every family lies in exactly one triangle;
    otherwise (family, edge, triangle_count) for the first offender."""
    per_edge: dict[tuple[str, tuple[int, int]], int] = defaultdict(int)
    for x, y, z in graph.triangles():
        per_edge[("xy", (x, y))] += 1
        per_edge[("yz", (y, z))] += 1
        per_edge[("xz", (x, z))] += 1
    for family in ("xy", "yz", "xz"):
        for edge in sorted(getattr(graph, family)):
            count = per_edge.get((family, edge), 0)
            if count != 1:
                return (family, edge, count)
    return True


def triangle_hypergraph(graph: TripartiteGraph) -> Hypergraph:
    """The 3-uniform hypergraph on the 3N vertices of the graph whose
    triples are exactly its triangles (X first, then Y, then Z blocks)."""
    n = graph.side
    edges = frozenset(
        frozenset((x, n + y, 2 * n + z)) for x, y, z in graph.triangles()
    )
    return Hypergraph(3, 3 * n, edges)
