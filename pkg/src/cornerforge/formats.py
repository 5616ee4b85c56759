"""Text file formats for sets, hypergraphs, kernels, and graphs.

All formats are line-oriented with a one-line header:

  grid set     ``dim <k> side <N>``   then one point per line (k integers)
  group set    ``group zN <N>`` or ``group fp <p> <n>``   then one pair of
               elements per line; vector-group elements are comma-joined
  hypergraph   ``<k> <n> <m>``        then m lines of k vertex indices
  kernel       ``<g>``                then g^3 rationals p/q, x fastest
  graph        ``tripartite <N>``     then lines ``XY x y`` / ``YZ y z`` /
               ``XZ x z``

Residue sets in {0..L-1} (the solution-free constructions) use the 1-based
grid format with side L by storing value+1; translation-invariant relations
are unaffected by the shift, and loaders undo it.  Parse errors carry
line/column positions.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from typing import Iterable, TextIO

from .behrend import SphereSet
from .diamond import TripartiteGraph
from .hypergraph import Hypergraph, StepKernel
from .patterns import GridSet, Group, GroupSet, Spectrum

__all__ = [
    "ParseError",
    "read_grid_set",
    "write_grid_set",
    "read_group_set",
    "write_group_set",
    "read_residues",
    "write_residues",
    "read_hypergraph",
    "write_hypergraph",
    "read_kernel",
    "write_kernel",
    "read_tripartite",
    "write_tripartite",
    "write_spectrum_csv",
]


class ParseError(ValueError):
    def __init__(self, path: str, line: int, column: int, message: str):
        self.path, self.line, self.column = path, line, column
        super().__init__(f"{path}:{line}:{column}: {message}")


def _tokens(line: str) -> list[tuple[int, str]]:
    """(1-based column, token) pairs of a whitespace-split line."""
    out = []
    col = 0
    for raw in line.rstrip("\n").split(" "):
        if raw:
            out.append((col + 1, raw))
        col += len(raw) + 1
    return out


def _int(path: str, lineno: int, col: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(path, lineno, col, f"expected an integer, got {token!r}") from None


def _data_lines(fh: TextIO):
    for lineno, line in enumerate(fh, start=1):
        if line.strip() and not line.lstrip().startswith("#"):
            yield lineno, line


def read_grid_set(fh: TextIO, path: str = "<grid set>") -> GridSet:
    lines = _data_lines(fh)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(path, 1, 1, "empty file") from None
    toks = _tokens(header)
    if len(toks) != 4 or toks[0][1] != "dim" or toks[2][1] != "side":
        raise ParseError(path, lineno, toks[0][0] if toks else 1, "expected header 'dim k side N'")
    dim = _int(path, lineno, toks[1][0], toks[1][1])
    side = _int(path, lineno, toks[3][0], toks[3][1])
    members = []
    for lineno, line in lines:
        toks = _tokens(line)
        if len(toks) != dim:
            raise ParseError(path, lineno, toks[0][0] if toks else 1, f"expected {dim} coordinates")
        point = tuple(_int(path, lineno, c, t) for c, t in toks)
        if not all(1 <= x <= side for x in point):
            raise ParseError(path, lineno, toks[0][0], f"point {point} outside [1, {side}]^{dim}")
        members.append(point)
    return GridSet(dim, side, members)


def write_grid_set(fh: TextIO, grid: GridSet) -> None:
    fh.write(f"dim {grid.dim} side {grid.side}\n")
    for point in grid:
        fh.write(" ".join(str(c) for c in point) + "\n")


def read_residues(fh: TextIO, path: str = "<residue set>") -> tuple[frozenset, int]:
    """Load a {0..L-1} residue set stored in the 1-based grid format;
    returns (members, L)."""
    grid = read_grid_set(fh, path)
    if grid.dim != 1:
        raise ParseError(path, 1, 1, "residue sets must be 1-dimensional")
    return frozenset(p[0] - 1 for p in grid), grid.side


def write_residues(fh: TextIO, members: Iterable[int], length: int) -> None:
    shifted = GridSet(1, length, [(int(v) + 1,) for v in members])
    write_grid_set(fh, shifted)


def read_group_set(fh: TextIO, path: str = "<group set>") -> GroupSet:
    lines = _data_lines(fh)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(path, 1, 1, "empty file") from None
    toks = _tokens(header)
    if not toks or toks[0][1] != "group":
        raise ParseError(path, lineno, 1, "expected header 'group zN <N>' or 'group fp <p> <n>'")
    if len(toks) == 3 and toks[1][1] == "zN":
        group = Group.zmod(_int(path, lineno, toks[2][0], toks[2][1]))
    elif len(toks) == 4 and toks[1][1] == "fp":
        group = Group.vector(
            _int(path, lineno, toks[2][0], toks[2][1]),
            _int(path, lineno, toks[3][0], toks[3][1]),
        )
    else:
        raise ParseError(path, lineno, toks[1][0] if len(toks) > 1 else 1, "unknown group kind")
    members = []
    for lineno, line in lines:
        toks = _tokens(line)
        if len(toks) != 2:
            raise ParseError(path, lineno, toks[0][0] if toks else 1, "expected two elements")
        pair = []
        for col, token in toks:
            try:
                pair.append(group.parse_element(token))
            except ValueError:
                raise ParseError(path, lineno, col, f"bad group element {token!r}") from None
        members.append(tuple(pair))
    return GroupSet(group, members)


def write_group_set(fh: TextIO, pairs: GroupSet) -> None:
    fh.write(f"group {pairs.group.label()}\n")
    fmt = pairs.group.format_element
    for x, y in pairs:
        fh.write(f"{fmt(x)} {fmt(y)}\n")


def read_hypergraph(fh: TextIO, path: str = "<hypergraph>") -> Hypergraph:
    lines = _data_lines(fh)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(path, 1, 1, "empty file") from None
    toks = _tokens(header)
    if len(toks) != 3:
        raise ParseError(path, lineno, 1, "expected header 'k n m'")
    k, n, m = (_int(path, lineno, c, t) for c, t in toks)
    edges = []
    for lineno, line in lines:
        toks = _tokens(line)
        if len(toks) != k:
            raise ParseError(path, lineno, toks[0][0] if toks else 1, f"expected {k} vertices")
        edge = frozenset(_int(path, lineno, c, t) for c, t in toks)
        if len(edge) != k:
            raise ParseError(path, lineno, toks[0][0], "edge vertices must be distinct")
        edges.append(edge)
    if len(edges) != m:
        raise ParseError(path, lineno if edges else 1, 1, f"header promised {m} edges, found {len(edges)}")
    return Hypergraph(k, n, frozenset(edges))


def write_hypergraph(fh: TextIO, h: Hypergraph) -> None:
    fh.write(f"{h.k} {h.n} {len(h.edges)}\n")
    for edge in sorted(sorted(e) for e in h.edges):
        fh.write(" ".join(str(v) for v in edge) + "\n")


def _fraction(path: str, lineno: int, col: int, token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(path, lineno, col, f"expected a rational p/q, got {token!r}") from None


def read_kernel(fh: TextIO, path: str = "<kernel>") -> StepKernel:
    lines = _data_lines(fh)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(path, 1, 1, "empty file") from None
    toks = _tokens(header)
    if len(toks) != 1:
        raise ParseError(path, lineno, 1, "expected header '<g>'")
    g = _int(path, lineno, toks[0][0], toks[0][1])
    flat = []
    for lineno, line in lines:
        for col, token in _tokens(line):
            flat.append(_fraction(path, lineno, col, token))
    if len(flat) != g**3:
        raise ParseError(path, lineno if flat else 1, 1, f"expected {g ** 3} values, found {len(flat)}")
    values = [[[Fraction(0)] * g for _ in range(g)] for _ in range(g)]
    pos = 0
    for z in range(g):  # x varies fastest
        for y in range(g):
            for x in range(g):
                values[x][y][z] = flat[pos]
                pos += 1
    return StepKernel(g, values)


def write_kernel(fh: TextIO, w: StepKernel) -> None:
    fh.write(f"{w.g}\n")
    for z in range(w.g):
        for y in range(w.g):
            fh.write(" ".join(str(w.values[x][y][z]) for x in range(w.g)) + "\n")


def read_tripartite(fh: TextIO, path: str = "<graph>") -> TripartiteGraph:
    lines = _data_lines(fh)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(path, 1, 1, "empty file") from None
    toks = _tokens(header)
    if len(toks) != 2 or toks[0][1] != "tripartite":
        raise ParseError(path, lineno, 1, "expected header 'tripartite N'")
    side = _int(path, lineno, toks[1][0], toks[1][1])
    families: dict[str, list] = {"XY": [], "YZ": [], "XZ": []}
    for lineno, line in lines:
        toks = _tokens(line)
        if len(toks) != 3 or toks[0][1] not in families:
            raise ParseError(path, lineno, toks[0][0] if toks else 1, "expected 'XY|YZ|XZ u v'")
        families[toks[0][1]].append(
            (_int(path, lineno, toks[1][0], toks[1][1]), _int(path, lineno, toks[2][0], toks[2][1]))
        )
    try:
        return TripartiteGraph(side, frozenset(families["XY"]), frozenset(families["YZ"]), frozenset(families["XZ"]))
    except ValueError as exc:
        raise ParseError(path, 1, 1, str(exc)) from None


def write_tripartite(fh: TextIO, graph: TripartiteGraph) -> None:
    fh.write(f"tripartite {graph.side}\n")
    for name, attr in (("XY", "xy"), ("YZ", "yz"), ("XZ", "xz")):
        for u, v in sorted(getattr(graph, attr)):
            fh.write(f"{name} {u} {v}\n")


def write_spectrum_csv(fh: TextIO, spec: Spectrum) -> None:
    writer = csv.writer(fh)
    writer.writerow(["d", "count"])
    for key, count in spec.rows():
        writer.writerow([key, count])


def write_sphere_set(fh: TextIO, s: SphereSet) -> None:
    write_residues(fh, s.members, s.params.length)
