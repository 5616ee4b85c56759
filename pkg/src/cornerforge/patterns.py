"""Point patterns, grid/group pair sets, and popular-difference spectra.

Two kinds of carrier set are supported:

* ``GridSet`` -- a subset of the integer grid ``[N]^k`` (coordinates 1..N),
  counted against translated dilates ``x + d*T`` of a fixed pattern ``T``.
* ``GroupSet`` -- a subset of ``G x G`` for a finite abelian group ``G``
  (``Z/N`` or a vector group ``F_p^n``), counted against corners
  ``(x,y), (x+d,y), (x,y+d)`` with group arithmetic (wraparound).

Both are stored as packed bit arrays (one Python int holds the whole set), so
a single pattern count is a handful of shifted ANDs followed by a popcount.
The spectrum over all admissible differences d is the statistic of interest:
its maximum entry is the best "popular difference" of the set.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

__all__ = [
    "Pattern",
    "GridSet",
    "Group",
    "GroupSet",
    "Spectrum",
    "count_pattern",
    "corner_count_group",
    "spectrum",
]


# ---------------------------------------------------------------------------
# bit-array helpers
# ---------------------------------------------------------------------------

# set bits of every byte value, used to decode packed masks without shifting
# a huge int once per member
_BYTE_BITS = tuple(tuple(i for i in range(8) if b >> i & 1) for b in range(256))


def _mask_from_flats(flats: Iterable[int], nbits: int) -> int:
    buf = bytearray((nbits + 7) // 8)
    for f in flats:
        buf[f >> 3] |= 1 << (f & 7)
    return int.from_bytes(buf, "little")


def _iter_flats(mask: int, nbits: int) -> Iterator[int]:
    data = mask.to_bytes((nbits + 7) // 8, "little")
    for byte_index, b in enumerate(data):
        if b:
            base = byte_index << 3
            for bit in _BYTE_BITS[b]:
                yield base + bit


def _replicate(unit: int, block: int, count: int) -> int:
    """`count` contiguous copies of `unit` at stride `block` bits.

    unit must fit in `block` bits.  Built by binary doubling: linear in the
    output size, which matters at grid sizes where a single multiply or
    divide on the full-width integer would dominate the whole count.
    """
    out = 0
    pos = 0
    piece, span = unit, block
    while count:
        if count & 1:
            out |= piece << pos
            pos += span
        count >>= 1
        if count:
            piece |= piece << span
            span *= 2
    return out


def _rotate_blocks(mask: int, nbits: int, block: int, amount: int) -> int:
    """Rotate every aligned `block`-bit window of `mask` down by `amount`.

    Bit ``p`` of the result equals bit ``start + (offset + amount) % block``
    of the input, where ``start = p - p % block``.  With block == nbits this
    is a plain cyclic rotation.
    """
    if amount == 0:
        return mask
    count = nbits // block
    keep = _replicate((1 << (block - amount)) - 1, block, count)
    wrap = _replicate(((1 << amount) - 1) << (block - amount), block, count)
    return ((mask >> amount) & keep) | ((mask << (block - amount)) & wrap)


def _box_mask(side: int, lo: tuple[int, ...], hi: tuple[int, ...]) -> int:
    """Bits of all 1-based points p with lo[j] <= p[j] <= hi[j] (x0 fastest)."""
    mask = ((1 << (hi[0] - lo[0] + 1)) - 1) << (lo[0] - 1)
    stride = side
    for j in range(1, len(lo)):
        # the dim-(j-1) mask occupies fewer than `stride` bits, so copies
        # placed at this stride never overlap
        mask = _replicate(mask, stride, hi[j] - lo[j] + 1) << ((lo[j] - 1) * stride)
        stride *= side
    return mask


# ---------------------------------------------------------------------------
# patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Pattern:
    """A finite list of distinct integer vectors; occurrences are x + d*T."""

    dim: int
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("pattern dimension must be positive")
        pts = tuple(tuple(int(c) for c in p) for p in self.points)
        if not pts:
            raise ValueError("pattern needs at least one point")
        if any(len(p) != self.dim for p in pts):
            raise ValueError("pattern point has wrong dimension")
        if len(set(pts)) != len(pts):
            raise ValueError("pattern points must be distinct")
        object.__setattr__(self, "points", pts)

    @staticmethod
    def corner(dim: int) -> "Pattern":
        """The (dim)-dimensional corner: origin plus one step per axis."""
        origin = (0,) * dim
        steps = tuple(tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim))
        return Pattern(dim, (origin,) + steps)

    @staticmethod
    def arithmetic(terms: int) -> "Pattern":
        """1-d progression pattern 0, 1, ..., terms-1."""
        return Pattern(1, tuple((i,) for i in range(terms)))

    @staticmethod
    def one_dim(offsets: Iterable[int]) -> "Pattern":
        return Pattern(1, tuple((int(o),) for o in offsets))

    def reflect(self, axis: int = 0) -> "Pattern":
        return Pattern(
            self.dim,
            tuple(tuple(-c if j == axis else c for j, c in enumerate(p)) for p in self.points),
        )


# ---------------------------------------------------------------------------
# grid sets
# ---------------------------------------------------------------------------


class GridSet:
    """Subset of [N]^k with 1-based coordinates, stored as a packed bit array.

    The flat index of a point p is sum_j (p_j - 1) * N^j (first coordinate
    fastest); conversion between 1-based tuples and flat bits happens only at
    this boundary.
    """

    __slots__ = ("dim", "side", "_mask")

    def __init__(self, dim: int, side: int, members: Iterable[tuple[int, ...]] = ()):
        if dim < 1 or side < 1:
            raise ValueError("dim and side must be positive")
        self.dim = dim
        self.side = side
        flats = []
        for p in members:
            p = tuple(int(c) for c in p)
            if len(p) != dim:
                raise ValueError(f"point {p} has wrong dimension (expected {dim})")
            if not all(1 <= c <= side for c in p):
                raise ValueError(f"point {p} outside [1, {side}]^{dim}")
            flats.append(self._flat(p))
        self._mask = _mask_from_flats(flats, side**dim)

    @classmethod
    def from_mask(cls, dim: int, side: int, mask: int) -> "GridSet":
        if mask < 0 or mask >> (side**dim):
            raise ValueError("mask has bits outside the grid")
        obj = cls.__new__(cls)
        obj.dim, obj.side, obj._mask = dim, side, mask
        return obj

    @classmethod
    def full(cls, dim: int, side: int) -> "GridSet":
        return cls.from_mask(dim, side, (1 << side**dim) - 1)

    @classmethod
    def empty(cls, dim: int, side: int) -> "GridSet":
        return cls.from_mask(dim, side, 0)

    @property
    def mask(self) -> int:
        return self._mask

    def _flat(self, p: tuple[int, ...]) -> int:
        f = 0
        for c in reversed(p):
            f = f * self.side + (c - 1)
        return f

    def _unflat(self, f: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.dim):
            f, r = divmod(f, self.side)
            out.append(r + 1)
        return tuple(out)

    def __contains__(self, p: tuple[int, ...]) -> bool:
        if len(p) != self.dim or not all(1 <= c <= self.side for c in p):
            return False
        return bool(self._mask >> self._flat(tuple(p)) & 1)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        for f in _iter_flats(self._mask, self.side**self.dim):
            yield self._unflat(f)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GridSet)
            and (self.dim, self.side, self._mask) == (other.dim, other.side, other._mask)
        )

    def __repr__(self) -> str:
        return f"GridSet(dim={self.dim}, side={self.side}, size={len(self)})"

    def reflect(self, axis: int = 0) -> "GridSet":
        """Negate one coordinate and translate back into range (p -> N+1-p)."""
        flats = []
        for p in self:
            q = tuple(self.side + 1 - c if j == axis else c for j, c in enumerate(p))
            flats.append(self._flat(q))
        return GridSet.from_mask(self.dim, self.side, _mask_from_flats(flats, self.side**self.dim))


def count_pattern(grid: GridSet, pattern: Pattern, d: int) -> int:
    """Number of anchors x in Z^k with x + d*t in the set for every t.

    The anchor itself need not be a member unless the zero vector is a
    pattern point.  Counting re-anchors at the first pattern point, so every
    contributing anchor image is inside the grid; one shifted AND per
    remaining point and a final box mask keep flat-index arithmetic exact.
    """
    if grid.dim != pattern.dim:
        raise ValueError(f"dimension mismatch: set {grid.dim}, pattern {pattern.dim}")
    if d == 0:
        raise ValueError("difference d must be nonzero")
    n, k = grid.side, grid.dim
    base = pattern.points[0]
    offsets = [tuple(t[j] - base[j] for j in range(k)) for t in pattern.points]
    lo = tuple(max(1, max(1 - d * u[j] for u in offsets)) for j in range(k))
    hi = tuple(min(n, min(n - d * u[j] for u in offsets)) for j in range(k))
    if any(lo[j] > hi[j] for j in range(k)):
        return 0
    strides = [n**j for j in range(k)]
    acc = grid.mask
    for u in offsets[1:]:
        o = d * sum(u[j] * strides[j] for j in range(k))
        acc &= grid.mask >> o if o >= 0 else grid.mask << -o
        if not acc:
            return 0
    acc &= _box_mask(n, lo, hi)
    return acc.bit_count()


# ---------------------------------------------------------------------------
# group pair sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Group:
    """Finite abelian group descriptor: Z/N or the vector group F_p^n."""

    kind: str  # "zN" | "fp"
    params: tuple[int, ...]

    @staticmethod
    def zmod(modulus: int) -> "Group":
        if modulus < 1:
            raise ValueError("modulus must be positive")
        return Group("zN", (modulus,))

    @staticmethod
    def vector(p: int, n: int) -> "Group":
        if p < 2 or n < 1:
            raise ValueError("need prime p >= 2 and exponent n >= 1")
        return Group("fp", (p, n))

    @property
    def order(self) -> int:
        if self.kind == "zN":
            return self.params[0]
        p, n = self.params
        return p**n

    @property
    def identity(self):
        return 0 if self.kind == "zN" else (0,) * self.params[1]

    def canon(self, e):
        if self.kind == "zN":
            return int(e) % self.params[0]
        p, n = self.params
        e = tuple(int(c) % p for c in e)
        if len(e) != n:
            raise ValueError(f"element {e} has wrong length (expected {n})")
        return e

    def add(self, a, b):
        if self.kind == "zN":
            return (a + b) % self.params[0]
        p = self.params[0]
        return tuple((x + y) % p for x, y in zip(a, b))

    def neg(self, a):
        if self.kind == "zN":
            return (-a) % self.params[0]
        p = self.params[0]
        return tuple((-x) % p for x in a)

    def index(self, e) -> int:
        if self.kind == "zN":
            return e
        p = self.params[0]
        idx = 0
        for c in reversed(e):
            idx = idx * p + c
        return idx

    def elements(self) -> Iterator:
        if self.kind == "zN":
            yield from range(self.params[0])
            return
        p, n = self.params
        for idx in range(p**n):
            out = []
            for _ in range(n):
                idx, r = divmod(idx, p)
                out.append(r)
            yield tuple(out)

    def format_element(self, e) -> str:
        return str(e) if self.kind == "zN" else ",".join(str(c) for c in e)

    def parse_element(self, text: str):
        if self.kind == "zN":
            return self.canon(int(text))
        return self.canon(tuple(int(t) for t in text.split(",")))

    def label(self) -> str:
        if self.kind == "zN":
            return f"zN {self.params[0]}"
        return f"fp {self.params[0]} {self.params[1]}"


class GroupSet:
    """Subset of G x G, stored as a packed bit array over |G|^2 positions.

    Flat index of (x, y) is index(x) * |G| + index(y), so adding d to the
    first coordinate is a whole-word rotation (or per-digit block rotation
    for vector groups), and adding d to the second is the same one level
    down.
    """

    __slots__ = ("group", "_mask")

    def __init__(self, group: Group, members: Iterable[tuple] = ()):
        self.group = group
        w = group.order
        flats = []
        for x, y in members:
            x, y = group.canon(x), group.canon(y)
            flats.append(group.index(x) * w + group.index(y))
        self._mask = _mask_from_flats(flats, w * w)

    @classmethod
    def from_mask(cls, group: Group, mask: int) -> "GroupSet":
        w = group.order
        if mask < 0 or mask >> (w * w):
            raise ValueError("mask has bits outside G x G")
        obj = cls.__new__(cls)
        obj.group, obj._mask = group, mask
        return obj

    @classmethod
    def full(cls, group: Group) -> "GroupSet":
        w = group.order
        return cls.from_mask(group, (1 << (w * w)) - 1)

    @property
    def mask(self) -> int:
        return self._mask

    def __contains__(self, pair) -> bool:
        x, y = pair
        g = self.group
        f = g.index(g.canon(x)) * g.order + g.index(g.canon(y))
        return bool(self._mask >> f & 1)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __iter__(self) -> Iterator[tuple]:
        g = self.group
        w = g.order
        elems = list(g.elements())
        for f in _iter_flats(self._mask, w * w):
            yield (elems[f // w], elems[f % w])

    def __repr__(self) -> str:
        return f"GroupSet({self.group.label()}, size={len(self)})"

    def translate(self, u, v) -> "GroupSet":
        g = self.group
        u, v = g.canon(u), g.canon(v)
        return GroupSet(g, ((g.add(x, u), g.add(y, v)) for x, y in self))


def _shift_first(gs: GroupSet, d) -> int:
    """Mask whose bit at (x, y) is the membership bit of (x + d, y)."""
    g = gs.group
    w = g.order
    nbits = w * w
    if g.kind == "zN":
        return _rotate_blocks(gs.mask, nbits, nbits, (d % w) * w)
    p, _ = g.params
    mask = gs.mask
    unit = w
    for dj in d:
        if dj:
            mask = _rotate_blocks(mask, nbits, unit * p, dj * unit)
        unit *= p
    return mask


def _shift_second(gs: GroupSet, d) -> int:
    """Mask whose bit at (x, y) is the membership bit of (x, y + d)."""
    g = gs.group
    w = g.order
    nbits = w * w
    if g.kind == "zN":
        return _rotate_blocks(gs.mask, nbits, w, d % w)
    p, _ = g.params
    mask = gs.mask
    unit = 1
    for dj in d:
        if dj:
            mask = _rotate_blocks(mask, nbits, unit * p, dj * unit)
        unit *= p
    return mask


def corner_count_group(pairs: GroupSet, d) -> int:
    """|{(x,y) : (x,y), (x+d,y), (x,y+d) all in the set}| with group arithmetic."""
    g = pairs.group
    d = g.canon(d)
    if d == g.identity:
        raise ValueError("difference d must not be the identity")
    acc = pairs.mask & _shift_first(pairs, d) & _shift_second(pairs, d)
    return acc.bit_count()


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------


@dataclass
class Spectrum:
    """Counts per admissible nonzero difference, plus the max-d statistic."""

    counts: dict = field(default_factory=dict)

    def max_entry(self):
        """(d, count) with the largest count; ties go to the earliest d."""
        if not self.counts:
            return None
        best_d = next(iter(self.counts))
        for d, c in self.counts.items():
            if c > self.counts[best_d]:
                best_d = d
        return best_d, self.counts[best_d]

    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> Iterator[tuple[str, int]]:
        for d, c in self.counts.items():
            key = ",".join(str(x) for x in d) if isinstance(d, tuple) else str(d)
            yield key, c


def spectrum(
    carrier: Union[GridSet, GroupSet],
    pattern: Optional[Pattern] = None,
    *,
    threads: Optional[int] = None,
) -> Spectrum:
    """Pattern counts for every admissible difference.

    Grid sets take |d| < N (both signs); group sets take every nonidentity d
    against the corner configuration (`pattern` must be omitted).  Evaluation
    order is canonical so results are reproducible; the thread pool only
    fans out independent per-d counts.
    """
    if isinstance(carrier, GridSet):
        if pattern is None:
            raise ValueError("grid spectra need an explicit pattern")
        ds = [s * m for m in range(1, carrier.side) for s in (1, -1)]
        fn = lambda d: count_pattern(carrier, pattern, d)
    else:
        if pattern is not None:
            raise ValueError("group spectra are corner spectra; omit the pattern")
        ds = [d for d in carrier.group.elements() if d != carrier.group.identity]
        fn = lambda d: corner_count_group(carrier, d)
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(fn, ds))
    else:
        values = [fn(d) for d in ds]
    return Spectrum(dict(zip(ds, values)))
