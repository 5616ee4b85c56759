"""Sets avoiding popular differences: 3-d corners, 5-point patterns, lifts.

The recipe shared by both headline constructions:

1. a solution-free set Lambda in {0..L-1} (sum-free or QC-free, from the
   digit-sphere builders) marks a union B of short intervals on the circle,
   one interval of length 1/(Theta1^2 L) at each j/(Theta1 L);
2. an irrational alpha with rough convergent denominators supplies the
   modulus: N is a denominator q, and membership of a point is decided by
   whether alpha times its quadratic statistic lands in B (mod 1);
3. any pattern occurrence forces four (or five) values of the statistic
   into B while an exact linear identity ties them together, which pins all
   of them into a single interval and makes the difference's fractional
   rotation tiny -- so few residues can host occurrences at all.

Membership is never decided by a float: every fractional-part test runs on
an exact rational enclosure of alpha and deepens the enclosure (later
convergents) whenever the verdict would straddle an interval endpoint.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .behrend import QCSystem, behrend_qc_free, behrend_sum_free, qc_coefficients
from .contfrac import AlphaSequence, build_alpha_hard, verify_alpha
from .patterns import GridSet, Pattern

__all__ = [
    "f_quad",
    "IntervalSystem",
    "AvoiderParams",
    "CornerAvoider",
    "FivePointAvoider",
    "build_corner_avoider",
    "build_five_point_avoider",
    "check_corner_transfer",
    "check_five_point_transfer",
    "theta_constants",
    "lift_avoider",
    "load_avoider",
    "pattern_projection",
    "norm_to_nearest_int",
    "verify_corner_avoidance",
    "AvoidanceReport",
]

MATERIALIZE_CAP = 2000  # hard per-axis cap; memory limits practical sizes well below


def f_quad(x: int, y: int, z: int) -> int:
    """The corner statistic (x - y)(x + y - 2z).

    Satisfies f(x+d,y,z) + f(x,y+d,z) + f(x,y,z+d) = 3 f(x,y,z) for all
    integers, which is what transfers corner occurrences into the
    solution-free structure of Lambda.
    """
    return (x - y) * (x + y - 2 * z)


def norm_to_nearest_int(x: Fraction) -> Fraction:
    """Distance from a rational to the nearest integer."""
    f = x - math.floor(x)
    return min(f, 1 - f)


# ---------------------------------------------------------------------------
# interval systems on the circle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntervalSystem:
    """Union B of intervals [j/(T1*L), j/(T1*L) + 1/(T1^2*L)) for j in Lambda.

    T1 is 3 for the corner construction and 4*max|gamma| for the QC one.
    Intervals are closed-left open-right and pairwise disjoint; the total
    measure is |Lambda| / (T1^2 L).
    """

    length: int
    theta1: int
    lam: frozenset

    def __post_init__(self) -> None:
        if self.length < 1 or self.theta1 < 2:
            raise ValueError("need L >= 1 and Theta1 >= 2")
        lam = frozenset(int(j) for j in self.lam)
        if any(not 0 <= j < self.length for j in lam):
            raise ValueError("interval indices must lie in {0..L-1}")
        object.__setattr__(self, "lam", lam)

    @property
    def slot_width(self) -> Fraction:
        return Fraction(1, self.theta1 * self.length)

    @property
    def interval_width(self) -> Fraction:
        return Fraction(1, self.theta1**2 * self.length)

    def measure(self) -> Fraction:
        return len(self.lam) * self.interval_width

    def contains_fraction(self, value: Fraction) -> bool:
        """Exact membership of a rational point (mod 1) in B."""
        f = value - math.floor(value)
        slot = math.floor(f / self.slot_width)
        return slot in self.lam and f - slot * self.slot_width < self.interval_width

    def contains_multiple(self, alpha: AlphaSequence, n: int, *, depth: Optional[int] = None) -> bool:
        """Exact membership of frac(n * alpha) in B.

        Uses one convergent p/q deep enough that |n*alpha - n*p/q| is below
        an eighth of the scale unit; the scaled position n*p mod q is then
        an integer whose distance to every interval boundary is either zero
        (deepen: the boundary is rational, n*alpha is not, so this resolves)
        or at least a full unit, which decides membership in pure integer
        arithmetic.
        """
        if n == 0:
            return self.contains_fraction(Fraction(0))
        scale = self.theta1**2 * self.length
        level = depth if depth is not None else self._default_depth(abs(n), alpha)
        for _ in range(200):
            p, q = alpha.convergent(level)
            q_next = alpha.convergent(level + 1)[1]
            if q_next <= 8 * abs(n) * scale:
                level += 1
                continue
            t = n * p % q
            pos = t * scale  # circle scaled to q * theta1^2 * L units
            unit = self.theta1 * q  # slot width in scaled units
            off = pos % unit
            if off == 0 or off == q:  # sitting on a slot start / interval end
                level += 1
                continue
            return (pos // unit) in self.lam and off < q
        raise ArithmeticError("enclosure failed to separate from an interval boundary")

    def _default_depth(self, magnitude: int, alpha: AlphaSequence) -> int:
        target = 8 * magnitude * self.theta1**2 * self.length
        level = 1
        while alpha.convergent(level + 1)[1] <= target:
            level += 1
        return level

    def decide_values(self, alpha: AlphaSequence, values: Iterable[int]) -> dict[int, bool]:
        """Batch membership of frac(v * alpha) for many integers v."""
        values = list(values)
        if not values:
            return {}
        depth = self._default_depth(max(1, max(abs(v) for v in values)), alpha)
        return {v: self.contains_multiple(alpha, v, depth=depth) for v in values}


# ---------------------------------------------------------------------------
# constructed avoiders
# ---------------------------------------------------------------------------


@dataclass
class AvoiderParams:
    """Everything needed to reproduce a constructed set bit-exactly."""

    delta: float
    c: float
    length: int  # L
    form: str  # "corner3d" | "x2"
    theta: tuple[int, int, int]  # (Theta1, Theta2, Theta3); (3, 0, 0) for corners
    lam: tuple[int, ...]
    j: int  # scale exponent: r = 2^j
    i: int  # approximant index within the alpha sequence
    p: int
    q: int
    side: int  # N = q
    a_vector: Optional[tuple[int, ...]] = None  # 5-point case only

    def target_density(self) -> Fraction:
        return Fraction(len(self.lam), self.theta[0] ** 2 * self.length)

    def to_json(self, alpha: AlphaSequence) -> str:
        return json.dumps(
            {
                "delta": self.delta,
                "c": self.c,
                "L": self.length,
                "form": self.form,
                "theta": list(self.theta),
                "lambda_size": len(self.lam),
                "lambda": list(self.lam),
                "j": self.j,
                "i": self.i,
                "p": self.p,
                "q": self.q,
                "N": self.side,
                "a": list(self.a_vector) if self.a_vector else None,
                "alpha": json.loads(alpha.to_json()),
            }
        )


class _AvoiderBase:
    """Shared plumbing: membership through the interval system, density
    reporting, optional materialization."""

    def __init__(self, system: IntervalSystem, alpha: AlphaSequence, params: AvoiderParams):
        self.system = system
        self.alpha = alpha
        self.params = params
        self.side = params.side
        self._grid: Optional[GridSet] = None

    def statistic(self, point) -> int:
        raise NotImplementedError

    def __contains__(self, point) -> bool:
        return self.system.contains_multiple(self.alpha, self.statistic(point))

    def density_report(self) -> dict:
        target = self.params.target_density()
        measured = None
        if self._grid is not None:
            measured = Fraction(len(self._grid), self.side ** self._grid.dim)
        return {
            "target": target,
            "target_float": float(target),
            "measured": measured,
            "measured_float": None if measured is None else float(measured),
            "delta_requested": self.params.delta,
        }

    def density_estimate(self, samples: int, seed: int = 0) -> tuple[float, float]:
        """Monte Carlo density estimate (each membership test itself exact);
        returns (estimate, standard error)."""
        import random

        rng = random.Random(seed)
        dim = 3 if self.params.form == "corner3d" else 1
        hits = 0
        for _ in range(samples):
            point = tuple(rng.randint(1, self.side) for _ in range(dim))
            hits += point in self
        p = hits / samples
        return p, math.sqrt(max(p * (1 - p), 1e-12) / samples)


class CornerAvoider(_AvoiderBase):
    """A subset of [N]^3 whose corner counts stay small for every nonzero d."""

    def __init__(self, system: IntervalSystem, alpha: AlphaSequence, params: AvoiderParams):
        super().__init__(system, alpha, params)
        self._bool_cube: Optional[np.ndarray] = None

    def statistic(self, point) -> int:
        x, y, z = point
        return f_quad(x, y, z)

    def materialize(self) -> GridSet:
        """Enumerate membership over the whole cube with one exact interval
        decision per attained statistic value."""
        if self._grid is not None:
            return self._grid
        n = self.side
        if n > MATERIALIZE_CAP:
            raise ValueError(f"refusing to materialize side {n} > {MATERIALIZE_CAP}")
        if n**3 > 400_000_000:
            raise ValueError(f"side {n} needs {n ** 3} cells; use the membership predicate")
        vmax = f_quad(n, 1, 1)  # largest attainable |statistic|
        table_vals = range(-vmax, vmax + 1)
        decisions = self.system.decide_values(self.alpha, table_vals)
        lookup = np.zeros(2 * vmax + 1, dtype=bool)
        for v, ok in decisions.items():
            lookup[v + vmax] = ok
        coords = np.arange(1, n + 1, dtype=np.int64)
        xs = coords[None, :]  # x varies fastest
        ys = coords[:, None]
        planes = []
        for z in range(1, n + 1):
            stat = (xs - ys) * (xs + ys - 2 * z)
            planes.append(lookup[stat + vmax])
        cube = np.stack(planes)  # [z, y, x]; ravel(C) puts x fastest
        bits = np.packbits(cube.reshape(-1), bitorder="little")
        self._grid = GridSet.from_mask(3, n, int.from_bytes(bits.tobytes(), "little"))
        self._bool_cube = cube
        return self._grid

    def as_bool_cube(self) -> np.ndarray:
        if self._bool_cube is None:
            if self._grid is not None:
                self._bool_cube = _cube_from_grid(self._grid)
            else:
                self.materialize()
        return self._bool_cube

    def attach_grid(self, grid: GridSet) -> None:
        """Adopt an externally loaded materialization (for verification runs)."""
        if grid.dim != 3 or grid.side != self.side:
            raise ValueError(f"expected a side-{self.side} cube, got {grid!r}")
        self._grid = grid
        self._bool_cube = None


def _cube_from_grid(grid: GridSet) -> np.ndarray:
    n = grid.side
    raw = grid.mask.to_bytes((n**3 + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return bits[: n**3].reshape(n, n, n).astype(bool)  # [z, y, x]


class FivePointAvoider(_AvoiderBase):
    """A subset of [N] avoiding popular translates x + a_i * d of a fixed
    five-point pattern; membership keys on frac(alpha * x^2)."""

    def statistic(self, point) -> int:
        (x,) = point if isinstance(point, tuple) else (point,)
        return x * x

    def materialize(self) -> GridSet:
        if self._grid is not None:
            return self._grid
        n = self.side
        if n > 4_000_000:
            raise ValueError("side too large to materialize")
        decisions = self.system.decide_values(self.alpha, [x * x for x in range(1, n + 1)])
        members = [(x,) for x in range(1, n + 1) if decisions[x * x]]
        self._grid = GridSet(1, n, members)
        return self._grid


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

DEFAULT_C = 0.1  # keeps L desk-sized; the asymptotic statement tunes c to delta


def load_avoider(params_json: str, grid: Optional[GridSet] = None):
    """Rebuild a constructed avoider from its parameter record, optionally
    adopting an already-materialized set."""
    obj = json.loads(params_json)
    alpha = AlphaSequence.from_json(json.dumps(obj["alpha"]))
    params = AvoiderParams(
        delta=obj["delta"],
        c=obj["c"],
        length=obj["L"],
        form=obj["form"],
        theta=tuple(obj["theta"]),
        lam=tuple(obj["lambda"]),
        j=obj["j"],
        i=obj["i"],
        p=obj["p"],
        q=obj["q"],
        side=obj["N"],
        a_vector=tuple(obj["a"]) if obj.get("a") else None,
    )
    system = IntervalSystem(params.length, params.theta[0], frozenset(params.lam))
    avoider = (
        CornerAvoider(system, alpha, params)
        if params.form == "corner3d"
        else FivePointAvoider(system, alpha, params)
    )
    if grid is not None:
        if params.form == "corner3d":
            avoider.attach_grid(grid)
        else:
            if grid.dim != 1 or grid.side != params.side:
                raise ValueError(f"expected a side-{params.side} 1-d set, got {grid!r}")
            avoider._grid = grid
    return avoider


def _length_from(delta: float, c: float) -> int:
    return max(1, math.ceil(math.exp(c * math.log(1 / delta) ** 2)))


def _select_approximant(
    length: int,
    q_max: int,
    q_min: int = 2,
    alpha_builder=build_alpha_hard,
) -> tuple[AlphaSequence, int, int]:
    """Scan scales r = 2^j, j = 1..2L+1, for the largest verified denominator
    q in [q_min, q_max]; returns (sequence, j, i).

    Every candidate is re-verified (smoothness, growth interval, and the
    1/(L q^2) approximation bound) rather than trusted.
    """
    best = None
    for j in range(1, 2 * length + 2):
        seq = alpha_builder(length, Fraction(2) ** j)
        i = seq.start_index
        while True:
            _, q = seq.p_q(i)
            if q > q_max:
                break
            if q >= q_min and verify_alpha(seq, i).passed:
                if best is None or q > best[3]:
                    best = (seq, j, i, q)
            i += 1
    if best is None:
        raise ValueError(
            f"no verified denominator in [{q_min}, {q_max}] for L={length}; widen the range"
        )
    return best[0], best[1], best[2]


def build_corner_avoider(
    delta: float,
    c: float = DEFAULT_C,
    *,
    length: Optional[int] = None,
    q_max: int = 600,
    q_min: int = 2,
    n_target: Optional[int] = None,
    alpha_builder=build_alpha_hard,
    materialize: bool = True,
) -> CornerAvoider:
    """Build the corner-avoiding subset of [N]^3.

    L defaults to ceil(exp(c * ln(1/delta)^2)) but may be pinned directly
    with `length`.  The modulus N is chosen as the largest verified
    denominator at most q_max (or within a factor of 4 of n_target).  The
    achieved density is reported against the target |Lambda| / (9 L); at
    desk scales it may fall short of 2*delta, which is reported, not fatal.
    """
    if not 0 < delta < 0.5:
        raise ValueError("need 0 < delta < 1/2")
    length = length or _length_from(delta, c)
    lam = behrend_sum_free(length)
    system = IntervalSystem(length, 3, frozenset(lam.members))
    if n_target is not None:
        q_min, q_max = max(2, n_target // 4), n_target * 4
    seq, j, i = _select_approximant(length, q_max, q_min, alpha_builder)
    p, q = seq.p_q(i)
    params = AvoiderParams(
        delta=delta,
        c=c,
        length=length,
        form="corner3d",
        theta=(3, 0, 0),
        lam=tuple(sorted(lam.members)),
        j=j,
        i=i,
        p=p,
        q=q,
        side=q,
    )
    avoider = CornerAvoider(system, seq, params)
    if materialize and q <= MATERIALIZE_CAP:
        avoider.materialize()
    return avoider


def theta_constants(a: Sequence[int], sys: QCSystem) -> tuple[int, int, int]:
    """Constants of the five-point transfer bound.

    Theta1 = 4 max|gamma| sizes the intervals; Theta2 = |2(a1-a2)(a2-a3)(a3-a1)|
    is the coefficient of n*d in the three-square identity; Theta3 =
    ceil(3 max(a1..a3)^2 / Theta1^2) absorbs the interval error terms.
    """
    a = tuple(int(v) for v in a)
    theta1 = 4 * max(abs(g) for row in sys.gamma for g in row)
    theta2 = abs(2 * (a[0] - a[1]) * (a[1] - a[2]) * (a[2] - a[0]))
    theta3 = math.ceil(Fraction(3 * max(abs(v) for v in a[:3]) ** 2, theta1**2))
    return theta1, theta2, theta3


def build_five_point_avoider(
    a: Sequence[int],
    delta: float,
    c: float = DEFAULT_C,
    *,
    length: Optional[int] = None,
    q_max: int = 5000,
    q_min: int = 2,
    n_target: Optional[int] = None,
    alpha_builder=build_alpha_hard,
    materialize: bool = True,
) -> FivePointAvoider:
    """Build the subset of [N] avoiding popular differences of the pattern
    x + a_i * d for five fixed distinct integers a_i."""
    a = tuple(int(v) for v in a)
    if not 0 < delta < 0.5:
        raise ValueError("need 0 < delta < 1/2")
    length = length or _length_from(delta, c)
    lam = behrend_qc_free(a, length)
    sys = qc_coefficients(a)
    theta = theta_constants(a, sys)
    system = IntervalSystem(length, theta[0], frozenset(lam.members))
    if n_target is not None:
        q_min, q_max = max(2, n_target // 4), n_target * 4
    seq, j, i = _select_approximant(length, q_max, q_min, alpha_builder)
    p, q = seq.p_q(i)
    params = AvoiderParams(
        delta=delta,
        c=c,
        length=length,
        form="x2",
        theta=theta,
        lam=tuple(sorted(lam.members)),
        j=j,
        i=i,
        p=p,
        q=q,
        side=q,
        a_vector=a,
    )
    avoider = FivePointAvoider(system, seq, params)
    if materialize:
        avoider.materialize()
    return avoider


# ---------------------------------------------------------------------------
# transfer checks
# ---------------------------------------------------------------------------


def _norm_of_multiple(alpha: Union[AlphaSequence, Fraction], value: int, bound: Fraction) -> bool:
    """Whether the circle norm of value * alpha is strictly below `bound`,
    decided exactly (deepening convergents for irrational alpha).

    The norm is 1-Lipschitz on the circle, so with t = value * p mod q the
    true norm lies within 1/(8q) of min(t, q - t)/q once the next
    denominator exceeds 8|value|; the comparison against the rational bound
    is then settled in integers unless the margin straddles it, which
    deepening resolves (value * alpha is irrational, the bound is not).
    """
    if isinstance(alpha, Fraction):
        return norm_to_nearest_int(value * alpha) < bound
    if value == 0:
        return Fraction(0) < bound
    level = 1
    for _ in range(200):
        p, q = alpha.convergent(level)
        q_next = alpha.convergent(level + 1)[1]
        if q_next <= 8 * abs(value):
            level += 1
            continue
        t = value * p % q
        m = min(t, q - t)
        # true norm in ((8m - 1)/(8q), (8m + 1)/(8q))
        if (8 * m + 1) * bound.denominator <= 8 * bound.numerator * q:
            return True
        if (8 * m - 1) * bound.denominator >= 8 * bound.numerator * q:
            return False
        level += 1
    raise ArithmeticError("enclosure failed to decide the norm bound")


def check_corner_transfer(
    system: IntervalSystem,
    alpha: Union[AlphaSequence, Fraction],
    anchor: tuple[int, int, int],
    d: int,
) -> bool:
    """Verify the corner transfer conclusion for one occurrence.

    Preconditions (checked): the four statistic values of the corner at
    `anchor` with difference `d` all land in B mod 1.  Then the norm of
    2 * alpha * (n1 - n2) * d must be below 1/(9L); a False return would
    falsify the implementation, not the underlying argument.
    """
    n1, n2, n3 = anchor
    vals = [
        f_quad(n1, n2, n3),
        f_quad(n1 + d, n2, n3),
        f_quad(n1, n2 + d, n3),
        f_quad(n1, n2, n3 + d),
    ]
    for v in vals:
        inside = (
            system.contains_fraction(v * alpha)
            if isinstance(alpha, Fraction)
            else system.contains_multiple(alpha, v)
        )
        if not inside:
            raise ValueError(f"precondition failed: statistic {v} is not in B")
    bound = Fraction(1, 9 * system.length)
    return _norm_of_multiple(alpha, 2 * (n1 - n2) * d, bound)


def check_five_point_transfer(
    system: IntervalSystem,
    alpha: Union[AlphaSequence, Fraction],
    a: Sequence[int],
    anchor: int,
    d: int,
) -> bool:
    """Verify the five-point transfer conclusion for one occurrence.

    Preconditions (checked): alpha * (anchor + a_i * d)^2 lands in B mod 1
    for all five i.  Then the norm of Theta2 * alpha * anchor * d must fall
    below Theta3 / L.
    """
    a = tuple(int(v) for v in a)
    sys = qc_coefficients(a)
    theta1, theta2, theta3 = theta_constants(a, sys)
    if theta1 != system.theta1:
        raise ValueError("interval system was built for a different pattern")
    for ai in a:
        v = (anchor + ai * d) ** 2
        inside = (
            system.contains_fraction(v * alpha)
            if isinstance(alpha, Fraction)
            else system.contains_multiple(alpha, v)
        )
        if not inside:
            raise ValueError(f"precondition failed: statistic {v} is not in B")
    return _norm_of_multiple(alpha, theta2 * anchor * d, Fraction(theta3, system.length))


@dataclass
class AvoidanceReport:
    """Per-difference corner counts with the proof-chain checks."""

    side: int
    length: int
    rows: list  # (d, count, bound, count <= bound, transfer_ok, rational_ok)

    def all_ok(self) -> bool:
        return all(r[3] and r[4] and r[5] for r in self.rows)

    def max_count(self) -> tuple[int, int]:
        best = max(self.rows, key=lambda r: (r[1], -abs(r[0])))
        return best[0], best[1]

    def write_csv(self, fh) -> None:
        import csv

        writer = csv.writer(fh)
        writer.writerow(["d", "count", "bound", "pass"])
        for d, count, bound, ok_count, ok_transfer, ok_rational in self.rows:
            writer.writerow([d, count, bound, int(ok_count and ok_transfer and ok_rational)])


def verify_corner_avoidance(avoider: CornerAvoider, *, d_values: Optional[Iterable[int]] = None) -> AvoidanceReport:
    """Enumerate corners of the materialized set for every difference and
    check the complete proof chain on each occurrence family.

    For each d, every distinct first-coordinate difference n1 - n2 among
    corner anchors is checked against the transfer bound (norm of
    2*alpha*(n1-n2)*d below 1/(9L)) and its rational shadow (norm of
    2*(n1-n2)*d*p/q at most 3/L).  The per-d count is compared with the
    14 N^3 / L ceiling.
    """
    cube = avoider.as_bool_cube()  # [z, y, x]
    n = avoider.side
    length = avoider.params.length
    p, q = avoider.params.p, avoider.params.q
    ds = list(d_values) if d_values is not None else [s * m for m in range(1, n) for s in (1, -1)]
    transfer_cache: dict[int, bool] = {}
    rational_cache: dict[int, bool] = {}
    alpha = avoider.alpha
    bound_transfer = Fraction(1, 9 * length)
    bound_rational = Fraction(3, length)
    rows = []
    ceiling = Fraction(14 * n**3, length)
    for d in ds:
        a = abs(d)
        if d > 0:
            anchor = cube[: n - a, : n - a, : n - a]
            sx = cube[: n - a, : n - a, a:]
            sy = cube[: n - a, a:, : n - a]
            sz = cube[a:, : n - a, : n - a]
        else:
            anchor = cube[a:, a:, a:]
            sx = cube[a:, a:, : n - a]
            sy = cube[a:, : n - a, a:]
            sz = cube[: n - a, a:, a:]
        hits = anchor & sx & sy & sz
        count = int(hits.sum())
        ok_transfer = ok_rational = True
        if count:
            present = hits.any(axis=0)  # collapse z; axes now [y, x]
            ys, xs = np.nonzero(present)
            for diff in np.unique(xs - ys):  # n1 - n2 is x-index minus y-index
                v = 2 * int(diff) * d
                if v not in transfer_cache:
                    transfer_cache[v] = _norm_of_multiple(alpha, v, bound_transfer)
                    rational_cache[v] = norm_to_nearest_int(Fraction(v * p, q)) <= bound_rational
                ok_transfer &= transfer_cache[v]
                ok_rational &= rational_cache[v]
        rows.append((d, count, ceiling, Fraction(count) <= ceiling, ok_transfer, ok_rational))
    return AvoidanceReport(n, length, rows)


# ---------------------------------------------------------------------------
# lifting to general patterns
# ---------------------------------------------------------------------------


def pattern_projection(pattern: Pattern) -> tuple[int, tuple[int, ...], Pattern]:
    """Base C and the projected five integers for the digit map
    phi(x) = sum C^i x_i.

    C exceeds the total coordinate magnitude of all pattern points, so phi
    is injective on the pattern and linear in dilates: phi(x + d t) =
    phi(x) + d phi(t).
    """
    if len(pattern.points) < 5:
        raise ValueError("projection route needs at least 5 points")
    five = tuple(sorted(pattern.points))[:5]
    c = 1 + sum(abs(coord) for pt in pattern.points for coord in pt)
    phi = tuple(sum(c ** (i + 1) * pt[i] for i in range(pattern.dim)) for pt in five)
    if len(set(phi)) != 5:
        raise ArithmeticError("projection collapsed pattern points")
    return c, phi, Pattern(pattern.dim, five)


def _affine_rank(points: Sequence[tuple[int, ...]]) -> int:
    if len(points) < 2:
        return 0
    base = points[0]
    rows = [[Fraction(p[j] - base[j]) for j in range(len(base))] for p in points[1:]]
    rank = 0
    cols = len(base)
    pivot_col = 0
    for row_idx in range(len(rows)):
        while pivot_col < cols:
            pivot = next((r for r in range(rank, len(rows)) if rows[r][pivot_col]), None)
            if pivot is None:
                pivot_col += 1
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            lead = rows[rank][pivot_col]
            for r in range(len(rows)):
                if r != rank and rows[r][pivot_col]:
                    factor = rows[r][pivot_col] / lead
                    rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
            rank += 1
            pivot_col += 1
            break
    return rank


def _linear_rank(vectors: Sequence[tuple[int, ...]]) -> int:
    return _affine_rank([(0,) * len(vectors[0])] + [tuple(v) for v in vectors])


def lift_avoider(pattern: Pattern, base: GridSet) -> GridSet:
    """Lift a lower-dimensional avoider to a set dodging `pattern`.

    With a 1-d base (five-point route): members are the points of [N]^k
    whose digit projection phi lands in the base set; N is the largest side
    whose phi image fits.  With a 3-d base (corner route): pad to
    base x [N]^(k-3) when the pattern contains the corner {0, e1, e2, e3},
    else push the padded set through an injective integer map sending the
    first three axes to a spanning triple of pattern differences.

    Occurrences of the pattern in the lifted set map to occurrences in the
    base (both maps are linear, so they commute with dilation), which is how
    the base's avoidance carries over.
    """
    k = pattern.dim
    if base.dim == 1:
        c, _, _ = pattern_projection(pattern)
        weight = sum(c ** (i + 1) for i in range(k))
        side = base.side // weight
        if side < 1:
            raise ValueError("base side too small for even one lifted layer")
        members = []
        for point in itertools.product(range(1, side + 1), repeat=k):
            value = sum(c ** (i + 1) * point[i] for i in range(k))
            if (value,) in base:
                members.append(point)
        return GridSet(k, side, members)
    if base.dim != 3:
        raise ValueError("lifting expects a 1-d or 3-d base set")
    if _affine_rank(pattern.points) < 3:
        if len(pattern.points) >= 5:
            raise ValueError("use a 1-d base for a 5-point pattern of low affine dimension")
        raise ValueError("pattern has fewer than 5 points and affine dimension below 3")
    if k < 3:
        raise ValueError("affine dimension 3 needs at least 3 ambient dimensions")
    n = base.side
    padded = set()
    for pt in base:
        for rest in itertools.product(range(1, n + 1), repeat=k - 3):
            padded.add(pt + rest)
    corner3 = {(0,) * k} | {tuple(1 if j == i else 0 for j in range(k)) for i in range(3)}
    if set(pattern.points) >= corner3:
        return GridSet(k, n, padded)
    # general position: send the first three axes to a spanning triple of
    # pattern differences, completed to a full-rank integer map
    columns: Optional[list[tuple[int, ...]]] = None
    for combo in itertools.combinations(pattern.points, 4):
        if _affine_rank(combo) == 3:
            columns = [
                tuple(combo[i + 1][j] - combo[0][j] for j in range(k)) for i in range(3)
            ]
            break
    if columns is None:
        raise ValueError("no spanning quadruple found")
    for axis in range(k):
        if len(columns) == k:
            break
        unit = tuple(1 if j == axis else 0 for j in range(k))
        if _linear_rank(columns + [unit]) == len(columns) + 1:
            columns.append(unit)
    if len(columns) != k:
        raise ArithmeticError("failed to complete the difference triple to a basis")
    images = [
        tuple(sum(columns[c][r] * point[c] for c in range(k)) for r in range(k))
        for point in padded
    ]
    lows = [min(img[r] for img in images) for r in range(k)]
    highs = [max(img[r] for img in images) for r in range(k)]
    side = max(h - l + 1 for h, l in zip(highs, lows))
    shifted = [tuple(img[r] - lows[r] + 1 for r in range(k)) for img in images]
    return GridSet(k, side, shifted)
