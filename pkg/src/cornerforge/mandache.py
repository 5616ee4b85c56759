"""Randomized pair sets sampled from a step kernel, with expectation reports.

Draw three independent uniform labels X_a, Y_a, Z_a in [0,1) for every group
element a, then include each pair (a, b) independently with probability
W(X_a, Y_b, Z_{-a-b}).  For any fixed nonzero d the normalized corner count
|S_d| / |G|^2 then has expectation exactly the weighted triforce integral of
W, and it concentrates around it; the report measures this across seeds.

Reproducibility (including across languages): every uniform label is the
first 8 bytes, big-endian, of SHA-256 over a key string, taken as a 64-bit
fixed-point fraction u / 2^64.  Key strings are

    "<seed>|X|<element>"   "<seed>|Y|<element>"   "<seed>|Z|<element>"

for the per-element labels and "<seed>|INC|<a>|<b>" for the per-pair
inclusion coin, where elements print as decimal residues (Z/N) or
comma-joined digit vectors (F_p^n).  A pair is included when its coin
fraction is strictly below the kernel value, compared in exact integer
arithmetic (u * denominator < numerator * 2^64).
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .hypergraph import StepKernel, triforce_weighted
from .patterns import Group, GroupSet, corner_count_group

__all__ = ["sample_mandache", "mandache_report", "MandacheReport", "kernel_fingerprint"]

_SCALE = 1 << 64


def _u64(key: str) -> int:
    return int.from_bytes(hashlib.sha256(key.encode()).digest()[:8], "big")


def _cell(u: int, g: int) -> int:
    return u * g >> 64


def kernel_fingerprint(w: StepKernel) -> str:
    text = f"{w.g}\n" + "\n".join(
        str(w.values[x][y][z]) for z in range(w.g) for y in range(w.g) for x in range(w.g)
    )
    return hashlib.sha256(text.encode()).hexdigest()


def sample_mandache(w: StepKernel, group: Group, seed: int) -> GroupSet:
    """One draw of the random pair set; bit-identical for identical seeds."""
    g = w.g
    labels = {}
    for e in group.elements():
        name = group.format_element(e)
        labels[e] = (
            _cell(_u64(f"{seed}|X|{name}"), g),
            _cell(_u64(f"{seed}|Y|{name}"), g),
            _cell(_u64(f"{seed}|Z|{name}"), g),
        )
    members = []
    elements = list(group.elements())
    for a in elements:
        name_a = group.format_element(a)
        cx = labels[a][0]
        for b in elements:
            cz = labels[group.neg(group.add(a, b))][2]
            cy = labels[b][1]
            prob = w.values[cx][cy][cz]
            if prob == 1:
                members.append((a, b))
                continue
            if prob == 0:
                continue
            coin = _u64(f"{seed}|INC|{name_a}|{group.format_element(b)}")
            if coin * prob.denominator < prob.numerator * _SCALE:
                members.append((a, b))
    return GroupSet(group, members)


@dataclass
class MandacheReport:
    """Min/max/mean normalized corner counts per seed, against the exact
    kernel triforce value."""

    group: str
    kernel_hash: str
    seeds: tuple[int, ...]
    triforce_value: Fraction
    per_seed: list  # dicts: seed, min_d, max_d, mean (Fractions; None when |G| = 1)

    def grand_mean(self) -> Optional[Fraction]:
        means = [row["mean"] for row in self.per_seed if row["mean"] is not None]
        if not means:
            return None
        return sum(means, Fraction(0)) / len(means)

    def sample_std(self) -> Optional[float]:
        means = [float(row["mean"]) for row in self.per_seed if row["mean"] is not None]
        if len(means) < 2:
            return None
        mu = sum(means) / len(means)
        return math.sqrt(sum((v - mu) ** 2 for v in means) / (len(means) - 1))

    def standard_error(self) -> Optional[float]:
        std = self.sample_std()
        count = sum(1 for row in self.per_seed if row["mean"] is not None)
        return None if std is None else std / math.sqrt(count)

    def to_json(self) -> str:
        return json.dumps(
            {
                "group": self.group,
                "kernel_hash": self.kernel_hash,
                "seeds": list(self.seeds),
                "triforce_value": str(self.triforce_value),
                "triforce_value_float": float(self.triforce_value),
                "grand_mean": None if self.grand_mean() is None else float(self.grand_mean()),
                "sample_std": self.sample_std(),
                "per_seed": [
                    {
                        "seed": row["seed"],
                        "min_d": None if row["min"] is None else float(row["min"]),
                        "max_d": None if row["max"] is None else float(row["max"]),
                        "mean": None if row["mean"] is None else float(row["mean"]),
                    }
                    for row in self.per_seed
                ],
            },
            indent=2,
        )


def mandache_report(w: StepKernel, group: Group, seeds: Sequence[int]) -> MandacheReport:
    """Sample once per seed and summarize |S_d|/|G|^2 over all nonzero d."""
    seeds = tuple(int(s) for s in seeds)
    if len(seeds) < 2:
        raise ValueError("need at least 2 seeds for a spread estimate")
    order = group.order
    norm = Fraction(1, order * order)
    rows = []
    for seed in seeds:
        pairs = sample_mandache(w, group, seed)
        counts = [
            corner_count_group(pairs, d)
            for d in group.elements()
            if d != group.identity
        ]
        if not counts:  # trivial group: only d = 0 exists
            rows.append({"seed": seed, "min": None, "max": None, "mean": None})
            continue
        rows.append(
            {
                "seed": seed,
                "min": min(counts) * norm,
                "max": max(counts) * norm,
                "mean": Fraction(sum(counts), len(counts)) * norm,
            }
        )
    return MandacheReport(
        group=group.label(),
        kernel_hash=kernel_fingerprint(w),
        seeds=seeds,
        triforce_value=triforce_weighted(w),
        per_seed=rows,
    )
