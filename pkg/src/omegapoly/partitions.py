"""Brute-force enumeration of restricted colored b-ary partitions.

A partition assigns to each pair (color ``l``, power ``j``) a multiplicity
``m`` with ``1 <= m <= lambda_l``: the part ``b**j`` occurs ``m`` times in
color ``l``.  This module is the ground truth the polynomial engines are
checked against, so it deliberately knows nothing about polynomials.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .poly import PartitionSpec


@dataclass(frozen=True)
class ColoredPartition:
    spec: PartitionSpec
    # ((color, power), multiplicity), sorted, multiplicities positive
    parts: tuple[tuple[tuple[int, int], int], ...] = ()

    def __post_init__(self) -> None:
        for (color, power), m in self.parts:
            if not 1 <= color <= self.spec.rho:
                raise ValueError(f"color {color} out of range for {self.spec}")
            if power < 0:
                raise ValueError(f"negative power {power}")
            if not 1 <= m <= self.spec.lambdas[color - 1]:
                raise ValueError(
                    f"multiplicity {m} of {self.spec.base}^{power} in color {color} "
                    f"exceeds bound {self.spec.lambdas[color - 1]}"
                )

    @classmethod
    def from_counts(cls, spec: PartitionSpec, counts: Mapping[tuple[int, int], int]) -> ColoredPartition:
        return cls(spec, tuple(sorted((tuple(k), m) for k, m in counts.items() if m)))

    @property
    def value(self) -> int:
        b = self.spec.base
        return sum(m * b**power for (_, power), m in self.parts)

    def counts(self) -> dict[tuple[int, int], int]:
        return dict(self.parts)

    def to_json(self) -> dict:
        b = self.spec.base
        ordered = sorted(self.parts, key=lambda item: (item[0][1], item[0][0]), reverse=True)
        return {
            "n": self.value,
            "parts": [
                {"value": b**power, "power": power, "color": color, "count": m}
                for (color, power), m in ordered
            ],
        }

    def __str__(self) -> str:
        return render_partition(self)


def render_partition(p: ColoredPartition) -> str:
    """Parts in non-increasing order, ties broken by non-increasing color.

    >>> render_partition(ColoredPartition(PartitionSpec(2, (2, 3)), (((2, 0), 1), ((2, 1), 1))))
    '2_2+1_2'
    """
    b = p.spec.base
    pieces = []
    for (color, power), m in p.parts:
        pieces.extend([(b**power, color)] * m)
    if not pieces:
        return "0"
    pieces.sort(reverse=True)
    return "+".join(f"{v}_{c}" for v, c in pieces)


def parse_partition(text: str, spec: PartitionSpec) -> ColoredPartition:
    """Parse ``"2_2+1_2+1_1"``-style text; part order is irrelevant."""
    text = text.replace(" ", "")
    if text == "0":
        return ColoredPartition(spec)
    counts: Counter = Counter()
    b = spec.base
    for piece in text.split("+"):
        value_s, _, color_s = piece.partition("_")
        value, color = int(value_s), int(color_s)
        power = 0
        while b**power < value:
            power += 1
        if b**power != value:
            raise ValueError(f"part {value} is not a power of {b}")
        counts[(color, power)] += 1
    return ColoredPartition.from_counts(spec, counts)


def _top_power(n: int, b: int) -> int:
    """Smallest J with b**J > n."""
    J = 0
    while b**J <= n:
        J += 1
    return J


def _level_choices(spec: PartitionSpec) -> list[tuple[int, ...]]:
    return list(itertools.product(*(range(lam + 1) for lam in spec.lambdas)))


def enumerate_partitions(n: int, spec: PartitionSpec) -> list[ColoredPartition]:
    """All partitions of ``n``, sorted by their rendering."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    b, lam = spec.base, spec.lambda_total
    choices = _level_choices(spec)
    out: list[ColoredPartition] = []

    def descend(j: int, remaining: int, acc: dict) -> None:
        if j < 0:
            if remaining == 0:
                out.append(ColoredPartition.from_counts(spec, acc))
            return
        unit = b**j
        # largest value the powers below j can still absorb
        below = lam * (unit - 1) // (b - 1)
        for ms in choices:
            used = sum(ms) * unit
            rest = remaining - used
            if rest < 0 or rest > below:
                continue
            for color, m in enumerate(ms, start=1):
                if m:
                    acc[(color, j)] = m
            descend(j - 1, rest, acc)
            for color, m in enumerate(ms, start=1):
                acc.pop((color, j), None)

    descend(_top_power(n, b) - 1, n, {})
    out.sort(key=render_partition)
    return out


def count_partitions(n: int, spec: PartitionSpec) -> int:
    """Number of partitions of ``n`` (same descent as enumeration, memoized)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _count(n, _top_power(n, spec.base) - 1, spec)


@lru_cache(maxsize=None)
def _ways_by_size(spec: PartitionSpec) -> tuple[int, ...]:
    sizes = Counter(sum(ms) for ms in _level_choices(spec))
    return tuple(sizes[s] for s in range(spec.lambda_total + 1))


@lru_cache(maxsize=None)
def _count(remaining: int, j: int, spec: PartitionSpec) -> int:
    if j < 0:
        return int(remaining == 0)
    b = spec.base
    unit = b**j
    below = spec.lambda_total * (unit - 1) // (b - 1)
    total = 0
    for s, ways in enumerate(_ways_by_size(spec)):
        rest = remaining - s * unit
        if rest < 0:
            break
        if rest <= below:
            total += ways * _count(rest, j - 1, spec)
    return total


def partitions_to_json(n: int, parts: list[ColoredPartition]) -> str:
    return json.dumps({"n": n, "partitions": [p.to_json()["parts"] for p in parts]})
