"""Partial Steiner triple systems with 3-element lines.

A configuration is a finite set of points {0, ..., num_points - 1} together
with a family of 3-element lines such that any two distinct lines share at
most one point.  Points may optionally carry string labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping, Optional, Sequence

Line = tuple[int, int, int]


@dataclass(frozen=True)
class Config:
    """An incidence structure with 3-element lines.

    ``lines`` is a sorted tuple of sorted 3-tuples of point ids, and
    ``labels``, when present, maps point id -> name positionally.
    """

    num_points: int
    lines: tuple[Line, ...]
    labels: Optional[tuple[str, ...]] = None

    def label_of(self, point: int) -> str:
        if self.labels is not None:
            return self.labels[point]
        return str(point)

    def point_by_label(self, name: str) -> int:
        if self.labels is None:
            return int(name)
        return self.labels.index(name)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]


@dataclass(frozen=True)
class ConfigParams:
    """Numeric invariants: point/line counts, point ranks, line size, and
    the witness n when the counts match (C(n,2), C(n,3)) with all ranks n-2."""

    nu: int
    rank_multiset: tuple[int, ...]
    b: int
    kappa: int
    binomial_n: Optional[int]


def make_config(
    num_points: int,
    lines: Iterable[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
) -> Config:
    """Build a Config, normalizing lines to sorted tuples and dropping repeats."""
    normalized = sorted({tuple(sorted(L)) for L in lines})
    lab = tuple(labels) if labels is not None else None
    if lab is not None and len(lab) != num_points:
        raise ValueError(
            f"expected {num_points} labels, got {len(lab)}"
        )
    return Config(num_points=num_points, lines=tuple(normalized), labels=lab)


def validate(config: Config) -> ValidationReport:
    """Check the partial-Steiner axioms and label sanity; report all violations."""
    violations: list[str] = []
    if len({frozenset(L) for L in config.lines}) != len(config.lines):
        violations.append("line list contains a repeated line")
    for L in config.lines:
        if len(L) != 3 or len(set(L)) != 3:
            violations.append(f"line {L} does not consist of 3 distinct points")
        for x in L:
            if not (0 <= x < config.num_points):
                violations.append(f"line {L} uses point {x} outside 0..{config.num_points - 1}")
    seen: dict[tuple[int, int], Line] = {}
    for L in config.lines:
        if len(set(L)) != 3:
            continue
        for pair in itertools.combinations(sorted(L), 2):
            if pair in seen and seen[pair] != L:
                violations.append(
                    f"lines {seen[pair]} and {L} share 2 points {pair}"
                )
            else:
                seen[pair] = L
    if config.labels is not None:
        if len(config.labels) != config.num_points:
            violations.append(
                f"label count {len(config.labels)} differs from point count {config.num_points}"
            )
        if len(set(config.labels)) != len(config.labels):
            violations.append("labels are not pairwise distinct")
    return ValidationReport(ok=not violations, violations=tuple(violations))


def parameters(config: Config) -> ConfigParams:
    """Compute counts and ranks; raises ValueError on an invalid structure."""
    report = validate(config)
    if not report.ok:
        raise ValueError("invalid configuration: " + "; ".join(report.violations))
    rank = [0] * config.num_points
    for L in config.lines:
        for x in L:
            rank[x] += 1
    nu, b = config.num_points, len(config.lines)
    binomial_n: Optional[int] = None
    for n in range(3, nu + 3):
        if comb(n, 2) == nu and comb(n, 3) == b and all(r == n - 2 for r in rank):
            binomial_n = n
            break
    return ConfigParams(
        nu=nu,
        rank_multiset=tuple(sorted(rank)),
        b=b,
        kappa=3,
        binomial_n=binomial_n,
    )


def _join_table(config: Config) -> dict[tuple[int, int], int]:
    table: dict[tuple[int, int], int] = {}
    for L in config.lines:
        a, b, c = L
        table[(a, b)] = c
        table[(a, c)] = b
        table[(b, c)] = a
    return table


_JOIN_CACHE: dict[int, tuple[Config, dict[tuple[int, int], int]]] = {}


def join(config: Config, x: int, y: int) -> Optional[int]:
    """The third point of the line through x and y, or None if not collinear.

    join(c, x, x) == x by convention.
    """
    if x == y:
        return x
    key = id(config)
    cached = _JOIN_CACHE.get(key)
    if cached is None or cached[0] is not config:
        _JOIN_CACHE[key] = (config, _join_table(config))
        if len(_JOIN_CACHE) > 256:
            _JOIN_CACHE.pop(next(iter(_JOIN_CACHE)))
    table = _JOIN_CACHE[key][1]
    return table.get((x, y) if x < y else (y, x))


def lines_through(config: Config, point: int) -> tuple[Line, ...]:
    return tuple(L for L in config.lines if point in L)


def collinear(config: Config, x: int, y: int, z: int) -> bool:
    return len({x, y, z}) == 3 and join(config, x, y) == z


def relabel(config: Config, f: Mapping[int, int]) -> Config:
    """Apply a point bijection f to a configuration, transporting labels."""
    if sorted(f.keys()) != list(range(config.num_points)) or sorted(
        f.values()
    ) != list(range(config.num_points)):
        raise ValueError("relabeling map is not a bijection on the point set")
    lines = [tuple(sorted(f[x] for x in L)) for L in config.lines]
    labels = None
    if config.labels is not None:
        new_labels = [""] * config.num_points
        for old, name in enumerate(config.labels):
            new_labels[f[old]] = name
        labels = tuple(new_labels)
    return Config(
        num_points=config.num_points,
        lines=tuple(sorted(lines)),
        labels=labels,
    )
