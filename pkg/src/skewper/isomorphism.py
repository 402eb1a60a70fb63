"""Canonical forms, isomorphism decisions, and automorphism groups.

The canonizer iterates color refinement (a point's signature is its color
plus the multiset of its lines' color profiles) and, while cells remain,
individualizes every point of the first non-singleton cell.  Each discrete
leaf yields a relabeled line list; the lexicographically least one is the
certificate.  All leaves achieving it differ exactly by automorphisms,
which gives the group for free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional

from .incidence import Config, Line
from .perms import Perm, symmetric_group
from .skews import Skew, all_pairs, bar_alpha
from .constructions import Perspective, apply_pair_map


@dataclass(frozen=True)
class CanonicalCertificate:
    """A relabel-invariant normal form: the canonical line list and one
    relabeling old point -> canonical point realizing it."""

    canonical_lines: tuple[Line, ...]
    relabeling: tuple[int, ...]


@dataclass(frozen=True)
class AutomorphismGroup:
    """All line-preserving point bijections, as image tuples, plus a small
    generating subset."""

    order: int
    elements: tuple[tuple[int, ...], ...]
    generators: tuple[tuple[int, ...], ...]


def _refine(num_points: int, lines_by_point, colors: list[int]) -> list[int]:
    """Iterate signature-based splitting to a stable, canonically numbered
    partition.  Signatures extend the current color, so granularity only
    grows; numbering follows sorted signature order."""
    while True:
        sigs = []
        for p in range(num_points):
            profile = sorted(
                tuple(sorted(colors[q] for q in L if q != p))
                for L in lines_by_point[p]
            )
            sigs.append((colors[p], tuple(profile)))
        numbering = {s: i for i, s in enumerate(sorted(set(sigs)))}
        fresh = [numbering[s] for s in sigs]
        if len(set(fresh)) == len(set(colors)):
            return fresh
        colors = fresh


def _leaves(num_points: int, lines, lines_by_point) -> list[tuple[int, ...]]:
    """All discrete colorings reached by refine-and-individualize."""
    out: list[tuple[int, ...]] = []

    def descend(colors: list[int]):
        colors = _refine(num_points, lines_by_point, colors)
        if len(set(colors)) == num_points:
            out.append(tuple(colors))
            return
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        for p in range(num_points):
            if colors[p] == target:
                branch = list(colors)
                branch[p] = num_points  # distinct from every current color
                descend(branch)

    descend([0] * num_points)
    return out


def _certificate_of(colors: tuple[int, ...], lines) -> tuple[Line, ...]:
    return tuple(
        sorted(tuple(sorted(colors[x] for x in L)) for L in lines)
    )


@lru_cache(maxsize=None)
def _canonize(num_points: int, lines: tuple[Line, ...]):
    lines_by_point = [[] for _ in range(num_points)]
    for L in lines:
        for x in L:
            lines_by_point[x].append(L)
    leaves = _leaves(num_points, lines, lines_by_point)
    best: Optional[tuple[Line, ...]] = None
    best_leaves: list[tuple[int, ...]] = []
    for leaf in leaves:
        cert = _certificate_of(leaf, lines)
        if best is None or cert < best:
            best, best_leaves = cert, [leaf]
        elif cert == best:
            best_leaves.append(leaf)
    base = best_leaves[0]
    base_inv = [0] * num_points
    for p, c in enumerate(base):
        base_inv[c] = p
    automorphisms = sorted(
        {tuple(base_inv[leaf[p]] for p in range(num_points)) for leaf in best_leaves}
    )
    return best, base, tuple(automorphisms)


def canonical_certificate(config: Config) -> CanonicalCertificate:
    lines_canon, relabeling, _ = _canonize(config.num_points, config.lines)
    return CanonicalCertificate(canonical_lines=lines_canon, relabeling=relabeling)


def are_isomorphic(c1: Config, c2: Config) -> Optional[dict[int, int]]:
    """A verified point bijection carrying the lines of c1 onto those of
    c2, or None."""
    if c1.num_points != c2.num_points or len(c1.lines) != len(c2.lines):
        return None
    cert1 = canonical_certificate(c1)
    cert2 = canonical_certificate(c2)
    if cert1.canonical_lines != cert2.canonical_lines:
        return None
    inverse2 = [0] * c2.num_points
    for p, c in enumerate(cert2.relabeling):
        inverse2[c] = p
    witness = {p: inverse2[cert1.relabeling[p]] for p in range(c1.num_points)}
    mapped = {tuple(sorted(witness[x] for x in L)) for L in c1.lines}
    if mapped != set(c2.lines):
        raise RuntimeError("internal error: certificate witness failed verification")
    return witness


def _greedy_generators(
    num_points: int, elements: tuple[tuple[int, ...], ...]
) -> tuple[tuple[int, ...], ...]:
    identity = tuple(range(num_points))
    generators: list[tuple[int, ...]] = []
    generated = {identity}
    for g in elements:
        if g in generated:
            continue
        generators.append(g)
        frontier = list(generated)
        while frontier:
            new = []
            for h in frontier:
                for s in generators:
                    prod = tuple(s[h[x]] for x in range(num_points))
                    if prod not in generated:
                        generated.add(prod)
                        new.append(prod)
            frontier = new
    return tuple(generators)


def automorphism_group(config: Config) -> AutomorphismGroup:
    _, _, elements = _canonize(config.num_points, config.lines)
    lines = {frozenset(L) for L in config.lines}
    for g in elements:
        if any(frozenset(g[x] for x in L) not in lines for L in config.lines):
            raise RuntimeError("internal error: invalid automorphism produced")
    return AutomorphismGroup(
        order=len(elements),
        elements=elements,
        generators=_greedy_generators(config.num_points, elements),
    )


def s_map(persp: Perspective) -> dict[int, int]:
    """The swap a_i <-> b_i, c_u -> c_{sigma(u)} fixing the center, as a
    verified automorphism.  It exists exactly when the skew is an
    involution stabilizing the axis line set."""
    lab = persp.labeling
    mapping = {lab.center: lab.center}
    for i in range(persp.n):
        mapping[lab.a[i]] = lab.b[i]
        mapping[lab.b[i]] = lab.a[i]
    for u in all_pairs(persp.n):
        mapping[lab.c[u]] = lab.c[persp.skew(u)]
    mapped = {tuple(sorted(mapping[x] for x in L)) for L in persp.config.lines}
    if mapped != set(persp.config.lines):
        raise ValueError("the a/b swap is not an automorphism of this perspective")
    return mapping


@dataclass(frozen=True)
class PerspectiveIso:
    """A center-fixing isomorphism between two perspectives: either rows
    map to rows ("direct") or the two simplices trade places ("flip"),
    both driven by a point permutation phi of the row indices."""

    kind: str
    phi: Perm
    witness: dict[int, int]


def _axis_lines_match(axis1: Config, pair_map: Skew, axis2: Config) -> bool:
    return apply_pair_map(axis1, pair_map).lines == axis2.lines


def perspective_iso(p1: Perspective, p2: Perspective) -> Optional[PerspectiveIso]:
    """Search the center-fixing isomorphisms p1 -> p2.

    For each point permutation phi of the row indices, a direct hit needs
    the pair lift of phi to intertwine the skews and carry axis to axis; a
    flip composes with the a/b swap and uses the inverted target skew.
    The first hit is verified line-for-line and returned.
    """
    if p1.n != p2.n:
        raise ValueError("perspectives have different numbers of rows")
    n = p1.n
    sigma1, sigma2 = p1.skew, p2.skew
    for phi in symmetric_group(n):
        bar = bar_alpha(phi)
        if (
            bar * sigma1 == sigma2 * bar
            and _axis_lines_match(p1.axis, bar, p2.axis)
        ):
            return _build_iso(p1, p2, "direct", phi, bar)
        flip_map = sigma2.inverse() * bar
        if (
            bar * sigma1 == flip_map
            and _axis_lines_match(p1.axis, flip_map, p2.axis)
        ):
            return _build_iso(p1, p2, "flip", phi, flip_map)
    return None


def _build_iso(
    p1: Perspective, p2: Perspective, kind: str, phi: Perm, c_map: Skew
) -> PerspectiveIso:
    lab1, lab2 = p1.labeling, p2.labeling
    witness = {lab1.center: lab2.center}
    for i in range(1, p1.n + 1):
        if kind == "direct":
            witness[lab1.a[i - 1]] = lab2.a[phi(i) - 1]
            witness[lab1.b[i - 1]] = lab2.b[phi(i) - 1]
        else:
            witness[lab1.a[i - 1]] = lab2.b[phi(i) - 1]
            witness[lab1.b[i - 1]] = lab2.a[phi(i) - 1]
    pair_map = bar_alpha(phi) if kind == "direct" else c_map
    for u in all_pairs(p1.n):
        witness[lab1.c[u]] = lab2.c[pair_map(u)]
    mapped = {tuple(sorted(witness[x] for x in L)) for L in p1.config.lines}
    if mapped != set(p2.config.lines):
        raise RuntimeError("internal error: center-fixing witness failed verification")
    return PerspectiveIso(kind=kind, phi=phi, witness=witness)
