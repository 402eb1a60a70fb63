"""Configuration builders.

Four families on top of the incidence core:

- the pair structure of an n-set: points are 2-subsets of {1..n}, lines are
  the pair-triples inside each 3-subset;
- weight-k multiset structures over a 3-letter alphabet: points are
  exponent triples summing to k, lines extend a base multiset by a single
  letter power;
- skew perspectives: two complete n-point rows a_i / b_i joined through a
  center p and an axial configuration on the 2-subsets, with a skew
  twisting the b-side;
- the fifteen 6-point, 4-line labellings on the 2-subsets of a 4-set,
  parameterized by a switch s in {5,6} and a non-derangement mu of S4,
  together with the complement relabeling.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Union

from .incidence import Config, make_config, parameters, validate
from .perms import Perm, parse_cycles
from .skews import Pair, Skew, all_pairs, make_pair

Multiset3 = tuple[int, int, int]


def pair_label(u: Pair) -> str:
    return "{%d,%d}" % u


def parse_pair_label(text: str) -> Pair:
    stripped = text.strip()
    if not (stripped.startswith("{") and stripped.endswith("}")):
        raise ValueError(f"not a pair label: {text!r}")
    parts = stripped[1:-1].split(",")
    if len(parts) != 2:
        raise ValueError(f"not a pair label: {text!r}")
    return make_pair(int(parts[0]), int(parts[1]))


def multiset_label(m: Multiset3) -> str:
    return "a^%d b^%d c^%d" % tuple(m)


def parse_multiset_label(text: str) -> Multiset3:
    parts = text.split()
    if (
        len(parts) != 3
        or [p[0] for p in parts] != ["a", "b", "c"]
        or any(len(p) < 3 or p[1] != "^" for p in parts)
    ):
        raise ValueError(f"not a multiset label: {text!r}")
    return tuple(int(p[2:]) for p in parts)  # type: ignore[return-value]


def axis_config(n: int, pair_lines: Iterable[Iterable[Pair]]) -> Config:
    """A configuration on the 2-subsets of {1..n} in canonical point order."""
    pairs = all_pairs(n)
    index = {u: i for i, u in enumerate(pairs)}
    lines = [tuple(sorted(index[make_pair(*u)] for u in L)) for L in pair_lines]
    return make_config(len(pairs), lines, tuple(pair_label(u) for u in pairs))


def grassmannian(n: int) -> Config:
    """Points: 2-subsets of {1..n}; lines: the three 2-subsets of each
    3-subset."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return axis_config(
        n,
        (
            tuple(itertools.combinations(y, 2))
            for y in itertools.combinations(range(1, n + 1), 3)
        ),
    )


def _weight_triples(k: int) -> list[Multiset3]:
    return sorted(
        (x, y, k - x - y) for x in range(k + 1) for y in range(k + 1 - x)
    )


def veronesian(k: int) -> Config:
    """Points: 3-letter multisets of weight k; lines: {e a^s, e b^s, e c^s}
    for every base e and power s >= 1."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    points = _weight_triples(k)
    index = {m: i for i, m in enumerate(points)}
    lines = []
    for s in range(1, k + 1):
        for e in _weight_triples(k - s):
            lines.append(
                (
                    index[(e[0] + s, e[1], e[2])],
                    index[(e[0], e[1] + s, e[2])],
                    index[(e[0], e[1], e[2] + s)],
                )
            )
    return make_config(len(points), lines, tuple(multiset_label(m) for m in points))


def _triple_to_pair(m: Multiset3) -> Pair:
    x, y, z = m
    return (y + 1, y + z + 2)


def veronesian_axis(k: int) -> Config:
    """The weight-(k-2) multiset structure relabeled onto the 2-subsets of
    {1..k} via (x,y,z) -> {y+1, y+z+2}; suitable as a perspective axis."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    v = veronesian(k - 2)
    triples = [parse_multiset_label(v.labels[i]) for i in range(v.num_points)]
    return axis_config(
        k,
        (tuple(_triple_to_pair(triples[x]) for x in L) for L in v.lines),
    )


@dataclass(frozen=True)
class PerspectiveLabeling:
    """Roles of the points of a perspective: center p, rows a_1..a_n and
    b_1..b_n, and the axial points c_u indexed by 2-subsets."""

    n: int
    center: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: Mapping[Pair, int]

    def __post_init__(self):
        ids = [self.center, *self.a, *self.b, *self.c.values()]
        if len(set(ids)) != len(ids):
            raise ValueError("labeling assigns one point to two roles")
        if len(self.a) != self.n or len(self.b) != self.n:
            raise ValueError(f"expected {self.n} points in each row")
        if sorted(self.c.keys()) != list(all_pairs(self.n)):
            raise ValueError("axial points must be indexed by every 2-subset")


@dataclass(frozen=True)
class Perspective:
    """A built perspective: the bare configuration plus its labeling, the
    skew used, and the axial configuration.  Iterates as (config, labeling)."""

    config: Config
    labeling: PerspectiveLabeling
    skew: Skew
    axis: Config

    def __iter__(self):
        return iter((self.config, self.labeling))

    @property
    def n(self) -> int:
        return self.labeling.n


def _check_axis_labels(n: int, axis: Config) -> None:
    expected = {pair_label(u) for u in all_pairs(n)}
    if axis.labels is None or set(axis.labels) != expected:
        raise ValueError(
            f"axis must have its {len(expected)} points labeled by the 2-subsets of {{1..{n}}}"
        )


def perspective(
    n: int,
    sigma: Skew,
    axis: Config,
    require_binomial: bool = True,
) -> Perspective:
    """Join two complete rows through a center over an axial configuration.

    Points: a_1..a_n, b_1..b_n, p, c_u (u a 2-subset of {1..n}).  Lines:
    {p, a_i, b_i}; {a_i, a_j, c_{i,j}}; {b_i, b_j, c_{sigma^{-1}({i,j})}};
    and one line {c_u, c_v, c_w} per axis line.  By default the axis must
    be binomial (C(n,2) points of rank n-2, C(n,3) lines); pass
    require_binomial=False for exploratory axes such as an empty one.
    """
    if sigma.n != n:
        raise ValueError(f"skew acts on a {sigma.n}-element ground set, expected {n}")
    _check_axis_labels(n, axis)
    report = validate(axis)
    if not report.ok:
        raise ValueError("axis is not a valid structure: " + "; ".join(report.violations))
    if require_binomial and parameters(axis).binomial_n != n:
        raise ValueError(
            f"axis is not binomial on {{1..{n}}}: expected {len(all_pairs(n))} points of "
            f"rank {n - 2}; pass require_binomial=False to build anyway"
        )
    pairs = all_pairs(n)
    a = tuple(range(n))
    b = tuple(range(n, 2 * n))
    center = 2 * n
    c = {u: 2 * n + 1 + i for i, u in enumerate(pairs)}
    labels = (
        tuple(f"a{i}" for i in range(1, n + 1))
        + tuple(f"b{i}" for i in range(1, n + 1))
        + ("p",)
        + tuple("c" + pair_label(u) for u in pairs)
    )
    sigma_inv = sigma.inverse()
    lines: list[tuple[int, int, int]] = []
    for i in range(1, n + 1):
        lines.append((a[i - 1], b[i - 1], center))
    for i, j in pairs:
        lines.append((a[i - 1], a[j - 1], c[(i, j)]))
    for i, j in pairs:
        lines.append((b[i - 1], b[j - 1], c[sigma_inv((i, j))]))
    for L in axis.lines:
        lines.append(tuple(c[parse_pair_label(axis.labels[x])] for x in L))
    config = make_config(2 * n + 1 + len(pairs), lines, labels)
    labeling = PerspectiveLabeling(n=n, center=center, a=a, b=b, c=c)
    return Perspective(config=config, labeling=labeling, skew=sigma, axis=axis)


@dataclass(frozen=True)
class VeblenLabel:
    """Switch s in {5,6} plus a permutation of {1,2,3,4} with a fixed point
    i0 anchoring the labelling."""

    s: int
    mu: Perm
    i0: int

    def __post_init__(self):
        if self.s not in (5, 6):
            raise ValueError(f"s must be 5 or 6, got {self.s}")
        if self.mu.n != 4:
            raise ValueError("mu must permute {1,2,3,4}")
        if self.mu(self.i0) != self.i0:
            raise ValueError(f"i0={self.i0} is not fixed by mu")


def veblen_label(s: int, mu: Perm, i0: Optional[int] = None) -> VeblenLabel:
    """Build a label, defaulting i0 to the largest fixed point of mu."""
    if s not in (5, 6):
        raise ValueError(f"s must be 5 or 6, got {s}")
    if mu.n != 4:
        raise ValueError("mu must permute {1,2,3,4}")
    fixed = mu.fixed_points()
    if not fixed:
        raise ValueError("mu has no fixed point")
    if i0 is None:
        i0 = max(fixed)
    return VeblenLabel(s=s, mu=mu, i0=i0)


def parse_veblen_text(text: str) -> VeblenLabel:
    """Parse "v5:<cycles>" or "v6:<cycles>"."""
    head, sep, tail = text.partition(":")
    if not sep or head not in ("v5", "v6"):
        raise ValueError(f"expected 'v5:<cycles>' or 'v6:<cycles>', got {text!r}")
    return veblen_label(int(head[1]), parse_cycles(tail, 4))


def veblen(label: VeblenLabel) -> Config:
    """Materialize the 6-point, 4-line labelling on the 2-subsets of a 4-set.

    With i0 the anchor and mu the permutation: for s=5 the lines are the
    three 2-subsets avoiding i0 plus, for each k != i0, the line
    {{i,i0}, {j,i0}, w} where {i,j} is the complement of {i0,k} and
    w is the complement of {i0,mu(k)}; for s=6 they are the three
    2-subsets through i0 plus, for each k != i0, the line
    {{i,k}, {j,k}, {mu(k),i0}}.
    """
    s, mu, i0 = label.s, label.mu, label.i0
    rest = [x for x in range(1, 5) if x != i0]
    lines: list[tuple[Pair, ...]] = []
    if s == 5:
        lines.append(tuple(itertools.combinations(rest, 2)))
        for k in rest:
            i, j = sorted(set(rest) - {k})
            w = tuple(sorted(set(rest) - {mu(k)}))
            lines.append((make_pair(i, i0), make_pair(j, i0), w))
    else:
        lines.append(tuple(make_pair(i, i0) for i in rest))
        for k in rest:
            i, j = sorted(set(rest) - {k})
            lines.append((make_pair(i, k), make_pair(j, k), make_pair(mu(k), i0)))
    return axis_config(4, lines)


def apply_pair_map(config: Config, pm: Union[Skew, Mapping[Pair, Pair]]) -> Config:
    """Transport the lines of a pair-labeled configuration along a pair
    bijection, keeping the point/label assignment fixed."""
    if config.labels is None:
        raise ValueError("configuration has no labels to interpret as 2-subsets")
    try:
        point_pairs = [parse_pair_label(name) for name in config.labels]
    except ValueError as exc:
        raise ValueError(f"labels are not 2-subsets: {exc}") from exc
    n = max(max(u) for u in point_pairs)
    if sorted(point_pairs) != list(all_pairs(n)):
        raise ValueError("labels do not cover the 2-subsets of an n-set exactly once")
    if isinstance(pm, Skew):
        if pm.n != n:
            raise ValueError(f"pair map acts on a {pm.n}-set, labels use a {n}-set")
        mapping = {u: pm(u) for u in all_pairs(n)}
    else:
        mapping = {make_pair(*u): make_pair(*v) for u, v in pm.items()}
    index = {u: i for i, u in enumerate(point_pairs)}
    lines = [
        tuple(sorted(index[mapping[point_pairs[x]]] for x in L)) for L in config.lines
    ]
    return Config(config.num_points, tuple(sorted(lines)), config.labels)


def kappa(config: Config) -> Config:
    """Complement relabeling on the 2-subsets of a 4-set: each line's points
    are replaced by their complementary 2-subsets."""
    if config.labels is None or len(config.labels) != 6:
        raise ValueError("expected a configuration on the six 2-subsets of {1,2,3,4}")
    complement = {
        u: tuple(sorted(set(range(1, 5)) - set(u))) for u in all_pairs(4)
    }
    return apply_pair_map(config, complement)


def perspective_from_config(config: Config) -> Perspective:
    """Recover the roles, skew, and axis of a labeled perspective.

    Inverse to ``perspective`` up to point ids: labels p, a1.., b1..,
    c{i,j} identify the roles; the skew is read off the b-side lines and
    the axis from the lines inside the axial part.  Raises ValueError if
    the labeled structure is not exactly a perspective.
    """
    if config.labels is None:
        raise ValueError("perspective recovery needs labeled points")
    by_label = {name: i for i, name in enumerate(config.labels)}
    if "p" not in by_label:
        raise ValueError("no center point labeled 'p'")
    a_ids = {}
    b_ids = {}
    c_ids = {}
    for name, idx in by_label.items():
        if name == "p":
            continue
        if name.startswith("a"):
            a_ids[int(name[1:])] = idx
        elif name.startswith("b"):
            b_ids[int(name[1:])] = idx
        elif name.startswith("c"):
            c_ids[parse_pair_label(name[1:])] = idx
        else:
            raise ValueError(f"unexpected point label {name!r}")
    n = len(a_ids)
    if sorted(a_ids) != list(range(1, n + 1)) or sorted(b_ids) != list(range(1, n + 1)):
        raise ValueError("row labels must be a1..an and b1..bn")
    if sorted(c_ids) != list(all_pairs(n)):
        raise ValueError("axial labels must cover the 2-subsets of {1..%d}" % n)
    labeling = PerspectiveLabeling(
        n=n,
        center=by_label["p"],
        a=tuple(a_ids[i] for i in range(1, n + 1)),
        b=tuple(b_ids[i] for i in range(1, n + 1)),
        c=c_ids,
    )
    id_to_pair = {idx: u for u, idx in c_ids.items()}
    b_index = {idx: i for i, idx in b_ids.items()}
    sigma_map: dict[Pair, Pair] = {}
    axis_lines = []
    for L in config.lines:
        roles = [id_to_pair.get(x) for x in L]
        axial = [r for r in roles if r is not None]
        if len(axial) == 3:
            axis_lines.append(axial)
        elif len(axial) == 1:
            bs = sorted(b_index[x] for x in L if x in b_index)
            if len(bs) == 2:
                sigma_map[axial[0]] = make_pair(*bs)
    if sorted(sigma_map) != list(all_pairs(n)):
        raise ValueError("b-side lines do not determine a skew")
    sigma = Skew.from_map(n, sigma_map)
    axis = axis_config(n, axis_lines)
    rebuilt = perspective(n, sigma, axis, require_binomial=False)
    expected = {
        frozenset(rebuilt.config.labels[x] for x in L) for L in rebuilt.config.lines
    }
    actual = {frozenset(config.labels[x] for x in L) for L in config.lines}
    if expected != actual:
        raise ValueError("labeled lines do not match a perspective construction")
    return Perspective(config=config, labeling=labeling, skew=sigma, axis=axis)
