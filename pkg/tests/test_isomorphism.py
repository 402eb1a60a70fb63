"""Tests for canonical forms, isomorphism decisions, and automorphisms.

Brute-force bijection search over small configurations is the oracle for
the canonizer; the specialized center-fixing search is cross-checked
against the general decision procedure.
"""

import itertools
import random

import pytest

from skewper.constructions import (
    apply_pair_map,
    grassmannian,
    perspective,
    veblen,
    veblen_label,
    veronesian,
    veronesian_axis,
)
from skewper.incidence import make_config, relabel
from skewper.isomorphism import (
    AutomorphismGroup,
    CanonicalCertificate,
    are_isomorphic,
    automorphism_group,
    canonical_certificate,
    perspective_iso,
    s_map,
)
from skewper.perms import Perm, parse_cycles, symmetric_group
from skewper.skews import identity_skew, phi_sequence, skew_from_phi, zeta


def brute_iso(c1, c2):
    """First line-preserving point bijection found by exhaustion, or None."""
    if c1.num_points != c2.num_points or len(c1.lines) != len(c2.lines):
        return None
    target = {frozenset(L) for L in c2.lines}
    for per in itertools.permutations(range(c2.num_points)):
        if all(frozenset(per[x] for x in L) in target for L in c1.lines):
            return per
    return None


def brute_aut_count(c):
    target = {frozenset(L) for L in c.lines}
    count = 0
    for per in itertools.permutations(range(c.num_points)):
        if all(frozenset(per[x] for x in L) in target for L in c.lines):
            count += 1
    return count


def backtrack_aut_count(c):
    """Automorphism count by depth-first image assignment, pruned by
    collinearity agreement and by fully-assigned lines.  Independent of the
    canonical-form machinery."""
    n = c.num_points
    lines = {frozenset(L) for L in c.lines}
    adj = {p: set() for p in range(n)}
    for L in c.lines:
        for x, y in itertools.combinations(L, 2):
            adj[x].add(y)
            adj[y].add(x)
    rank = [sum(1 for L in c.lines if p in L) for p in range(n)]
    lines_by_max = {p: [] for p in range(n)}
    for L in c.lines:
        lines_by_max[max(L)].append(L)
    image = [-1] * n
    used = [False] * n
    count = 0

    def extend(p):
        nonlocal count
        if p == n:
            assert all(frozenset(image[x] for x in L) in lines for L in c.lines)
            count += 1
            return
        for q in range(n):
            if used[q] or rank[q] != rank[p]:
                continue
            if any((u in adj[p]) != (image[u] in adj[q]) for u in range(p)):
                continue
            if any(
                frozenset(q if x == p else image[x] for x in L) not in lines
                for L in lines_by_max[p]
            ):
                continue
            image[p] = q
            used[q] = True
            extend(p + 1)
            used[q] = False
        image[p] = -1

    extend(0)
    return count


def verify_witness(c1, c2, witness):
    assert sorted(witness) == list(range(c1.num_points))
    assert sorted(witness.values()) == list(range(c2.num_points))
    mapped = {tuple(sorted(witness[x] for x in L)) for L in c1.lines}
    assert mapped == set(c2.lines)


MU_ID = parse_cycles("()", 4)
SIX_SMALL = [
    veblen(veblen_label(5, MU_ID)),
    veblen(veblen_label(5, parse_cycles("(1,2)", 4))),
    veblen(veblen_label(5, parse_cycles("(1,2,3)", 4))),
    veblen(veblen_label(6, MU_ID)),
    veblen(veblen_label(6, parse_cycles("(1,2)", 4))),
    veblen(veblen_label(6, parse_cycles("(1,2,3)", 4))),
]


def phi4(top, inner):
    return phi_sequence(
        4, {4: parse_cycles(top, 3), 3: parse_cycles(inner, 2)}
    )


class TestCanonicalCertificate:
    def test_relabeling_reproduces_canonical_lines(self):
        for c in SIX_SMALL + [grassmannian(4), veronesian(3)]:
            cert = canonical_certificate(c)
            assert sorted(cert.relabeling) == list(range(c.num_points))
            mapped = sorted(
                tuple(sorted(cert.relabeling[x] for x in L)) for L in c.lines
            )
            assert tuple(mapped) == cert.canonical_lines

    def test_relabel_invariance_small(self):
        rng = random.Random(7)
        for c in SIX_SMALL:
            cert = canonical_certificate(c).canonical_lines
            for _ in range(5):
                perm = list(range(c.num_points))
                rng.shuffle(perm)
                moved = relabel(c, dict(enumerate(perm)))
                assert canonical_certificate(moved).canonical_lines == cert

    def test_relabel_invariance_perspective(self):
        p = perspective(4, zeta(4), grassmannian(4))
        cert = canonical_certificate(p.config).canonical_lines
        rng = random.Random(20260815)
        for _ in range(3):
            perm = list(range(p.config.num_points))
            rng.shuffle(perm)
            moved = relabel(p.config, dict(enumerate(perm)))
            assert canonical_certificate(moved).canonical_lines == cert

    def test_distinguishes_desargues_from_ten_point_veronesian(self):
        v3 = veronesian(3)
        g5 = grassmannian(5)
        assert v3.num_points == g5.num_points == 10
        assert len(v3.lines) == len(g5.lines) == 10
        c1 = canonical_certificate(v3).canonical_lines
        c2 = canonical_certificate(g5).canonical_lines
        assert c1 != c2


class TestBruteForceAgreement:
    def test_six_small_configs_pairwise(self):
        for c1, c2 in itertools.combinations(SIX_SMALL, 2):
            expected = brute_iso(c1, c2)
            got = are_isomorphic(c1, c2)
            assert (got is None) == (expected is None)
            if got is not None:
                verify_witness(c1, c2, got)
        # as unlabeled configurations the six labellings are all copies of
        # the one (6_2 4_3) configuration; they differ only as line sets
        # over the labeled pair set
        certs = {canonical_certificate(c).canonical_lines for c in SIX_SMALL}
        assert len(certs) == 1
        line_sets = {frozenset(frozenset(L) for L in c.lines) for c in SIX_SMALL}
        assert len(line_sets) == 6

    def test_isomorphic_after_relabel(self):
        rng = random.Random(99)
        for c in SIX_SMALL[:2] + [grassmannian(4)]:
            perm = list(range(c.num_points))
            rng.shuffle(perm)
            moved = relabel(c, dict(enumerate(perm)))
            witness = are_isomorphic(c, moved)
            assert witness is not None
            verify_witness(c, moved, witness)

    def test_mismatched_sizes_are_not_isomorphic(self):
        assert are_isomorphic(grassmannian(4), grassmannian(5)) is None
        c1 = make_config(6, [(0, 1, 2), (0, 3, 4)])
        c2 = make_config(6, [(0, 1, 2), (0, 3, 4), (1, 3, 5)])
        assert are_isomorphic(c1, c2) is None

    def test_small_aut_orders_match_brute(self):
        for c in SIX_SMALL + [grassmannian(4)]:
            group = automorphism_group(c)
            assert group.order == brute_aut_count(c)


class TestAutomorphismGroup:
    def test_group_axioms_small(self):
        for c in SIX_SMALL:
            group = automorphism_group(c)
            n = c.num_points
            identity = tuple(range(n))
            assert identity in group.elements
            assert group.order == len(group.elements) == len(set(group.elements))
            elements = set(group.elements)
            for g in group.elements:
                assert tuple(sorted(g)) == identity  # bijection
                inv = [0] * n
                for x, y in enumerate(g):
                    inv[y] = x
                assert tuple(inv) in elements
            for g, h in itertools.product(group.elements[:4], repeat=2):
                assert tuple(g[h[x]] for x in range(n)) in elements

    def test_generators_generate(self):
        c = grassmannian(4)
        group = automorphism_group(c)
        n = c.num_points
        generated = {tuple(range(n))}
        frontier = list(generated)
        while frontier:
            new = []
            for g in frontier:
                for s in group.generators:
                    prod = tuple(s[g[x]] for x in range(n))
                    if prod not in generated:
                        generated.add(prod)
                        new.append(prod)
            frontier = new
        assert generated == set(group.elements)

    def test_grassmannian6_order_720(self):
        c = grassmannian(6)
        group = automorphism_group(c)
        assert group.order == 720
        lines = {frozenset(L) for L in c.lines}
        for g in group.elements[:50]:
            assert all(frozenset(g[x] for x in L) in lines for L in c.lines)

    def test_rigidity_of_symmetry_skew_grassmannian_hosts(self):
        for n in (4, 5):
            p = perspective(n, zeta(n), grassmannian(n))
            assert automorphism_group(p.config).order == 1

    def test_order_matches_backtracking_oracle(self):
        candidates = [
            grassmannian(6),
            perspective(4, zeta(4), grassmannian(4)).config,
            perspective(4, identity_skew(4), grassmannian(4)).config,
            veronesian(4),
        ]
        for c in candidates:
            assert automorphism_group(c).order == backtrack_aut_count(c)


class TestSMap:
    def test_swap_is_an_automorphism_when_axis_is_stable(self):
        # zeta(4) is an involution and maps this labelling's lines onto
        # themselves, so the swap works
        axis = veblen(veblen_label(5, parse_cycles("(2,3)", 4)))
        assert apply_pair_map(axis, zeta(4)).lines == axis.lines
        p = perspective(4, zeta(4), axis)
        sm = s_map(p)
        verify_witness(p.config, p.config, sm)
        n = p.config.num_points
        assert all(sm[sm[x]] == x for x in range(n))
        assert any(sm[x] != x for x in range(n))
        group = automorphism_group(p.config)
        assert tuple(sm[x] for x in range(n)) in group.elements
        # this host carries three free 5-cliques pairwise meeting in the
        # center, a_4, and b_4; the full symmetric group on the cliques
        # acts, so the group is S_3, and some automorphism moves the center
        assert group.order == 6
        assert group.order == backtrack_aut_count(p.config)
        center = p.labeling.center
        assert any(g[center] != center for g in group.elements)

    def test_swap_rejected_when_axis_moves(self):
        p = perspective(4, zeta(4), grassmannian(4))
        assert apply_pair_map(grassmannian(4), zeta(4)).lines != grassmannian(4).lines
        with pytest.raises(ValueError, match="automorphism"):
            s_map(p)


class TestPerspectiveIso:
    def test_identity_self_iso(self):
        p = perspective(4, zeta(4), grassmannian(4))
        hit = perspective_iso(p, p)
        assert hit is not None
        assert hit.kind == "direct"
        verify_witness(p.config, p.config, hit.witness)

    def test_flip_between_inverse_skew_twins(self):
        sigma = skew_from_phi(phi4("(1,2,3)", "()"))
        assert sigma.inverse() != sigma
        p1 = perspective(4, sigma, grassmannian(4))
        p2 = perspective(4, sigma.inverse(), apply_pair_map(grassmannian(4), sigma))
        hit = perspective_iso(p1, p2)
        assert hit is not None
        verify_witness(p1.config, p2.config, hit.witness)
        assert hit.kind == "flip"
        assert hit.phi == parse_cycles("()", 4)

    def test_nontrivial_hit_under_conjugation(self):
        from skewper.skews import bar_alpha, conjugate_skew

        alpha = parse_cycles("(2,3)", 4)
        sigma1 = skew_from_phi(phi4("(1,2)", "()"))
        sigma2 = conjugate_skew(sigma1, bar_alpha(alpha))
        assert sigma2 != sigma1 and sigma2 != sigma1.inverse()
        # the all-pairs-complement labelling is fixed by every induced
        # pair map, so both sides can share the axis
        axis = veblen(veblen_label(6, MU_ID))
        assert apply_pair_map(axis, bar_alpha(alpha)).lines == axis.lines
        p1 = perspective(4, sigma1, axis)
        p2 = perspective(4, sigma2, axis)
        hit = perspective_iso(p1, p2)
        assert hit is not None
        verify_witness(p1.config, p2.config, hit.witness)
        assert hit.phi != parse_cycles("()", 4)
        bar = bar_alpha(hit.phi)
        if hit.kind == "direct":
            assert bar * sigma1 == sigma2 * bar
        else:
            assert bar * sigma1 == sigma2.inverse() * bar

    def test_none_when_not_isomorphic(self):
        p1 = perspective(4, zeta(4), grassmannian(4))
        p2 = perspective(4, identity_skew(4), grassmannian(4))
        assert are_isomorphic(p1.config, p2.config) is None
        assert perspective_iso(p1, p2) is None

    def test_row_count_mismatch(self):
        p1 = perspective(4, zeta(4), grassmannian(4))
        p2 = perspective(5, zeta(5), grassmannian(5))
        with pytest.raises(ValueError, match="rows"):
            perspective_iso(p1, p2)

    def test_hits_imply_general_isomorphism(self):
        pool = []
        for top, inner in [("()", "(1,2)"), ("(1,3)", "(1,2)")]:
            for mu in ["()", "(1,2)"]:
                axis = veblen(veblen_label(5, parse_cycles(mu, 4)))
                pool.append(
                    perspective(4, skew_from_phi(phi4(top, inner)), axis)
                )
        for p1, p2 in itertools.combinations_with_replacement(pool, 2):
            hit = perspective_iso(p1, p2)
            general = are_isomorphic(p1.config, p2.config)
            if hit is not None:
                verify_witness(p1.config, p2.config, hit.witness)
                assert general is not None
