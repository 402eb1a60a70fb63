"""Command-line front end.

Verbs: build, analyze, iso, classify, export.  Exit codes: 0 success,
1 domain error (bad values, failed checks, unreadable input), 2 usage
error (unknown verbs or flags).
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from .analysis import enumerate_free_cliques, stp_diagram
from .classify import classify_all, diagnostic_text, expectation_checks
from .constructions import (
    grassmannian,
    perspective,
    perspective_from_config,
    parse_veblen_text,
    veblen,
    veronesian,
    veronesian_axis,
)
from .formats import emit_dot, emit_json, emit_psts, emit_stp_dot, parse_psts
from .incidence import Config, parameters, relabel, validate
from .isomorphism import are_isomorphic, automorphism_group, canonical_certificate
from .skews import parse_phi_text, skew_from_phi


def _read_config(path: str) -> Config:
    return parse_psts(Path(path).read_text())


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _axis_from_text(text: str, n: int) -> Config:
    if text == "grassmannian":
        return grassmannian(n)
    if text == "veronesian":
        return veronesian_axis(n)
    if text.startswith(("v5:", "v6:")):
        return veblen(parse_veblen_text(text))
    raise ValueError(
        f"unknown axis {text!r}; use grassmannian, veronesian, v5:<cycles>,"
        " or v6:<cycles>"
    )


def _cmd_build(args) -> int:
    if args.what == "grassmannian":
        config = grassmannian(args.n)
    elif args.what == "veronesian":
        config = veronesian(args.k)
    else:
        phi = parse_phi_text(args.phi)
        n = phi.n if args.n is None else args.n
        if n != phi.n:
            raise ValueError(
                f"--phi describes {phi.n} rows but --n says {n}"
            )
        axis = _axis_from_text(args.axis, n)
        config = perspective(n, skew_from_phi(phi), axis).config
    _write_output(emit_psts(config), args.out)
    return 0


def _cmd_analyze(args) -> int:
    config = _read_config(args.file)
    report = validate(config)
    if not report.ok:
        print("invalid configuration:")
        for violation in report.violations:
            print(f"  {violation}")
        return 1
    print(f"{config.num_points} points, {len(config.lines)} lines")
    try:
        params = parameters(config)
        print(
            f"binomial parameters: ({params.nu}_{set(params.rank_multiset).pop()}"
            f" {params.b}_3), n = {params.binomial_n}"
        )
    except ValueError:
        print("not a binomial configuration")
    if args.cliques is not None:
        cliques = enumerate_free_cliques(config, args.cliques)
        print(f"free {args.cliques}-cliques: {len(cliques)}")
        for clique in cliques:
            print(f"  {tuple(sorted(clique.vertices))}")
    if args.aut:
        group = automorphism_group(config)
        print(
            f"automorphism group order {group.order}"
            f" ({len(group.generators)} generators)"
        )
    if args.selfcheck:
        return _selfcheck(config, args.seed)
    return 0


def _selfcheck(config: Config, seed: int) -> int:
    """Relabel at random a few times and confirm the canonical form does
    not move and a verified witness exists."""
    rng = random.Random(seed)
    cert = canonical_certificate(config).canonical_lines
    for round_number in range(3):
        images = list(range(config.num_points))
        rng.shuffle(images)
        moved = relabel(config, dict(enumerate(images)))
        if canonical_certificate(moved).canonical_lines != cert:
            print(f"selfcheck FAILED at relabeling {round_number + 1}")
            return 1
        if are_isomorphic(config, moved) is None:
            print(f"selfcheck FAILED to produce a witness {round_number + 1}")
            return 1
    print("selfcheck passed (3 random relabelings, seeded)")
    return 0


def _cmd_iso(args) -> int:
    c1 = _read_config(args.file1)
    c2 = _read_config(args.file2)
    witness = are_isomorphic(c1, c2)
    if witness is None:
        print("not isomorphic")
        return 1
    print("isomorphic; witness:")
    for x in sorted(witness):
        print(f"  {x} -> {witness[x]}")
    return 0


def _cmd_classify(args) -> int:
    report = classify_all(threads=args.threads)
    checks = expectation_checks(report)
    print(diagnostic_text(report, checks))
    if args.golden:
        return 0 if all(c.passed for c in checks) else 1
    return 0


def _cmd_export(args) -> int:
    config = _read_config(args.file)
    if args.stp:
        if not args.dot:
            raise ValueError("the --stp layout is only available with --dot")
        persp = perspective_from_config(config)
        diagram = stp_diagram(persp)
        _write_output(emit_stp_dot(diagram, persp.config), args.out)
        return 0
    if args.dot:
        text = emit_dot(config)
    elif args.json:
        text = emit_json(config)
    else:
        text = emit_psts(config)
    _write_output(text, args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewper",
        description=(
            "Build, analyze, compare, and classify skew-perspective partial"
            " Steiner triple systems."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    build = sub.add_parser("build", help="construct a configuration")
    build.add_argument(
        "what", choices=["grassmannian", "veronesian", "perspective"]
    )
    build.add_argument("--n", type=int, default=None, help="ground-set size")
    build.add_argument("--k", type=int, default=None, help="multiset weight")
    build.add_argument(
        "--phi", default=None, help="level sequence, e.g. \"[(1,3),(1,2)]\""
    )
    build.add_argument(
        "--axis",
        default=None,
        help="axis: grassmannian, veronesian, v5:<cycles>, v6:<cycles>",
    )
    build.add_argument("--out", default=None, help="output file (default stdout)")
    build.set_defaults(handler=_cmd_build)

    analyze = sub.add_parser("analyze", help="inspect a configuration file")
    analyze.add_argument("file")
    analyze.add_argument(
        "--cliques", type=int, default=None, help="enumerate free cliques of this size"
    )
    analyze.add_argument(
        "--aut", action="store_true", help="compute the automorphism group"
    )
    analyze.add_argument(
        "--selfcheck",
        action="store_true",
        help="verify canonical-form invariance under random relabelings",
    )
    analyze.add_argument(
        "--seed", type=int, default=0, help="seed for the selfcheck relabelings"
    )
    analyze.set_defaults(handler=_cmd_analyze)

    iso = sub.add_parser("iso", help="decide isomorphism of two files")
    iso.add_argument("file1")
    iso.add_argument("file2")
    iso.set_defaults(handler=_cmd_iso)

    classify = sub.add_parser(
        "classify", help="classify the 240 catalog instances"
    )
    classify.add_argument(
        "--golden",
        action="store_true",
        help="exit 0 only if every reference check passes",
    )
    classify.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker count (default: SKEWPER_THREADS or 1)",
    )
    classify.set_defaults(handler=_cmd_classify)

    export = sub.add_parser("export", help="re-emit a file in another format")
    export.add_argument("file")
    fmt = export.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--psts", action="store_true")
    export.add_argument(
        "--stp",
        action="store_true",
        help="lay the top axial line out as a three-triangle diagram (with --dot)",
    )
    export.add_argument("--out", default=None)
    export.set_defaults(handler=_cmd_export)
    return parser


def _validate_build_args(args) -> None:
    if args.what == "grassmannian" and args.n is None:
        raise _Usage("build grassmannian requires --n")
    if args.what == "veronesian" and args.k is None:
        raise _Usage("build veronesian requires --k")
    if args.what == "perspective" and (args.phi is None or args.axis is None):
        raise _Usage("build perspective requires --phi and --axis")


class _Usage(Exception):
    pass


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb == "build":
            _validate_build_args(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
