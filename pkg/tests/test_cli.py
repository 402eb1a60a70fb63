"""End-to-end tests of the command-line front end.

Each test drives main() with an argv list and checks the exit-code
contract: 0 success, 1 domain error, 2 usage error.
"""

import pytest

from skewper.cli import main
from skewper.constructions import grassmannian, perspective
from skewper.formats import emit_psts, parse_json, parse_psts
from skewper.skews import zeta


@pytest.fixture()
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture()
def grass_instance_file(tmp_path):
    path = tmp_path / "m451.psts"
    path.write_text(emit_psts(perspective(4, zeta(4), grassmannian(4)).config))
    return str(path)


class TestBuild:
    def test_build_grassmannian(self, run):
        code, out, _ = run("build", "grassmannian", "--n", "4")
        assert code == 0
        config = parse_psts(out)
        assert config.num_points == 6
        assert len(config.lines) == 4
        assert config.labels is not None

    def test_build_grassmannian_domain_error(self, run):
        code, out, err = run("build", "grassmannian", "--n", "2")
        assert code == 1
        assert "error" in err

    def test_build_veronesian(self, run):
        code, out, _ = run("build", "veronesian", "--k", "5")
        assert code == 0
        config = parse_psts(out)
        assert config.num_points == 21
        assert len(config.lines) == 35

    def test_build_perspective_matches_library(self, run):
        code, out, _ = run(
            "build",
            "perspective",
            "--n",
            "4",
            "--phi",
            "[(1,3),(1,2)]",
            "--axis",
            "v5:(1)(2)(3)(4)",
        )
        assert code == 0
        expected = emit_psts(perspective(4, zeta(4), grassmannian(4)).config)
        assert out == expected

    def test_build_perspective_axis_keywords(self, run):
        code, out, _ = run(
            "build", "perspective", "--phi", "[(2,3),()]", "--axis", "grassmannian"
        )
        assert code == 0
        assert parse_psts(out).num_points == 15
        code, out, _ = run(
            "build", "perspective", "--phi", "[(1,2,3),()]", "--axis", "veronesian"
        )
        assert code == 0
        assert parse_psts(out).num_points == 15

    def test_build_perspective_row_count_mismatch(self, run):
        code, _, err = run(
            "build",
            "perspective",
            "--n",
            "5",
            "--phi",
            "[(1,3),(1,2)]",
            "--axis",
            "grassmannian",
        )
        assert code == 1
        assert "error" in err

    def test_out_file_matches_stdout(self, run, tmp_path):
        target = tmp_path / "g.psts"
        code, _, _ = run("build", "grassmannian", "--n", "4", "--out", str(target))
        assert code == 0
        code2, out, _ = run("build", "grassmannian", "--n", "4")
        assert code2 == 0
        assert target.read_text() == out

    def test_usage_errors(self, run):
        assert run("build", "grassmannian")[0] == 2  # missing --n
        assert run("frobnicate")[0] == 2  # unknown verb
        assert run()[0] == 2  # no verb


class TestAnalyze:
    def test_basic_parameters(self, run, grass_instance_file):
        code, out, _ = run("analyze", grass_instance_file)
        assert code == 0
        assert "15 points" in out
        assert "20 lines" in out
        assert "binomial" in out

    def test_cliques(self, run, grass_instance_file):
        code, out, _ = run("analyze", grass_instance_file, "--cliques", "5")
        assert code == 0
        assert "free 5-cliques: 3" in out

    def test_aut(self, run, grass_instance_file):
        code, out, _ = run("analyze", grass_instance_file, "--aut")
        assert code == 0
        assert "automorphism group order 1" in out

    def test_selfcheck_deterministic_per_seed(self, run, grass_instance_file):
        code, out, _ = run(
            "analyze", grass_instance_file, "--selfcheck", "--seed", "11"
        )
        assert code == 0
        assert "selfcheck passed" in out
        code2, out2, _ = run(
            "analyze", grass_instance_file, "--selfcheck", "--seed", "11"
        )
        assert code2 == 0
        assert out2 == out

    def test_missing_file(self, run, tmp_path):
        code, _, err = run("analyze", str(tmp_path / "absent.psts"))
        assert code == 1
        assert "error" in err

    def test_malformed_file(self, run, tmp_path):
        bad = tmp_path / "bad.psts"
        bad.write_text("psts 3 1\n0 1\n")
        code, _, err = run("analyze", str(bad))
        assert code == 1
        assert "error" in err


class TestIso:
    def test_self_iso_identity_witness(self, run, grass_instance_file):
        code, out, _ = run("iso", grass_instance_file, grass_instance_file)
        assert code == 0
        assert "isomorphic" in out
        for i in range(15):
            assert f"{i} -> {i}" in out

    def test_relabeled_pair(self, run, tmp_path, grass_instance_file):
        from skewper.incidence import relabel

        config = parse_psts(open(grass_instance_file).read())
        moved = relabel(config, {i: (i + 4) % 15 for i in range(15)})
        other = tmp_path / "moved.psts"
        other.write_text(emit_psts(moved))
        code, out, _ = run("iso", grass_instance_file, str(other))
        assert code == 0

    def test_non_isomorphic_exits_one(self, run, tmp_path, grass_instance_file):
        from skewper.constructions import veblen, veblen_label
        from skewper.perms import parse_cycles
        from skewper.skews import identity_skew

        other_cfg = perspective(
            4, identity_skew(4), veblen(veblen_label(6, parse_cycles("()", 4)))
        ).config
        other = tmp_path / "other.psts"
        other.write_text(emit_psts(other_cfg))
        code, out, _ = run("iso", grass_instance_file, str(other))
        assert code == 1
        assert "not isomorphic" in out


class TestClassify:
    def test_golden_reports_failures_and_exits_one(self, run):
        code, out, _ = run("classify", "--golden", "--threads", "1")
        assert code == 1
        assert "[FAIL]" in out
        assert "two-free-clique class count" in out
        assert "47" in out

    def test_bad_thread_count(self, run):
        code, _, err = run("classify", "--threads", "0")
        assert code == 1
        assert "error" in err


class TestExport:
    def test_psts_round_trip_byte_identical(self, run, grass_instance_file):
        code, out, _ = run("export", "--psts", grass_instance_file)
        assert code == 0
        assert out == open(grass_instance_file).read()

    def test_json(self, run, grass_instance_file):
        code, out, _ = run("export", "--json", grass_instance_file)
        assert code == 0
        config = parse_json(out)
        assert config.num_points == 15

    def test_dot(self, run, grass_instance_file):
        code, out, _ = run("export", "--dot", grass_instance_file)
        assert code == 0
        assert out.startswith("graph")
        assert '"p"' in out

    def test_stp_layout(self, run, grass_instance_file):
        code, out, _ = run("export", "--dot", "--stp", grass_instance_file)
        assert code == 0
        assert "pos=" in out
        assert "dashed" in out

    def test_stp_requires_dot(self, run, grass_instance_file):
        code, _, err = run("export", "--psts", "--stp", grass_instance_file)
        assert code == 1
        assert "error" in err

    def test_stp_rejected_without_third_clique(self, run, tmp_path):
        from skewper.constructions import veblen, veblen_label
        from skewper.perms import parse_cycles

        cfg = perspective(
            4, zeta(4), veblen(veblen_label(6, parse_cycles("()", 4)))
        ).config
        path = tmp_path / "nostar.psts"
        path.write_text(emit_psts(cfg))
        code, _, err = run("export", "--dot", "--stp", str(path))
        assert code == 1
        assert "error" in err

    def test_stp_rejected_for_unlabeled(self, run, tmp_path):
        from skewper.incidence import make_config

        cfg = make_config(6, [(0, 1, 2), (0, 3, 4)])
        path = tmp_path / "plain.psts"
        path.write_text(emit_psts(cfg))
        code, _, err = run("export", "--dot", "--stp", str(path))
        assert code == 1
        assert "error" in err

    def test_format_flag_required(self, run, grass_instance_file):
        assert run("export", grass_instance_file)[0] == 2
