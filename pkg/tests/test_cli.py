"""CLI surface, literal parsing, reports, cache, and figure rendering."""

import json
import re

import pytest

from abiso.cache import (
    CacheError,
    cache_lattice,
    lattice_cache_path,
    load_lattice,
    serialize_lattice,
)
from abiso.cli import main
from abiso.groups import make_group
from abiso.lattice import SubgroupLattice, all_subgroups
from abiso.literals import (
    LiteralError,
    format_group_literal,
    parse_generators,
    parse_group_literal,
)
from abiso.report import CaseResult, VerificationReport
from abiso.suites import run_suite


class TestGroupLiterals:
    def test_basic(self):
        assert parse_group_literal("2x4") == make_group([2, 4])

    def test_composite_canonicalizes(self):
        assert parse_group_literal("6") == make_group([2, 3])
        assert format_group_literal(parse_group_literal("6")) == "2x3"

    def test_order_insensitive(self):
        assert parse_group_literal("4x2") == parse_group_literal("2x4")

    def test_empty_is_trivial(self):
        assert parse_group_literal("") == make_group([])
        assert format_group_literal(make_group([])) == ""

    def test_round_trip(self):
        for text in ["2x4", "3x9x25", "8", "2x3"]:
            G = parse_group_literal(text)
            assert parse_group_literal(format_group_literal(G)) == G

    @pytest.mark.parametrize("bad,col", [("2xx4", 3), ("x4", 1), ("4x", 3), ("2x4x", 5), ("ab", 1)])
    def test_syntax_error_column(self, bad, col):
        with pytest.raises(LiteralError) as err:
            parse_group_literal(bad)
        assert err.value.column == col

    def test_unit_order_rejected(self):
        with pytest.raises(LiteralError):
            parse_group_literal("2x1")


class TestGeneratorLiterals:
    def test_parse_and_reduce(self):
        G = make_group([2, 4])
        assert parse_generators("(1,2);(0,2)", G) == ((1, 2), (0, 2))
        assert parse_generators("(3, 5)", G) == ((1, 1),)

    def test_empty(self):
        assert parse_generators("", make_group([4])) == ()

    def test_arity_error(self):
        with pytest.raises(LiteralError):
            parse_generators("(1,2,3)", make_group([2, 4]))

    def test_junk_error(self):
        with pytest.raises(LiteralError):
            parse_generators("1,2", make_group([2, 4]))


class TestReportModel:
    def test_summary_consistency(self):
        report = run_suite("example-2-6")
        s = report.summary
        assert s["total"] == len(report.cases)
        assert s["passed"] + s["failed"] == s["total"]

    def test_json_key_order(self):
        report = run_suite("psi-forms", {"max_exponent_sum": 2})
        doc = json.loads(report.to_json())
        assert list(doc) == [
            "schema_version", "suite", "parameters", "cases", "summary", "runtime_ms",
        ]
        assert doc["schema_version"] == 1

    def test_deterministic_modulo_runtime(self):
        a = run_suite("lemma-2-3", {"order_max": 32, "three_group_max": 27}).to_json()
        b = run_suite("lemma-2-3", {"order_max": 32, "three_group_max": 27}).to_json()
        scrub = lambda s: re.sub(r'"runtime_ms": \d+', '"runtime_ms": 0', s)
        assert scrub(a) == scrub(b)

    def test_unknown_suite_and_param(self):
        with pytest.raises(ValueError):
            run_suite("nope")
        with pytest.raises(ValueError):
            run_suite("psi-forms", {"bogus": 1})


class TestCache:
    def test_round_trip(self, tmp_path):
        G = make_group([2, 4])
        L = all_subgroups(G)
        cache_lattice(G, L, tmp_path)
        back = load_lattice(G, tmp_path)
        assert back is not None
        assert [H.elements for H in back.subgroups] == [H.elements for H in L.subgroups]
        assert [H.generators for H in back.subgroups] == [H.generators for H in L.subgroups]

    def test_miss(self, tmp_path):
        assert load_lattice(make_group([2, 4]), tmp_path) is None

    def test_corrupt_file_warns_and_misses(self, tmp_path):
        G = make_group([2, 4])
        cache_lattice(G, all_subgroups(G), tmp_path)
        path = lattice_cache_path(tmp_path, G)
        path.write_text(path.read_text()[: len(path.read_text()) // 2])
        with pytest.warns(UserWarning):
            assert load_lattice(G, tmp_path) is None

    def test_conflicting_write_rejected(self, tmp_path):
        G = make_group([2, 4])
        L = all_subgroups(G)
        cache_lattice(G, L, tmp_path)
        doctored = SubgroupLattice(G, L.subgroups[:1] + (L.subgroups[-1],), "join-closure")
        with pytest.raises(CacheError):
            cache_lattice(G, doctored, tmp_path)

    def test_identical_rewrite_ok(self, tmp_path):
        G = make_group([3, 3])
        L = all_subgroups(G)
        cache_lattice(G, L, tmp_path)
        cache_lattice(G, L, tmp_path)
        assert serialize_lattice(L) == lattice_cache_path(tmp_path, G).read_text()


class TestCli:
    def test_psi_closed_and_brute(self, capsys):
        assert main(["psi", "2x4"]) == 0
        assert "23" in capsys.readouterr().out
        assert main(["psi", "2x4", "--brute"]) == 0
        assert "23" in capsys.readouterr().out

    def test_subgroups_table(self, capsys):
        assert main(["subgroups", "2x4"]) == 0
        out = capsys.readouterr().out
        assert "subgroups\t8" in out

    def test_subgroups_order_filter(self, capsys):
        assert main(["subgroups", "2x4", "--order", "2"]) == 0
        assert "subgroups\t3" in capsys.readouterr().out

    def test_subgroups_goursat_backend(self, capsys):
        assert main(["subgroups", "2x4", "--backend", "goursat"]) == 0
        assert "subgroups\t8" in capsys.readouterr().out

    def test_isolated_methods_agree(self, capsys):
        counts = []
        for method in ("brute", "psi", "structural"):
            assert main(["isolated", "2x4", "--method", method]) == 0
            out = capsys.readouterr().out
            counts.append(next(l for l in out.splitlines() if l.startswith("isolated")))
        assert len({c.split("\t")[1] for c in counts}) == 1
        assert counts[0].split("\t")[1] == "4"

    def test_quotient(self, capsys):
        assert main(["quotient", "2x4", "--subgroup", "(1,2)"]) == 0
        out = capsys.readouterr().out
        assert "quotient\t4" in out
        assert "layout\t2 4" in out

    def test_parse_error_exit_code(self, capsys):
        assert main(["psi", "2xx4"]) == 2
        assert main(["quotient", "2x4", "--subgroup", "(1)"]) == 2

    def test_bound_error_exit_code(self, capsys):
        assert main(["subgroups", "128"]) == 3
        assert main(["psi", "4096", "--brute"]) == 3

    def test_unknown_suite_is_usage_error(self, capsys):
        assert main(["verify", "nope"]) == 2

    def test_verify_writes_report_and_figures(self, tmp_path, capsys):
        json_path = tmp_path / "r.json"
        figdir = tmp_path / "figs"
        code = main([
            "verify", "example-2-6", "--json", str(json_path), "--figures", str(figdir),
        ])
        assert code == 0
        doc = json.loads(json_path.read_text())
        assert doc["suite"] == "example-2-6"
        assert doc["summary"]["failed"] == 0
        pngs = sorted(p.name for p in figdir.glob("*.png"))
        assert pngs == ["example-2-6-by-order.png", "example-2-6-values.png"]
        csv_lines = (figdir / "example-2-6-cases.csv").read_text().splitlines()
        assert csv_lines[0] == "group,subgroup_generators,label,expected,actual,pass"
        assert len(csv_lines) == doc["summary"]["total"] + 1

    def test_verify_cache_round_trip(self, tmp_path, capsys):
        cache_dir = tmp_path / "cache"
        args = ["verify", "lemma-2-3", "--order-max", "32",
                "--cache-dir", str(cache_dir), "--verify-cache"]
        assert main(args) == 0
        assert list(cache_dir.glob("*.json"))
        assert main(args) == 0  # second run revalidates against the stored bytes

    def test_verify_failure_exit_code(self, monkeypatch, capsys):
        bad = VerificationReport(
            suite="example-2-6",
            parameters={},
            cases=[CaseResult("2x4", 4, 5, False)],
        )
        monkeypatch.setattr("abiso.cli.run_suite", lambda name, params: bad)
        assert main(["verify", "example-2-6"]) == 1
        assert "failed=1" in capsys.readouterr().out
