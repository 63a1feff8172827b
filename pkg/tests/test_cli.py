import json
import subprocess
import sys
from pathlib import Path

from trielem.catalog import parse_expr
from trielem.classify import verify_pair
from trielem.cli import main, run
from trielem.lattice import discriminant_group
from trielem.linalg import determinant, signature

GOLDENS = Path(__file__).resolve().parents[1] / "goldens"


def lattice_fingerprint(expr):
    lat = parse_expr(expr)
    group = discriminant_group(lat)
    return (
        lat.rank,
        signature(lat.gram),
        abs(determinant(lat.gram)),
        group.invariant_factors,
    )


class TestTables:
    def test_table1_json_roundtrip(self):
        result = run(["table1", "--format", "json"])
        assert result.exit_code == 0
        rows = json.loads(result.payload)
        assert len(rows) == 32
        assert sum(r["exists"] for r in rows) == 31
        # re-verify a sample of parsed rows end to end
        for row in rows[:6]:
            if row["exists"]:
                report = verify_pair(parse_expr(row["S"]), parse_expr(row["T"]))
                assert report.ok, (row, report.failures())

    def test_table2_json(self):
        result = run(["table2", "--format", "json"])
        assert result.exit_code == 0
        rows = json.loads(result.payload)
        assert len(rows) == 31
        assert sum(r["status"] != "nonexistent" for r in rows) == 24
        assert sum(r["status"] == "nonexistent" for r in rows) == 7

    def test_byte_identical_reruns(self):
        for argv in (
            ["table1"],
            ["table1", "--format", "json"],
            ["table2", "--format", "csv"],
            ["lattice", "U(3)+A2", "--format", "json"],
        ):
            assert run(argv) == run(argv)

    def test_csv_headers(self):
        t1 = run(["table1", "--format", "csv"]).payload.splitlines()
        assert t1[0] == "rho,s,S,T,exists"
        assert len(t1) == 33
        t2 = run(["table2", "--format", "csv"]).payload.splitlines()
        assert t2[0] == "S,status,M,g,N"
        assert len(t2) == 32

    def test_markdown_table2_mentions_special_row(self):
        payload = run(["table2"]).payload
        assert "{pt} × 3" in payload

    def test_goldens_match_by_invariants(self):
        golden = json.loads((GOLDENS / "table1.json").read_text())
        fresh = json.loads(run(["table1", "--format", "json"]).payload)
        assert len(golden) == len(fresh)
        for g_row, f_row in zip(golden, fresh):
            assert (g_row["rho"], g_row["s"], g_row["exists"]) == (
                f_row["rho"],
                f_row["s"],
                f_row["exists"],
            )
            assert lattice_fingerprint(g_row["S"]) == lattice_fingerprint(f_row["S"])
            if g_row["exists"]:
                assert lattice_fingerprint(g_row["T"]) == lattice_fingerprint(
                    f_row["T"]
                )
        golden2 = json.loads((GOLDENS / "table2.json").read_text())
        fresh2 = json.loads(run(["table2", "--format", "json"]).payload)
        assert golden2 == fresh2


class TestLatticeInfo:
    def test_u3_info(self):
        result = run(["lattice", "U(3)", "--info", "--format", "json"])
        assert result.exit_code == 0
        info = json.loads(result.payload)
        assert info["rank"] == 2
        assert info["det"] == -9
        assert info["even"] is True
        assert info["signature"] == [1, 0, 1]
        assert info["invariant_factors"] == [3, 3]
        assert info["s"] == 2

    def test_text_info(self):
        result = run(["lattice", "U(3)"])
        assert result.exit_code == 0
        assert "signature: (1, 1)" in result.payload
        assert "det: -9" in result.payload

    def test_json_file_input(self, tmp_path):
        path = tmp_path / "lat.json"
        path.write_text(json.dumps({"name": "plane", "gram": [[0, 1], [1, 0]]}))
        result = run(["lattice", str(path), "--format", "json"])
        assert result.exit_code == 0
        assert json.loads(result.payload)["det"] == -1

    def test_parse_error_is_exit_2(self):
        assert run(["lattice", "U+"]).exit_code == 2
        assert run(["lattice", "Q7"]).exit_code == 2


class TestVerifyPair:
    def test_good_pair(self):
        result = run(["verify-pair", "--s", "U", "--t", "U^2+E8^2"])
        assert result.exit_code == 0
        assert "result: verified" in result.payload

    def test_failing_pair(self):
        result = run(["verify-pair", "--s", "U", "--t", "U+U(3)+E8^2"])
        assert result.exit_code == 1
        assert "determinants: FAIL" in result.payload

    def test_json_format(self):
        result = run(
            ["verify-pair", "--s", "U+E6", "--t", "U^2+E8+A2", "--format", "json"]
        )
        assert result.exit_code == 0
        assert json.loads(result.payload)["ok"] is True


class TestIsometryCommand:
    def test_witness(self, tmp_path):
        path = tmp_path / "mat.json"
        path.write_text(
            json.dumps(
                {
                    "matrix": [
                        [-2, 0, -1, 0],
                        [0, 1, 0, -1],
                        [3, 0, 1, 0],
                        [0, 3, 0, -2],
                    ]
                }
            )
        )
        result = run(
            [
                "isometry",
                "--lattice",
                "U(3)+U",
                "--matrix",
                str(path),
                "--format",
                "json",
            ]
        )
        assert result.exit_code == 0
        info = json.loads(result.payload)
        assert info == {
            "isometry": True,
            "order": 3,
            "discriminant_action_trivial": True,
        }

    def test_non_isometry_exits_1(self, tmp_path):
        path = tmp_path / "mat.json"
        path.write_text(json.dumps({"matrix": [[1, 1], [0, 1]]}))
        result = run(["isometry", "--lattice", "U", "--matrix", str(path)])
        assert result.exit_code == 1

    def test_missing_file_exits_2(self):
        result = run(["isometry", "--lattice", "U", "--matrix", "no-such-file.json"])
        assert result.exit_code == 2


class TestSearchOrder3:
    def test_found(self):
        result = run(["search-order3", "--lattice", "A2", "--format", "json"])
        assert result.exit_code == 0
        assert json.loads(result.payload)["found"] is True

    def test_not_found(self):
        result = run(["search-order3", "--lattice", "A2(3)", "--format", "json"])
        assert result.exit_code == 0
        assert json.loads(result.payload)["found"] is False

    def test_indefinite_is_invalid_input(self):
        assert run(["search-order3", "--lattice", "U"]).exit_code == 2


class TestLefschetzCommand:
    def test_rank2_key(self):
        result = run(["lefschetz", "--rho", "2", "--s", "0", "--format", "json"])
        assert result.exit_code == 0
        info = json.loads(result.payload)
        assert info["status"] == "generic"
        assert (info["M"], info["g"], info["N"]) == (0, 5, 2)
        assert info["holomorphic_lefschetz_ok"] is True
        assert info["topological_ok"] is True

    def test_special_key(self):
        result = run(["lefschetz", "--rho", "8", "--s", "7", "--format", "json"])
        info = json.loads(result.payload)
        assert info["status"] == "special_three_points"
        assert info["holomorphic_lefschetz_ok"] is True

    def test_nonexistent_key(self):
        result = run(["lefschetz", "--rho", "10", "--s", "8", "--format", "json"])
        assert result.exit_code == 0
        assert json.loads(result.payload)["status"] == "nonexistent"

    def test_unclassified_key_exits_2(self):
        assert run(["lefschetz", "--rho", "6", "--s", "0"]).exit_code == 2


class TestDriver:
    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"]).exit_code == 2
        capsys.readouterr()

    def test_unknown_flag(self, capsys):
        assert run(["table1", "--nope"]).exit_code == 2
        capsys.readouterr()

    def test_main_exit_codes(self, capsys):
        assert main(["lattice", "U"]) == 0
        out = capsys.readouterr()
        assert "rank: 2" in out.out
        assert main(["lattice", "U+"]) == 2
        out = capsys.readouterr()
        assert "error" in out.err

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "trielem.cli", "table1", "--format", "csv"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[0] == "rho,s,S,T,exists"
