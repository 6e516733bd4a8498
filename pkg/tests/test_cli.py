import json
from pathlib import Path

import pytest

from sunforest.cli import GraphFileError, dump_graph, format_decimal, load_graph, main
from sunforest.graph import build_oriented_sunlet, build_sunlet
from sunforest.polynomial import ONE, X, parse_poly

DATA = Path(__file__).parent / "data"
SUNLET3 = DATA / "sunlet3.json"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, obj, name="g.json"):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


class TestCompute:
    def test_plain(self, capsys):
        assert run(capsys, "compute", "3") == (0, "x^3 + 6*x^2 + 9*x\n", "")

    def test_oriented(self, capsys):
        assert run(capsys, "compute", "3", "--oriented")[1] == "x^3 + 3*x^2 + 3*x\n"

    def test_homogeneous(self, capsys):
        assert run(capsys, "compute", "2", "--homogeneous")[1] == "a^2 + 4*a*b\n"
        assert run(capsys, "compute", "1", "--homogeneous")[1] == "a\n"

    @pytest.mark.parametrize("bad", ["0", "-3", "x"])
    def test_bad_argument(self, capsys, bad):
        with pytest.raises(SystemExit) as exc:
            main(["compute", bad])
        assert exc.value.code == 2


class TestFactor:
    def test_n12(self, capsys):
        code, out, _ = run(capsys, "factor", "12")
        assert code == 0
        assert out.splitlines() == [
            "x",
            "(x + 1)^2",
            "(x + 2)^2",
            "(x + 3)^2",
            "(x + 4)",
            "(x^2 + 4*x + 1)^2",
            "verified: product equals expansion",
        ]

    def test_oriented_n6(self, capsys):
        out = run(capsys, "factor", "6", "--oriented")[1].splitlines()
        assert out[:-1] == ["x", "(x + 2)", "(x^2 + x + 1)", "(x^2 + 3*x + 3)"]

    def test_n1(self, capsys):
        assert run(capsys, "factor", "1")[1] == "x\nverified: product equals expansion\n"


class TestRoots:
    def test_n1(self, capsys):
        assert run(capsys, "roots", "1")[1] == "0\n"

    def test_n6_exact_values(self, capsys):
        assert run(capsys, "roots", "6")[1].splitlines() == ["0", "-1", "-3", "-4", "-3", "-1"]

    def test_n5(self, capsys):
        lines = run(capsys, "roots", "5")[1].splitlines()
        assert lines[0] == "0"
        value, residual = lines[1].split("\t")
        assert value == "-1.381966"
        assert float(residual) < 1e-9
        assert lines[2].startswith("-3.618034\t")

    def test_format_decimal(self):
        assert format_decimal(-1.3819660112501) == "-1.381966"
        assert format_decimal(-1e-12) == "0.000000"
        assert format_decimal(2.5e-7) == "0.000000"
        assert format_decimal(1.5e-6) == "0.000002"


class TestVerify:
    def test_full_suite(self, capsys):
        code, out, err = run(capsys, "verify", "--nmax", "12")
        assert code == 0 and err == ""
        assert "FAIL" not in out and out.count("PASS") >= 60

    def test_single_check(self, capsys):
        code, out, _ = run(capsys, "verify", "--check", "log-concavity", "--nmax", "200")
        assert code == 0
        # log-concavity starts at n = 3
        assert out.count("\n") == 198 and "FAIL" not in out

    def test_unknown_check(self, capsys):
        code, out, err = run(capsys, "verify", "--check", "nonsense")
        assert code == 2 and out == "" and "nonsense" in err

    def test_structured(self, capsys):
        code, out, _ = run(capsys, "verify", "--nmax", "3", "--check", "golden", "--format", "structured")
        data = json.loads(out)
        assert [r["params"] for r in data] == [[1], [2], [3]]
        assert {r["status"] for r in data} == {"PASS"}

    def test_no_timing_is_deterministic(self, capsys):
        first = run(capsys, "verify", "--nmax", "6", "--no-timing")[1]
        second = run(capsys, "verify", "--nmax", "6", "--no-timing")[1]
        assert first == second
        assert all(line.endswith("\t0") for line in first.splitlines() if not line.startswith(" "))


class TestGraphCommands:
    def test_forest_sum(self, capsys):
        assert run(capsys, "forest-sum", str(SUNLET3)) == (0, "x^3 + 6*x^2 + 9*x\n", "")

    def test_forest_sum_oracle(self, capsys):
        code, out, _ = run(capsys, "forest-sum", str(SUNLET3), "--oracle")
        assert code == 0
        assert out == "x^3 + 6*x^2 + 9*x\noracle: MATCH (16 forests)\n"

    def test_enumerate(self, capsys):
        code, out, _ = run(capsys, "enumerate", str(SUNLET3))
        assert code == 0 and out == "x^3 + 6*x^2 + 9*x\nforests: 16\n"

    def test_oriented_file(self, capsys, tmp_path):
        path = write(tmp_path, dump_graph(build_oriented_sunlet(5, X, ONE)))
        code, out, _ = run(capsys, "forest-sum", path, "--oracle")
        assert code == 0
        assert out == "x^5 + 5*x^4 + 10*x^3 + 10*x^2 + 5*x\noracle: MATCH (31 forests)\n"

    def test_oriented_flag_overrides_file(self, capsys, tmp_path):
        # sunlet file read as arcs: cycle arcs v_i -> v_(i+1), pendant arcs v_i -> v_i'
        code, out, _ = run(capsys, "forest-sum", str(SUNLET3), "--oriented")
        assert code == 0
        assert out == "0\n"

    def test_cap_exceeded(self, capsys, tmp_path):
        path = write(tmp_path, dump_graph(build_sunlet(12, X, ONE)))
        code, out, err = run(capsys, "forest-sum", path, "--oracle")
        assert code == 3
        assert out.startswith("x^12 + ")
        assert "24" in err
        assert run(capsys, "enumerate", str(SUNLET3), "--cap", "5")[0] == 3

    def test_no_nodes(self, capsys, tmp_path):
        g = {"vertices": [{"id": "a"}, {"id": "b"}], "edges": [{"u": "a", "v": "b", "weight": "x"}]}
        code, out, err = run(capsys, "forest-sum", write(tmp_path, g))
        assert code == 2 and out == ""
        assert "graph has no nodes" in err

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("{not json", "line 1"),
            ('{"vertices": [{"id": "a", "node": true}], "edges": [{"u": "a", "v": "z"}]}', "edges[0].v"),
            ('{"vertices": [{"id": "a", "node": true}, {"id": "b"}], "edges": [{"u": "a", "v": "b", "weight": "x +* 1"}]}', "offset 3"),
            ('{"vertices": [{"id": "a"}, {"id": "a"}], "edges": []}', "duplicate id"),
            ('{"vertices": [{"id": "a", "node": true}], "edges": [{"u": "a", "v": "a"}]}', "loop"),
            ("[]", "top level"),
        ],
    )
    def test_bad_files(self, capsys, tmp_path, text, fragment):
        code, out, err = run(capsys, "forest-sum", write(tmp_path, text))
        assert code == 2 and out == ""
        assert fragment in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "forest-sum", str(tmp_path / "absent.json"))[0] == 2

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        import sunforest.cli as cli

        monkeypatch.setattr(cli, "forest_sum", lambda g: parse_poly("x^3"))
        code, out, _ = run(capsys, "forest-sum", str(SUNLET3), "--oracle")
        assert code == 4
        assert "oracle: MISMATCH (16 forests)" in out


class TestGraphFile:
    def test_round_trip(self):
        g = build_sunlet(4, parse_poly("2*x + 1"), parse_poly("x^2"))
        h = load_graph(dump_graph(g))
        # the file format has no cycle-edge tag
        assert h.cycle_edges is None
        assert (h.vertex_count, h.node_flags, h.edges) == (g.vertex_count, g.node_flags, g.edges)
        assert [h.label(v) for v in range(h.vertex_count)] == [g.label(v) for v in range(g.vertex_count)]

    def test_default_weight_and_order(self):
        g = load_graph('{"vertices": [{"id": "z", "node": true}, {"id": "a"}], "edges": [{"u": "a", "v": "z"}]}')
        assert g.node_flags == (True, False)
        assert g.edges == ((1, 0, ONE),)

    def test_error_type(self):
        with pytest.raises(GraphFileError):
            load_graph('{"vertices": 3}')


def test_deterministic_output(capsys):
    for argv in (["compute", "17"], ["factor", "30"], ["roots", "9"], ["forest-sum", str(SUNLET3), "--oracle"]):
        assert run(capsys, *argv) == run(capsys, *argv)
