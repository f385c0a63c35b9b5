import io
import json

import pytest

from topvertex.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestFan:
    def test_validate_ok(self):
        code, out = run("fan", "validate", "local_p2")
        assert code == 0 and json.loads(out)["valid"]

    def test_validate_bad(self):
        code, out = run("fan", "validate", "bad")
        assert code == 1 and not json.loads(out)["valid"]

    def test_malformed_json(self, tmp_path):
        p = tmp_path / "broken.json"
        p.write_text('{"rays": [[0, 0],')
        code, out = run("fan", "validate", str(p))
        assert code == 1
        d = json.loads(out)
        assert d["error"].startswith("malformed JSON") and (d["line"], d["column"]) == (1, 18)

    def test_graph(self):
        code, out = run("fan", "graph", "conifold")
        assert code == 0 and len(json.loads(out)["edges"]) == 1

    def test_flop(self):
        code, out = run("fan", "flop", "local_f1", "--edge", "E")
        d = json.loads(out)
        assert code == 0 and d["flopped"] and d["class_map"]

    def test_unknown_edge(self):
        code, out = run("fan", "flop", "local_f1", "--edge", "nope")
        d = json.loads(out)
        assert code == 1 and "E" in d["valid_names"]

    def test_ks_and_blowup(self):
        code, out = run("fan", "ks", "1,0:0,1:-1,-1")
        assert code == 0 and len(json.loads(out)["rays"]) == 4
        code, out = run("fan", "blowup", "1,0:0,1:-1,-1", "--cone", "1,0:0,1")
        assert code == 0 and [1, 1] in json.loads(out)["surface"]


class TestComputations:
    def test_vertex(self):
        code, out = run("vertex", "1", "-", "-", "--oracle-points", "2")
        lines = out.splitlines()
        assert code == 0 and lines[1:] == ["t=2\tok", "t=3\tok"]

    def test_zfun(self):
        code, out = run("zfun", "conifold", "--cap", "1")
        assert code == 0
        assert out.splitlines()[-1].startswith("Q0\t")

    def test_gw(self):
        code, out = run("gw", "local_p2", "--cap", "2")
        assert code == 0
        assert out.splitlines()[1:] == ["1\t0\t3", "2\t0\t-45/8"]

    def test_flop_compare(self):
        code, out = run("flop-compare", "local_f1", "--edge", "E", "--cap", "2")
        assert code == 0 and json.loads(out)["holds"]

    def test_blowup_compare(self):
        code, out = run("blowup-compare", "1,0:0,1:-1,-1", "--cone", "1,0:0,1", "--cap", "2")
        assert code == 0 and json.loads(out)["holds"]

    def test_nekrasov(self):
        code, out = run("nekrasov", "--cap", "1", "--fcap", "1")
        assert code == 0 and out.rstrip().endswith("# diff")

    def test_nekrasov_mismatch_exit(self):
        code, out = run("nekrasov", "--cap", "2", "--fcap", "1", "--form", "displayed")
        assert code == 1
        assert out.split("# diff\n")[1].strip()

    def test_check_identities(self):
        code, out = run("check", "identities", "--max-size", "2")
        assert code == 0 and out.count("PASS") == 11

    def test_check_flop_local(self):
        code, out = run("check", "flop-local", "--max-size", "2")
        assert code == 0 and "FAIL" not in out

    def test_usage_error(self):
        with pytest.raises(SystemExit) as e:
            run("gw", "local_p2", "--cap", "-1")
        assert e.value.code == 2


class TestDeterminism:
    def test_repeat(self):
        assert run("gw", "local_p1xp1", "--cap", "3") == run("gw", "local_p1xp1", "--cap", "3")

    def test_workers(self):
        a = run("--workers", "1", "zfun", "local_p2", "--cap", "2")
        b = run("--workers", "2", "zfun", "local_p2", "--cap", "2")
        assert a == b
