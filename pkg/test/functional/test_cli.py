"""Run whole commands the way a user would."""
import json

import graphreg
import graphreg.cli
import graphreg.encoding


def test_construct_is_byte_identical(tmp_path, capsys):
	outputs = []
	for run in ("one", "two"):
		out = tmp_path / "{}.json".format(run)
		assert graphreg.cli.main(["construct", "2", "3", "3", "--seed", "5", "--out", str(out)]) == 0
		outputs.append((out.read_bytes(), (tmp_path / "{}.cert.json".format(run)).read_bytes()))
	assert outputs[0] == outputs[1]
	assert capsys.readouterr().out.count("im=2 ") == 2


def test_construct_then_inspect(tmp_path, capsys):
	out = tmp_path / "star.json"
	assert graphreg.cli.main(["construct", "1", "1", "4", "--out", str(out)]) == 0
	capsys.readouterr()

	assert graphreg.cli.main(["invariants", str(out), "--field", "f2"]) == 0
	assert capsys.readouterr().out.startswith("im=1 m=1 reg=1 dim=4 h=[1,1,-3,3,-1] s=4 ")

	cert = json.loads((tmp_path / "star.cert.json").read_text(encoding="utf-8"))
	assert cert["steps"] == []
	assert cert["base"][0]["provenance"] == "star: K_1,4"

	dot = tmp_path / "star.dot"
	assert graphreg.cli.main(["export-dot", str(out), "--out", str(dot)]) == 0
	assert dot.read_text(encoding="utf-8").count(" -- ") == 4


def test_construct_rejects_bad_triples(tmp_path, capsys):
	assert graphreg.cli.main(["construct", "2", "1", "1", "--out", str(tmp_path / "g.json")]) == 2
	assert "InvalidTriple" in capsys.readouterr().err
	assert not (tmp_path / "g.json").exists()


def test_suspend_pentagon(c5, graph_file, tmp_path, capsys):
	path = graph_file(c5, "c5.json")
	cone = str(tmp_path / "cone.json")
	assert graphreg.cli.main(["suspend", path, "--s", "", "--out", cone]) == 0
	assert "after:     (1 + 4λ)/(1 - λ)^2" in capsys.readouterr().out
	assert graphreg.encoding.read_graph(cone) == graphreg.s_suspension(c5, [])

	assert graphreg.cli.main(["suspend", path, "--s", "", "--edge", "1,2"]) == 0
	capsys.readouterr()
	assert graphreg.cli.main(["suspend", path, "--s", "1,2"]) == 2
	assert "NotIndependent" in capsys.readouterr().err


def test_expand_and_verify(c5, graph_file, capsys):
	assert graphreg.cli.main(["expand", graph_file(c5), "--degree", "3"]) == 0
	assert capsys.readouterr().out == "1 5 10 15\n"

	assert graphreg.cli.main(["verify", "--trials", "10", "--seed", "1", "--max-n", "7"]) == 0
	assert "failures=0" in capsys.readouterr().out
