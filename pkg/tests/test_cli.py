import pytest

from flagcalc.cli import main
from flagcalc.textio import format_graph, parse_complex, parse_graph, parse_poset
from flagcalc import barycentric_graph, clique_complex, complete_graph, cycle_graph


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.graph"
    path.write_text(format_graph(complete_graph("abc")))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_ok_and_error(tmp_path, capsys, k3_file):
    code, out, _ = run(capsys, "check", "graph", k3_file)
    assert code == 0 and "ok" in out

    bad = tmp_path / "bad.graph"
    bad.write_text("v a\nv a\n")
    code, _, err = run(capsys, "check", "graph", str(bad))
    assert code == 3 and "line 2" in err


def test_reduce_modes(tmp_path, capsys, k3_file):
    code, out, _ = run(capsys, "reduce", k3_file, "--mode", "s")
    assert code == 0 and out.startswith("yes")

    c5 = tmp_path / "c5.graph"
    c5.write_text(format_graph(cycle_graph("abcde")))
    code, out, _ = run(capsys, "reduce", str(c5), "--mode", "ws")
    assert code == 1 and out.startswith("no")

    code, out, _ = run(capsys, "reduce", str(c5), "--mode", "s", "--budget", "0")
    assert code == 2 and out.startswith("unknown")

    code, out, _ = run(capsys, "reduce", k3_file, "--mode", "dismantle")
    assert code == 0


def test_reduce_with_target(tmp_path, capsys, k3_file):
    target = tmp_path / "k1.graph"
    target.write_text("v a\n")
    code, out, _ = run(capsys, "reduce", k3_file, "--mode", "dismantle",
                       "--target", str(target))
    assert code == 0 and out.startswith("yes")

    full = tmp_path / "g.graph"
    reduced = tmp_path / "h.graph"
    run(capsys, "corpus", "dump", "stuck-7-vertex", "--out", str(full))
    run(capsys, "corpus", "dump", "stuck-7-vertex-reduced", "--out", str(reduced))
    code, out, _ = run(capsys, "reduce", str(full), "--mode", "ws",
                       "--target", str(reduced))
    assert code == 0 and out.startswith("yes")
    assert "-e b c" in out  # the single edge deletion, printed as a certificate


def test_map_functors(tmp_path, capsys, k3_file):
    code, out, _ = run(capsys, "map", "delta-g", k3_file)
    assert code == 0 and parse_complex(out) == clique_complex(complete_graph("abc"))

    code, out, _ = run(capsys, "map", "bd", k3_file)
    assert code == 0 and parse_graph(out) == barycentric_graph(complete_graph("abc"))

    code, out, _ = run(capsys, "map", "clique-poset", k3_file)
    assert code == 0
    poset = parse_poset(out)
    assert len(poset.elements) == 7

    cx = tmp_path / "tri.complex"
    run(capsys, "map", "delta-g", k3_file, "--out", str(cx))
    code, out, _ = run(capsys, "map", "sk", str(cx))
    assert code == 0 and parse_graph(out) == complete_graph("abc")
    code, out, _ = run(capsys, "map", "gamma", str(cx))
    assert code == 0 and len(parse_graph(out).vertices) == 7
    code, out, _ = run(capsys, "map", "face-poset", str(cx))
    assert code == 0

    po = tmp_path / "chain.poset"
    po.write_text("p a\np b\n< a b\n")
    code, out, _ = run(capsys, "map", "comp", str(po))
    assert code == 0 and parse_graph(out) == complete_graph("ab")
    code, out, _ = run(capsys, "map", "order-complex", str(po))
    assert code == 0


def test_certify_round_trip(tmp_path, capsys, k3_file):
    cert = tmp_path / "k3.cert"
    code, _, _ = run(capsys, "reduce", k3_file, "--mode", "s", "--out", str(cert))
    assert code == 0
    code, out, _ = run(capsys, "certify", str(cert), "--start", k3_file)
    assert code == 0 and "valid" in out

    tampered = cert.read_text().replace("-v a", "-v b", 1)
    bad = tmp_path / "bad.cert"
    bad.write_text(tampered)
    code, out, _ = run(capsys, "certify", str(bad), "--start", k3_file)
    assert code == 1 and "invalid" in out


def test_corpus_commands(tmp_path, capsys):
    code, out, _ = run(capsys, "corpus", "list")
    assert code == 0 and "six-regular-10" in out

    dumped = tmp_path / "six.graph"
    code, _, _ = run(capsys, "corpus", "dump", "six-regular-10", "--out", str(dumped))
    assert code == 0
    g = parse_graph(dumped.read_text())
    assert len(g.vertices) == 10 and len(g.edges) == 30

    code, out, _ = run(capsys, "reduce", str(dumped), "--mode", "ws")
    assert code == 1

    code, out, _ = run(capsys, "corpus", "verify")
    assert code == 0 and "FAIL" not in out


def test_identities_command(capsys):
    code, out, _ = run(capsys, "identities", "--seed", "1", "--max-size", "4",
                       "--samples", "4")
    assert code == 0
    assert "total=" in out and "fail=0" in out


def test_environment_overrides(monkeypatch, capsys, k3_file):
    monkeypatch.setenv("FLAGCALC_BUDGET", "0")
    code, out, _ = run(capsys, "reduce", k3_file, "--mode", "s")
    assert code == 2 and out.startswith("unknown")
    code, out, _ = run(capsys, "reduce", k3_file, "--mode", "s", "--budget", "50")
    assert code == 0
