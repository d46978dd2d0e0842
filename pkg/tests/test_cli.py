import json

import pytest

from groot import cli
from groot.graded_root import GradedRoot
from groot.local_equiv import LocalClass
from groot.monotone import MonotoneSubroot


@pytest.fixture
def run(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("GROOT_CACHE_DIR", str(tmp_path / "cache"))

    def _run(*argv):
        code = cli.main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err

    return _run


def test_root_json(run):
    code, out, _ = run("root", "3,4,13", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["leaves"] == [-6, -2, 0, 0, -2, -6]
    assert GradedRoot.from_json(doc).angles == (-8, -4, -2, -4, -8)


def test_root_default_and_text(run):
    code, out, _ = run("root", "2,3,5")
    assert code == 0 and json.loads(out)["leaves"] == [2]
    code, out, _ = run("root", "2,3,5", "--format", "text")
    assert code == 0 and "leaves [2]" in out


@pytest.mark.parametrize("triple", ["4,6,9", "2,3", "x,y,z", "-2,3,7", "1,2,3"])
def test_root_bad_input_exit_2(run, triple):
    code, _, err = run("root", triple)
    assert code == 2
    assert err


def test_root_dot(run):
    code, out, _ = run("root", "2,3,7", "--format", "dot")
    assert code == 0
    assert out.startswith('digraph "2_3_7" {') and out.rstrip().endswith("}")


def test_plumbing(run):
    code, out, _ = run("plumbing", "3,4,13")
    doc = json.loads(out)
    assert code == 0
    assert doc["K2"] == "-29" and doc["sigma"] == -6 and doc["s"] == 5


def test_subroot(run):
    code, out, _ = run("subroot", "Y1(3)")
    assert code == 0 and out.strip() == "M(12,0;6,6)"
    code, out, _ = run("subroot", "Y1(3)", "--method", "closed-form", "--format", "json")
    doc = json.loads(out)
    assert MonotoneSubroot.from_json(doc) == MonotoneSubroot(((12, 0), (6, 6)))
    assert doc["method"] == "closed-form"
    assert (doc["d_bar"], doc["d_lower"]) == (12, 6)


def test_subroot_of_raw_triple(run):
    code, out, _ = run("subroot", "3,4,13")
    assert code == 0 and out.strip() == "M(0,-2)"


def test_class(run):
    code, out, _ = run("class", "Y2(2)")
    doc = json.loads(out)
    assert code == 0
    assert LocalClass.from_json(doc["class"]) == LocalClass(t=2, x=((3, 1), (2, -1)))
    code, out, _ = run("class", "-Sigma(2,3,5)")
    assert json.loads(out)["classText"] == "-1*T"


def test_auto_method_falls_back_to_closed_form(run):
    code, out, _ = run("--scan-budget", "1000", "class", "Y1(40)")
    assert code == 0 and json.loads(out)["method"] == "closed-form"
    code, _, err = run("--scan-budget", "100", "subroot", "3,4,13")
    assert code == 2 and "budget" in err


def test_complex(run):
    code, out, _ = run("complex", "3,4,13")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["gens"]) == 11
    assert doc["homology"]["towerTop"] == 0


def test_kernel_sw_pair(run):
    code, out, _ = run("kernel", "Y3(2) # -B(8)")
    doc = json.loads(out)
    assert code == 0
    assert doc["inKernel"] and doc["classText"] == "0"
    assert doc["swEquivalencePair"]
    assert "kappa_o_7" in doc["vanishing"]


def test_kernel_family_member(run):
    code, out, _ = run("kernel", "Y1(1) # -B(2) # B(1) # -B(0)")
    doc = json.loads(out)
    assert code == 0 and doc["inKernel"] and not doc["swEquivalencePair"]
    assert doc["vanishing"] == ["d_lower", "d", "d_bar", "phi_n", "mu_bar"]


def test_kernel_with_multiplicities_and_raw_triples(run):
    code, out, _ = run("kernel", "Y1(2) # -B(4) # B(2) # -2*(2,3,5)")
    assert code == 0 and json.loads(out)["inKernel"]


def test_kernel_false_exit_1(run):
    code, out, _ = run("kernel", "Y1(1) # -B(2)")
    assert code == 1
    assert not json.loads(out)["inKernel"]


@pytest.mark.parametrize("expr", ["Y1(1) # ", "Q(3)", "Y1(0)", "--B(1)", "2,3,5"])
def test_kernel_parse_errors(run, expr):
    code, _, _ = run("kernel", expr)
    assert code == 2


def test_independence(run):
    code, out, _ = run("independence", "--family", "paper-A", "--n-max", "100")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] is True
    assert doc["r0_neg"][0] == "1/120"
    code, out, _ = run("independence", "--family", "paper-B", "--n-max", "25")
    assert code == 0


def test_independence_false(run):
    code, out, _ = run("independence", "B(1)", "B(1)")
    assert code == 1 and json.loads(out)["verdict"] is False
    code, _, _ = run("independence", "2,3,7")
    assert code == 1


def test_scan(run):
    code, out, _ = run("scan", "--n-max", "20")
    assert code == 0 and json.loads(out)["counterexample"] is None


def test_config_precedence(run, tmp_path, monkeypatch):
    conf = tmp_path / "conf.json"
    conf.write_text(json.dumps({"cacheDir": str(tmp_path / "from_config"), "scanBudget": 10}))
    parser = cli.build_parser()
    monkeypatch.setenv("GROOT_CACHE_DIR", str(tmp_path / "from_env"))
    got = cli.resolve_config(parser.parse_args(["--config", str(conf), "root", "2,3,5"]))
    assert got.cache_dir == tmp_path / "from_env" and got.scan_budget == 10
    got = cli.resolve_config(parser.parse_args(
        ["--config", str(conf), "--cache-dir", str(tmp_path / "flag"), "root", "2,3,5"]
    ))
    assert got.cache_dir == tmp_path / "flag"
    monkeypatch.delenv("GROOT_CACHE_DIR")
    got = cli.resolve_config(parser.parse_args(["--config", str(conf), "root", "2,3,5"]))
    assert got.cache_dir == tmp_path / "from_config"
    code, _, _ = run("--config", str(tmp_path / "missing.json"), "root", "2,3,5")
    assert code == 2


def test_workers_fan_out(run):
    code, out, _ = run("--workers", "4", "kernel", "Y2(2) # -B(3) # B(2) # -2*B(0)")
    assert code == 0 and json.loads(out)["inKernel"]


@pytest.fixture
def small_suite(monkeypatch):
    """Shrink the sampled checks; the acceptance test runs them at full size."""
    from dataclasses import dataclass

    @dataclass
    class SmallSuite(cli.SuiteConfig):
        n_independence: int = 10
        n_independence_b: int = 5
        n_scan: int = 10
        n_axiom_triples: int = 20
        n_oracle_roots: int = 5
        oracle_max_product: int = 2000
        n_tensor_pairs: int = 10
        tensor_max_product: int = 300

    monkeypatch.setattr(cli, "SuiteConfig", SmallSuite)


def test_reproduce_small(run, small_suite):
    code, out, _ = run("reproduce-paper", "--n-pipeline", "1", "--n-closed-form", "2")
    assert code == 0
    assert out.count("PASS") == 8


def test_reproduce_budget(run):
    code, _, err = run("--scan-budget", "100", "reproduce-paper", "--n-pipeline", "1")
    assert code == 2 and "budget" in err


def test_reproduce_with_corrupt_cache(capsys, tmp_path, small_suite):
    cache = tmp_path / "c"
    assert cli.main(["--cache-dir", str(cache), "root", "2,3,5"]) == 0
    for f in cache.iterdir():
        f.write_text("garbage")
    capsys.readouterr()
    code = cli.main(["--cache-dir", str(cache), "reproduce-paper", "--n-pipeline", "1",
                     "--n-closed-form", "2"])
    assert code == 0


def test_usage_error_exit_2(run):
    code, _, _ = run("nonsense")
    assert code == 2
