import json

import pytest

from repknit.cli import main
from repknit.config import load_config, parse_config
from repknit.errors import ConfigError

A4_CONFIG = {
    "quiver": {
        "type": "A4",
        "vertices": ["1", "2", "3", "4"],
        "arrows": [["1", "2"], ["2", "3"], ["1", "4"]],
        "height": {"1": 2, "2": 1, "3": 0, "4": 1},
    },
    "window": {"levels": [-44, 40], "margin": 12},
    "dimension_vector": {"4[0]": 1, "1[1]": 1, "4[1]": 1},
    "display_level_shift": 11,
}

A2_CONFIG = {
    "quiver": {
        "type": "A2",
        "vertices": ["1", "2"],
        "arrows": [["1", "2"]],
        "height": {"1": 1, "2": 0},
    },
    "window": {"levels": [-30, 30], "margin": 8},
}


def write(tmp_path, payload, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_ok():
    config = parse_config(A4_CONFIG)
    assert config.quiver.dynkin_type == "A4"
    assert config.dimension_vector.total() == 3
    assert config.display_level_shift == 11


def test_parse_errors_name_fields():
    bad = {k: v for k, v in A4_CONFIG.items()}
    bad["quiver"] = {k: v for k, v in A4_CONFIG["quiver"].items() if k != "height"}
    with pytest.raises(ConfigError, match="quiver.height"):
        parse_config(bad)
    bad = json.loads(json.dumps(A4_CONFIG))
    bad["dimension_vector"] = {"nonsense": 1}
    with pytest.raises(ConfigError, match="nonsense"):
        parse_config(bad)
    bad = json.loads(json.dumps(A4_CONFIG))
    bad["quiver"]["height"] = {"1": 2, "2": 1, "3": 0}
    with pytest.raises(ConfigError, match="'4'"):
        parse_config(bad)
    bad = json.loads(json.dumps(A2_CONFIG))
    bad["sigma"] = [["7", 0]]
    with pytest.raises(ConfigError, match="sigma\\[0\\]"):
        parse_config(bad)
    bad = json.loads(json.dumps(A2_CONFIG))
    bad["monomial"] = {"Z[1,0]": 1}
    with pytest.raises(ConfigError, match="Z\\[1,0\\]"):
        parse_config(bad)


def test_load_config_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read config"):
        load_config(str(tmp_path / "absent.json"))


def test_cli_orbits_zero_dimension(tmp_path, capsys):
    payload = json.loads(json.dumps(A2_CONFIG))
    payload["dimension_vector"] = {}
    code, out = run(capsys, "orbits", "--config", write(tmp_path, payload))
    assert code == 0
    assert out.splitlines() == ["classes\t1", "0"]


def test_cli_orbits_requires_dimension_vector(tmp_path, capsys):
    code, _ = run(capsys, "orbits", "--config", write(tmp_path, A2_CONFIG))
    assert code == 2


def test_cli_bijection_table_deterministic(tmp_path, capsys):
    path = write(tmp_path, A4_CONFIG)
    code1, out1 = run(capsys, "bijection-table", "--config", path)
    code2, out2 = run(capsys, "bijection-table", "--config", path)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.splitlines()[0].startswith("V-slot")


def test_cli_monomial_both_directions(tmp_path, capsys):
    path = write(tmp_path, A4_CONFIG)
    code, out = run(capsys, "monomial", "--config", path)
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 4
    assert {"class", "exponents"} <= set(payload[0])
    back = json.loads(json.dumps(A4_CONFIG))
    del back["dimension_vector"]
    indec = next(p for p in payload if p["exponents"] == {})
    back["monomial"] = {}
    code, out = run(capsys, "monomial", "--config", write(tmp_path, back, "m.json"))
    assert code == 0
    assert json.loads(out)["class"] == "0"


def test_cli_sigma_algebra(tmp_path, capsys):
    payload = json.loads(json.dumps(A2_CONFIG))
    payload["sigma"] = [["1", 4], ["2", 3], ["1", 2], ["2", 1], ["1", 0], ["2", -1]]
    code, out = run(capsys, "sigma-algebra", "--config", write(tmp_path, payload))
    assert code == 0
    assert "vertices\t6" in out and "arrows\t7" in out
    assert "quadratic_relations\t1" in out


def test_cli_describe_and_knit(tmp_path, capsys):
    path = write(tmp_path, A2_CONFIG)
    code, out = run(capsys, "describe", "--config", path)
    assert code == 0 and "maximal_path" in out
    code, out = run(capsys, "knit", "--config", path, "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_cli_poset(tmp_path, capsys):
    payload = json.loads(json.dumps(A2_CONFIG))
    payload["dimension_vector"] = {"1[0]": 1, "2[0]": 1}
    code, out = run(capsys, "poset", "--config", write(tmp_path, payload))
    assert code == 0 and "digraph strata" in out


def test_cli_selfcheck_exit_code(tmp_path, capsys):
    code, out = run(capsys, "selfcheck", "--config", write(tmp_path, A2_CONFIG),
                    "--seed", "5")
    assert code == 0
    assert "selfcheck OK" in out
    assert all(line.startswith(("pass", "FAIL", "selfcheck"))
               for line in out.strip().splitlines())


def test_cli_out_dir(tmp_path, capsys):
    path = write(tmp_path, A2_CONFIG)
    out_dir = tmp_path / "artifacts"
    code, out = run(capsys, "describe", "--config", path, "--out", str(out_dir))
    assert code == 0
    produced = out.strip()
    assert produced.endswith("describe.txt")
    assert (out_dir / "describe.txt").exists()


def test_cli_window_override(tmp_path, capsys):
    payload = json.loads(json.dumps(A2_CONFIG))
    del payload["window"]
    path = write(tmp_path, payload)
    code, _ = run(capsys, "describe", "--config", path)
    assert code == 0
    # the = form keeps argparse from reading the leading minus as a flag
    code, out = run(capsys, "knit", "--config", path,
                    "--window=-20:20", "--format", "tsv")
    assert code == 0
    levels = [int(line.split("\t")[0].split(",")[1].rstrip(")"))
              for line in out.splitlines()[1:]]
    assert min(levels) >= -20 and max(levels) < 20


def test_cli_bad_window_flag(tmp_path, capsys):
    code, _ = run(capsys, "describe", "--config", write(tmp_path, A2_CONFIG),
                  "--window", "oops")
    assert code == 2


def test_cli_hom_matrix(tmp_path, capsys):
    code, out = run(capsys, "hom", "--config", write(tmp_path, A2_CONFIG))
    assert code == 0
    lines = out.splitlines()
    header = lines[0].split("\t")
    assert header[0] == "source\\target"
    # square matrix with unit diagonal
    assert len(lines) == len(header)
    for k, line in enumerate(lines[1:], 1):
        cells = line.split("\t")
        assert cells[0] == header[k]
        assert cells[k] == "1"


def test_cli_knit_json(tmp_path, capsys):
    code, out = run(capsys, "knit", "--config", write(tmp_path, A2_CONFIG),
                    "--format", "json")
    assert code == 0
    payload = json.loads(out)
    kinds = {entry["kind"] for entry in payload}
    assert kinds == {"stable", "projective"}
