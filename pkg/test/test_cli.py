import warnings
warnings.simplefilter("error")

import json, pathlib, types
from h2_origami import cli, counting, surfaces

here = pathlib.Path(__file__).parent
outputfolder = here/"test_output"

def run(*argv):
  """
  run the command line and return (exit code, output)
  """
  outputfolder.mkdir(exist_ok=True)
  output = outputfolder/"cli_output.txt"
  if output.exists(): output.unlink()
  exit_code = cli.main([*argv, "--output", str(output)])
  return exit_code, output.read_text()

def usage_error(*argv):
  try:
    cli.main(list(argv))
  except SystemExit as e:
    return e.code
  assert False, argv

def test_count():
  exit_code, text = run("count", "5", "9")
  assert exit_code == 0
  assert text == "n,a_primitive,b_primitive,a_total,b_total\n5,18,9,18,9\n7,54,36,54,36\n9,108,81,120,81\n"
  exit_code, text = run("count", "5", "--format", "json")
  assert json.loads(text) == {"n": 5, "a_primitive": 18, "b_primitive": 9, "a_total": 18, "b_total": 9}
  exit_code, text = run("count", "5", "9", "--format", "json")
  assert [row["n"] for row in json.loads(text)] == [5, 7, 9]
  exit_code, text = run("count", "3", "--format", "md")
  assert text.splitlines()[-1] == "| 3 | 3 | 0 | 3 | 0 |"
  exit_code, text = run("count", "1")
  assert text.splitlines()[1] == "1,0,0,0,0"
  for argv in (["count", "4"], ["count", "9", "5"], ["count", "-1"]):
    assert usage_error(*argv) == 2

def test_enumerate():
  exit_code, text = run("enumerate", "3")
  assert exit_code == 0
  assert [surfaces.from_json_dict(d) for d in json.loads(text)] == surfaces.enumerate_all(3)
  exit_code, text = run("enumerate", "5", "--filter", "primitive", "--format", "csv")
  assert len(text.splitlines()) == 1 + 27
  exit_code, text = run("enumerate", "6", "--filter", "height_primitive", "--format", "md")
  assert text.splitlines()[0] == "| " + " | ".join(surfaces.CSV_HEADER) + " |"
  assert usage_error("enumerate", "2") == 2

def test_orbits():
  exit_code, text = run("orbits", "5")
  assert exit_code == 0
  report = json.loads(text)
  assert [(orbit["size"], orbit["type"]) for orbit in report["orbits"]] == [(18, "A"), (9, "B")]
  exit_code, text = run("orbits", "7", "--convention", "transposed", "--format", "csv")
  assert exit_code == 0
  assert [line.split(",")[:2] for line in text.splitlines()[1:]] == [["54", "A"], ["36", "B"]]
  exit_code, text = run("orbits", "7", "--max-states", "10")
  assert exit_code == 1
  assert json.loads(text)["complete"] is False
  assert usage_error("orbits", "8") == 2

def test_qm():
  exit_code, text = run("qm", "fit-h4", "--order", "40")
  assert exit_code == 0
  assert text.splitlines() == [
    "name,coefficient",
    "E4,1/20",
    "E4(2z),3/20",
    "E4(4z),4/5",
    "DPhi2,0/1",
    "DPhi4,9/2",
    "DE2,3/1",
  ]
  exit_code, text = run("qm", "e2sq", "--order", "20", "--format", "json")
  assert json.loads(text) == [{"name": "E4", "coefficient": 1}, {"name": "DE2", "coefficient": 12}]
  for task in ("fit-h2", "corollary", "theorem13"):
    exit_code, text = run("qm", task, "--order", "60")
    assert exit_code == 0, task
  assert usage_error("qm", "fit-h4", "--order", "5") == 2
  assert usage_error("qm", "fit-h8") == 2

def test_series():
  exit_code, text = run("series", "--order", "5")
  assert exit_code == 0
  lines = text.splitlines()
  assert len(lines) == 6
  assert lines[1:3] == ["1\t0/1", "2\t9/16"]
  assert lines[5] == "5\t18/1"
  exit_code, text = run("series", "--which", "a_primitive", "--order", "9", "--format", "json")
  assert json.loads(text)[5] == "18/1"
  assert json.loads(text)[9] == "108/1"

def test_verify():
  exit_code, text = run("verify", "--max-n", "7")
  assert exit_code == 0
  outcome = json.loads(text)
  assert outcome["exit_code"] == 0
  assert {check["status"] for check in outcome["checks"]} == {"pass"}
  names = [check["name"] for check in outcome["checks"]]
  for name in (
    "table_1", "three_routes", "component_assembly", "two_cyl_components", "a_total_by_convolution",
    "two_cyl_total_erratum", "brute_force_classification", "lattice_bijections", "orbits", "qm_theorem13",
    "window_6_rank_deficiency", "s_closed", "h_series", "mu_sigma_convolution", "local_factor_convolution",
    "reduce_inflate", "six_weierstrass_points", "canonical_form_relabeling",
  ):
    assert name in names, name
  erratum = {check["name"]: check["detail"] for check in outcome["checks"]}["two_cyl_total_erratum"]
  assert "printed sign -3" in erratum
  assert usage_error("verify", "--max-n", "4") == 2

def test_verify_catches_a_wrong_breakdown():
  breakdown = counting.breakdown
  counting.breakdown = lambda n: types.SimpleNamespace(total_primitive_A=counting.a_primitive(n) + 1)
  try:
    outcome = cli.cmd_verify(5)
  finally:
    counting.breakdown = breakdown
  statuses = {name: status for name, status, _ in outcome.checks}
  assert statuses["component_assembly"] == "fail"
  assert outcome.exit_code == 1

def main():
  test_count()
  test_enumerate()
  test_orbits()
  test_qm()
  test_series()
  test_verify()
  test_verify_catches_a_wrong_breakdown()

if __name__ == "__main__":
  main()
