# ruff: noqa: S101

import json

import pytest
import typer

import bmkit.__cli__ as cli
from bmkit.config import BmkitConfig, get_config, use_config
from bmkit.partitions import Partition
from bmkit.quasibanal import unipotent_sequence
from bmkit.quasibanal.local_bm import LocalBmCheck

P = Partition.of


def _run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str]:
  code = cli.run(list(argv))
  return code, capsys.readouterr().out


@pytest.fixture(autouse=True)
def _isolated_config(monkeypatch: pytest.MonkeyPatch) -> None:
  monkeypatch.setattr(cli, "load_config", lambda _path=None: BmkitConfig())
  monkeypatch.delenv("BMKIT_LOG_LEVEL", raising=False)


def test_kostka_text(capsys: pytest.CaptureFixture[str]) -> None:
  assert _run(capsys, "kostka", "--shape", "2,1", "--content", "1,1,1") == (0, "2\n")


def test_kostka_oracle_agrees(capsys: pytest.CaptureFixture[str]) -> None:
  assert _run(capsys, "kostka", "--shape", "3,2", "--content", "2,2,1", "--oracle") == (0, "2\n")


def test_kostka_json_is_compact_and_sorted(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "--format", "json", "kostka", "--shape", "2,1", "--content", "1,1,1")
  assert code == 0
  assert out.strip() == '{"P":[2,1],"Q":[1,1,1],"kostka":2}'


def test_command_format_overrides_global(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "--format", "json", "kostka", "--shape", "2", "--content", "1,1", "--format", "csv")
  assert code == 0
  assert out.splitlines()[0] == "P,Q,kostka"


def test_r_tau_strings(capsys: pytest.CaptureFixture[str]) -> None:
  assert _run(capsys, "r-tau", "--type", "2,1") == (0, "σ(τ[2,1]) − 2σ(τ[1,1,1])\n")
  assert _run(capsys, "r-tau", "--type", "3", "--n", "3") == (0, "σ(τ[3]) − σ(τ[2,1]) + σ(τ[1,1,1])\n")


def test_r_tau_degree_check(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "r-tau", "--type", "2,1", "--n", "4")
  assert code == cli.EXIT_USAGE
  assert out == ""


def test_r_tau_json_terms(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "r-tau", "--type", "1,1", "--format", "json")
  assert code == 0
  assert json.loads(out) == {"tau": "τ[1,1]", "terms": [{"label": "σ(τ[1,1])", "coefficient": 1}]}


def test_cyc_of_a_virtual_sum(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "cyc", "--type", "2", "--coeff", "1", "--type", "1,1", "--coeff=-1")
  assert code == 0
  assert out.strip() == "Z(τ[2])"
  assert _run(capsys, "cyc", "--type", "2,1")[1].strip() == "Z(τ[2,1]) + 2Z(τ[1,1,1])"


def test_cyc_coefficient_count_mismatch(capsys: pytest.CaptureFixture[str]) -> None:
  assert _run(capsys, "cyc", "--type", "2", "--type", "1,1", "--coeff", "1")[0] == cli.EXIT_USAGE


def test_cyc_with_basic_types_and_duality(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "cyc", "--type", "a:2;b:1", "--dims", "a=1,b=2", "--dual", "a=c")
  assert code == 0
  assert out.strip() == "Z(τ{b:[1],c:[2]}) + Z(τ{b:[1],c:[1,1]})"


def test_mult_matrix(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "mult-matrix", "--scs", "3", "--format", "json")
  assert code == 0
  assert json.loads(out)["mult"] == [[1, 1, 1], [0, 1, 2], [0, 0, 1]]


def test_inverse_kostka(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "inverse-kostka", "--n", "3", "--format", "json")
  assert code == 0
  payload = json.loads(out)
  assert payload["order"] == [[3], [2, 1], [1, 1, 1]]
  assert payload["inverse_kostka"] == [[1, -1, 1], [0, 1, -2], [0, 0, 1]]


def test_character_value_and_table(capsys: pytest.CaptureFixture[str]) -> None:
  assert _run(capsys, "char", "--shape", "2,1", "--cycle-type", "3") == (0, "-1\n")
  code, out = _run(capsys, "char", "--n", "3", "--format", "json")
  assert code == 0
  assert json.loads(out)["characters"][1] == [-1, 0, 2]


def test_lr_both_engines(capsys: pytest.CaptureFixture[str]) -> None:
  assert _run(capsys, "lr", "--shape", "3,2,1", "--factors", "2,1;2,1") == (0, "2\n")
  assert _run(capsys, "lr", "--shape", "3,2,1", "--factors", "2,1;2,1", "--oracle") == (0, "2\n")


def test_bip_count_and_listing(capsys: pytest.CaptureFixture[str]) -> None:
  assert _run(capsys, "bip", "--Q", "1,1", "--weights", "1;1") == (0, "2\n")
  code, out = _run(capsys, "bip", "--Q", "1,1", "--P", "1,1", "--format", "json")
  assert code == 0
  assert json.loads(out)["matrices"] == [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]


def test_mackey(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "mackey", "--P", "2,1", "--Q", "2,1")
  assert code == 0
  assert out.splitlines()[-1] == "dimension 3 = 3"


def test_cycle_distinguished_and_red(capsys: pytest.CaptureFixture[str]) -> None:
  assert _run(capsys, "cycle-distinguished", "--n", "2", "--type", "1:1;2:1", "--Q", "1,1") == (0, "2[𝔭]\n")
  assert _run(capsys, "red", "--type", "1:1;2:1") == (0, "red(σ¹[2]) + red(σ¹[1,1])\n")
  assert _run(capsys, "red", "--type", "1:1;2:1", "--Q", "1,1") == (0, "2[𝔭]\n")


def test_verify_local_bm_single_case(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "verify-local-bm", "--n", "2", "--type", "1:2", "--Q", "1,1", "--q", "4", "--l", "3")
  assert code == 0
  assert out.strip() == "tau=1:2 Q=[1,1] lhs=1 rhs=1 ok"


def test_verify_local_bm_sweep(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "verify-local-bm", "--n", "3", "--sweep")
  assert code == 0
  records = [json.loads(line) for line in out.splitlines()]
  assert len(records) == 6 * 3
  assert all(r["ok"] for r in records)


def test_counterexample_exit_code(capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch) -> None:
  broken = LocalBmCheck(n=2, q=P(1, 1), tau=unipotent_sequence(P(2)), lhs=1, rhs=2)
  monkeypatch.setattr(cli, "verify_local_bm", lambda *_: broken)
  code, out = _run(capsys, "verify-local-bm", "--n", "2", "--type", "1:2", "--Q", "1,1")
  assert code == cli.EXIT_COUNTEREXAMPLE
  assert out.strip().endswith("MISMATCH")


def test_ihara(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "ihara", "--n", "3", "--format", "json")
  assert code == 0
  assert json.loads(out)["ok"] is True


def test_components_with_oracle(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "components", "--n", "2", "--q", "4", "--oracle")
  assert code == 0
  assert out.splitlines()[-1] == "count=15 modulus=15 oracle=15"


def test_components_oracle_needs_characteristic_zero(capsys: pytest.CaptureFixture[str]) -> None:
  assert _run(capsys, "components", "--n", "2", "--q", "4", "--l", "3", "--oracle")[0] == cli.EXIT_USAGE


def test_components_sweep(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "components", "--n", "2", "--sweep", "--qs", "2,3")
  assert code == 0
  records = [json.loads(line) for line in out.splitlines()]
  assert [(r["n"], r["q"]) for r in records] == [(1, 2), (1, 3), (2, 2), (2, 3)]
  assert all(r["ok"] for r in records)


def test_orbits(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "orbits", "--q", "4", "--m", "15")
  assert code == 0
  assert out.splitlines()[:3] == ["{0}", "{1,4}", "{2,8}"]


def test_kostka_sweep_streams_ndjson(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "kostka", "--sweep", "--n", "3")
  assert code == 0
  records = [json.loads(line) for line in out.splitlines()]
  assert len(records) == 1 + 4 + 9
  assert all(r["ok"] for r in records)


def test_sweep_csv(capsys: pytest.CaptureFixture[str]) -> None:
  code, out = _run(capsys, "--format", "csv", "mackey", "--sweep", "--n", "2")
  assert code == 0
  lines = out.splitlines()
  assert lines[0] == "P,Q,terms,restricted_dimension,induced_dimension,ok"
  assert len(lines) == 1 + 1 + 4


def test_sweep_output_is_independent_of_jobs(capsys: pytest.CaptureFixture[str]) -> None:
  serial = _run(capsys, "--jobs", "1", "kostka", "--sweep", "--n", "3")
  parallel = _run(capsys, "--jobs", "2", "kostka", "--sweep", "--n", "3")
  assert serial == parallel


@pytest.mark.parametrize(
  "argv",
  [
    ["kostka", "--shape", "1,2", "--content", "2,1"],
    ["kostka", "--shape", "2,1"],
    ["verify-local-bm", "--n", "2", "--q", "4"],
    ["verify-local-bm", "--n", "2", "--q", "5", "--l", "3", "--sweep"],
    ["kostka", "--shape", "x", "--content", "1"],
    ["no-such-command"],
    ["kostka-matrix"],
    ["--format", "yaml", "kostka-matrix", "--n", "2"],
    ["components", "--n", "2", "--sweep", "--qs", "2,x"],
  ],
)
def test_usage_errors_exit_two(capsys: pytest.CaptureFixture[str], argv: list[str]) -> None:
  code, out = _run(capsys, *argv)
  assert code == cli.EXIT_USAGE
  assert out == ""


def test_resource_bound_exit_three(capsys: pytest.CaptureFixture[str]) -> None:
  assert _run(capsys, "--max-degree", "5", "kostka-matrix", "--n", "6") == (cli.EXIT_RESOURCE, "")
  assert _run(capsys, "components", "--n", "5", "--q", "2")[0] == cli.EXIT_RESOURCE
  assert _run(capsys, "--moduli-max-n", "5", "components", "--n", "5", "--q", "2", "--oracle")[0] == cli.EXIT_RESOURCE


def test_run_restores_the_active_config(capsys: pytest.CaptureFixture[str]) -> None:
  before = use_config(BmkitConfig())
  try:
    _run(capsys, "--max-degree", "7", "kostka", "--shape", "1", "--content", "1")
    assert get_config() == BmkitConfig()
  finally:
    use_config(before)


def test_every_operation_has_a_command() -> None:
  commands = typer.main.get_command(cli.app).commands  # type: ignore[attr-defined]
  assert set(cli.OPERATION_COMMANDS.values()) <= set(commands)
