# type: ignore[B008]

import sys
from typing import Any, Iterable, Optional, Sequence

import click
import typer

from bmkit.config import get_config, load_config, use_config
from bmkit.logger import setup_logger, set_log_level
from bmkit.moduli import (
  frobenius_orbits,
  moduli_modulus,
  enumerate_components,
  count_components_oracle,
)
from bmkit.parsing import (
  parse_dims,
  parse_scs,
  parse_point,
  parse_params,
  parse_duality,
  parse_int_list,
  parse_partition,
  parse_inertial_type,
  parse_type_sequence,
  parse_partition_list,
)
from bmkit.reports import ValueReport, MatrixReport, OrbitsReport, ElementReport, ComponentsReport, dumps, render, to_csv
from bmkit.sweeps import (
  run_sweep,
  kostka_case,
  kostka_grid,
  mackey_case,
  mackey_grid,
  local_bm_case,
  local_bm_grid,
  components_case,
  components_grid,
)
from bmkit.bmcycles import KType, VirtualRep, cyc, r_tau, mult_matrix
from bmkit.inertial import type_degree
from bmkit.exceptions import BmkitError, ArgumentError, ResourceBoundError, CounterexampleError
from bmkit.quasibanal import (
  red_rep,
  bip_count,
  bar_cyc_at,
  bipartitions,
  ihara_report,
  verify_local_bm,
  mackey_decomposition,
  cycle_at_distinguished,
)
from bmkit.symrep import (
  character,
  kostka,
  kostka_matrix,
  kostka_oracle,
  lr_mult,
  lr_mult_tableau,
  character_table,
  inverse_kostka_matrix,
)
from bmkit.e_output_format import EOutputFormat

app = typer.Typer(
  name="bmkit",
  help="Exact combinatorics for the l != p Breuil-Mezard correspondence.",
  pretty_exceptions_show_locals=False,
  pretty_exceptions_short=True,
  no_args_is_help=True,
)

logger = setup_logger("CLI")

# library operation -> subcommand that reaches it
OPERATION_COMMANDS: dict[str, str] = {
  "partitions_of": "kostka-matrix",
  "kostka": "kostka",
  "kostka_oracle": "kostka",
  "kostka_matrix": "kostka-matrix",
  "inverse_kostka_matrix": "inverse-kostka",
  "character": "char",
  "character_table": "char",
  "lr_mult": "lr",
  "lr_mult_tableau": "lr",
  "types_with_scs": "mult-matrix",
  "mult": "mult-matrix",
  "mult_matrix": "mult-matrix",
  "cyc": "cyc",
  "r_tau": "r-tau",
  "bipartitions": "bip",
  "bip_count": "bip",
  "mackey_decomposition": "mackey",
  "cycle_at_distinguished": "cycle-distinguished",
  "red_rep": "red",
  "bar_cyc_at": "red",
  "verify_local_bm": "verify-local-bm",
  "ihara_report": "ihara",
  "enumerate_components": "components",
  "count_components_oracle": "components",
  "frobenius_orbits": "orbits",
}

EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

DEFAULT_COMPONENT_QS = "2,3,4,5"


def return_bool(*, val: bool) -> bool:
  return val


def _format(fmt: Optional[EOutputFormat]) -> EOutputFormat:
  return fmt or get_config().format


def _emit(report: Any, fmt: Optional[EOutputFormat]) -> None:  # noqa: ANN401
  typer.echo(render(report, _format(fmt)))


def _require(value: Optional[str], flag: str) -> str:
  if value is None:
    raise ArgumentError(f"{flag} is required")
  return value


def _stream(records: Iterable[dict[str, Any]], fmt: Optional[EOutputFormat], check: str) -> None:
  """Write sweep records as they arrive; raise once at the end if any case failed."""
  failures = 0
  header: list[str] | None = None
  ndjson = _format(fmt).streams_ndjson
  for record in records:
    failures += not record.get("ok", True)
    if ndjson:
      typer.echo(dumps(record))
      continue
    if header is None:
      header = list(record)
      typer.echo(to_csv([header]))
    typer.echo(to_csv([[str(record[k]) for k in header]]))
  if failures:
    raise CounterexampleError(check, f"{failures} case(s)")


@app.callback()
def configure(
  config: Optional[str] = typer.Option(None, "--config", help="Path to a bmkit.toml or pyproject.toml"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format: json, csv or text"),
  max_degree: Optional[int] = typer.Option(None, "--max-degree", help="Largest degree any enumeration may reach"),
  moduli_max_n: Optional[int] = typer.Option(None, "--moduli-max-n", help="Largest n for moduli component enumeration"),
  jobs: Optional[int] = typer.Option(None, "--jobs", help="Worker processes for sweeps"),
  log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
) -> None:
  """
  Kostka multiplicities, cycle maps, bipartition counts and moduli components.

  Data goes to standard output, diagnostics to standard error. Exit status is
  0 on success, 1 when a verification finds a counterexample, 2 on bad
  arguments and 3 when a configured resource bound refuses the computation.
  """
  settings = load_config(config).with_overrides(
    format=fmt, max_degree=max_degree, moduli_max_n=moduli_max_n, jobs=jobs, log_level=log_level.upper() if log_level else None
  )
  use_config(settings)
  set_log_level(settings.log_level)
  logger.debug("configuration", **settings.model_dump(mode="json"))


@app.command(name="kostka")
def kostka_command(
  shape: Optional[str] = typer.Option(None, "--shape", help="Shape P, e.g. 2,1"),
  content: Optional[str] = typer.Option(None, "--content", help="Content Q, e.g. 1,1,1"),
  oracle: bool = typer.Option(return_bool(val=False), "--oracle", help="Use the character inner product instead of tableaux"),
  sweep: bool = typer.Option(return_bool(val=False), "--sweep", help="Compare both engines on every pair of degree <= n"),
  n: Optional[int] = typer.Option(None, "--n", help="Sweep degree"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  Kostka number m(P,Q): semistandard tableaux of shape P and content Q.
  """
  if sweep:
    if n is None:
      raise ArgumentError("--sweep needs --n")
    _stream(run_sweep(kostka_case, kostka_grid(n)), fmt, "kostka = kostka_oracle")
    return
  p, q = parse_partition(_require(shape, "--shape")), parse_partition(_require(content, "--content"))
  value = kostka_oracle(p, q) if oracle else kostka(p, q)
  _emit(ValueReport(name="kostka", value=value, inputs={"P": list(p.parts), "Q": list(q.parts)}), fmt)


def _partition_matrix_report(name: str, n: int, order: Sequence[Any], entries: Sequence[Sequence[int]]) -> MatrixReport:
  return MatrixReport(
    name=name,
    order=tuple(str(p) for p in order),
    order_json=tuple(list(p.parts) for p in order),
    entries=tuple(tuple(r) for r in entries),
    inputs={"n": n},
  )


@app.command(name="kostka-matrix")
def kostka_matrix_command(
  n: int = typer.Option(..., "--n", help="Degree"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  The unitriangular Kostka matrix over partitions of n in reverse-lex order.
  """
  matrix = kostka_matrix(n)
  _emit(_partition_matrix_report("kostka", n, matrix.order, matrix.entries), fmt)


@app.command(name="inverse-kostka")
def inverse_kostka_command(
  n: int = typer.Option(..., "--n", help="Degree"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  The exact integer inverse of the Kostka matrix.
  """
  matrix = inverse_kostka_matrix(n)
  _emit(_partition_matrix_report("inverse_kostka", n, matrix.order, matrix.entries), fmt)


@app.command(name="char")
def char_command(
  shape: Optional[str] = typer.Option(None, "--shape", help="Irreducible character, e.g. 2,1"),
  cycle_type: Optional[str] = typer.Option(None, "--cycle-type", help="Conjugacy class, e.g. 1,1,1"),
  n: Optional[int] = typer.Option(None, "--n", help="Print the full character table of S_n"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  Symmetric-group character values by Murnaghan-Nakayama.
  """
  if n is not None:
    table = character_table(n)
    table.check_orthogonality()
    _emit(_partition_matrix_report("characters", n, table.order, table.values), fmt)
    return
  p, mu = parse_partition(_require(shape, "--shape")), parse_partition(_require(cycle_type, "--cycle-type"))
  _emit(ValueReport(name="character", value=character(p, mu), inputs={"shape": list(p.parts), "cycle_type": list(mu.parts)}), fmt)


@app.command(name="lr")
def lr_command(
  shape: str = typer.Option(..., "--shape", help="Target partition"),
  factors: str = typer.Option(..., "--factors", help="Induced factors, e.g. '2,1;1'"),
  oracle: bool = typer.Option(return_bool(val=False), "--oracle", help="Use the Littlewood-Richardson tableau rule"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  Multiplicity of the target in the induction of the outer tensor product of the factors.
  """
  target, blocks = parse_partition(shape), parse_partition_list(factors)
  value = lr_mult_tableau(target, blocks) if oracle else lr_mult(target, blocks)
  _emit(ValueReport(name="lr_mult", value=value, inputs={"shape": list(target.parts), "factors": [list(f.parts) for f in blocks]}), fmt)


@app.command(name="mult-matrix")
def mult_matrix_command(
  scs: str = typer.Option(..., "--scs", help="Supercuspidal support: 3 (unipotent) or a:2;b:1"),
  dims: Optional[str] = typer.Option(None, "--dims", help="Basic type dimensions, e.g. a=1,b=2"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  The block multiplicity matrix m(sigma(tau), tau') over all types with the given support.
  """
  matrix = mult_matrix(parse_scs(scs, parse_dims(dims)))
  _emit(
    MatrixReport(
      name="mult",
      order=tuple(str(t) for t in matrix.order),
      order_json=tuple(t.as_json() for t in matrix.order),
      entries=matrix.entries,
      inputs={"scs": scs},
    ),
    fmt,
  )


@app.command(name="cyc")
def cyc_command(
  types: list[str] = typer.Option(..., "--type", help="K-type sigma(tau); repeat for a virtual sum"),
  coeffs: Optional[list[int]] = typer.Option(None, "--coeff", help="Coefficient of each --type, default 1"),
  dims: Optional[str] = typer.Option(None, "--dims", help="Basic type dimensions, e.g. a=1,b=2"),
  dual: Optional[str] = typer.Option(None, "--dual", help="Duality on basic types, e.g. a=b"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  The cycle of a virtual K-type: sum of m(sigma(tau)^v, tau') Z(tau').
  """
  weights = coeffs or [1] * len(types)
  if len(weights) != len(types):
    raise ArgumentError(f"got {len(types)} --type but {len(weights)} --coeff")
  duality, dimensions = parse_duality(dual), parse_dims(dims)
  theta = VirtualRep.from_terms((KType(tau=parse_inertial_type(t, dimensions, duality)), c) for t, c in zip(types, weights, strict=True))
  _emit(ElementReport(element=cyc(theta, duality), inputs={"theta": theta.render()}), fmt)


@app.command(name="r-tau")
def r_tau_command(
  type_: str = typer.Option(..., "--type", help="Inertial type: 2,1 (unipotent) or a:2;b:1,1"),
  n: Optional[int] = typer.Option(None, "--n", help="Expected degree of the type"),
  dims: Optional[str] = typer.Option(None, "--dims", help="Basic type dimensions, e.g. a=1,b=2"),
  dual: Optional[str] = typer.Option(None, "--dual", help="Duality on basic types, e.g. a=b"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  The virtual K-type r(tau) with cyc(r(tau)) = Z(tau).
  """
  duality = parse_duality(dual)
  tau = parse_inertial_type(type_, parse_dims(dims), duality)
  if n is not None and type_degree(tau) != n:
    raise ArgumentError(f"type {tau} has degree {type_degree(tau)}, not {n}")
  _emit(ElementReport(element=r_tau(tau, duality), inputs={"tau": str(tau)}), fmt)


@app.command(name="bip")
def bip_command(
  q_shape: str = typer.Option(..., "--Q", help="Column sums Q"),
  weights: Optional[str] = typer.Option(None, "--weights", help="Row weights, e.g. '1;1'"),
  p_shape: Optional[str] = typer.Option(None, "--P", help="Row sums P: list every (P,Q)-bipartition"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  Bipartition counts Bip((P_i), Q), or every margin matrix with row sums P.
  """
  q = parse_partition(q_shape)
  if weights is not None:
    rows = parse_partition_list(weights)
    report = ValueReport(name="bip", value=bip_count(rows, q), inputs={"weights": [list(w.parts) for w in rows], "Q": list(q.parts)})
  else:
    p = parse_partition(_require(p_shape, "--P or --weights"))
    matrices = bipartitions(p, q)
    report = ValueReport(
      name="count", value=len(matrices), inputs={"P": list(p.parts), "Q": list(q.parts), "matrices": [[list(r) for r in m] for m in matrices]}
    )
  _emit(report, fmt)


@app.command(name="mackey")
def mackey_command(
  p_shape: Optional[str] = typer.Option(None, "--P", help="Young subgroup we restrict to"),
  q_shape: Optional[str] = typer.Option(None, "--Q", help="Young subgroup we induce from"),
  sweep: bool = typer.Option(return_bool(val=False), "--sweep", help="Check the dimension identity for all P, Q of degree <= n"),
  n: Optional[int] = typer.Option(None, "--n", help="Sweep degree"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  Mackey decomposition of Res_{S_P} Ind_{S_Q} by bipartition weight.
  """
  if sweep:
    if n is None:
      raise ArgumentError("--sweep needs --n")
    _stream(run_sweep(mackey_case, mackey_grid(n)), fmt, "mackey dimension identity")
    return
  decomposition = mackey_decomposition(parse_partition(_require(p_shape, "--P")), parse_partition(_require(q_shape, "--Q")))
  _emit(decomposition, fmt)
  if not decomposition.dimensions_agree:
    raise CounterexampleError("mackey dimension identity", f"P={decomposition.p} Q={decomposition.q}")


@app.command(name="cycle-distinguished")
def cycle_distinguished_command(
  n: int = typer.Option(..., "--n", help="Rank"),
  type_: str = typer.Option(..., "--type", help="Type sequence, e.g. 1:2,1;2:1"),
  q_shape: str = typer.Option(..., "--Q", help="Distinguished point"),
  q: Optional[int] = typer.Option(None, "--q", help="Residue field size"),
  l: Optional[int] = typer.Option(None, "--l", help="Quasi-banal prime"),  # noqa: E741
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  The special-fibre cycle of a type sequence at a distinguished point: Bip times [p].
  """
  params, tau, point = parse_params(n, q, l), parse_type_sequence(type_), parse_point(q_shape)
  _emit(ElementReport(element=cycle_at_distinguished(tau, point, params), inputs={"tau": str(tau), "Q": list(point.shape.parts)}), fmt)


@app.command(name="red")
def red_command(
  type_: str = typer.Option(..., "--type", help="Type sequence, e.g. 1:1;2:1"),
  q_shape: Optional[str] = typer.Option(None, "--Q", help="Also apply bar-cyc at this distinguished point"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  Reduction of sigma(tau) in the residual unipotent basis, optionally pushed through bar-cyc.
  """
  tau = parse_type_sequence(type_)
  reduced = red_rep(tau)
  if q_shape is None:
    _emit(ElementReport(element=reduced, inputs={"tau": str(tau)}), fmt)
    return
  point = parse_point(q_shape)
  _emit(ElementReport(element=bar_cyc_at(reduced, point), inputs={"tau": str(tau), "Q": list(point.shape.parts)}), fmt)


@app.command(name="verify-local-bm")
def verify_local_bm_command(
  n: int = typer.Option(..., "--n", help="Rank"),
  type_: Optional[str] = typer.Option(None, "--type", help="Type sequence, e.g. 1:2,1;2:1"),
  q_shape: Optional[str] = typer.Option(None, "--Q", help="Distinguished point"),
  q: Optional[int] = typer.Option(None, "--q", help="Residue field size"),
  l: Optional[int] = typer.Option(None, "--l", help="Quasi-banal prime"),  # noqa: E741
  sweep: bool = typer.Option(return_bool(val=False), "--sweep", help="Every type sequence against every distinguished point"),
  every_sequence: bool = typer.Option(return_bool(val=False), "--all-sequences", help="Sweep all index placements, not one per multiset"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  Compare bar-cyc(red(sigma(tau))) with red(cyc(sigma(tau))) at distinguished points.
  """
  params = parse_params(n, q, l)
  if sweep:
    _stream(run_sweep(local_bm_case, local_bm_grid(params, canonical=not every_sequence)), fmt, "local Breuil-Mezard identity")
    return
  tau, point = parse_type_sequence(_require(type_, "--type")), parse_point(_require(q_shape, "--Q"))
  check = verify_local_bm(tau, point, params)
  _emit(check, fmt)
  if not check.ok:
    raise CounterexampleError("local Breuil-Mezard identity", f"tau={tau} Q={point.shape}")


@app.command(name="ihara")
def ihara_command(
  n: int = typer.Option(..., "--n", help="Rank"),
  q: Optional[int] = typer.Option(None, "--q", help="Residue field size"),
  l: Optional[int] = typer.Option(None, "--l", help="Quasi-banal prime"),  # noqa: E741
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  Principal series against the unipotent types: reductions and distinguished-point cycles.
  """
  report = ihara_report(n, parse_params(n, q, l))
  _emit(report, fmt)
  if not report.ok:
    raise CounterexampleError("principal series identities", f"n={n}")


@app.command(name="components")
def components_command(
  n: int = typer.Option(..., "--n", help="Rank"),
  q: Optional[int] = typer.Option(None, "--q", help="Field size (a prime power)"),
  l: Optional[int] = typer.Option(None, "--l", help="Residue characteristic: use the prime-to-l modulus"),  # noqa: E741
  oracle: bool = typer.Option(return_bool(val=False), "--oracle", help="Cross-check the count by brute force"),
  sweep: bool = typer.Option(return_bool(val=False), "--sweep", help="Main count against brute force for every degree <= n"),
  qs: str = typer.Option(DEFAULT_COMPONENT_QS, "--qs", help="Field sizes for --sweep"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  Irreducible components of the moduli of pairs (Sigma, Phi) with Phi Sigma Phi^-1 = Sigma^q.
  """
  if sweep:
    sizes = parse_int_list(qs, "field sizes")
    _stream(run_sweep(components_case, components_grid(n, sizes)), fmt, "components = oracle")
    return
  if q is None:
    raise ArgumentError("--q is required")
  if oracle and l is not None:
    raise ArgumentError("--oracle counts characteristic-zero components; drop --l")
  components = enumerate_components(n, q, l)
  expected = count_components_oracle(n, q) if oracle else None
  report = ComponentsReport(n=n, q=q, l=l, modulus=moduli_modulus(n, q, l), components=components, oracle=expected)
  _emit(report, fmt)
  if not report.ok:
    raise CounterexampleError("components = oracle", f"n={n} q={q}")


@app.command(name="orbits")
def orbits_command(
  q: int = typer.Option(..., "--q", help="Multiplier"),
  m: int = typer.Option(..., "--m", help="Modulus"),
  fmt: Optional[EOutputFormat] = typer.Option(None, "--format", help="Output format"),
) -> None:
  """
  Orbits of x -> q*x on Z/m.
  """
  _emit(OrbitsReport(q=q, modulus=m, orbits=frobenius_orbits(q, m)), fmt)


def run(argv: Optional[Sequence[str]] = None) -> int:
  """Execute one subcommand and return its exit status."""
  command = typer.main.get_command(app)
  previous = get_config()
  try:
    result = command.main(args=list(sys.argv[1:] if argv is None else argv), prog_name="bmkit", standalone_mode=False)
  except click.ClickException as e:
    e.show()
    return e.exit_code
  except click.exceptions.Abort:
    return EXIT_COUNTEREXAMPLE
  except ResourceBoundError as e:
    logger.error(e.message, what=e.what, requested=e.requested, bound=e.bound)
    return EXIT_RESOURCE
  except ArgumentError as e:
    logger.error(e.message)
    return EXIT_USAGE
  except CounterexampleError as e:
    logger.error(e.message, check=e.check, case=e.case)
    return EXIT_COUNTEREXAMPLE
  except BmkitError as e:
    logger.error(e.message)
    return EXIT_COUNTEREXAMPLE
  finally:
    use_config(previous)
  return result if isinstance(result, int) else 0


def main() -> None:
  sys.exit(run())


if __name__ == "__main__":
  main()
