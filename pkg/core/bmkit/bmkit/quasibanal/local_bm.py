"""Cycles at distinguished points and the local Breuil-Mezard check.

Both sides of ``verify_local_bm`` are computed by separate engines: the left
through characters (``kostka_oracle`` and ``lr_mult``), the right through
tableaux and margin tables (``kostka`` and ``bip_count``). They meet only in
``bmkit.partitions``.
"""

import math
from typing import Any
from itertools import product

from pydantic import BaseModel, ConfigDict

from bmkit.logger import setup_logger
from bmkit.bmcycles import Cycle, KType, VirtualRep, ResidualUnipotent, json_int
from bmkit.partitions import Partition, multinomial, partitions_of
from bmkit.exceptions import ArgumentError, DegreeMismatchError, InvariantViolationError
from bmkit.symrep.kostka import kostka, kostka_oracle, hook_length_count
from bmkit.quasibanal.params import TypeSequence, QuasiBanalParams, DistinguishedPoint, principal_series, unipotent_sequence
from bmkit.quasibanal.bipartitions import bip_count
from bmkit.symrep.littlewood_richardson import lr_mult

__all__ = [
  "IharaReport",
  "LocalBmCheck",
  "bar_cyc_at",
  "cycle_at_distinguished",
  "ihara_report",
  "red_rep",
  "verify_local_bm",
]

logger = setup_logger("LocalBM")


def _check_degrees(what: str, tau: TypeSequence, point: DistinguishedPoint, params: QuasiBanalParams) -> None:
  if point.n != params.n:
    raise DegreeMismatchError(what, point.n, params.n)
  if tau.degree != point.n:
    raise DegreeMismatchError(what, tau.degree, point.n)
  tau.check_against(params)


def cycle_at_distinguished(tau: TypeSequence, point: DistinguishedPoint, params: QuasiBanalParams) -> Cycle:
  """Bip(weights of tau, Q) times the special-fibre point; zero when no component passes through it."""
  _check_degrees("cycle_at_distinguished", tau, point, params)
  return Cycle.point(bip_count(tau.weights, point.shape))


def red_rep(tau: TypeSequence) -> VirtualRep:
  weights = tau.weights
  return VirtualRep.from_terms((ResidualUnipotent(partition=p), lr_mult(p, weights)) for p in partitions_of(tau.degree))


def bar_cyc_at(v: VirtualRep, point: DistinguishedPoint) -> Cycle:
  total = 0
  for label, c in v.coeffs:
    if isinstance(label, KType):
      raise ArgumentError(f"bar_cyc_at takes residual classes only, got {label.render()}")
    if label.partition.degree != point.n:
      raise DegreeMismatchError("bar_cyc_at", label.partition.degree, point.n)
    total += c * kostka(label.partition, point.shape)
  return Cycle.point(total)


class LocalBmCheck(BaseModel):
  model_config = ConfigDict(frozen=True)

  n: int
  q: Partition
  tau: TypeSequence
  lhs: int
  rhs: int

  @property
  def ok(self) -> bool:
    return self.lhs == self.rhs

  def as_json(self) -> dict[str, Any]:
    return {"n": self.n, "Q": list(self.q.parts), "tau": str(self.tau), "lhs": json_int(self.lhs), "rhs": json_int(self.rhs), "ok": self.ok}

  def as_rows(self) -> list[list[str]]:
    return [["n", "Q", "tau", "lhs", "rhs", "ok"], [str(self.n), str(self.q), str(self.tau), str(self.lhs), str(self.rhs), str(self.ok).lower()]]

  def as_text(self) -> str:
    return f"tau={self.tau} Q={self.q} lhs={self.lhs} rhs={self.rhs} {'ok' if self.ok else 'MISMATCH'}"


def _lhs(tau: TypeSequence, q: Partition) -> int:
  weights = tau.weights
  return sum(kostka_oracle(p, q) * lr_mult(p, weights) for p in partitions_of(q.degree))


def _rhs(tau: TypeSequence, q: Partition) -> int:
  weights = tau.weights
  total = 0
  for coarser in product(*(partitions_of(w.degree) for w in weights)):
    m = math.prod(kostka(w, c) for w, c in zip(weights, coarser, strict=True))
    if m:
      total += m * bip_count(coarser, q)
  return total


def verify_local_bm(tau: TypeSequence, point: DistinguishedPoint, params: QuasiBanalParams) -> LocalBmCheck:
  """Coefficient of [p] in bar-cyc(red(sigma(tau))) against red(cyc(sigma(tau)))."""
  _check_degrees("verify_local_bm", tau, point, params)
  check = LocalBmCheck(n=params.n, q=point.shape, tau=tau, lhs=_lhs(tau, point.shape), rhs=_rhs(tau, point.shape))
  if not check.ok:
    logger.error("local identity mismatch", tau=str(tau), Q=str(point.shape), lhs=check.lhs, rhs=check.rhs)
  return check


class ResidualCoefficient(BaseModel):
  model_config = ConfigDict(frozen=True)

  partition: Partition
  coefficient: int
  kostka_number: int
  hook_length: int


class CycleIdentity(BaseModel):
  model_config = ConfigDict(frozen=True)

  q: Partition
  principal_series: int
  unipotent_sum: int
  expected: int

  @property
  def ok(self) -> bool:
    return self.principal_series == self.unipotent_sum == self.expected


class IharaReport(BaseModel):
  model_config = ConfigDict(frozen=True)

  n: int
  params: QuasiBanalParams
  coefficients: tuple[ResidualCoefficient, ...]
  unipotent_expansion_ok: bool
  cycles: tuple[CycleIdentity, ...]

  @property
  def ok(self) -> bool:
    return self.unipotent_expansion_ok and all(c.ok for c in self.cycles)

  def as_json(self) -> dict[str, Any]:
    return {
      "n": self.n,
      "l": self.params.l,
      "q": json_int(self.params.q),
      "red_principal_series": [
        {
          "P": list(c.partition.parts),
          "coefficient": json_int(c.coefficient),
          "kostka": json_int(c.kostka_number),
          "hook_length": json_int(c.hook_length),
        }
        for c in self.coefficients
      ],
      "unipotent_expansion_ok": self.unipotent_expansion_ok,
      "cycles": [
        {
          "Q": list(c.q.parts),
          "principal_series": json_int(c.principal_series),
          "unipotent_sum": json_int(c.unipotent_sum),
          "multinomial": json_int(c.expected),
          "ok": c.ok,
        }
        for c in self.cycles
      ],
      "ok": self.ok,
    }

  def as_rows(self) -> list[list[str]]:
    rows = [["section", "partition", "value", "expected", "check", "ok"]]
    for c in self.coefficients:
      rows.append(["red", str(c.partition), str(c.coefficient), str(c.kostka_number), str(c.hook_length), "true"])
    for c in self.cycles:
      rows.append(["cycle", str(c.q), str(c.principal_series), str(c.expected), str(c.unipotent_sum), str(c.ok).lower()])
    return rows

  def as_text(self) -> str:
    red = VirtualRep.from_terms((ResidualUnipotent(partition=c.partition), c.coefficient) for c in self.coefficients)
    lines = [f"n={self.n} l={self.params.l} q={self.params.q}", f"red(σ(τ_ps)) = {red.render()}"]
    lines.extend(
      f"Q={c.q} principal series {c.principal_series} = unipotent sum {c.unipotent_sum} = multinomial {c.expected}"
      + ("" if c.ok else "  MISMATCH")
      for c in self.cycles
    )
    lines.append("ok" if self.ok else "FAILED")
    return "\n".join(lines)


def ihara_report(n: int, params: QuasiBanalParams) -> IharaReport:
  """red(sigma(tau_ps)) in the residual basis, and the principal-series cycle at every distinguished point."""
  if params.n != n:
    raise DegreeMismatchError("ihara_report", n, params.n)
  if params.character_count < n:
    raise ArgumentError(f"principal series needs {n} distinct characters, l^a={params.character_count}")
  tau_ps = principal_series(n)
  red = red_rep(tau_ps)
  column = Partition.column(n)

  coefficients: list[ResidualCoefficient] = []
  for p in partitions_of(n):
    row = ResidualCoefficient(
      partition=p, coefficient=red.coefficient(ResidualUnipotent(partition=p)), kostka_number=kostka(p, column), hook_length=hook_length_count(p)
    )
    if not row.coefficient == row.kostka_number == row.hook_length:
      raise InvariantViolationError("red(sigma(tau_ps)) = sum m(P,(1^n)) red(sigma^1_P)", f"P={p}")
    coefficients.append(row)

  expansion = VirtualRep.zero()
  for p in partitions_of(n):
    expansion += kostka(p, column) * red_rep(unipotent_sequence(p))

  cycles: list[CycleIdentity] = []
  for q in partitions_of(n):
    point = DistinguishedPoint(shape=q)
    lhs = cycle_at_distinguished(tau_ps, point, params).point_multiplicity
    rhs = sum(multinomial(p) * cycle_at_distinguished(unipotent_sequence(p), point, params).point_multiplicity for p in partitions_of(n))
    cycles.append(CycleIdentity(q=q, principal_series=lhs, unipotent_sum=rhs, expected=multinomial(q)))

  report = IharaReport(n=n, params=params, coefficients=tuple(coefficients), unipotent_expansion_ok=expansion == red, cycles=tuple(cycles))
  if not report.ok:
    logger.error("ihara identities failed", n=n)
  return report
