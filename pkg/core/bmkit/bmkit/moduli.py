"""Irreducible components of the moduli of pairs (Sigma, Phi) with Phi Sigma Phi^-1 = Sigma^q.

Eigenvalues of Sigma are (q^{n!} - 1)-th roots of unity, held as residues
mod that modulus; the q-power map becomes x -> q*x. A component is a q-stable
assignment of Jordan partitions to eigenvalues, i.e. a map from Frobenius
orbits to partitions of total weighted degree n.
"""

import math
from typing import Any, Iterator, Optional, Sequence
from collections import defaultdict

from pydantic import BaseModel, ConfigDict, PositiveInt, NonNegativeInt, field_validator, model_validator

from bmkit.config import get_config, check_bound
from bmkit.logger import setup_logger
from bmkit.partitions import Partition, partitions_of
from bmkit.exceptions import ArgumentError
from bmkit.quasibanal.params import is_prime, prime_power_base

__all__ = [
  "ComponentDatum",
  "FrobeniusOrbit",
  "components_over_modulus",
  "count_components_oracle",
  "enumerate_components",
  "frobenius_orbits",
  "lift_component",
  "moduli_modulus",
  "residue_support",
  "unipotent_block",
]

logger = setup_logger("Moduli")


class FrobeniusOrbit(BaseModel):
  model_config = ConfigDict(frozen=True)

  modulus: PositiveInt
  q: PositiveInt
  min_rep: NonNegativeInt
  size: PositiveInt

  @model_validator(mode="after")
  def validate_orbit(self) -> "FrobeniusOrbit":
    if self.min_rep >= self.modulus:
      msg = f"min_rep {self.min_rep} is not a residue mod {self.modulus}"
      raise ValueError(msg)
    returns = [d for d in range(1, self.size + 1) if pow(self.q, d, self.modulus) * self.min_rep % self.modulus == self.min_rep]
    if returns[:1] != [self.size]:
      msg = f"orbit of {self.min_rep} under x -> {self.q}x mod {self.modulus} does not have size {self.size}"
      raise ValueError(msg)
    return self

  def members(self) -> tuple[int, ...]:
    return tuple(sorted(self.min_rep * pow(self.q, k, self.modulus) % self.modulus for k in range(self.size)))

  def as_json(self) -> dict[str, Any]:
    return {"min_rep": str(self.min_rep), "size": self.size}


class ComponentDatum(BaseModel):
  """A q-stable Jordan datum: Frobenius orbits of eigenvalues, each with a partition."""

  model_config = ConfigDict(frozen=True)

  modulus: PositiveInt
  assignment: tuple[tuple[FrobeniusOrbit, Partition], ...]

  @field_validator("assignment")
  def validate_assignment(cls, v: tuple[tuple[FrobeniusOrbit, Partition], ...]) -> tuple[tuple[FrobeniusOrbit, Partition], ...]:
    support = tuple(sorted(((o, p) for o, p in v if not p.is_empty), key=lambda item: item[0].min_rep))
    reps = [o.min_rep for o, _ in support]
    if len(set(reps)) != len(reps):
      msg = f"orbits must be distinct, got {reps}"
      raise ValueError(msg)
    return support

  @property
  def degree(self) -> int:
    return sum(o.size * p.degree for o, p in self.assignment)

  @property
  def key(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
    return tuple((o.min_rep, p.parts) for o, p in self.assignment)

  def as_json(self) -> dict[str, Any]:
    return {"orbits": [{**o.as_json(), "partition": list(p.parts)} for o, p in self.assignment]}


def _check_q(q: int) -> None:
  if prime_power_base(q) is None:
    raise ArgumentError(f"q must be a prime power, got {q}")


def _orbit(q: int, m: int, x: int, limit: Optional[int] = None) -> Optional[tuple[int, ...]]:
  """The orbit of x under multiplication by q, or None once it outgrows ``limit``."""
  members = [x]
  y = q * x % m
  while y != x:
    if limit is not None and len(members) >= limit:
      return None
    members.append(y)
    y = q * y % m
  return tuple(members)


def frobenius_orbits(q: int, m: int) -> tuple[FrobeniusOrbit, ...]:
  """Every orbit of x -> q*x on Z/m, ordered by smallest member."""
  if m < 1:
    raise ArgumentError(f"modulus must be positive, got {m}")
  if math.gcd(q, m) != 1:
    raise ArgumentError(f"q={q} is not a unit mod {m}")
  check_bound("frobenius_orbits", m, get_config().max_modulus)
  seen = bytearray(m)
  out: list[FrobeniusOrbit] = []
  for x in range(m):
    if seen[x]:
      continue
    members = _orbit(q, m, x)
    assert members is not None
    for y in members:
      seen[y] = 1
    out.append(FrobeniusOrbit(modulus=m, q=q % m or m, min_rep=x, size=len(members)))
  return tuple(out)


def _small_orbits(q: int, m: int, n: int) -> tuple[FrobeniusOrbit, ...]:
  # x has orbit size dividing d iff (q^d - 1) x = 0 mod m, a cyclic subgroup of order gcd(m, q^d - 1)
  candidates: set[int] = set()
  for d in range(1, n + 1):
    g = math.gcd(m, q**d - 1)
    candidates.update(range(0, m, m // g))
  out: list[FrobeniusOrbit] = []
  seen: set[int] = set()
  for x in sorted(candidates):
    if x in seen:
      continue
    members = _orbit(q, m, x, n)
    assert members is not None
    seen.update(members)
    out.append(FrobeniusOrbit(modulus=m, q=q % m or m, min_rep=x, size=len(members)))
  return tuple(out)


def _assignments(orbits: Sequence[FrobeniusOrbit], i: int, remaining: int) -> Iterator[tuple[tuple[FrobeniusOrbit, Partition], ...]]:
  if remaining == 0:
    yield ()
    return
  if i == len(orbits):
    return
  orbit = orbits[i]
  for k in range(remaining // orbit.size, -1, -1):
    for p in partitions_of(k):
      for rest in _assignments(orbits, i + 1, remaining - k * orbit.size):
        yield ((orbit, p), *rest) if k else rest


def components_over_modulus(n: int, q: int, m: int) -> tuple[ComponentDatum, ...]:
  if math.gcd(q, m) != 1:
    raise ArgumentError(f"q={q} is not a unit mod {m}")
  orbits = _small_orbits(q, m, n)
  logger.debug("frobenius orbits of size <= n", n=n, q=q, modulus=str(m), orbits=len(orbits))
  return tuple(ComponentDatum(modulus=m, assignment=a) for a in _assignments(orbits, 0, n))


def _prime_to(m: int, l: int) -> int:  # noqa: E741
  while m % l == 0:
    m //= l
  return m


def moduli_modulus(n: int, q: int, residue_char_l: Optional[int] = None) -> int:
  """q^{n!} - 1, or its prime-to-l part in residue characteristic l."""
  m = q ** math.factorial(n) - 1
  return m if residue_char_l is None else _prime_to(m, residue_char_l)


def enumerate_components(n: int, q: int, residue_char_l: Optional[int] = None) -> tuple[ComponentDatum, ...]:
  if n < 1:
    raise ArgumentError(f"n must be positive, got {n}")
  _check_q(q)
  if residue_char_l is not None:
    if not is_prime(residue_char_l):
      raise ArgumentError(f"residue characteristic must be prime, got {residue_char_l}")
    if q % residue_char_l == 0:
      raise ArgumentError(f"residue characteristic {residue_char_l} divides q={q}")
  check_bound("enumerate_components", n, get_config().moduli_max_n)
  components = components_over_modulus(n, q, moduli_modulus(n, q, residue_char_l))
  logger.info("components enumerated", n=n, q=q, l=residue_char_l, count=len(components))
  return components


def count_components_oracle(n: int, q: int) -> int:
  """Brute force over every residue: q-stable eigenvalue-to-partition maps, read back as orbit data."""
  if n < 1:
    raise ArgumentError(f"n must be positive, got {n}")
  _check_q(q)
  m = moduli_modulus(n, q)
  check_bound("count_components_oracle", m, get_config().max_modulus)
  candidates = [x for x in range(m) if _orbit(q, m, x, n) is not None]

  def maps(start: int, remaining: int) -> Iterator[tuple[tuple[int, Partition], ...]]:
    if remaining == 0:
      yield ()
      return
    for i in range(start, len(candidates)):
      for k in range(remaining, 0, -1):
        for p in partitions_of(k):
          for rest in maps(i + 1, remaining - k):
            yield ((candidates[i], p), *rest)

  found: set[frozenset[tuple[int, Partition]]] = set()
  for assignment in maps(0, n):
    f = dict(assignment)
    if all(f.get(q * x % m) == p for x, p in assignment):
      found.add(frozenset((min(_orbit(q, m, x) or (x,)), p) for x, p in assignment))
  return len(found)


def _merge(parts: dict[int, list[int]]) -> dict[int, Partition]:
  return {rep: Partition(parts=tuple(sorted(ps, reverse=True))) for rep, ps in parts.items()}


def residue_support(datum: ComponentDatum, residue_modulus: int) -> ComponentDatum:
  """Reduce eigenvalues x -> x mod m'; orbits that collide merge their Jordan blocks."""
  m = datum.modulus
  if m % residue_modulus:
    raise ArgumentError(f"{residue_modulus} does not divide {m}")
  merged: dict[int, list[int]] = defaultdict(list)
  sizes: dict[int, int] = {}
  q = 1
  for orbit, p in datum.assignment:
    q = orbit.q
    members = _orbit(q, residue_modulus, orbit.min_rep % residue_modulus)
    assert members is not None
    rep = min(members)
    sizes[rep] = len(members)
    merged[rep].extend(p.parts * (orbit.size // len(members)))
  q_residue = q % residue_modulus or residue_modulus
  return ComponentDatum(
    modulus=residue_modulus,
    assignment=tuple(
      (FrobeniusOrbit(modulus=residue_modulus, q=q_residue, min_rep=rep, size=sizes[rep]), p) for rep, p in _merge(merged).items()
    ),
  )


def lift_component(datum: ComponentDatum, modulus: int) -> ComponentDatum:
  """Embed Z/m' into Z/m by x -> (m/m') x; orbits keep their size and their order."""
  small = datum.modulus
  if modulus % small:
    raise ArgumentError(f"{small} does not divide {modulus}")
  scale = modulus // small
  return ComponentDatum(
    modulus=modulus,
    assignment=tuple(
      (FrobeniusOrbit(modulus=modulus, q=o.q % modulus or modulus, min_rep=o.min_rep * scale, size=o.size), p) for o, p in datum.assignment
    ),
  )


def unipotent_block(n: int, q: int, l: int) -> tuple[ComponentDatum, ...]:  # noqa: E741
  """Characteristic-zero components all of whose eigenvalues reduce to 1 in characteristic l."""
  residue = moduli_modulus(n, q, l)
  return tuple(c for c in enumerate_components(n, q) if all(o.min_rep == 0 for o, _ in residue_support(c, residue).assignment))
