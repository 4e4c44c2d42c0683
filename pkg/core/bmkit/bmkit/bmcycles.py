"""Virtual representations, cycles and the maps between them.

Both sides are free abelian groups on opaque labels: K-types sigma(tau) (and
the residual unipotent classes used by the quasi-banal engine) on one side,
components Z(tau) (and the special-fibre point) on the other. Multiplicities
are products of Kostka numbers over the support of the types.
"""

import math
from typing import Any, Self, Literal, Iterable, Optional, Annotated
from functools import cache
from collections import defaultdict

from pydantic import Field, BaseModel, ConfigDict, field_validator

from bmkit.linalg import unitriangular_inverse
from bmkit.logger import setup_logger
from bmkit.inertial import Duality, BasicType, InertialType, scs, type_dominates, types_with_scs
from bmkit.partitions import Partition
from bmkit.exceptions import ArgumentError, InvariantViolationError
from bmkit.symrep.kostka import kostka

__all__ = [
  "Cycle",
  "KType",
  "ResidualUnipotent",
  "SpecialFibrePoint",
  "TypeComponent",
  "TypeMatrix",
  "VirtualRep",
  "cyc",
  "mult",
  "mult_matrix",
  "r_tau",
]

logger = setup_logger("Cycles")

MINUS = "−"

# magnitudes at or above this are emitted as decimal strings in JSON
JSON_SAFE_INT = 2**53


def json_int(value: int) -> int | str:
  return value if abs(value) < JSON_SAFE_INT else str(value)


class KType(BaseModel):
  model_config = ConfigDict(frozen=True)

  kind: Literal["k_type"] = "k_type"
  tau: InertialType

  @property
  def sort_key(self) -> tuple[Any, ...]:
    return (0, self.tau.sort_key)

  def render(self) -> str:
    return f"σ({self.tau})"


class ResidualUnipotent(BaseModel):
  model_config = ConfigDict(frozen=True)

  kind: Literal["residual_unipotent"] = "residual_unipotent"
  partition: Partition

  @property
  def sort_key(self) -> tuple[Any, ...]:
    return (1, self.partition.sort_key)

  def render(self) -> str:
    return f"red(σ¹{self.partition})"


class TypeComponent(BaseModel):
  model_config = ConfigDict(frozen=True)

  kind: Literal["type_component"] = "type_component"
  tau: InertialType

  @property
  def sort_key(self) -> tuple[Any, ...]:
    return (0, self.tau.sort_key)

  def render(self) -> str:
    return f"Z({self.tau})"


class SpecialFibrePoint(BaseModel):
  model_config = ConfigDict(frozen=True)

  kind: Literal["special_fibre_point"] = "special_fibre_point"

  @property
  def sort_key(self) -> tuple[Any, ...]:
    return (1,)

  def render(self) -> str:
    return "[𝔭]"


type RepLabel = Annotated[KType | ResidualUnipotent, Field(discriminator="kind")]
type ComponentLabel = Annotated[TypeComponent | SpecialFibrePoint, Field(discriminator="kind")]


def _collect[L: KType | ResidualUnipotent | TypeComponent | SpecialFibrePoint](terms: Iterable[tuple[L, int]]) -> tuple[tuple[L, int], ...]:
  merged: dict[L, int] = defaultdict(int)
  for label, coefficient in terms:
    merged[label] += coefficient
  return tuple(sorted(((lab, c) for lab, c in merged.items() if c), key=lambda item: item[0].sort_key))


class _FreeModuleElement(BaseModel):
  model_config = ConfigDict(frozen=True)

  coeffs: tuple[tuple[Any, int], ...] = ()

  @classmethod
  def zero(cls) -> Self:
    return cls()

  @classmethod
  def basis(cls, label: Any) -> Self:  # noqa: ANN401
    return cls(coeffs=((label, 1),))

  @classmethod
  def from_terms(cls, terms: Iterable[tuple[Any, int]]) -> Self:
    return cls(coeffs=tuple(terms))

  @property
  def is_zero(self) -> bool:
    return not self.coeffs

  @property
  def labels(self) -> tuple[Any, ...]:
    return tuple(label for label, _ in self.coeffs)

  def coefficient(self, label: Any) -> int:  # noqa: ANN401
    return dict(self.coeffs).get(label, 0)

  def __add__(self, other: Self) -> Self:
    return type(self)(coeffs=self.coeffs + other.coeffs)

  def __neg__(self) -> Self:
    return type(self)(coeffs=tuple((label, -c) for label, c in self.coeffs))

  def __sub__(self, other: Self) -> Self:
    return self + (-other)

  def __mul__(self, scalar: int) -> Self:
    return type(self)(coeffs=tuple((label, scalar * c) for label, c in self.coeffs))

  __rmul__ = __mul__

  def render(self) -> str:
    if not self.coeffs:
      return "0"
    out: list[str] = []
    for i, (label, c) in enumerate(self.coeffs):
      magnitude = "" if abs(c) == 1 else str(abs(c))
      if i == 0:
        out.append(f"{MINUS if c < 0 else ''}{magnitude}{label.render()}")
      else:
        out.append(f" {MINUS if c < 0 else '+'} {magnitude}{label.render()}")
    return "".join(out)

  def __str__(self) -> str:
    return self.render()

  def terms_json(self) -> list[dict[str, Any]]:
    return [{"label": label.render(), "coefficient": json_int(c)} for label, c in self.coeffs]


class VirtualRep(_FreeModuleElement):
  coeffs: tuple[tuple[RepLabel, int], ...] = ()

  @field_validator("coeffs")
  def normalize(cls, v: tuple[tuple[KType | ResidualUnipotent, int], ...]) -> tuple[tuple[KType | ResidualUnipotent, int], ...]:
    return _collect(v)

  @classmethod
  def sigma(cls, tau: InertialType) -> "VirtualRep":
    return cls.basis(KType(tau=tau))

  @classmethod
  def residual(cls, p: Partition) -> "VirtualRep":
    return cls.basis(ResidualUnipotent(partition=p))


class Cycle(_FreeModuleElement):
  coeffs: tuple[tuple[ComponentLabel, int], ...] = ()

  @field_validator("coeffs")
  def normalize(cls, v: tuple[tuple[TypeComponent | SpecialFibrePoint, int], ...]) -> tuple[tuple[TypeComponent | SpecialFibrePoint, int], ...]:
    return _collect(v)

  @classmethod
  def component(cls, tau: InertialType) -> "Cycle":
    return cls.basis(TypeComponent(tau=tau))

  @classmethod
  def point(cls, multiplicity: int = 1) -> "Cycle":
    return cls(coeffs=((SpecialFibrePoint(), multiplicity),))

  @property
  def point_multiplicity(self) -> int:
    return self.coefficient(SpecialFibrePoint())


def mult(tau: InertialType, other: InertialType, dual: Optional[Duality] = None) -> int:
  """m(sigma(tau), other): product of Kostka numbers over the union of supports.

  With ``dual`` the first argument is dualized first, giving m(sigma(tau)^v, other).
  """
  source = dual.apply(tau) if dual is not None else tau
  labels = {b.label for b in source.support} | {b.label for b in other.support}
  return math.prod(kostka(source.partition_at(label), other.partition_at(label)) for label in sorted(labels))


class TypeMatrix(BaseModel):
  model_config = ConfigDict(frozen=True)

  order: tuple[InertialType, ...]
  entries: tuple[tuple[int, ...], ...]

  def entry(self, row: InertialType, column: InertialType) -> int:
    return self.entries[self.order.index(row)][self.order.index(column)]

  def as_json(self) -> dict[str, Any]:
    return {"order": [t.as_json() for t in self.order], "entries": [list(r) for r in self.entries]}


type SupportKey = tuple[tuple[BasicType, int], ...]


def _support_key(support: dict[BasicType, int]) -> SupportKey:
  return tuple(sorted(((b, d) for b, d in support.items() if d), key=lambda item: item[0].label))


@cache
def _block(key: SupportKey) -> tuple[TypeMatrix, tuple[tuple[int, ...], ...]]:
  order = types_with_scs(dict(key))
  entries = tuple(tuple(mult(a, b) for b in order) for a in order)
  for i, a in enumerate(order):
    for j, b in enumerate(order):
      if (entries[i][j] > 0) != type_dominates(a, b):
        raise InvariantViolationError("mult(tau, tau') > 0 iff tau dominates tau'", f"{a} vs {b}")
  inverse = unitriangular_inverse(entries)
  logger.debug("multiplicity block ready", size=len(order))
  return TypeMatrix(order=order, entries=entries), inverse


def mult_matrix(support: dict[BasicType, int]) -> TypeMatrix:
  return _block(_support_key(support))[0]


def cyc(theta: VirtualRep, dual: Optional[Duality] = None) -> Cycle:
  """Linear extension of sigma(tau) -> sum over tau' of m(sigma(tau)^v, tau') Z(tau')."""
  duality = dual or Duality.identity()
  terms: list[tuple[TypeComponent, int]] = []
  for label, c in theta.coeffs:
    if not isinstance(label, KType):
      raise ArgumentError(f"cyc is defined on K-types only, got {label.render()}")
    source = duality.apply(label.tau)
    for other in types_with_scs(scs(source)):
      m = mult(label.tau, other, duality)
      if m:
        terms.append((TypeComponent(tau=other), c * m))
  return Cycle.from_terms(terms)


def r_tau(tau: InertialType, dual: Optional[Duality] = None) -> VirtualRep:
  """The virtual K-type with cyc(r_tau(tau)) = Z(tau): a row of the inverse block matrix."""
  duality = dual or Duality.identity()
  matrix, inverse = _block(_support_key(scs(tau)))
  row = inverse[matrix.order.index(tau)]
  return VirtualRep.from_terms((KType(tau=duality.apply(other)), c) for other, c in zip(matrix.order, row, strict=True))
