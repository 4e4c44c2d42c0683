"""Inertial types as finitely supported maps from basic types to partitions."""

import math
from typing import Any, Mapping, Optional, Sequence
from itertools import product

from pydantic import Field, BaseModel, ConfigDict, PositiveInt, field_validator, model_validator

from bmkit.config import check_bound
from bmkit.logger import setup_logger
from bmkit.partitions import Partition, dominates, partitions_of, partition_count
from bmkit.exceptions import ArgumentError, InvariantViolationError

__all__ = [
  "BasicType",
  "Duality",
  "InertialType",
  "fibre_size",
  "is_semisimple",
  "scs",
  "type_degree",
  "type_dominates",
  "types_with_scs",
  "unipotent_type",
]

logger = setup_logger("Inertial")

TRIVIAL_LABEL = "1"

# full pairwise order assertion is quadratic; larger fibres rely on the component-wise argument
_ASSERT_ORDER_LIMIT = 2000


class BasicType(BaseModel):
  model_config = ConfigDict(frozen=True)

  label: str = Field(..., min_length=1, description="Opaque identifier of the basic type")
  dim: PositiveInt = Field(default=1, description="Dimension of the basic type")
  dual_label: Optional[str] = Field(default=None, description="Involution partner, None for self-dual")

  @field_validator("label")
  def validate_label(cls, v: str) -> str:
    if any(ch in v for ch in ";:=,@"):
      msg = f"basic type label {v!r} may not contain any of ;:=,@"
      raise ValueError(msg)
    return v

  @classmethod
  def trivial(cls) -> "BasicType":
    return cls(label=TRIVIAL_LABEL, dim=1)

  @property
  def partner(self) -> str:
    return self.dual_label or self.label

  def dual(self) -> "BasicType":
    if self.dual_label is None or self.dual_label == self.label:
      return self
    return BasicType(label=self.dual_label, dim=self.dim, dual_label=self.label)


class InertialType(BaseModel):
  model_config = ConfigDict(frozen=True)

  assignment: tuple[tuple[BasicType, Partition], ...] = ()

  @model_validator(mode="before")
  @classmethod
  def _normalize(cls, data: Any) -> Any:  # noqa: ANN401
    if isinstance(data, Mapping) and "assignment" in data and isinstance(data["assignment"], Mapping):
      data = {"assignment": tuple(data["assignment"].items())}  # type: ignore[union-attr]
    return data

  @field_validator("assignment")
  def validate_support(cls, v: tuple[tuple[BasicType, Partition], ...]) -> tuple[tuple[BasicType, Partition], ...]:
    support = tuple(sorted(((b, p) for b, p in v if not p.is_empty), key=lambda item: item[0].label))
    labels = [b.label for b, _ in support]
    if len(set(labels)) != len(labels):
      msg = f"basic type labels must be distinct, got {labels}"
      raise ValueError(msg)
    return support

  @classmethod
  def of(cls, mapping: Mapping[BasicType, Partition]) -> "InertialType":
    return cls(assignment=tuple(mapping.items()))

  @property
  def support(self) -> tuple[BasicType, ...]:
    return tuple(b for b, _ in self.assignment)

  def partition_at(self, basic: BasicType | str) -> Partition:
    label = basic if isinstance(basic, str) else basic.label
    for b, p in self.assignment:
      if b.label == label:
        return p
    return Partition()

  @property
  def sort_key(self) -> tuple[tuple[str, tuple[int, tuple[int, ...]]], ...]:
    return tuple((b.label, p.sort_key) for b, p in self.assignment)

  @property
  def is_unipotent(self) -> bool:
    return len(self.assignment) == 1 and self.assignment[0][0] == BasicType.trivial()

  def __str__(self) -> str:
    if self.is_unipotent:
      return f"τ{self.assignment[0][1]}"
    return "τ{" + ",".join(f"{b.label}:{p}" for b, p in self.assignment) + "}"

  def as_json(self) -> dict[str, list[dict[str, Any]]]:
    return {"assignment": [{"label": b.label, "dim": b.dim, "partition": list(p.parts)} for b, p in self.assignment]}


def unipotent_type(p: Partition) -> InertialType:
  return InertialType(assignment=((BasicType.trivial(), p),))


def type_degree(tau: InertialType) -> int:
  return sum(b.dim * p.degree for b, p in tau.assignment)


def scs(tau: InertialType) -> dict[BasicType, int]:
  """Supercuspidal support: each basic type in the support to the degree of its partition."""
  return {b: p.degree for b, p in tau.assignment}


def _scs_by_label(tau: InertialType) -> dict[str, int]:
  return {b.label: p.degree for b, p in tau.assignment}


def type_dominates(tau: InertialType, other: InertialType) -> bool:
  if _scs_by_label(tau) != _scs_by_label(other):
    return False
  return all(dominates(p, other.partition_at(b)) for b, p in tau.assignment)


def is_semisimple(tau: InertialType) -> bool:
  return all(p == Partition.column(p.degree) for _, p in tau.assignment)


def types_with_scs(support: Mapping[BasicType, int]) -> tuple[InertialType, ...]:
  """Every inertial type with the given supercuspidal support, dominance-compatible order."""
  blocks = sorted(((b, d) for b, d in support.items() if d), key=lambda item: item[0].label)
  if any(d < 0 for _, d in blocks):
    raise ArgumentError("supercuspidal support degrees must be non-negative")
  check_bound("types_with_scs", sum(b.dim * d for b, d in blocks))
  basics = [b for b, _ in blocks]
  types = tuple(InertialType(assignment=tuple(zip(basics, choice, strict=True))) for choice in product(*(partitions_of(d) for _, d in blocks)))
  if len(types) <= _ASSERT_ORDER_LIMIT:
    _assert_type_order(types)
  logger.debug("types with scs", support={b.label: d for b, d in blocks}, count=len(types))
  return types


def _assert_type_order(types: Sequence[InertialType]) -> None:
  for i, earlier in enumerate(types):
    for later in types[i + 1 :]:
      if type_dominates(later, earlier):
        raise InvariantViolationError("type order extends dominance", f"{later} dominates {earlier}")


def fibre_size(support: Mapping[BasicType, int]) -> int:
  return math.prod(partition_count(d) for d in support.values() if d)


class Duality(BaseModel):
  """An involution on basic-type labels; labels not mentioned are self-dual."""

  model_config = ConfigDict(frozen=True)

  pairs: tuple[tuple[str, str], ...] = ()

  @field_validator("pairs")
  def validate_involution(cls, v: tuple[tuple[str, str], ...]) -> tuple[tuple[str, str], ...]:
    mapping: dict[str, str] = {}
    for a, b in v:
      for src, dst in ((a, b), (b, a)):
        if mapping.setdefault(src, dst) != dst:
          msg = f"duality is not an involution at {src!r}"
          raise ValueError(msg)
    return tuple(sorted((a, b) for a, b in mapping.items() if a != b))

  @classmethod
  def identity(cls) -> "Duality":
    return cls()

  @classmethod
  def from_basic_types(cls, basics: Sequence[BasicType]) -> "Duality":
    return cls(pairs=tuple((b.label, b.partner) for b in basics if b.partner != b.label))

  def partner(self, label: str) -> str:
    return dict(self.pairs).get(label, label)

  @property
  def is_identity(self) -> bool:
    return all(a == b for a, b in self.pairs)

  def apply(self, tau: InertialType) -> InertialType:
    if self.is_identity:
      return tau
    dualized: list[tuple[BasicType, Partition]] = []
    for b, p in tau.assignment:
      partner = self.partner(b.label)
      if b.dual_label is not None and b.partner != partner:
        raise ArgumentError(f"basic type {b.label!r} is paired with {b.partner!r} but the duality pairs it with {partner!r}")
      if partner == b.label:
        dualized.append((b, p))
      else:
        # unannotated stays unannotated
        dualized.append((BasicType(label=partner, dim=b.dim, dual_label=None if b.dual_label is None else b.label), p))
    return InertialType(assignment=tuple(dualized))
