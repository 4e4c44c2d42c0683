import math
from typing import Any, Mapping, Iterator
from itertools import count, product

from pydantic import Field, BaseModel, ConfigDict, PositiveInt, computed_field, field_validator, model_validator

from bmkit.config import get_config, check_bound
from bmkit.partitions import Partition, partitions_of
from bmkit.exceptions import ArgumentError

__all__ = [
  "DistinguishedPoint",
  "QuasiBanalParams",
  "TypeSequence",
  "is_prime",
  "prime_power_base",
  "principal_series",
  "type_sequences",
  "unipotent_sequence",
]


def is_prime(n: int) -> bool:
  if n < 2:
    return False
  return all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_power_base(q: int) -> int | None:
  """The prime p with q = p^k, or None when q is not a prime power."""
  if q < 2:
    return None
  p = next((d for d in range(2, math.isqrt(q) + 1) if q % d == 0), q)
  while q % p == 0:
    q //= p
  return p if q == 1 else None


def _valuation(x: int, p: int) -> int:
  v = 0
  while x % p == 0:
    x //= p
    v += 1
  return v


class QuasiBanalParams(BaseModel):
  """Residue characteristic l, field size q and rank n with l > n and l | q - 1."""

  model_config = ConfigDict(frozen=True)

  l: PositiveInt  # noqa: E741
  q: PositiveInt
  n: PositiveInt

  @field_validator("l")
  def validate_l(cls, v: int) -> int:
    if v == 2 or not is_prime(v):
      msg = f"l must be an odd prime, got {v}"
      raise ValueError(msg)
    return v

  @field_validator("q")
  def validate_q(cls, v: int) -> int:
    if prime_power_base(v) is None:
      msg = f"q must be a prime power, got {v}"
      raise ValueError(msg)
    return v

  @model_validator(mode="after")
  def validate_quasi_banal(self) -> "QuasiBanalParams":
    if self.l <= self.n:
      msg = f"quasi-banal needs l > n, got l={self.l}, n={self.n}"
      raise ValueError(msg)
    if (self.q - 1) % self.l:
      msg = f"quasi-banal needs q = 1 mod l, got q={self.q}, l={self.l}"
      raise ValueError(msg)
    return self

  @computed_field
  @property
  def a(self) -> int:
    return _valuation(self.q - 1, self.l)

  @property
  def character_count(self) -> int:
    return self.l**self.a

  def usable_indices(self, cap: int | None = None) -> int:
    """Character indices a sweep may use: l^a, capped at max(n, cap)."""
    floor = get_config().index_cap if cap is None else cap
    return min(self.character_count, max(self.n, floor))

  @classmethod
  def smallest_for(cls, n: int) -> "QuasiBanalParams":
    if n < 1:
      raise ArgumentError(f"n must be positive, got {n}")
    l = next(p for p in range(max(3, n + 1), 4 * n + 8) if p % 2 and is_prime(p))  # noqa: E741
    q = next(q for q in count(l + 1, l) if prime_power_base(q) is not None)
    return cls(l=l, q=q, n=n)


class TypeSequence(BaseModel):
  """Partitions indexed by characters 1..l^a of the tame quotient; index 1 is trivial."""

  model_config = ConfigDict(frozen=True)

  parts: tuple[tuple[PositiveInt, Partition], ...] = ()

  @model_validator(mode="before")
  @classmethod
  def _from_mapping(cls, data: Any) -> Any:  # noqa: ANN401
    if isinstance(data, Mapping) and isinstance(data.get("parts"), Mapping):
      data = {"parts": tuple(data["parts"].items())}  # type: ignore[union-attr]
    return data

  @field_validator("parts")
  def validate_parts(cls, v: tuple[tuple[int, Partition], ...]) -> tuple[tuple[int, Partition], ...]:
    support = tuple(sorted(((i, p) for i, p in v if not p.is_empty), key=lambda item: item[0]))
    indices = [i for i, _ in support]
    if len(set(indices)) != len(indices):
      msg = f"character indices must be distinct, got {indices}"
      raise ValueError(msg)
    return support

  @classmethod
  def of(cls, mapping: Mapping[int, Partition]) -> "TypeSequence":
    return cls(parts=tuple(mapping.items()))

  @property
  def degree(self) -> int:
    return sum(p.degree for _, p in self.parts)

  @property
  def weights(self) -> tuple[Partition, ...]:
    return tuple(p for _, p in self.parts)

  @property
  def max_index(self) -> int:
    return max((i for i, _ in self.parts), default=0)

  def at(self, index: int) -> Partition:
    return dict(self.parts).get(index, Partition())

  def check_against(self, params: QuasiBanalParams) -> None:
    if self.degree != params.n:
      raise ArgumentError(f"type sequence has degree {self.degree}, expected n={params.n}")
    if self.max_index > params.character_count:
      raise ArgumentError(f"character index {self.max_index} exceeds l^a={params.character_count}")

  def __str__(self) -> str:
    return ";".join(f"{i}:{','.join(map(str, p.parts))}" for i, p in self.parts)

  def as_json(self) -> list[dict[str, Any]]:
    return [{"index": i, "partition": list(p.parts)} for i, p in self.parts]


class DistinguishedPoint(BaseModel):
  """Generalized Frobenius-eigenspace dimensions of a distinguished residual representation."""

  model_config = ConfigDict(frozen=True, populate_by_name=True)

  shape: Partition = Field(alias="Q")

  @field_validator("shape")
  def validate_shape(cls, v: Partition) -> Partition:
    if v.is_empty:
      msg = "distinguished point needs a non-empty partition"
      raise ValueError(msg)
    return v

  @property
  def n(self) -> int:
    return self.shape.degree


def unipotent_sequence(p: Partition) -> TypeSequence:
  return TypeSequence(parts=((1, p),))


def principal_series(n: int) -> TypeSequence:
  return TypeSequence(parts=tuple((i, Partition.of(1)) for i in range(1, n + 1)))


def _weak_compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
  if k == 0:
    if n == 0:
      yield ()
    return
  for head in range(n, -1, -1):
    for tail in _weak_compositions(n - head, k - 1):
      yield (head, *tail)


def _multisets(n: int, ladder: tuple[Partition, ...], start: int) -> Iterator[tuple[Partition, ...]]:
  if n == 0:
    yield ()
    return
  for position in range(start, len(ladder)):
    p = ladder[position]
    if p.degree <= n:
      for rest in _multisets(n - p.degree, ladder, position):
        yield (p, *rest)


def type_sequences(n: int, max_indices: int, *, canonical: bool = False) -> tuple[TypeSequence, ...]:
  """Every type sequence of degree n over indices 1..max_indices.

  With ``canonical`` only one sequence per multiset of non-empty partitions is
  kept, packed into indices 1..r in decreasing (degree, reverse-lex) order.
  Everything computed from a type sequence in this package is invariant under
  permuting indices, so canonical sequences suffice for sweeps.
  """
  if n < 0 or max_indices < 0:
    raise ArgumentError(f"n and max_indices must be non-negative, got {n}, {max_indices}")
  check_bound("type_sequences", n)
  if canonical:
    ladder = tuple(p for d in range(n, 0, -1) for p in partitions_of(d))
    return tuple(
      TypeSequence(parts=tuple(enumerate(weights, start=1))) for weights in _multisets(n, ladder, 0) if len(weights) <= max_indices
    )
  out: list[TypeSequence] = []
  for degrees in _weak_compositions(n, max_indices):
    for choice in product(*(partitions_of(d) for d in degrees)):
      out.append(TypeSequence(parts=tuple(enumerate(choice, start=1))))
  return tuple(out)
