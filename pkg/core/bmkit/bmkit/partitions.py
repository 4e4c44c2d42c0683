"""Integer partitions, dominance order and multinomials.

Partitions are the index language for everything else in bmkit: Kostka
matrices, inertial types, bipartition weights and moduli components all key
on them. Enumeration order is reverse-lexicographic, which linearly extends
dominance; matrix builders assert that rather than assume it.
"""

import math
import operator
from typing import Any, Iterator, Sequence
from functools import cache
from itertools import accumulate

from pydantic import BaseModel, ConfigDict, model_validator, model_serializer

from bmkit.config import check_bound
from bmkit.logger import setup_logger
from bmkit.exceptions import ArgumentError, InvariantViolationError

__all__ = [
  "Partition",
  "assert_dominance_compatible",
  "conjugate",
  "dominates",
  "multinomial",
  "partition_count",
  "partitions_of",
]

logger = setup_logger("Partitions")

type Parts = tuple[int, ...]


def _integral_part(p: Any) -> int:  # noqa: ANN401
  try:
    return operator.index(p)
  except TypeError:
    msg = f"partition parts must be integers, got {p!r}"
    raise ValueError(msg) from None


class Partition(BaseModel):
  model_config = ConfigDict(frozen=True)

  parts: tuple[int, ...] = ()

  @model_validator(mode="before")
  @classmethod
  def _normalize(cls, data: Any) -> Any:  # noqa: ANN401
    if isinstance(data, (list, tuple)):
      data = {"parts": data}
    if isinstance(data, dict) and "parts" in data:
      raw = tuple(_integral_part(p) for p in data["parts"])  # type: ignore[union-attr]
      while raw and raw[-1] == 0:
        raw = raw[:-1]
      if any(p < 1 for p in raw):
        msg = f"partition parts must be positive, got {raw}"
        raise ValueError(msg)
      if any(a < b for a, b in zip(raw, raw[1:], strict=False)):
        msg = f"partition parts must be weakly decreasing, got {raw}"
        raise ValueError(msg)
      data = {"parts": raw}
    return data

  @model_serializer
  def _as_list(self) -> list[int]:
    return list(self.parts)

  @classmethod
  def of(cls, *parts: int) -> "Partition":
    return cls(parts=parts)

  @classmethod
  def row(cls, n: int) -> "Partition":
    return cls(parts=(n,) if n else ())

  @classmethod
  def column(cls, n: int) -> "Partition":
    return cls(parts=(1,) * n)

  @property
  def degree(self) -> int:
    return sum(self.parts)

  @property
  def length(self) -> int:
    return len(self.parts)

  @property
  def is_empty(self) -> bool:
    return not self.parts

  @property
  def sort_key(self) -> tuple[int, Parts]:
    # ascending on this key = by degree, then reverse-lexicographic
    return (self.degree, tuple(-p for p in self.parts))

  def part(self, i: int) -> int:
    return self.parts[i] if i < len(self.parts) else 0

  def __str__(self) -> str:
    return "[" + ",".join(map(str, self.parts)) + "]"

  def __repr__(self) -> str:
    return f"Partition{self.parts!r}"


def _generate(n: int, largest: int) -> Iterator[Parts]:
  if n == 0:
    yield ()
    return
  for k in range(min(n, largest), 0, -1):
    for rest in _generate(n - k, k):
      yield (k, *rest)


@cache
def _partitions_of(n: int) -> tuple[Partition, ...]:
  return tuple(Partition(parts=p) for p in _generate(n, n))


def partitions_of(n: int) -> tuple[Partition, ...]:
  """All partitions of n, reverse-lexicographic: (n) first, (1,...,1) last."""
  if n < 0:
    raise ArgumentError(f"cannot partition a negative integer ({n})")
  check_bound("partitions_of", n)
  return _partitions_of(n)


def _dominates(p: Parts, q: Parts) -> bool:
  if sum(p) != sum(q):
    return False
  width = max(len(p), len(q))
  padded_p = p + (0,) * (width - len(p))
  padded_q = q + (0,) * (width - len(q))
  return all(a >= b for a, b in zip(accumulate(padded_p), accumulate(padded_q), strict=True))


def dominates(p: Partition, q: Partition) -> bool:
  return _dominates(p.parts, q.parts)


def multinomial(p: Partition) -> int:
  """deg(P)! / prod P(i)!"""
  return math.factorial(p.degree) // math.prod(math.factorial(k) for k in p.parts)


def _conjugate(p: Parts) -> Parts:
  if not p:
    return ()
  return tuple(sum(1 for k in p if k > i) for i in range(p[0]))


def conjugate(p: Partition) -> Partition:
  return Partition(parts=_conjugate(p.parts))


@cache
def partition_count(n: int) -> int:
  """p(n) by Euler's pentagonal-number recurrence; independent of the enumerator."""
  if n < 0:
    return 0
  if n == 0:
    return 1
  total = 0
  k = 1
  while True:
    first = k * (3 * k - 1) // 2
    if first > n:
      break
    sign = 1 if k % 2 else -1
    total += sign * partition_count(n - first)
    second = k * (3 * k + 1) // 2
    if second <= n:
      total += sign * partition_count(n - second)
    k += 1
  return total


def assert_dominance_compatible(order: Sequence[Partition]) -> None:
  """Raise unless no later element strictly dominates an earlier one."""
  for i, earlier in enumerate(order):
    for later in order[i + 1 :]:
      if later != earlier and dominates(later, earlier):
        logger.error("order does not extend dominance", earlier=str(earlier), later=str(later))
        raise InvariantViolationError("canonical order extends dominance", f"{later} dominates {earlier}")
