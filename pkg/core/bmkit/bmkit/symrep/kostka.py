"""Kostka numbers, two ways, and the (inverse) Kostka matrix.

``kostka`` counts semistandard tableaux depth first, one content value at a
time, each value added as a horizontal strip (which is exactly column
strictness). ``kostka_oracle`` never looks at a tableau: it is the character
inner product <chi^P sgn, Ind_{S_Q} sgn>.
"""

import math
from typing import Iterator
from functools import cache

from pydantic import BaseModel, ConfigDict

from bmkit.config import check_bound
from bmkit.linalg import matmul, identity, unitriangular_inverse
from bmkit.logger import setup_logger
from bmkit.partitions import Partition, dominates, partitions_of, assert_dominance_compatible
from bmkit.exceptions import DegreeMismatchError, InvariantViolationError
from bmkit.symrep.characters import irreducible, young_inner_product

logger = setup_logger("Kostka")

type Parts = tuple[int, ...]


def _horizontal_strips(shape: Parts, inner: Parts, cells: int) -> Iterator[Parts]:
  rows = len(shape)
  grown = list(inner)

  def extend(i: int, left: int) -> Iterator[Parts]:
    if i == rows:
      if left == 0:
        yield tuple(grown)
      return
    # a row may not grow past the old end of the row above
    ceiling = shape[i] if i == 0 else min(shape[i], inner[i - 1])
    for add in range(min(ceiling - inner[i], left), -1, -1):
      grown[i] = inner[i] + add
      yield from extend(i + 1, left - add)
    grown[i] = inner[i]

  yield from extend(0, cells)


@cache
def _ssyt_count(shape: Parts, inner: Parts, content: Parts) -> int:
  if not content:
    return int(inner == shape)
  head, rest = content[0], content[1:]
  return sum(_ssyt_count(shape, grown, rest) for grown in _horizontal_strips(shape, inner, head))


def kostka(shape: Partition, content: Partition) -> int:
  """Number of semistandard Young tableaux of the given shape and content."""
  if shape.degree != content.degree:
    return 0
  if shape.is_empty:
    return 1
  return _ssyt_count(shape.parts, (0,) * shape.length, content.parts)


def kostka_oracle(shape: Partition, content: Partition) -> int:
  if shape.degree != content.degree:
    raise DegreeMismatchError("kostka_oracle", shape.degree, content.degree)
  sgn_blocks = [(k, irreducible((k,), twisted=True)) for k in content.parts]
  return young_inner_product(irreducible(shape.parts, twisted=True), sgn_blocks)


def hook_length_count(shape: Partition) -> int:
  """Standard Young tableaux of the shape, by the hook length formula."""
  columns = [sum(1 for row in shape.parts if row > j) for j in range(shape.part(0))]
  hooks = math.prod((row - j - 1) + (columns[j] - i - 1) + 1 for i, row in enumerate(shape.parts) for j in range(row))
  return math.factorial(shape.degree) // hooks


class PartitionMatrix(BaseModel):
  model_config = ConfigDict(frozen=True)

  n: int
  order: tuple[Partition, ...]
  entries: tuple[tuple[int, ...], ...]

  def entry(self, row: Partition, column: Partition) -> int:
    return self.entries[self.order.index(row)][self.order.index(column)]

  def as_json(self) -> dict[str, list[list[int]]]:
    return {"order": [list(p.parts) for p in self.order], "entries": [list(r) for r in self.entries]}


class KostkaMatrix(PartitionMatrix):
  def check_unitriangular(self) -> None:
    for i, row in enumerate(self.order):
      for j, column in enumerate(self.order):
        value = self.entries[i][j]
        if i == j and value != 1:
          raise InvariantViolationError("unit diagonal", f"m({row},{row}) = {value}")
        if value < 0 or (value and not dominates(row, column)):
          raise InvariantViolationError("m(P,Q) = 0 unless P dominates Q", f"m({row},{column}) = {value}")


@cache
def _kostka_matrix(n: int) -> KostkaMatrix:
  order = partitions_of(n)
  assert_dominance_compatible(order)
  matrix = KostkaMatrix(n=n, order=order, entries=tuple(tuple(kostka(p, q) for q in order) for p in order))
  matrix.check_unitriangular()
  logger.debug("kostka matrix ready", n=n, size=len(order))
  return matrix


def kostka_matrix(n: int) -> KostkaMatrix:
  check_bound("kostka_matrix", n)
  return _kostka_matrix(n)


def inverse_kostka_matrix(n: int) -> PartitionMatrix:
  forward = kostka_matrix(n)
  inverse = unitriangular_inverse(forward.entries)
  if matmul(forward.entries, inverse) != identity(len(forward.order)):
    raise InvariantViolationError("K * K^-1 = I", f"n={n}")
  return PartitionMatrix(n=n, order=forward.order, entries=inverse)
