"""Irreducible characters of the symmetric groups.

Values come from the Murnaghan-Nakayama rule on beta-sets (abacus form):
removing a k-border strip moves one bead down k places, with sign given by
the number of beads it jumps. Everything else in symrep that needs an
independent check (Kostka oracle, LR multiplicities) goes through
``young_inner_product`` here.
"""

import math
import threading
from typing import Callable, Sequence
from fractions import Fraction
from functools import cache
from itertools import product
from collections import Counter

from pydantic import BaseModel, ConfigDict

from bmkit.logger import setup_logger
from bmkit.partitions import Partition, partitions_of
from bmkit.exceptions import DegreeMismatchError, InvariantViolationError

logger = setup_logger("Characters")

type Parts = tuple[int, ...]
type ClassFunction = Callable[[Parts], int]


def _strip(parts: Sequence[int]) -> Parts:
  return tuple(p for p in parts if p)


@cache
def _mn_character(shape: Parts, cycle_type: Parts) -> int:
  if not cycle_type:
    return 1 if not shape else 0
  k, rest = cycle_type[0], cycle_type[1:]
  length = len(shape)
  beads = [shape[i] + (length - 1 - i) for i in range(length)]
  occupied = set(beads)
  total = 0
  for bead in beads:
    target = bead - k
    if target < 0 or target in occupied:
      continue
    height = sum(1 for other in beads if target < other < bead)
    moved = sorted((occupied - {bead}) | {target}, reverse=True)
    smaller = _strip(b - (length - 1 - i) for i, b in enumerate(moved))
    total += (-1) ** height * _mn_character(smaller, rest)
  return total


def character(shape: Partition, cycle_type: Partition) -> int:
  """chi^shape evaluated on the class of cycle type ``cycle_type``."""
  if shape.degree != cycle_type.degree:
    raise DegreeMismatchError("character", shape.degree, cycle_type.degree)
  return _mn_character(shape.parts, cycle_type.parts)


def z(cycle_type: Parts) -> int:
  """Centralizer order of a permutation with the given cycle type."""
  return math.prod(k**m * math.factorial(m) for k, m in Counter(cycle_type).items())


def sign(cycle_type: Parts) -> int:
  return -1 if (sum(cycle_type) - len(cycle_type)) % 2 else 1


def class_size(cycle_type: Partition) -> int:
  return math.factorial(cycle_type.degree) // z(cycle_type.parts)


class CharacterTable(BaseModel):
  model_config = ConfigDict(frozen=True)

  n: int
  order: tuple[Partition, ...]
  values: tuple[tuple[int, ...], ...]
  class_sizes: tuple[int, ...]

  def value(self, shape: Partition, cycle_type: Partition) -> int:
    return self.values[self.order.index(shape)][self.order.index(cycle_type)]

  def class_size(self, cycle_type: Partition) -> int:
    return self.class_sizes[self.order.index(cycle_type)]

  def inner_product(self, i: int, j: int) -> int:
    return sum(s * a * b for s, a, b in zip(self.class_sizes, self.values[i], self.values[j], strict=True))

  def check_orthogonality(self) -> None:
    order_n = math.factorial(self.n)
    for i in range(len(self.order)):
      for j in range(i, len(self.order)):
        expected = order_n if i == j else 0
        if self.inner_product(i, j) != expected:
          raise InvariantViolationError("row orthogonality", f"rows {self.order[i]} and {self.order[j]} at n={self.n}")


_tables: dict[int, CharacterTable] = {}
_tables_lock = threading.Lock()


def _build_table(n: int) -> CharacterTable:
  order = partitions_of(n)
  logger.debug("building character table", n=n, classes=len(order))
  return CharacterTable(
    n=n,
    order=order,
    values=tuple(tuple(_mn_character(shape.parts, mu.parts) for mu in order) for shape in order),
    class_sizes=tuple(class_size(mu) for mu in order),
  )


def character_table(n: int) -> CharacterTable:
  table = _tables.get(n)
  if table is None:
    with _tables_lock:
      table = _tables.get(n)
      if table is None:
        table = _build_table(n)
        _tables[n] = table
  return table


def irreducible(shape: Parts, *, twisted: bool = False) -> ClassFunction:
  """chi^shape as a class function, optionally tensored with the sign character."""

  def chi(cycle_type: Parts) -> int:
    value = _mn_character(shape, cycle_type)
    return value * sign(cycle_type) if twisted else value

  return chi


def young_inner_product(whole: ClassFunction, factors: Sequence[tuple[int, ClassFunction]]) -> int:
  """<Res whole, (x)_i psi_i> over the Young subgroup S_{d_1} x ... x S_{d_k}.

  By Frobenius reciprocity this is the multiplicity of ``whole`` in the
  induction of the outer tensor product; exact rational sum over classes.
  """
  blocks = [(d, psi) for d, psi in factors if d]
  total = Fraction(0)
  for classes in product(*(partitions_of(d) for d, _ in blocks)):
    weight = Fraction(1)
    for (_, psi), mu in zip(blocks, classes, strict=True):
      weight *= Fraction(psi(mu.parts), z(mu.parts))
    if weight:
      merged = tuple(sorted((k for mu in classes for k in mu.parts), reverse=True))
      total += weight * whole(merged)
  if total.denominator != 1:
    raise InvariantViolationError("integral character inner product", f"got {total}")
  return int(total)
