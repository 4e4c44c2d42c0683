"""(P,Q)-bipartitions: non-negative integer matrices with row sums P and column sums Q.

Rows are filled top to bottom against the remaining column capacities, so a
row is only ever placed when the rest of the table can still be completed.
``bip_count`` never lists matrices: it is a memoized count over the remaining
capacities, in the manner of exact margin-table counting.
"""

from typing import Any, Iterator, Sequence
from functools import cache
from collections import Counter, defaultdict

from pydantic import BaseModel, ConfigDict

from bmkit.config import check_bound
from bmkit.logger import setup_logger
from bmkit.partitions import Partition, multinomial
from bmkit.exceptions import DegreeMismatchError

__all__ = ["MackeyDecomposition", "bip_count", "bipartitions", "mackey_decomposition", "row_weight"]

logger = setup_logger("Bipartitions")

type Row = tuple[int, ...]
type Matrix = tuple[Row, ...]


def _rows(total: int, caps: Row) -> Iterator[Row]:
  """Compositions of ``total`` bounded entrywise by ``caps``, largest first entry first."""
  if not caps:
    if total == 0:
      yield ()
    return
  head, rest = caps[0], caps[1:]
  room = sum(rest)
  for a in range(min(head, total), max(0, total - room) - 1, -1):
    for tail in _rows(total - a, rest):
      yield (a, *tail)


def bipartitions(p: Partition, q: Partition) -> tuple[Matrix, ...]:
  if p.degree != q.degree:
    raise DegreeMismatchError("bipartitions", p.degree, q.degree)
  check_bound("bipartitions", p.degree)

  def fill(i: int, caps: Row) -> Iterator[Matrix]:
    if i == p.length:
      yield ()
      return
    for row in _rows(p.parts[i], caps):
      left = tuple(c - a for c, a in zip(caps, row, strict=True))
      for below in fill(i + 1, left):
        yield (row, *below)

  return tuple(fill(0, q.parts))


def row_weight(row: Row) -> Partition:
  """The partition a matrix row determines: its entries sorted decreasingly, zeros dropped."""
  return Partition(parts=tuple(sorted((a for a in row if a), reverse=True)))


def _arrangements(values: Counter[int], caps: Row) -> Iterator[Row]:
  """Distinct orderings of a multiset of entries into len(caps) bounded slots."""
  if not caps:
    yield ()
    return
  for v in sorted(values, reverse=True):
    if values[v] == 0 or v > caps[0]:
      continue
    values[v] -= 1
    for tail in _arrangements(values, caps[1:]):
      yield (v, *tail)
    values[v] += 1


@cache
def _bip_count(weights: tuple[tuple[int, ...], ...], caps: Row) -> int:
  if not weights:
    return int(not any(caps))
  head, rest = weights[0], weights[1:]
  zeros = len(caps) - len(head)
  if zeros < 0:
    return 0
  values = Counter(head)
  values[0] += zeros
  total = 0
  for row in _arrangements(values, caps):
    total += _bip_count(rest, tuple(c - a for c, a in zip(caps, row, strict=True)))
  return total


def bip_count(weights: Sequence[Partition], q: Partition) -> int:
  """Bip((P_i)_i, Q): margin matrices whose i-th row has weight P_i."""
  total = sum(w.degree for w in weights)
  if total != q.degree:
    raise DegreeMismatchError("bip_count", total, q.degree)
  check_bound("bip_count", total)
  return _bip_count(tuple(w.parts for w in weights if not w.is_empty), q.parts)


class MackeyDecomposition(BaseModel):
  """Res_{S_P} Ind_{S_Q}: each weight sequence with its bipartition count."""

  model_config = ConfigDict(frozen=True)

  p: Partition
  q: Partition
  terms: tuple[tuple[tuple[Partition, ...], int], ...]

  def count(self, weights: Sequence[Partition]) -> int:
    return dict(self.terms).get(tuple(weights), 0)

  @property
  def restricted_dimension(self) -> int:
    return sum(c * _dimension(weights) for weights, c in self.terms)

  @property
  def induced_dimension(self) -> int:
    return multinomial(self.q)

  @property
  def dimensions_agree(self) -> bool:
    return self.restricted_dimension == self.induced_dimension

  def as_json(self) -> dict[str, Any]:
    return {
      "P": list(self.p.parts),
      "Q": list(self.q.parts),
      "terms": [{"weights": [list(w.parts) for w in weights], "count": c} for weights, c in self.terms],
      "restricted_dimension": self.restricted_dimension,
      "induced_dimension": self.induced_dimension,
      "ok": self.dimensions_agree,
    }

  def as_rows(self) -> list[list[str]]:
    return [["weights", "count"], *([";".join(str(w) for w in weights), str(c)] for weights, c in self.terms)]

  def as_text(self) -> str:
    lines = [f"{' ⊗ '.join(str(w) for w in weights)} ↦ {c}" for weights, c in self.terms]
    lines.append(f"dimension {self.restricted_dimension} = {self.induced_dimension}" if self.dimensions_agree else "dimension MISMATCH")
    return "\n".join(lines)


def _dimension(weights: Sequence[Partition]) -> int:
  out = 1
  for w in weights:
    out *= multinomial(w)
  return out


def mackey_decomposition(p: Partition, q: Partition) -> MackeyDecomposition:
  grouped: dict[tuple[Partition, ...], int] = defaultdict(int)
  for matrix in bipartitions(p, q):
    grouped[tuple(row_weight(row) for row in matrix)] += 1
  terms = tuple(sorted(grouped.items(), key=lambda item: tuple(w.sort_key for w in item[0])))
  logger.debug("mackey decomposition", P=str(p), Q=str(q), terms=len(terms))
  return MackeyDecomposition(p=p, q=q, terms=terms)
