from typing import Sequence
from functools import cache

from bmkit.partitions import Partition, partitions_of
from bmkit.exceptions import DegreeMismatchError
from bmkit.symrep.characters import irreducible, young_inner_product

type Parts = tuple[int, ...]


def _nonempty(factors: Sequence[Partition]) -> tuple[Partition, ...]:
  return tuple(f for f in factors if not f.is_empty)


@cache
def _lr_mult(target: Parts, factors: tuple[Parts, ...]) -> int:
  # sgn twists on target and factors cancel; kept so the sum reads as the sigma-circ multiplicity
  blocks = [(sum(f), irreducible(f, twisted=True)) for f in factors]
  return young_inner_product(irreducible(target, twisted=True), blocks)


def lr_mult(target: Partition, factors: Sequence[Partition]) -> int:
  """Multiplicity of sigma_target in Ind_{S_P}(sigma_f1 (x) ... (x) sigma_fk), by characters."""
  total = sum(f.degree for f in factors)
  if target.degree != total:
    raise DegreeMismatchError("lr_mult", target.degree, total)
  blocks = _nonempty(factors)
  if not blocks:
    return 1
  return _lr_mult(target.parts, tuple(f.parts for f in blocks))


def _contains(outer: Parts, inner: Parts) -> bool:
  return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner, strict=False))


@cache
def _lr_tableaux(outer: Parts, inner: Parts, content: Parts) -> int:
  """Count skew fillings of outer/inner with the given content that are LR tableaux.

  Cells are filled in reverse reading order (rows top to bottom, each right to
  left) so the lattice condition can be checked as each letter is placed.
  """
  cells = [(r, c) for r in range(len(outer)) for c in range(outer[r] - 1, (inner[r] if r < len(inner) else 0) - 1, -1)]
  if len(cells) != sum(content):
    return 0
  filling: dict[tuple[int, int], int] = {}
  used = [0] * len(content)

  def place(k: int) -> int:
    if k == len(cells):
      return int(used == list(content))
    r, c = cells[k]
    right = filling.get((r, c + 1))
    above = filling.get((r - 1, c))
    found = 0
    for letter in range(len(content)):
      if used[letter] == content[letter]:
        continue
      if right is not None and letter > right:
        continue
      if above is not None and letter <= above:
        continue
      if letter and used[letter] + 1 > used[letter - 1]:
        continue
      used[letter] += 1
      filling[(r, c)] = letter
      found += place(k + 1)
      del filling[(r, c)]
      used[letter] -= 1
    return found

  return place(0)


def lr_coefficient(outer: Partition, inner: Partition, content: Partition) -> int:
  """c^outer_{inner, content} by the Littlewood-Richardson tableau rule."""
  if outer.degree != inner.degree + content.degree or not _contains(outer.parts, inner.parts):
    return 0
  return _lr_tableaux(outer.parts, inner.parts, content.parts)


def lr_mult_tableau(target: Partition, factors: Sequence[Partition]) -> int:
  """Iterated LR coefficient; an oracle for ``lr_mult`` that never touches characters."""
  total = sum(f.degree for f in factors)
  if target.degree != total:
    raise DegreeMismatchError("lr_mult_tableau", target.degree, total)
  layer: dict[Partition, int] = {Partition(): 1}
  degree = 0
  for factor in _nonempty(factors):
    degree += factor.degree
    grown: dict[Partition, int] = {}
    for nu in partitions_of(degree):
      if not _contains(target.parts, nu.parts):
        continue
      coefficient = sum(mult * lr_coefficient(nu, lam, factor) for lam, mult in layer.items())
      if coefficient:
        grown[nu] = coefficient
    layer = grown
  return layer.get(target, 0)
