# ruff: noqa: S101

import math

import pytest
from hypothesis import (
  given,
  settings,
  strategies as st,
)

from bmkit.linalg import matmul, identity
from bmkit.symrep import (
  z,
  kostka,
  lr_mult,
  character,
  kostka_matrix,
  kostka_oracle,
  lr_coefficient,
  character_table,
  lr_mult_tableau,
  hook_length_count,
  inverse_kostka_matrix,
)
from bmkit.partitions import Partition, dominates, multinomial, partitions_of
from bmkit.exceptions import DegreeMismatchError

P = Partition.of

KOSTKA_EXAMPLES: list[tuple[Partition, Partition, int]] = [
  (P(2, 1), P(1, 1, 1), 2),
  (P(3, 2), P(2, 2, 1), 2),
  (P(2, 2), P(2, 1, 1), 1),
  (P(3, 1), P(2, 2), 1),
  (P(2, 2), P(3, 1), 0),
  (P(3, 2, 1), P(1, 1, 1, 1, 1, 1), 16),
  (P(4), P(2, 1, 1), 1),
]

INVERSE_KOSTKA_THREE: tuple[tuple[int, ...], ...] = ((1, -1, 1), (0, 1, -2), (0, 0, 1))

shape_strategy = st.integers(min_value=1, max_value=9).flatmap(lambda n: st.sampled_from(partitions_of(n)))


@pytest.mark.parametrize(("shape", "content", "expected"), KOSTKA_EXAMPLES)
def test_kostka_examples(shape: Partition, content: Partition, expected: int) -> None:
  assert kostka(shape, content) == expected


def test_kostka_degree_mismatch_is_zero() -> None:
  assert kostka(P(2, 1), P(2)) == 0
  assert kostka(Partition(), Partition()) == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_kostka_agrees_with_character_oracle(n: int) -> None:
  """Tableau counting and the character inner product agree on every pair."""
  for shape in partitions_of(n):
    for content in partitions_of(n):
      assert kostka(shape, content) == kostka_oracle(shape, content), (shape, content)


@pytest.mark.parametrize("n", range(1, 9))
def test_kostka_weighted_by_degrees_is_the_young_index(n: int) -> None:
  identity_class = Partition.column(n)
  for content in partitions_of(n):
    total = sum(kostka(shape, content) * character(shape, identity_class) for shape in partitions_of(n))
    assert total == multinomial(content), content


def test_kostka_oracle_rejects_degree_mismatch() -> None:
  with pytest.raises(DegreeMismatchError):
    kostka_oracle(P(2), P(1))


@given(shape=shape_strategy)
@settings(max_examples=40)
def test_standard_tableaux_by_hook_length(shape: Partition) -> None:
  assert kostka(shape, Partition.column(shape.degree)) == hook_length_count(shape)
  assert kostka(shape, Partition.row(shape.degree)) == int(shape == Partition.row(shape.degree))


@given(shape=shape_strategy)
@settings(max_examples=40)
def test_kostka_vanishes_off_dominance(shape: Partition) -> None:
  for content in partitions_of(shape.degree):
    assert (kostka(shape, content) > 0) == dominates(shape, content)


def test_inverse_kostka_small_case() -> None:
  inverse = inverse_kostka_matrix(3)
  assert inverse.order == (P(3), P(2, 1), P(1, 1, 1))
  assert inverse.entries == INVERSE_KOSTKA_THREE
  assert inverse.entry(P(2, 1), P(1, 1, 1)) == -2


@pytest.mark.parametrize("n", range(1, 11))
def test_kostka_matrix_times_inverse_is_identity(n: int) -> None:
  forward = kostka_matrix(n)
  forward.check_unitriangular()
  assert matmul(forward.entries, inverse_kostka_matrix(n).entries) == identity(len(forward.order))


def test_kostka_matrix_json_shape() -> None:
  payload = kostka_matrix(2).as_json()
  assert payload == {"order": [[2], [1, 1]], "entries": [[1, 1], [0, 1]]}


def test_character_values_in_degree_three() -> None:
  shape = P(2, 1)
  assert [character(shape, mu) for mu in partitions_of(3)] == [-1, 0, 2]
  assert [character(P(1, 1, 1), mu) for mu in partitions_of(3)] == [1, -1, 1]


def test_character_degree_mismatch() -> None:
  with pytest.raises(DegreeMismatchError):
    character(P(2, 1), P(2))


@pytest.mark.parametrize("n", range(1, 9))
def test_character_table_orthogonality(n: int) -> None:
  table = character_table(n)
  table.check_orthogonality()
  assert sum(table.class_sizes) == math.factorial(n)
  # degrees of irreducibles are the standard tableau counts
  identity_class = Partition.column(n)
  assert all(table.value(shape, identity_class) == hook_length_count(shape) for shape in table.order)


def test_centralizer_order() -> None:
  assert z((1, 1, 1)) == 6
  assert z((2, 1)) == 2
  assert z((2, 2)) == 8


def test_lr_coefficient_example() -> None:
  assert lr_coefficient(P(3, 2, 1), P(2, 1), P(2, 1)) == 2
  assert lr_coefficient(P(3, 1), P(2, 1), P(1)) == 1
  assert lr_coefficient(P(3), P(2, 1), P(1)) == 0


def test_lr_mult_examples() -> None:
  assert lr_mult(P(3, 2, 1), [P(2, 1), P(2, 1)]) == 2
  assert lr_mult(P(2, 1), [P(1), P(1), P(1)]) == 2
  assert lr_mult(P(2, 1), [P(1, 1), P(1)]) == 1
  assert lr_mult(P(3), [P(1, 1), P(1)]) == 0
  assert lr_mult(P(2, 1), [P(2, 1), Partition()]) == 1


def test_lr_mult_degree_mismatch() -> None:
  with pytest.raises(DegreeMismatchError):
    lr_mult(P(3), [P(1)])
  with pytest.raises(DegreeMismatchError):
    lr_mult_tableau(P(3), [P(1)])


@pytest.mark.parametrize("n", range(1, 7))
def test_lr_mult_agrees_with_tableau_rule(n: int) -> None:
  for target in partitions_of(n):
    for a in range(n + 1):
      for left in partitions_of(a):
        for right in partitions_of(n - a):
          assert lr_mult(target, [left, right]) == lr_mult_tableau(target, [left, right]), (target, left, right)


def test_lr_mult_of_rows_is_kostka() -> None:
  """Inducing trivial characters from a Young subgroup gives Kostka multiplicities."""
  for target in partitions_of(5):
    for content in partitions_of(5):
      assert lr_mult(target, [Partition.row(k) for k in content.parts]) == kostka(target, content)
