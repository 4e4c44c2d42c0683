# ruff: noqa: S101

import pytest
from pydantic import ValidationError

from bmkit.config import BmkitConfig, use_config
from bmkit.moduli import (
  ComponentDatum,
  FrobeniusOrbit,
  lift_component,
  moduli_modulus,
  residue_support,
  unipotent_block,
  frobenius_orbits,
  enumerate_components,
  components_over_modulus,
  count_components_oracle,
)
from bmkit.partitions import Partition
from bmkit.exceptions import ArgumentError, ResourceBoundError

P = Partition.of

ORBITS_OF_FOUR_MOD_FIFTEEN: list[tuple[int, ...]] = [(0,), (1, 4), (2, 8), (3, 12), (5,), (6, 9), (7, 13), (10,), (11, 14)]
ORACLE_CASES: list[tuple[int, int]] = [(n, q) for n in (1, 2, 3) for q in (2, 3, 4, 5)]


def test_moduli_modulus() -> None:
  assert moduli_modulus(2, 4) == 15
  assert moduli_modulus(3, 2) == 63
  assert moduli_modulus(2, 4, 3) == 5
  assert moduli_modulus(2, 4, 5) == 3


def test_frobenius_orbits_partition_the_residues() -> None:
  orbits = frobenius_orbits(4, 15)
  assert [o.members() for o in orbits] == ORBITS_OF_FOUR_MOD_FIFTEEN
  assert sum(o.size for o in orbits) == 15
  assert orbits[1].as_json() == {"min_rep": "1", "size": 2}


def test_frobenius_orbits_rejects_bad_moduli() -> None:
  with pytest.raises(ArgumentError):
    frobenius_orbits(2, 4)
  with pytest.raises(ArgumentError):
    frobenius_orbits(2, 0)


@pytest.mark.usefixtures("restore_config")
def test_frobenius_orbits_respects_max_modulus() -> None:
  use_config(BmkitConfig(max_modulus=10))
  with pytest.raises(ResourceBoundError):
    frobenius_orbits(4, 15)


def test_orbit_size_is_validated() -> None:
  FrobeniusOrbit(modulus=15, q=4, min_rep=5, size=1)
  with pytest.raises(ValidationError):
    FrobeniusOrbit(modulus=15, q=4, min_rep=1, size=1)
  with pytest.raises(ValidationError):
    FrobeniusOrbit(modulus=15, q=4, min_rep=15, size=1)


def test_component_datum_normalization() -> None:
  fixed = FrobeniusOrbit(modulus=15, q=4, min_rep=5, size=1)
  pair = FrobeniusOrbit(modulus=15, q=4, min_rep=1, size=2)
  datum = ComponentDatum(modulus=15, assignment=((fixed, P(1)), (pair, P(1)), (FrobeniusOrbit(modulus=15, q=4, min_rep=0, size=1), Partition())))
  assert datum.key == ((1, (1,)), (5, (1,)))
  assert datum.degree == 3
  assert datum.as_json() == {"orbits": [{"min_rep": "1", "size": 2, "partition": [1]}, {"min_rep": "5", "size": 1, "partition": [1]}]}
  with pytest.raises(ValidationError):
    ComponentDatum(modulus=15, assignment=((fixed, P(1)), (fixed, P(2))))


def test_components_for_rank_two() -> None:
  """Six single fixed points with a partition of two, three pairs of fixed points, six orbits of size two."""
  components = enumerate_components(2, 4)
  assert len(components) == 15
  assert len({c.key for c in components}) == 15
  assert all(c.degree == 2 for c in components)


def test_components_in_residue_characteristic() -> None:
  components = enumerate_components(2, 4, 3)
  assert [c.key for c in components] == [((0, (2,)),), ((0, (1, 1)),), ((1, (1,)),), ((2, (1,)),)]


@pytest.mark.parametrize(("n", "q"), ORACLE_CASES)
def test_component_count_matches_brute_force(n: int, q: int) -> None:
  assert len(enumerate_components(n, q)) == count_components_oracle(n, q)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_rank_one_components_are_the_nonzero_residues(q: int) -> None:
  assert len(enumerate_components(1, q)) == count_components_oracle(1, q) == q - 1


def test_rank_two_over_two_has_three_components() -> None:
  assert len(enumerate_components(2, 2)) == 3


@pytest.mark.parametrize(("n", "q", "l"), [(0, 4, None), (2, 6, None), (2, 4, 4), (2, 4, 2)])
def test_enumerate_components_argument_errors(n: int, q: int, l: int | None) -> None:  # noqa: E741
  with pytest.raises(ArgumentError):
    enumerate_components(n, q, l)


def test_enumerate_components_degree_bound() -> None:
  with pytest.raises(ResourceBoundError):
    enumerate_components(5, 2)


def test_unipotent_block_reduces_to_zero() -> None:
  block = unipotent_block(2, 4, 3)
  assert len(block) == 9
  reduced = {residue_support(c, 5).key for c in block}
  assert reduced == {((0, (2,)),), ((0, (1, 1)),)}


def test_residue_support_merges_colliding_orbits() -> None:
  fixed = [o for o in frobenius_orbits(4, 15) if o.min_rep in (0, 5)]
  datum = ComponentDatum(modulus=15, assignment=tuple((o, P(1)) for o in fixed))
  assert residue_support(datum, 5).key == ((0, (1, 1)),)
  with pytest.raises(ArgumentError):
    residue_support(datum, 4)


def test_lift_component_embeds_injectively() -> None:
  small = components_over_modulus(2, 4, 5)
  lifted = [lift_component(c, 15) for c in small]
  assert len({c.key for c in lifted}) == len(small) == 4
  assert {c.key for c in lifted} <= {c.key for c in components_over_modulus(2, 4, 15)}
  assert [[o.size for o, _ in c.assignment] for c in lifted] == [[o.size for o, _ in c.assignment] for c in small]
  with pytest.raises(ArgumentError):
    lift_component(small[0], 16)
