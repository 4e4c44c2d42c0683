# ruff: noqa: S101

from itertools import product

import pytest
from hypothesis import (
  given,
  strategies as st,
)

from bmkit.inertial import Duality, BasicType, InertialType, is_semisimple, type_dominates, types_with_scs, unipotent_type
from bmkit.bmcycles import (
  Cycle,
  KType,
  VirtualRep,
  TypeComponent,
  SpecialFibrePoint,
  ResidualUnipotent,
  cyc,
  mult,
  r_tau,
  json_int,
  mult_matrix,
)
from bmkit.partitions import Partition, partitions_of
from bmkit.exceptions import ArgumentError
from bmkit.symrep.kostka import kostka_matrix

P = Partition.of
U = unipotent_type

TRIVIAL = BasicType.trivial()
RHO = BasicType(label="rho", dim=2)
CHI = BasicType(label="chi", dim=1, dual_label="chibar")

R_TAU_RENDERS: list[tuple[Partition, str]] = [
  (P(1), "σ(τ[1])"),
  (P(2), "σ(τ[2]) − σ(τ[1,1])"),
  (P(1, 1), "σ(τ[1,1])"),
  (P(3), "σ(τ[3]) − σ(τ[2,1]) + σ(τ[1,1,1])"),
  (P(2, 1), "σ(τ[2,1]) − 2σ(τ[1,1,1])"),
]

SMALL_BASICS: tuple[BasicType, ...] = (TRIVIAL, CHI, RHO)

# every support over SMALL_BASICS with dimension-weighted degree 1..6
SUPPORTS_UP_TO_SIX: list[dict[BasicType, int]] = [
  {b: c for b, c in zip(SMALL_BASICS, counts, strict=True) if c}
  for counts in product(range(7), repeat=len(SMALL_BASICS))
  if 0 < sum(c * b.dim for c, b in zip(counts, SMALL_BASICS, strict=True)) <= 6
]

unipotent_strategy = st.integers(min_value=1, max_value=6).flatmap(lambda n: st.sampled_from(partitions_of(n))).map(U)


def test_mult_is_a_kostka_product() -> None:
  assert mult(U(P(2, 1)), U(P(1, 1, 1))) == 2
  assert mult(U(P(1, 1, 1)), U(P(2, 1))) == 0
  left = InertialType.of({TRIVIAL: P(2), RHO: P(2, 1)})
  right = InertialType.of({TRIVIAL: P(1, 1), RHO: P(1, 1, 1)})
  assert mult(left, right) == 1 * 2


def test_mult_with_different_supports_is_zero() -> None:
  assert mult(U(P(2)), InertialType.of({RHO: P(1)})) == 0


def test_mult_dualizes_its_first_argument() -> None:
  duality = Duality.from_basic_types([CHI])
  source = InertialType.of({CHI.dual(): P(2)})
  target = InertialType.of({CHI: P(1, 1)})
  assert mult(source, target) == 0
  assert mult(source, target, duality) == 1


def test_mult_matrix_for_unipotent_support_is_kostka() -> None:
  matrix = mult_matrix({TRIVIAL: 4})
  assert matrix.order == tuple(U(p) for p in partitions_of(4))
  assert matrix.entries == kostka_matrix(4).entries
  assert matrix.entry(U(P(2, 2)), U(P(2, 1, 1))) == 1


def test_cyc_examples() -> None:
  assert cyc(VirtualRep.sigma(U(P(2, 1)))).render() == "Z(τ[2,1]) + 2Z(τ[1,1,1])"
  assert cyc(VirtualRep.sigma(U(P(1, 1)))) == Cycle.component(U(P(1, 1)))
  assert cyc(VirtualRep.zero()).is_zero


def test_cyc_is_linear() -> None:
  a, b = VirtualRep.sigma(U(P(3))), VirtualRep.sigma(U(P(2, 1)))
  assert cyc(2 * a - b) == 2 * cyc(a) - cyc(b)


def test_cyc_rejects_residual_labels() -> None:
  with pytest.raises(ArgumentError):
    cyc(VirtualRep.residual(P(1)))


@pytest.mark.parametrize(("shape", "expected"), R_TAU_RENDERS)
def test_r_tau_renders(shape: Partition, expected: str) -> None:
  assert r_tau(U(shape)).render() == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_cyc_of_r_tau_is_the_component(n: int) -> None:
  for p in partitions_of(n):
    tau = U(p)
    assert cyc(r_tau(tau)) == Cycle.component(tau), tau


@given(tau=unipotent_strategy)
def test_r_tau_leads_with_its_own_type(tau: InertialType) -> None:
  """The unitriangular inverse puts coefficient one on sigma(tau) itself."""
  element = r_tau(tau)
  assert element.coeffs[0] == (KType(tau=tau), 1)


def _support_id(support: dict[BasicType, int]) -> str:
  return ";".join(f"{b.label}:{c}" for b, c in support.items())


@pytest.mark.parametrize("support", SUPPORTS_UP_TO_SIX, ids=_support_id)
def test_cyc_of_r_tau_over_every_small_support(support: dict[BasicType, int]) -> None:
  for tau in types_with_scs(support):
    assert cyc(r_tau(tau)) == Cycle.component(tau), tau


@pytest.mark.parametrize("support", SUPPORTS_UP_TO_SIX, ids=_support_id)
def test_mult_is_positive_exactly_on_dominance(support: dict[BasicType, int]) -> None:
  fibre = types_with_scs(support)
  for a in fibre:
    for b in fibre:
      assert (mult(a, b) > 0) == type_dominates(a, b), (a, b)


def test_cyc_of_r_tau_with_nontrivial_duality() -> None:
  duality = Duality.from_basic_types([CHI, TRIVIAL])
  for tau in types_with_scs({CHI: 2, TRIVIAL: 1}):
    element = r_tau(tau, duality)
    assert all(label.tau.partition_at("chi").is_empty for label in element.labels)
    assert cyc(element, duality) == Cycle.component(tau), tau


def test_cyc_of_r_tau_with_duality_on_unannotated_basic_types() -> None:
  a, b = BasicType(label="a"), BasicType(label="b")
  duality = Duality(pairs=(("a", "b"),))
  for tau in types_with_scs({a: 2, b: 1}):
    assert cyc(r_tau(tau, duality), duality) == Cycle.component(tau), tau


def test_semisimple_types_are_their_own_r_tau() -> None:
  for tau in types_with_scs({TRIVIAL: 2, RHO: 2}):
    if is_semisimple(tau):
      assert r_tau(tau) == VirtualRep.sigma(tau)


def test_free_module_arithmetic() -> None:
  a = VirtualRep.sigma(U(P(2)))
  b = VirtualRep.residual(P(1, 1))
  total = a + a + b
  assert total.coefficient(KType(tau=U(P(2)))) == 2
  assert total.labels == (KType(tau=U(P(2))), ResidualUnipotent(partition=P(1, 1)))
  assert (a - a).is_zero
  assert (-b).render() == "−red(σ¹[1,1])"
  assert str(3 * b) == "3red(σ¹[1,1])"
  assert total.terms_json() == [{"label": "σ(τ[2])", "coefficient": 2}, {"label": "red(σ¹[1,1])", "coefficient": 1}]


def test_cycle_point_and_components() -> None:
  cycle = Cycle.component(U(P(1))) + Cycle.point(4)
  assert cycle.point_multiplicity == 4
  assert cycle.labels == (TypeComponent(tau=U(P(1))), SpecialFibrePoint())
  assert cycle.render() == "Z(τ[1]) + 4[𝔭]"
  assert Cycle.zero().render() == "0"


def test_json_int_switches_to_strings_for_large_values() -> None:
  assert json_int(2**53 - 1) == 2**53 - 1
  assert json_int(-(2**53)) == str(-(2**53))
