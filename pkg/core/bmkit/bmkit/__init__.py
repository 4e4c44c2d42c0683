from bmkit.config import BmkitConfig, get_config, load_config, use_config
from bmkit.moduli import (
  ComponentDatum,
  FrobeniusOrbit,
  lift_component,
  residue_support,
  unipotent_block,
  frobenius_orbits,
  enumerate_components,
  count_components_oracle,
)
from bmkit.bmcycles import Cycle, VirtualRep, cyc, mult, r_tau, mult_matrix
from bmkit.inertial import Duality, BasicType, InertialType, scs, type_dominates, unipotent_type, types_with_scs
from bmkit.exceptions import (
  BmkitError,
  ArgumentError,
  ResourceBoundError,
  CounterexampleError,
  DegreeMismatchError,
  InvariantViolationError,
)
from bmkit.partitions import Partition, conjugate, dominates, multinomial, partitions_of
from bmkit.quasibanal import (
  TypeSequence,
  QuasiBanalParams,
  DistinguishedPoint,
  red_rep,
  bip_count,
  bar_cyc_at,
  bipartitions,
  ihara_report,
  verify_local_bm,
  mackey_decomposition,
  cycle_at_distinguished,
)
from bmkit.symrep import kostka, lr_mult, kostka_matrix, kostka_oracle, inverse_kostka_matrix

__all__ = [
  "ArgumentError",
  "BasicType",
  "BmkitConfig",
  "BmkitError",
  "ComponentDatum",
  "CounterexampleError",
  "Cycle",
  "DegreeMismatchError",
  "DistinguishedPoint",
  "Duality",
  "FrobeniusOrbit",
  "InertialType",
  "InvariantViolationError",
  "Partition",
  "QuasiBanalParams",
  "ResourceBoundError",
  "TypeSequence",
  "VirtualRep",
  "bar_cyc_at",
  "bip_count",
  "bipartitions",
  "conjugate",
  "count_components_oracle",
  "cyc",
  "cycle_at_distinguished",
  "dominates",
  "enumerate_components",
  "frobenius_orbits",
  "get_config",
  "ihara_report",
  "inverse_kostka_matrix",
  "kostka",
  "kostka_matrix",
  "kostka_oracle",
  "lift_component",
  "load_config",
  "lr_mult",
  "mackey_decomposition",
  "mult",
  "mult_matrix",
  "multinomial",
  "partitions_of",
  "r_tau",
  "red_rep",
  "residue_support",
  "scs",
  "type_dominates",
  "types_with_scs",
  "unipotent_block",
  "unipotent_type",
  "use_config",
  "verify_local_bm",
]
