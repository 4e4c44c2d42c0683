from bmkit.quasibanal.params import (
  TypeSequence,
  QuasiBanalParams,
  DistinguishedPoint,
  type_sequences,
  principal_series,
  unipotent_sequence,
)
from bmkit.quasibanal.local_bm import (
  IharaReport,
  LocalBmCheck,
  red_rep,
  bar_cyc_at,
  ihara_report,
  verify_local_bm,
  cycle_at_distinguished,
)
from bmkit.quasibanal.bipartitions import MackeyDecomposition, bip_count, row_weight, bipartitions, mackey_decomposition

__all__ = [
  "DistinguishedPoint",
  "IharaReport",
  "LocalBmCheck",
  "MackeyDecomposition",
  "QuasiBanalParams",
  "TypeSequence",
  "bar_cyc_at",
  "bip_count",
  "bipartitions",
  "cycle_at_distinguished",
  "ihara_report",
  "mackey_decomposition",
  "principal_series",
  "red_rep",
  "row_weight",
  "type_sequences",
  "unipotent_sequence",
  "verify_local_bm",
]
