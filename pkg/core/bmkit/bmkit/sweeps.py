"""Exhaustive verification grids, optionally fanned across worker processes.

Cases are evaluated with an order-preserving map, so the record stream is the
same for any number of workers.
"""

from typing import Any, Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor

from bmkit.config import BmkitConfig, get_config, use_config
from bmkit.logger import setup_logger, set_log_level
from bmkit.moduli import enumerate_components, count_components_oracle
from bmkit.partitions import Partition, partitions_of
from bmkit.quasibanal import (
  TypeSequence,
  QuasiBanalParams,
  DistinguishedPoint,
  type_sequences,
  verify_local_bm,
  mackey_decomposition,
)
from bmkit.symrep.kostka import kostka, kostka_oracle

__all__ = [
  "components_case",
  "components_grid",
  "kostka_case",
  "kostka_grid",
  "local_bm_case",
  "local_bm_grid",
  "mackey_case",
  "mackey_grid",
  "run_sweep",
]

logger = setup_logger("Sweeps")

type Record = dict[str, Any]


def _init_worker(config: BmkitConfig) -> None:
  use_config(config)
  set_log_level(config.log_level)


def run_sweep[C](case: Callable[[C], Record], grid: Sequence[C], jobs: int | None = None) -> Iterator[Record]:
  """Yield one record per grid point, in grid order."""
  config = get_config()
  workers = config.jobs if jobs is None else jobs
  logger.info("sweep started", cases=len(grid), jobs=workers)
  if workers <= 1 or len(grid) <= 1:
    yield from map(case, grid)
    return
  chunk = max(1, len(grid) // (workers * 8))
  with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(config,)) as pool:
    yield from pool.map(case, grid, chunksize=chunk)


def _pairs(n: int) -> list[tuple[Partition, Partition]]:
  return [(p, q) for d in range(1, n + 1) for p in partitions_of(d) for q in partitions_of(d)]


def kostka_grid(n: int) -> list[tuple[Partition, Partition]]:
  return _pairs(n)


def kostka_case(pair: tuple[Partition, Partition]) -> Record:
  p, q = pair
  value, oracle = kostka(p, q), kostka_oracle(p, q)
  return {"P": list(p.parts), "Q": list(q.parts), "kostka": value, "oracle": oracle, "ok": value == oracle}


def mackey_grid(n: int) -> list[tuple[Partition, Partition]]:
  return _pairs(n)


def mackey_case(pair: tuple[Partition, Partition]) -> Record:
  decomposition = mackey_decomposition(*pair)
  return {
    "P": list(decomposition.p.parts),
    "Q": list(decomposition.q.parts),
    "terms": len(decomposition.terms),
    "restricted_dimension": decomposition.restricted_dimension,
    "induced_dimension": decomposition.induced_dimension,
    "ok": decomposition.dimensions_agree,
  }


def local_bm_grid(params: QuasiBanalParams, *, canonical: bool = True) -> list[tuple[TypeSequence, DistinguishedPoint, QuasiBanalParams]]:
  taus = type_sequences(params.n, params.usable_indices(), canonical=canonical)
  return [(tau, DistinguishedPoint(shape=q), params) for tau in taus for q in partitions_of(params.n)]


def local_bm_case(case: tuple[TypeSequence, DistinguishedPoint, QuasiBanalParams]) -> Record:
  return verify_local_bm(*case).as_json()


def components_grid(n: int, qs: Sequence[int]) -> list[tuple[int, int]]:
  return [(d, q) for d in range(1, n + 1) for q in qs]


def components_case(case: tuple[int, int]) -> Record:
  n, q = case
  count, oracle = len(enumerate_components(n, q)), count_components_oracle(n, q)
  return {"n": n, "q": q, "count": count, "oracle": oracle, "ok": count == oracle}
