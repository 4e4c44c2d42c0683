"""Command-line value syntax.

- partition: ``2,1`` (an empty string is the empty partition)
- partition list: ``2,1;1``
- type sequence: ``1:2,1;2:1`` (character index, then partition)
- inertial type: ``2,1`` (unipotent) or ``a:2;b:1,1`` with dimensions from ``a=1,b=2``
- duality: ``a=b,c=d``
"""

from typing import Callable, Optional

from pydantic import ValidationError

from bmkit.inertial import Duality, BasicType, InertialType, unipotent_type
from bmkit.partitions import Partition
from bmkit.exceptions import ArgumentError
from bmkit.quasibanal import TypeSequence, QuasiBanalParams, DistinguishedPoint

__all__ = [
  "parse_dims",
  "parse_duality",
  "parse_inertial_type",
  "parse_int_list",
  "parse_params",
  "parse_partition",
  "parse_partition_list",
  "parse_point",
  "parse_scs",
  "parse_type_sequence",
]


def _guard[T](what: str, text: str, build: Callable[[], T]) -> T:
  try:
    return build()
  except ArgumentError:
    raise
  except ValidationError as e:
    raise ArgumentError(f"Invalid {what} {text!r}: {e.errors()[0]['msg']}") from e
  except ValueError as e:
    raise ArgumentError(f"Invalid {what} {text!r}: {e}") from e


def parse_partition(text: str) -> Partition:
  stripped = text.strip()
  return _guard("partition", text, lambda: Partition(parts=tuple(int(x) for x in stripped.split(",")) if stripped else ()))


def parse_partition_list(text: str) -> tuple[Partition, ...]:
  if not text.strip():
    return ()
  return tuple(parse_partition(chunk) for chunk in text.split(";"))


def _pairs(what: str, text: str, sep: str, delimiter: str) -> list[tuple[str, str]]:
  out: list[tuple[str, str]] = []
  for chunk in filter(None, (c.strip() for c in text.split(delimiter))):
    key, found, value = chunk.partition(sep)
    if not found or not key.strip():
      raise ArgumentError(f"Invalid {what} {text!r}: expected key{sep}value in {chunk!r}")
    out.append((key.strip(), value.strip()))
  return out


def parse_type_sequence(text: str) -> TypeSequence:
  entries = _pairs("type sequence", text, ":", ";")
  return _guard("type sequence", text, lambda: TypeSequence(parts=tuple((int(i), parse_partition(p)) for i, p in entries)))


def parse_int_list(text: str, what: str = "integer list") -> list[int]:
  return _guard(what, text, lambda: [int(x) for x in text.split(",") if x.strip()])


def parse_dims(text: Optional[str]) -> dict[str, int]:
  if not text:
    return {}
  return _guard("dimensions", text, lambda: {k: int(v) for k, v in _pairs("dimensions", text, "=", ",")})


def parse_duality(text: Optional[str]) -> Duality:
  if not text:
    return Duality.identity()
  return _guard("duality", text, lambda: Duality(pairs=tuple(_pairs("duality", text, "=", ","))))


def _basic(label: str, dims: dict[str, int], duality: Duality) -> BasicType:
  partner = duality.partner(label)
  return BasicType(label=label, dim=dims.get(label, 1), dual_label=None if partner == label else partner)


def parse_inertial_type(text: str, dims: Optional[dict[str, int]] = None, duality: Optional[Duality] = None) -> InertialType:
  if ":" not in text:
    return unipotent_type(parse_partition(text))
  dims = dims or {}
  duality = duality or Duality.identity()
  entries = _pairs("inertial type", text, ":", ";")
  return _guard(
    "inertial type", text, lambda: InertialType(assignment=tuple((_basic(k, dims, duality), parse_partition(v)) for k, v in entries))
  )


def parse_scs(text: str, dims: Optional[dict[str, int]] = None, duality: Optional[Duality] = None) -> dict[BasicType, int]:
  """``3`` is the unipotent block of degree 3; ``a:2;b:1`` names basic types."""
  dims = dims or {}
  duality = duality or Duality.identity()
  if ":" not in text:
    return _guard("supercuspidal support", text, lambda: {BasicType.trivial(): int(text)})
  entries = _pairs("supercuspidal support", text, ":", ";")
  return _guard("supercuspidal support", text, lambda: {_basic(k, dims, duality): int(v) for k, v in entries})


def parse_point(text: str) -> DistinguishedPoint:
  return _guard("distinguished point", text, lambda: DistinguishedPoint(shape=parse_partition(text)))


def parse_params(n: int, q: Optional[int], l: Optional[int]) -> QuasiBanalParams:  # noqa: E741
  """Explicit (l, q), or the smallest quasi-banal pair for n when both are omitted."""
  if q is None and l is None:
    return _guard("n", str(n), lambda: QuasiBanalParams.smallest_for(n))
  if q is None or l is None:
    raise ArgumentError("--q and --l must be given together")
  return _guard("quasi-banal parameters", f"l={l}, q={q}, n={n}", lambda: QuasiBanalParams(l=l, q=q, n=n))
