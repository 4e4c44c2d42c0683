import io
import csv
import json
from typing import Any, Optional, Protocol, Sequence

from pydantic import BaseModel, ConfigDict

from bmkit.moduli import ComponentDatum, FrobeniusOrbit
from bmkit.bmcycles import Cycle, VirtualRep, json_int
from bmkit.e_output_format import EOutputFormat

__all__ = [
  "ComponentsReport",
  "ElementReport",
  "MatrixReport",
  "OrbitsReport",
  "Report",
  "ValueReport",
  "dumps",
  "json_int",
  "render",
  "to_csv",
]


class Report(Protocol):
  def as_json(self) -> Any: ...  # noqa: ANN401

  def as_rows(self) -> list[list[str]]: ...

  def as_text(self) -> str: ...


def dumps(payload: Any) -> str:  # noqa: ANN401
  return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def to_csv(rows: Sequence[Sequence[str]]) -> str:
  buffer = io.StringIO()
  csv.writer(buffer, lineterminator="\n").writerows(rows)
  return buffer.getvalue().rstrip("\n")


def render(report: Report, fmt: EOutputFormat) -> str:
  match fmt:
    case EOutputFormat.json:
      return dumps(report.as_json())
    case EOutputFormat.csv:
      return to_csv(report.as_rows())
    case EOutputFormat.text:
      return report.as_text()


class ValueReport(BaseModel):
  """A single integer answer together with the inputs that produced it."""

  model_config = ConfigDict(frozen=True)

  name: str
  value: int
  inputs: dict[str, Any] = {}

  def as_json(self) -> dict[str, Any]:
    return {**self.inputs, self.name: json_int(self.value)}

  def as_rows(self) -> list[list[str]]:
    return [[*self.inputs, self.name], [*(str(v) for v in self.inputs.values()), str(self.value)]]

  def as_text(self) -> str:
    return str(self.value)


class MatrixReport(BaseModel):
  model_config = ConfigDict(frozen=True)

  name: str
  order: tuple[str, ...]
  order_json: tuple[Any, ...]
  entries: tuple[tuple[int, ...], ...]
  inputs: dict[str, Any] = {}

  def as_json(self) -> dict[str, Any]:
    return {**self.inputs, "order": list(self.order_json), self.name: [[json_int(v) for v in row] for row in self.entries]}

  def as_rows(self) -> list[list[str]]:
    return [["", *self.order], *([label, *(str(v) for v in row)] for label, row in zip(self.order, self.entries, strict=True))]

  def as_text(self) -> str:
    cells = [[str(v) for v in row] for row in self.entries]
    label_width = max((len(label) for label in self.order), default=0)
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(f"{label:<{label_width}}  " + " ".join(c.rjust(width) for c in row) for label, row in zip(self.order, cells, strict=True))


class ElementReport(BaseModel):
  """A virtual representation or a cycle, rendered as a signed sum."""

  model_config = ConfigDict(frozen=True)

  element: VirtualRep | Cycle
  inputs: dict[str, Any] = {}

  def as_json(self) -> dict[str, Any]:
    return {**self.inputs, "terms": self.element.terms_json()}

  def as_rows(self) -> list[list[str]]:
    return [["label", "coefficient"], *([label.render(), str(c)] for label, c in self.element.coeffs)]

  def as_text(self) -> str:
    return self.element.render()


class ComponentsReport(BaseModel):
  model_config = ConfigDict(frozen=True)

  n: int
  q: int
  l: Optional[int] = None  # noqa: E741
  modulus: int
  components: tuple[ComponentDatum, ...]
  oracle: Optional[int] = None

  @property
  def ok(self) -> bool:
    return self.oracle is None or self.oracle == len(self.components)

  def as_json(self) -> dict[str, Any]:
    payload: dict[str, Any] = {
      "n": self.n,
      "q": json_int(self.q),
      "modulus": str(self.modulus),
      "components": [c.as_json() for c in self.components],
      "count": len(self.components),
    }
    if self.l is not None:
      payload["l"] = self.l
    if self.oracle is not None:
      payload["oracle"] = self.oracle
      payload["ok"] = self.ok
    return payload

  def as_rows(self) -> list[list[str]]:
    rows = [["component", "min_rep", "size", "partition"]]
    for i, c in enumerate(self.components):
      rows.extend([str(i), str(o.min_rep), str(o.size), str(p)] for o, p in c.assignment)
    return rows

  def as_text(self) -> str:
    lines = [" ".join(f"{o.min_rep}^{o.size}:{p}" for o, p in c.assignment) for c in self.components]
    summary = f"count={len(self.components)} modulus={self.modulus}"
    if self.oracle is not None:
      summary += f" oracle={self.oracle}" + ("" if self.ok else " MISMATCH")
    return "\n".join([*lines, summary])


class OrbitsReport(BaseModel):
  model_config = ConfigDict(frozen=True)

  q: int
  modulus: int
  orbits: tuple[FrobeniusOrbit, ...]

  def as_json(self) -> dict[str, Any]:
    return {"q": json_int(self.q), "modulus": str(self.modulus), "orbits": [o.as_json() for o in self.orbits], "count": len(self.orbits)}

  def as_rows(self) -> list[list[str]]:
    return [["min_rep", "size"], *([str(o.min_rep), str(o.size)] for o in self.orbits)]

  def as_text(self) -> str:
    return "\n".join("{" + ",".join(map(str, o.members())) + "}" for o in self.orbits)
