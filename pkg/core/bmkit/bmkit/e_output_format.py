from enum import StrEnum


class EOutputFormat(StrEnum):
  json = "json"
  csv = "csv"
  text = "text"

  @property
  def streams_ndjson(self) -> bool:
    # sweeps stream one JSON object per line unless csv was asked for
    match self:
      case EOutputFormat.csv:
        return False
      case EOutputFormat.json | EOutputFormat.text:
        return True
