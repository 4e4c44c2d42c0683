import os
import threading
from typing import Any, ClassVar, Optional
from pathlib import Path

import toml
from pydantic import Field, BaseModel, ConfigDict, PositiveInt, ValidationError, field_validator

from bmkit.logger import LogLevel, setup_logger
from bmkit.exceptions import ArgumentError, ResourceBoundError
from bmkit.e_output_format import EOutputFormat

__all__ = ["BmkitConfig", "check_bound", "get_config", "load_config", "use_config"]

logger = setup_logger("Config")

BMKIT_TOML_FILENAME = "bmkit.toml"

# environment overrides, highest precedence below CLI flags
ENV_OVERRIDES: dict[str, str] = {
  "BMKIT_MAX_DEGREE": "max_degree",
  "BMKIT_JOBS": "jobs",
  "BMKIT_LOG_LEVEL": "log_level",
}


class BmkitConfig(BaseModel):
  INVALID_SECTION: ClassVar[str] = "No valid [bmkit] or [tool.bmkit] section found in specified path"

  model_config = ConfigDict(frozen=True, extra="forbid")

  max_degree: PositiveInt = Field(default=30, description="Largest degree n any enumeration may reach")
  moduli_max_n: PositiveInt = Field(default=4, description="Largest n for moduli component enumeration without override")
  max_modulus: PositiveInt = Field(default=1_000_000, description="Largest modulus whose full orbit set may be listed")
  index_cap: PositiveInt = Field(default=6, description="Floor of the character-index cap for type sequences")
  jobs: PositiveInt = Field(default=1, description="Worker processes for sweeps")
  format: EOutputFormat = Field(default=EOutputFormat.text, description="Report output format")
  log_level: LogLevel = Field(default="INFO", description="Diagnostic verbosity on stderr")

  @field_validator("log_level", mode="before")
  @classmethod
  def normalize_log_level(cls, v: Any) -> Any:  # noqa: ANN401
    return v.strip().upper() if isinstance(v, str) else v

  @staticmethod
  def from_toml_path(path: Path) -> "BmkitConfig":
    try:
      with path.open("r") as f:
        data = toml.load(f)
      toml_data = BmkitToml(**data)

      if path.name == BMKIT_TOML_FILENAME and toml_data.bmkit is not None:
        return toml_data.bmkit
      if path.name == "pyproject.toml" and toml_data.tool and "bmkit" in toml_data.tool:
        return BmkitConfig(**toml_data.tool["bmkit"])
    except (toml.TomlDecodeError, ValidationError):
      logger.exception(f"Error loading config from {path}")
      raise
    raise ArgumentError(BmkitConfig.INVALID_SECTION)

  def with_env(self, environ: Optional[dict[str, str]] = None) -> "BmkitConfig":
    environ = dict(os.environ) if environ is None else environ
    updates: dict[str, Any] = {field: environ[var] for var, field in ENV_OVERRIDES.items() if environ.get(var)}
    if not updates:
      return self
    try:
      return BmkitConfig.model_validate({**self.model_dump(), **updates})
    except ValidationError as e:
      raise ArgumentError(f"Invalid environment override: {e.errors()[0]['msg']}") from e

  def with_overrides(self, **overrides: Any) -> "BmkitConfig":  # noqa: ANN401
    updates = {k: v for k, v in overrides.items() if v is not None}
    if not updates:
      return self
    try:
      return BmkitConfig.model_validate({**self.model_dump(), **updates})
    except ValidationError as e:
      raise ArgumentError(f"Invalid option: {e.errors()[0]['msg']}") from e


class BmkitToml(BaseModel):
  bmkit: Optional[BmkitConfig] = None
  tool: Optional[dict[str, Any]] = None


def find_bmkit_toml(start_path: Path | None = None) -> Optional[Path]:
  if start_path is None:
    start_path = Path.cwd()

  current_dir = Path(start_path).resolve()

  for parent in [current_dir, *list(current_dir.parents)]:
    config_file = parent / BMKIT_TOML_FILENAME
    if config_file.exists():
      logger.debug(f"Found bmkit.toml at: {config_file}")
      return config_file

    pyproject_file = parent / "pyproject.toml"
    if pyproject_file.exists():
      try:
        with pyproject_file.open("r") as f:
          data = toml.load(f)
        if data.get("tool", {}).get("bmkit"):
          logger.debug(f"Found [tool.bmkit] in pyproject.toml at: {pyproject_file}")
          return pyproject_file
      except toml.TomlDecodeError as e:
        logger.debug(f"Error checking pyproject.toml at {pyproject_file}: {e}")
        continue

  return None


def load_config(config_path: str | Path | None = None, environ: Optional[dict[str, str]] = None) -> BmkitConfig:
  """Defaults, then the discovered (or given) toml file, then environment overrides."""
  if config_path is None:
    config_path = find_bmkit_toml()
  if config_path is None:
    return BmkitConfig().with_env(environ)

  config_path = Path(config_path)
  if not config_path.exists():
    raise ArgumentError(f"Config file does not exist: {config_path}")

  try:
    base = BmkitConfig.from_toml_path(config_path)
  except (toml.TomlDecodeError, ValidationError) as e:
    raise ArgumentError(f"Invalid config file {config_path}") from e
  return base.with_env(environ)


_active_lock = threading.Lock()
_active: BmkitConfig | None = None


def get_config() -> BmkitConfig:
  global _active  # noqa: PLW0603
  with _active_lock:
    if _active is None:
      _active = BmkitConfig().with_env()
    return _active


def use_config(config: BmkitConfig) -> BmkitConfig:
  global _active  # noqa: PLW0603
  with _active_lock:
    previous = _active or BmkitConfig()
    _active = config
  return previous


def check_bound(what: str, requested: int, bound: int | None = None) -> None:
  limit = get_config().max_degree if bound is None else bound
  if requested > limit:
    logger.warning("resource bound refused", what=what, requested=requested, bound=limit)
    raise ResourceBoundError(what, requested, limit)
