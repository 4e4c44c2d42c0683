from __future__ import annotations

import os
import sys
import inspect
import logging
from typing import TYPE_CHECKING, Literal, ClassVar
from pathlib import Path

import structlog

if TYPE_CHECKING:
  from structlog.types import EventDict, WrappedLogger, FilteringBoundLogger

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]

ColorKey = Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL", "RESET"]

LOG_LEVEL_ENV = "BMKIT_LOG_LEVEL"

# fields rendered by the formatter itself, never repeated in the trailing key/value dump
_CORE_FIELDS = frozenset({"event", "level", "pathname", "lineno", "timestamp", "logger"})

# frames skipped when locating the call site
_INTERNAL_MODULES = ("structlog", "logging", "bmkit.logger")


class ColoredFormatter:
  COLORS: ClassVar[dict[ColorKey, str]] = {
    "DEBUG": "\033[36m",  # Cyan
    "INFO": "\033[32m",  # Green
    "WARNING": "\033[33m",  # Yellow
    "ERROR": "\033[31m",  # Red
    "CRITICAL": "\033[35m",  # Magenta
    "RESET": "\033[0m",  # Reset
  }

  def __init__(self, *, colors: bool = True) -> None:
    self.colors = colors

  def __call__(self, logger: WrappedLogger, method_name: str, event_dict: EventDict) -> str:
    """Format a diagnostic line: level, caller and event, then any bound key/values."""
    level: str = event_dict.get("level", method_name).upper()
    log_color: str = self.COLORS.get(level, "") if self.colors else ""  # type: ignore[dict-item]
    reset_color: str = self.COLORS["RESET"] if self.colors else ""

    filename: str = Path(event_dict.get("pathname", "unknown")).stem
    lineno: str = str(event_dict.get("lineno", 0))
    event: str = str(event_dict.get("event", ""))

    formatted: str = f"{log_color}[{level:8}]{reset_color} {filename}:{lineno:<4} - {event}"

    extra_data = {k: v for k, v in event_dict.items() if k not in _CORE_FIELDS}
    if extra_data:
      formatted += " " + " ".join(f"{k}={v}" for k, v in sorted(extra_data.items()))

    return formatted


def add_caller_info(_: WrappedLogger, __: str, event_dict: EventDict) -> EventDict:
  frame = inspect.currentframe()
  try:
    caller = frame.f_back if frame else None
    while caller and caller.f_globals.get("__name__", "").startswith(_INTERNAL_MODULES):
      caller = caller.f_back
    if caller:
      event_dict.setdefault("pathname", caller.f_code.co_filename)
      event_dict.setdefault("lineno", caller.f_lineno)
  finally:
    del frame
  return event_dict


def _resolve_level(level: int | LogLevel | None) -> int:
  if level is None:
    level = os.getenv(LOG_LEVEL_ENV, "INFO").upper()  # type: ignore[assignment]
  if isinstance(level, str):
    return getattr(logging, level.upper(), logging.INFO)
  return level


class _Stderr:
  """Resolves sys.stderr on every write, so swapped streams (test runners, pipes) are honoured."""

  def write(self, message: str) -> int:
    return sys.stderr.write(message)

  def flush(self) -> None:
    sys.stderr.flush()


def _configure(level: int) -> None:
  # stdout carries report data; diagnostics always go to stderr
  structlog.configure(
    processors=[
      add_caller_info,
      structlog.processors.TimeStamper(fmt="iso"),
      structlog.processors.add_log_level,
      ColoredFormatter(colors=sys.stderr.isatty() and "NO_COLOR" not in os.environ),
    ],
    wrapper_class=structlog.make_filtering_bound_logger(level),
    logger_factory=structlog.PrintLoggerFactory(file=_Stderr()),  # type: ignore[arg-type]
    cache_logger_on_first_use=False,
  )


def setup_logger(
  name: str = "bmkit",
  level: int | LogLevel | None = None,
) -> FilteringBoundLogger:
  if not structlog.is_configured():
    _configure(_resolve_level(level))

  return structlog.get_logger(name)


def set_log_level(level: int | LogLevel) -> None:
  """Reconfigure the shared pipeline, e.g. after the CLI has read its config."""
  _configure(_resolve_level(level))


__all__ = ["set_log_level", "setup_logger"]
