from typing import Iterator

import pytest

from bmkit.config import BmkitConfig, use_config


@pytest.fixture
def restore_config() -> Iterator[BmkitConfig]:
  """Run with default settings and put back whatever was active before."""
  config = BmkitConfig()
  previous = use_config(config)
  yield config
  use_config(previous)
