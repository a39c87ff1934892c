"""Workbench configuration shared by the CLI entry points."""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass
from pathlib import Path

from .errors import CacheWarning

__all__ = ["WorkbenchConfig", "CACHE_ENV_VAR"]

CACHE_ENV_VAR = "HECKEWB_CACHE_DIR"


@dataclass
class WorkbenchConfig:
    datum_label: str = "A1-sc"
    cutoff: int = 6
    cache_dir: Path | None = None
    output_format: str = "text"
    strict: bool = False  # verify central elements and cached tables

    def __post_init__(self):
        if self.cutoff < 1:
            raise ValueError("cutoff must be at least 1")
        if self.output_format not in ("text", "json"):
            raise ValueError("output format must be 'text' or 'json'")
        if self.cache_dir is None and os.environ.get(CACHE_ENV_VAR):
            self.cache_dir = Path(os.environ[CACHE_ENV_VAR])
        if self.cache_dir is not None:
            self.cache_dir = Path(self.cache_dir)
            try:
                self.cache_dir.mkdir(parents=True, exist_ok=True)
                probe = self.cache_dir / ".heckewb-probe"
                probe.touch()
                probe.unlink()
            except OSError as exc:
                warnings.warn(
                    f"cache directory {self.cache_dir} is not writable "
                    f"({exc}); caching disabled", CacheWarning, stacklevel=2)
                self.cache_dir = None
