"""Runtime settings: bundled defaults, then environment, then explicit overrides."""
import json
import os
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

CONFIG_DIR = Path(__file__).parent

ENV_PREFIX = "MISSION_"

_LEVELS = {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"}


def load_defaults() -> Dict[str, Any]:
    path = CONFIG_DIR / "defaults.json"
    if not path.exists():
        return {}
    with open(path, "r") as f:
        return json.load(f)


def load_graph_schema() -> Dict[str, Any]:
    with open(CONFIG_DIR / "graph_export.schema.json", "r") as f:
        return json.load(f)


class Settings(BaseModel):
    log_level: str = "INFO"
    hop_cap: int = Field(default=6, ge=0)
    symbol_atom_limit: int = Field(default=20, ge=1)
    symbol_product_limit: int = Field(default=65536, ge=1)
    tick_budget: int = Field(default=1000, ge=0)
    check_invariants: bool = False

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in _LEVELS:
            raise ValueError(f"unknown log level '{value}'")
        return value

    def with_overrides(self, **overrides: Optional[Any]) -> "Settings":
        """Copy with the non-None overrides applied (CLI flags, scenario fields)."""
        values = {k: v for k, v in overrides.items() if v is not None}
        return self.model_validate({**self.model_dump(), **values})


def get_settings(env_file: Optional[Path] = None) -> Settings:
    """Settings from defaults.json overridden by MISSION_* variables (a .env file is honoured)."""
    load_dotenv(env_file)
    values = load_defaults()
    for name in Settings.model_fields:
        raw = os.getenv(ENV_PREFIX + name.upper())
        if raw is not None:
            values[name] = raw
    return Settings.model_validate(values)
