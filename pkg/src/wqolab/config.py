"""Run configuration for the command-line front door and search drivers."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import ParseError

#: Default cap on the bit length of any computed integer.  Large enough for
#: 2-towers of height 3 topped with small numbers, far below height-4 scale.
DEFAULT_BIT_BUDGET = 1 << 17

ENV_BIT_BUDGET = "WQOLAB_BIT_BUDGET"


@dataclass(frozen=True)
class RunConfig:
    bit_budget: int = DEFAULT_BIT_BUDGET
    max_nodes: int = 6
    max_len: int = 8
    max_n: int = 6
    max_m: int = 8
    profile: str = "repaired"
    relation_mode: str = "embedding"
    output: str = "plain"

    def __post_init__(self):
        for name in ("bit_budget", "max_nodes", "max_len", "max_n", "max_m"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.profile not in ("literal", "repaired"):
            raise ValueError(f"unknown profile {self.profile!r}")
        if self.relation_mode not in ("literal", "embedding"):
            raise ValueError(f"unknown relation mode {self.relation_mode!r}")
        if self.output not in ("plain", "tsv"):
            raise ValueError(f"unknown output format {self.output!r}")


_INT_KEYS = {"bit_budget", "max_nodes", "max_len", "max_n", "max_m"}
_STR_KEYS = {"profile", "relation_mode", "output"}


def parse_config_text(text: str, base: RunConfig | None = None) -> RunConfig:
    """Apply plain ``key=value`` lines on top of ``base``."""
    cfg = base if base is not None else RunConfig()
    updates = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError("expected key=value", line=lineno)
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key in _INT_KEYS:
            try:
                updates[key] = int(value)
            except ValueError:
                raise ParseError(f"{key} expects an integer, got {value!r}", line=lineno) from None
        elif key in _STR_KEYS:
            updates[key] = value
        else:
            raise ParseError(f"unknown config key {key!r}", line=lineno)
    try:
        return replace(cfg, **updates)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_config(path: str | None = None, environ=None) -> RunConfig:
    """Build a config from defaults, then environment, then an optional file."""
    environ = os.environ if environ is None else environ
    cfg = RunConfig()
    raw_budget = environ.get(ENV_BIT_BUDGET)
    if raw_budget is not None:
        try:
            cfg = replace(cfg, bit_budget=int(raw_budget))
        except ValueError:
            raise ParseError(f"{ENV_BIT_BUDGET} expects an integer, got {raw_budget!r}") from None
    if path is not None:
        with open(path, encoding="utf-8") as handle:
            cfg = parse_config_text(handle.read(), base=cfg)
    return cfg


CONFIG_KEYS = tuple(f.name for f in fields(RunConfig))
