"""Run configuration: defaults, a flat key=value file, and STICKEL_THREADS."""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .charsum import DEFAULT_EXACT_GAUSS_BOUND
from .errors import PreconditionError
from .ff import DEFAULT_TABLE_BOUND

FORMATS = ("json", "csv")


@dataclass(frozen=True)
class Config:
    fieldTableBound: int = DEFAULT_TABLE_BOUND
    exactGaussBound: int = DEFAULT_EXACT_GAUSS_BOUND
    padicPrecisionSlack: int = 2
    threadCount: int = os.cpu_count() or 1
    outputFormat: str = "json"

    def __post_init__(self):
        for name in ("fieldTableBound", "exactGaussBound", "padicPrecisionSlack", "threadCount"):
            if getattr(self, name) < 1:
                raise PreconditionError(f"{name} must be positive")
        if self.outputFormat not in FORMATS:
            raise PreconditionError(f"outputFormat must be one of {FORMATS}")


def parse_config_text(text: str) -> dict:
    known = {f.name for f in fields(Config)}
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (s.strip() for s in line.partition("="))
        if not sep or key not in known:
            raise PreconditionError(f"config line {lineno}: cannot parse {raw!r}")
        out[key] = value if key == "outputFormat" else int(value)
    return out


def load_config(path: str | None = None, environ=None) -> Config:
    """Defaults, then the file (if any), then STICKEL_THREADS."""
    environ = os.environ if environ is None else environ
    cfg = Config()
    if path:
        with open(path, encoding="utf-8") as fh:
            cfg = replace(cfg, **parse_config_text(fh.read()))
    env = environ.get("STICKEL_THREADS")
    if env:
        cfg = replace(cfg, threadCount=int(env))
    return cfg
