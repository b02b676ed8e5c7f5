"""Python interface to the hybridlint analyser.

Findings are plain dicts matching the JSON report written by the CLI.
"""

from __future__ import annotations

import json
import os
from typing import Iterable, Mapping

from . import _hybridlint
from ._hybridlint import HybridlintError, __version__

__all__ = [
    "HybridlintError",
    "__version__",
    "attribution",
    "explain",
    "risk_report",
    "sarif",
    "scan",
    "scan_paths",
    "suggest",
]


def _config(config: Mapping | None) -> str:
    return json.dumps(config) if config else ""


def scan(sources: Mapping[str, str] | Iterable[tuple[str, str]], config: Mapping | None = None) -> dict:
    """Scan in-memory sources given as {path: text} or (path, text) pairs."""
    pairs = list(sources.items()) if isinstance(sources, Mapping) else list(sources)
    return json.loads(_hybridlint.scan(pairs, _config(config)))


def scan_paths(paths: Iterable[str | os.PathLike], config: Mapping | None = None) -> dict:
    """Scan .py files, descending into directories."""
    files: list[str] = []
    for p in paths:
        p = os.fspath(p)
        if os.path.isdir(p):
            for root, _, names in os.walk(p):
                files += [os.path.join(root, n) for n in names if n.endswith(".py")]
        else:
            files.append(p)
    sources = []
    for f in sorted(files):
        with open(f, encoding="utf-8") as fh:
            sources.append((f, fh.read()))
    return scan(sources, config)


def sarif(findings: list[dict]) -> dict:
    return json.loads(_hybridlint.sarif(json.dumps(findings)))


def explain(finding: dict, format: str = "text") -> str | dict:
    out = _hybridlint.explain(json.dumps(finding), format)
    return json.loads(out) if format == "json" else out


def attribution(finding: dict) -> dict:
    return json.loads(_hybridlint.attribution(json.dumps(finding)))


def suggest(finding: dict, path: str, text: str, config: Mapping | None = None) -> list[dict]:
    """Ranked repair suggestions; each non-advisory one carries its patched text and validation."""
    return json.loads(_hybridlint.suggest(json.dumps(finding), path, text, _config(config)))


def risk_report(before: list[dict], after: list[dict], config: Mapping | None = None) -> dict:
    return json.loads(_hybridlint.risk_report(json.dumps(before), json.dumps(after), _config(config)))
