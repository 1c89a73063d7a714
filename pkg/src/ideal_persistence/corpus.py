"""Built-in examples with golden expectations.

Each example ``NAME`` has an ideal file ``corpus_data/NAME.txt`` and a golden
file ``corpus_data/NAME.json`` holding the analysis configuration and a map
from JSON-pointer paths (``/depth/per_power/0/depth``) into the report to
expected values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .errors import InputError
from .homology import Field
from .parsing import ParsedIdeal, parse_ideal_text
from .report import AnalysisConfig, run_analysis

_PACKAGE = "ideal_persistence.corpus_data"
_MISSING = object()


def names() -> list:
    files = resources.files(_PACKAGE)
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def load_text(name: str) -> str:
    path = resources.files(_PACKAGE) / f"{name}.txt"
    if not path.is_file():
        raise InputError(f"no corpus example named {name!r}; known: {', '.join(names())}")
    return path.read_text(encoding="utf-8")


def load_ideal(name: str) -> ParsedIdeal:
    return parse_ideal_text(load_text(name))


def load_golden(name: str) -> dict:
    path = resources.files(_PACKAGE) / f"{name}.json"
    if not path.is_file():
        raise InputError(f"no golden file for {name!r}")
    return json.loads(path.read_text(encoding="utf-8"))


def config_from_golden(golden: dict) -> AnalysisConfig:
    cfg = golden.get("config", {})
    return AnalysisConfig(max_power=cfg.get("max_power"), field=Field.parse(cfg.get("field", "q")))


def resolve(report, pointer: str):
    """Follow a JSON pointer; returns a sentinel when the path is absent."""
    node = report
    for part in pointer.strip("/").split("/"):
        if isinstance(node, list):
            if not part.isdigit() or int(part) >= len(node):
                return _MISSING
            node = node[int(part)]
        elif isinstance(node, dict):
            if part not in node:
                return _MISSING
            node = node[part]
        else:
            return _MISSING
    return node


@dataclass(frozen=True)
class CorpusResult:
    name: str
    passed: bool
    diffs: tuple  # human-readable mismatch lines


def compare(report: dict, expect: dict) -> list:
    diffs = []
    for pointer in sorted(expect):
        want = expect[pointer]
        got = resolve(report, pointer)
        if got is _MISSING:
            diffs.append(f"{pointer}: expected {json.dumps(want)}, path missing")
        elif got != want:
            diffs.append(f"{pointer}: expected {json.dumps(want)}, got {json.dumps(got)}")
    return diffs


def check_example(name: str, golden: dict | None = None) -> CorpusResult:
    golden = golden if golden is not None else load_golden(name)
    report = run_analysis(load_ideal(name), config_from_golden(golden))
    diffs = compare(report, golden["expect"])
    return CorpusResult(name, not diffs, tuple(diffs))


def corpus_run(selected=None) -> list:
    """Check every (or each selected) example against its golden file."""
    return [check_example(n) for n in (selected or names())]
