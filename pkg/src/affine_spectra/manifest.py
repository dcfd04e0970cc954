"""Run manifests: a serialisable record of one CLI invocation.

Replaying a manifest re-executes the command with identical parameters and
must reproduce byte-identical CSV output (wall time and tool version are
recorded for provenance and ignored on replay).
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass
class RunManifest:
    command: str
    input_path: str | None = None
    system: dict | None = None  # inline system document (used when no path)
    q_min: float | None = None
    q_max: float | None = None
    q_step: float | None = None
    ks: list[int] = field(default_factory=list)
    seeds: dict = field(default_factory=dict)
    outputs: list[str] = field(default_factory=list)
    options: dict = field(default_factory=dict)
    tool_version: str = ""
    wall_time_s: float | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.to_json())

    @staticmethod
    def from_dict(doc: dict) -> "RunManifest":
        known = {f for f in RunManifest.__dataclass_fields__}
        return RunManifest(**{k: v for k, v in doc.items() if k in known})

    @staticmethod
    def load(path) -> "RunManifest":
        with open(path, "r", encoding="utf-8") as fh:
            return RunManifest.from_dict(json.load(fh))
