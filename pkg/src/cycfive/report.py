"""JSON report envelope shared by all CLI subcommands."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any, Optional

REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "input", "results", "exit_code"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": ["analyze", "decompose", "complete", "verify", "oracle"]},
        "input": {
            "type": "object",
            "required": ["source", "format"],
            "properties": {
                "source": {"type": "string"},
                "format": {"enum": ["graph6", "adjlist"]},
                "n": {"type": "integer"},
                "m": {"type": "integer"},
            },
        },
        "results": {"type": "object"},
        "exit_code": {"type": "integer"},
        "error": {
            "type": ["object", "null"],
            "required": ["type", "message"],
            "properties": {
                "type": {"type": "string"},
                "message": {"type": "string"},
                "clause": {"type": ["string", "null"]},
            },
        },
        "timings": {"type": ["object", "null"]},
    },
}


@dataclass
class Report:
    command: str
    input: dict
    results: dict
    exit_code: int = 0
    error: Optional[dict] = None
    timings: Optional[dict] = None

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        if d["timings"] is None:
            del d["timings"]
        if d["error"] is None:
            del d["error"]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))
