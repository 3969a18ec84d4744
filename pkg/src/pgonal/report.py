"""JSON reports and DOT export."""

from __future__ import annotations

import json
from dataclasses import dataclass

SCHEMA = 1


@dataclass
class Report:
    command: str
    params: dict
    results: dict
    engine_version: str
    oracle_verified: bool = False

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "params": self.params,
            "results": self.results,
            "engine_version": self.engine_version,
            "oracle_verified": self.oracle_verified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        return cls(
            command=data["command"],
            params=data["params"],
            results=data["results"],
            engine_version=data["engine_version"],
            oracle_verified=data["oracle_verified"],
        )


def fmt_float(x: float) -> float:
    """Round to 12 significant digits for reporting."""
    return float(f"{x:.12g}")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(graph, tags=None) -> str:
    """Bipartite strata/boundary graph: strata as boxes, boundary points as
    ellipses.  Points shared by more than one stratum are drawn bold."""
    tags = tags or {}
    lines = [f"graph strata_p{graph.p} {{", "  rankdir=LR;"]
    for s in graph.strata:
        label = str(s) + (f"\\n{tags[s]}" if s in tags else "")
        lines.append(f"  {_quote(s.key)} [shape=box, label={_quote(label)}];")
    for b in graph.points:
        shared = len(graph.strata_at(b)) > 1
        style = ", style=bold" if shared else ""
        lines.append(f"  {_quote(b.key)} [shape=ellipse, label={_quote(str(b))}{style}];")
    for s in graph.strata:
        for b in sorted(graph.incidence[s]):
            lines.append(f"  {_quote(s.key)} -- {_quote(b.key)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
