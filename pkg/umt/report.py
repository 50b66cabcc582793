"""
Command reports: one JSON document or a human readable table on stdout.
"""

import json
from typing import Any, Dict, List, Mapping, Optional

import termcolor

from .utils import tick


def _plain(value: Any) -> Any:
    """
    JSON friendly copy: tuples and sets become lists, numpy scalars ints.
    """
    if isinstance(value, Mapping):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_plain(v) for v in value)
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return value.item()
    return value


class Report:
    """
    Output of one CLI command.

    :param kind: ``verdict`` for scheme checks, ``report`` otherwise.
    :param status: Exit code the command ends with.
    """
    command: str
    params: Dict[str, Any]
    kind: str
    body: Dict[str, Any]
    witnesses: List[Any]
    status: int
    wall_time: Optional[float]

    def __init__(self, command: str, params: Mapping[str, Any],
            body: Mapping[str, Any], kind: str = "report",
            witnesses: Optional[List[Any]] = None, status: int = 0) -> None:
        assert kind in ("verdict", "report")
        self.command = command
        self.params = _plain(params)
        self.kind = kind
        self.body = _plain(body)
        self.witnesses = _plain(witnesses or [])
        self.status = status
        self.wall_time = None

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "command": self.command,
            "params": self.params,
            self.kind: self.body,
            "witnesses": self.witnesses,
        }
        if timing and self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2,
            ensure_ascii=False)

    def to_text(self, timing: bool = False) -> str:
        lines = [termcolor.colored(f"umt {self.command}", attrs=["bold"])]
        for key in sorted(self.params):
            if key == "structure":
                continue
            lines.append(f"  {key}: {_short(self.params[key])}")
        lines.append("")
        lines.extend(_table(self.body))
        if self.witnesses:
            lines.append("")
            lines.append("witnesses:")
            for w in self.witnesses:
                lines.append(f"  {_short(w)}")
        if timing and self.wall_time is not None:
            lines.append(f"\nwall time: {self.wall_time:.3f}s")
        return "\n".join(lines)


def _short(value: Any) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True, ensure_ascii=False)


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return termcolor.colored(tick(value), "green" if value else "red")
    return _short(value)


def _table(body: Mapping[str, Any], indent: str = "") -> List[str]:
    width = max((len(k) for k in body), default=0)
    lines = []
    for key in body:
        value = body[key]
        if isinstance(value, Mapping) and value:
            lines.append(f"{indent}{key}:")
            lines.extend(_table(value, indent + "  "))
        elif isinstance(value, list) and value \
                and all(isinstance(v, Mapping) for v in value):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.extend(_table(item, indent + "  "))
                lines.append("")
        else:
            lines.append(f"{indent}{key.ljust(width)}  {_cell(value)}")
    return lines
