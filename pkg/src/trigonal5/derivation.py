"""Replayable derivation traces.

A derivation is an ordered list of steps.  ``compute`` steps keep the callable
and its arguments so the whole trace can be re-executed and compared against
the recorded outputs; ``data`` steps record quoted input data; ``check`` steps
record an assertion and raise immediately when it fails.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable


class DerivationError(AssertionError):
    """A recorded assertion failed, or a replay diverged."""


def render(value: Any) -> Any:
    """JSON-ready rendering of step values."""
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): render(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, range)):
        return [render(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((render(v) for v in value), key=repr)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


def brief(value: Any) -> str:
    if hasattr(value, "pretty"):
        return value.pretty()
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(brief(v) for v in value) + "]"
    return str(value)


@dataclass
class Step:
    op: str
    kind: str  # "compute" | "data" | "check"
    output: Any
    inputs: tuple = ()
    ref: str = ""
    note: str = ""
    fn: Callable | None = field(default=None, repr=False, compare=False)

    def to_json(self) -> dict:
        out = {"op": self.op, "kind": self.kind, "output": render(self.output)}
        if self.inputs:
            out["inputs"] = render(list(self.inputs))
        if self.ref:
            out["ref"] = self.ref
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Derivation:
    title: str
    steps: list[Step] = field(default_factory=list)

    def compute(self, op: str, fn: Callable, *args, ref: str = "", note: str = "") -> Any:
        out = fn(*args)
        self.steps.append(Step(op, "compute", out, args, ref, note, fn))
        return out

    def data(self, op: str, value: Any, ref: str = "", note: str = "") -> Any:
        self.steps.append(Step(op, "data", value, (), ref, note))
        return value

    def check(self, op: str, ok: bool, ref: str = "", note: str = "") -> bool:
        self.steps.append(Step(op, "check", bool(ok), (), ref, note))
        if not ok:
            raise DerivationError(f"{self.title}: {op} failed" + (f" ({note})" if note else ""))
        return True

    def include(self, other: "Derivation", prefix: str | None = None) -> Any:
        """Append another derivation's steps, prefixing their names."""
        tag = prefix or other.title
        for s in other.steps:
            self.steps.append(Step(f"{tag}: {s.op}", s.kind, s.output, s.inputs, s.ref, s.note, s.fn))
        return other.result

    @property
    def result(self) -> Any:
        for s in reversed(self.steps):
            if s.kind != "check":
                return s.output
        return None

    def replay(self) -> bool:
        for i, s in enumerate(self.steps):
            if s.kind == "compute" and s.fn is not None:
                again = s.fn(*s.inputs)
                if again != s.output:
                    raise DerivationError(f"{self.title}: step {i} ({s.op}) replayed to {brief(again)}")
            elif s.kind == "check" and not s.output:
                raise DerivationError(f"{self.title}: step {i} ({s.op}) is a failed check")
        return True

    def to_json(self) -> dict:
        return {"title": self.title, "result": render(self.result), "steps": [s.to_json() for s in self.steps]}

    def to_markdown(self) -> str:
        lines = [f"### {self.title}", ""]
        for i, s in enumerate(self.steps, 1):
            val = ("ok" if s.output else "FAILED") if s.kind == "check" else f"`{brief(s.output)}`"
            ref = f" ({s.ref})" if s.ref else ""
            note = f": {s.note}" if s.note else ""
            lines.append(f"{i}. **{s.op}** [{s.kind}] {val}{ref}{note}")
        lines.append("")
        lines.append(f"Result: `{brief(self.result)}`")
        return "\n".join(lines) + "\n"

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)
