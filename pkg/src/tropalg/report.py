"""Verification reports shared by every checker."""

from dataclasses import dataclass, field
import json


@dataclass
class Report:
    theorem: str
    subject: str
    passed: bool = True
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def fail(self, reason, **witness):
        self.passed = False
        self.witnesses.append({"reason": reason, **{k: _jsonable(v) for k, v in witness.items()}})

    def check(self, condition, reason, **witness):
        if not condition:
            self.fail(reason, **witness)
        return condition

    def merge(self, other, prefix=None):
        if not other.passed:
            self.passed = False
        for w in other.witnesses:
            w = dict(w)
            if prefix:
                w["reason"] = f"{prefix}: {w['reason']}"
            self.witnesses.append(w)
        return self

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return {
            "theorem": self.theorem,
            "semiring": self.subject,
            "pass": self.passed,
            "witnesses": self.witnesses,
            "details": _jsonable(self.details),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted((_jsonable(v) for v in value), key=str)
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)
