"""Serializable proof objects.

A certificate stores its inputs, every numeric premise as a named
condition, and the reasoning chain as plain strings. Premises are never
trusted on load: :mod:`abelian_points.verify` rebuilds the document from
its recorded inputs and demands byte equality.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Condition:
    name: str
    statement: str
    verified: bool

    def to_dict(self):
        return {"name": self.name, "statement": self.statement, "verified": self.verified}


@dataclass
class Certificate:
    kind: str
    conditions: list[Condition]
    lemma_chain: list[str]
    form: dict | None = None
    prime: int | None = None
    profile: dict | None = None
    parameters: dict[str, Any] = field(default_factory=dict)

    @property
    def all_verified(self) -> bool:
        return all(c.verified for c in self.conditions)

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "conditions": [c.to_dict() for c in self.conditions],
            "lemma_chain": list(self.lemma_chain),
        }
        if self.form is not None:
            out["form"] = self.form
        if self.prime is not None:
            out["prime"] = self.prime
        if self.profile is not None:
            out["profile"] = self.profile
        if self.parameters:
            out["parameters"] = self.parameters
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(
            kind=d["kind"],
            conditions=[Condition(**c) for c in d["conditions"]],
            lemma_chain=list(d["lemma_chain"]),
            form=d.get("form"),
            prime=d.get("prime"),
            profile=d.get("profile"),
            parameters=d.get("parameters", {}),
        )

    def to_json(self) -> str:
        return dumps(self.to_dict())


def dumps(obj) -> str:
    """Canonical JSON used for every emitted document."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
