"""Singularity type labels."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

ADE_FAMILIES = ("A", "D", "E6", "E7", "E8")
SE_FAMILIES = ("X9", "T236")


@dataclass(frozen=True)
class SingularityType:
    family: str
    k: Optional[int] = None
    reason: Optional[str] = None

    def __post_init__(self):
        if self.family == "A" and (self.k is None or self.k < 1):
            raise ValueError("A_k needs k >= 1")
        if self.family == "D" and (self.k is None or self.k < 4):
            raise ValueError("D_k needs k >= 4")

    @property
    def is_ade(self) -> bool:
        return self.family in ADE_FAMILIES

    @property
    def is_se(self) -> bool:
        return self.family in SE_FAMILIES

    @property
    def classified(self) -> bool:
        return self.family != "Unclassified"

    def __str__(self):
        if self.family in ("A", "D"):
            return f"{self.family}{self.k}"
        if self.family == "Unclassified":
            return f"Unclassified({self.reason})" if self.reason else "Unclassified"
        return self.family

    @classmethod
    def parse(cls, text: str) -> "SingularityType":
        text = text.strip()
        m = re.fullmatch(r"([AD])_?(\d+)", text)
        if m:
            return cls(m.group(1), int(m.group(2)))
        norm = text.replace("_", "").replace(",", "")
        if norm in ("E6", "E7", "E8", "X9", "T236"):
            return cls(norm)
        m = re.fullmatch(r"Unclassified(?:\((.*)\))?", text, re.S)
        if m:
            return cls("Unclassified", reason=m.group(1))
        raise ValueError(f"unknown singularity type {text!r}")


def A(k):
    return SingularityType("A", k)


def D(k):
    return SingularityType("D", k)


E6 = SingularityType("E6")
E7 = SingularityType("E7")
E8 = SingularityType("E8")
X9 = SingularityType("X9")
T236 = SingularityType("T236")


def unclassified(reason: str) -> SingularityType:
    return SingularityType("Unclassified", reason=reason)
