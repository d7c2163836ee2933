"""Decision layer: log canonical thresholds, the Arnold exponent, the
mdr lower bound, and the maximizing / non-existence / M-curve verdicts."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import EmptySingularSet, InternalInconsistency, UnclassifiedType
from .stypes import SingularityType


class NotApplicable:
    """Verdict value for curves outside a theorem's hypotheses."""

    __slots__ = ("reason",)

    def __init__(self, reason: str):
        self.reason = reason

    def __eq__(self, other):
        return isinstance(other, NotApplicable) and other.reason == self.reason

    def __hash__(self):
        return hash(self.reason)

    def __bool__(self):
        return False

    def __repr__(self):
        return f"NotApplicable({self.reason!r})"


Verdict = Union[bool, NotApplicable]


class Nonexistence(str, Enum):
    CANNOT_BE_MAXIMIZING = "cannot_be_maximizing"
    CRITERION_SILENT = "criterion_silent"


def lct(stype: SingularityType) -> Fraction:
    fam, k = stype.family, stype.k
    if fam == "A":
        return Fraction(k + 3, 2 * (k + 1))
    if fam == "D":
        return Fraction(k, 2 * (k - 1))
    table = {"E6": Fraction(7, 12), "E7": Fraction(5, 9), "E8": Fraction(8, 15),
             "X9": Fraction(1, 2), "T236": Fraction(1, 2)}
    if fam in table:
        return table[fam]
    raise UnclassifiedType(f"no lct for {stype}")


def _types(records) -> list:
    return [r.stype if hasattr(r, "stype") else r for r in records]


def arnold_exponent(records: Sequence) -> Fraction:
    types = _types(records)
    if not types:
        raise EmptySingularSet("smooth curve: Arnold exponent undefined here")
    return min(lct(t) for t in types)


def ds_bound_check(alpha: Fraction, d: int, r: int) -> bool:
    """mdr >= alpha * d - 2."""
    return r >= Fraction(alpha) * d - 2


def maximizing_verdict(d: int, tau: int, records: Sequence) -> Verdict:
    if d % 2 == 0 or d < 5:
        return NotApplicable("degree must be odd and at least 5")
    bad = [str(t) for t in _types(records) if not t.is_ade]
    if bad:
        return NotApplicable(f"non-ADE singularities present: {', '.join(sorted(set(bad)))}")
    m = (d - 1) // 2
    return tau == 3 * m * m + 1


def _allowed_by_list(t: SingularityType, m: int) -> bool:
    if t.family == "A":
        return t.k <= 4 * m
    if t.family == "D":
        return t.k <= 2 * m + 1
    if t.family == "E6":
        return True
    if t.family == "E7":
        return m >= 5
    if t.family == "E8":
        return m >= 8
    return False


def nonexistence_by_list(m: int, types) -> bool:
    return all(_allowed_by_list(t, m) for t in types)


def nonexistence_by_lct(m: int, types) -> bool:
    threshold = Fraction(m + 1, 2 * m + 1)
    return all(lct(t) > threshold for t in types)


def nonexistence_verdict(d: int, records: Sequence):
    """Returns a :class:`Nonexistence` value or :class:`NotApplicable`.

    The admissible type list and the strict lct threshold are both evaluated
    and must agree.
    """
    if d % 2 == 0 or d < 7:
        return NotApplicable("degree must be odd and at least 7")
    types = _types(records)
    if not types:
        return NotApplicable("no singular points")
    bad = [str(t) for t in types if not t.is_ade]
    if bad:
        return NotApplicable(f"non-ADE singularities present: {', '.join(sorted(set(bad)))}")
    m = (d - 1) // 2
    by_list = nonexistence_by_list(m, types)
    if by_list != nonexistence_by_lct(m, types):
        raise InternalInconsistency(f"type list and lct threshold disagree for d={d}")
    return Nonexistence.CANNOT_BE_MAXIMIZING if by_list else Nonexistence.CRITERION_SILENT


def m_curve_tau_target(d: int) -> int:
    m = d // 2
    return 3 * m * m - 3 * m + 3 if d % 2 == 0 else 3 * m * m + 1


def m_curve_mdr_target(d: int) -> int:
    m = d // 2
    return m - 2 if d % 2 == 0 else m - 1


def m_curve_verdict(d: int, tau: int, free: bool, r: int, records: Sequence) -> Verdict:
    """Definition (free with the extremal mdr), cross-checked against the
    total Tjurina characterization."""
    if d < 4:
        return NotApplicable("degree must be at least 4")
    types = _types(records)
    bad = [str(t) for t in types if not (t.is_ade or t.is_se)]
    if bad:
        return NotApplicable(f"singularities outside ADE/SE: {', '.join(sorted(set(bad)))}")
    if not any(t.is_se for t in types):
        return NotApplicable("no simple elliptic singularity")
    by_definition = bool(free) and r == m_curve_mdr_target(d)
    by_tau = tau == m_curve_tau_target(d)
    if by_definition != by_tau:
        raise InternalInconsistency(
            f"M-curve definition ({by_definition}) and tau characterization "
            f"({by_tau}) disagree at d={d}, tau={tau}, mdr={r}, free={free}")
    return by_definition


@dataclass
class Verdicts:
    is_maximizing: Verdict
    nonexistence: object
    is_m_curve: Verdict
    arnold_exponent: Optional[Fraction]
    ds_bound_ok: Optional[bool]
    notes: list = field(default_factory=list)

    def to_dict(self):
        return {
            "is_maximizing": _verdict_json(self.is_maximizing),
            "nonexistence": _verdict_json(self.nonexistence),
            "is_m_curve": _verdict_json(self.is_m_curve),
            "arnold_exponent": str(self.arnold_exponent) if self.arnold_exponent is not None else None,
            "ds_bound_ok": self.ds_bound_ok,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(_verdict_from_json(d["is_maximizing"]),
                   _verdict_from_json(d["nonexistence"], Nonexistence),
                   _verdict_from_json(d["is_m_curve"]),
                   Fraction(d["arnold_exponent"]) if d["arnold_exponent"] is not None else None,
                   d["ds_bound_ok"], list(d["notes"]))


def _verdict_json(v):
    if isinstance(v, NotApplicable):
        return {"not_applicable": v.reason}
    if isinstance(v, Nonexistence):
        return v.value
    return v


def _verdict_from_json(v, enum=None):
    if isinstance(v, dict):
        return NotApplicable(v["not_applicable"])
    if enum is not None:
        return enum(v)
    return v


def all_verdicts(d: int, tau: int, free: bool, r: int, records: Sequence,
                 complete: bool = True) -> Verdicts:
    notes = []
    if not complete:
        why = NotApplicable("singular point data incomplete")
        return Verdicts(why, why, why, None, None, ["sum of local tau below tau(C)"])
    types = _types(records)
    alpha = ds_ok = None
    if types and all(t.classified for t in types):
        alpha = arnold_exponent(types)
        ds_ok = ds_bound_check(alpha, d, r)
    elif not types:
        notes.append("smooth curve: Arnold exponent undefined")
    else:
        notes.append("unclassified singularity present")
    maxi = maximizing_verdict(d, tau, types)
    if maxi is True and not (free and r == (d - 1) // 2 - 1):
        raise InternalInconsistency("maximizing curve that is not free with mdr = m-1")
    mc = m_curve_verdict(d, tau, free, r, types)
    if mc is True:
        notes.append("M-curve")
    return Verdicts(maxi, nonexistence_verdict(d, types), mc, alpha, ds_ok, notes)
