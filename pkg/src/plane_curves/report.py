"""End-to-end analysis of a curve file and the JSON report."""
from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .arrangements import (LineArrangement, WeakCombinatorics, intersection_lattice,
                           ordinary_type_map, tau_from_combinatorics)
from .criteria import NotApplicable, Verdicts, all_verdicts
from .curvefile import CurveFile
from .errors import InputError, InternalInconsistency
from .field import NumberField
from .global_inv import GlobalInvariants, free_defect, freeness
from .local import SingularityRecord, analyze_point
from .poly import poly_squarefree_check

SCHEMA_VERSION = 1


@dataclass
class AnalysisReport:
    name: str
    file: Optional[str]
    field: NumberField
    degree: int
    polynomial: str
    invariants: GlobalInvariants
    singularities: list
    complete: bool
    sum_local_tau: int
    verdicts: Verdicts
    lattice: Optional[dict] = None
    expectations: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    @property
    def expectations_ok(self) -> bool:
        return all(e["ok"] for e in self.expectations.values())

    def type_counts(self) -> dict:
        return dict(sorted(Counter(str(r.stype) for r in self.singularities).items()))

    def to_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "curve": {
                "name": self.name,
                "file": self.file,
                "field": {"name": self.field.name,
                          "minpoly": [str(c) for c in self.field.minpoly]},
                "degree": self.degree,
                "polynomial": self.polynomial,
            },
            "invariants": self.invariants.to_dict(),
            "singularities": [r.to_dict() for r in self.singularities],
            "completeness": {"complete": self.complete, "sum_local_tau": self.sum_local_tau,
                             "tau": self.invariants.tau},
            "verdicts": self.verdicts.to_dict(),
            "lattice": self.lattice,
            "expectations": self.expectations,
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, d):
        c = d["curve"]
        fld = NumberField([Fraction(x) for x in c["field"]["minpoly"]], c["field"]["name"])
        return cls(c["name"], c["file"], fld, c["degree"], c["polynomial"],
                   GlobalInvariants.from_dict(d["invariants"]),
                   [SingularityRecord.from_dict(r, fld) for r in d["singularities"]],
                   d["completeness"]["complete"], d["completeness"]["sum_local_tau"],
                   Verdicts.from_dict(d["verdicts"]), d["lattice"], d["expectations"],
                   d["meta"])

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        inv = self.invariants
        lines = [
            f"curve     {self.name} ({self.file or 'inline'})",
            f"field     {self.field.describe()}",
            f"degree    {self.degree}",
            f"tau(C)    {inv.tau}   Hilbert trace {inv.hilbert_trace}",
            f"mdr       {inv.mdr}   (dim AR_mdr = {inv.ar_kernel_dim})",
            f"free      {inv.free}" + (f"   exponents {inv.exponents}" if inv.free else ""),
        ]
        if self.lattice:
            lines.append(f"lattice   t_k = {self.lattice['tk']}   "
                         f"tau from combinatorics = {self.lattice['tau']}")
        if self.singularities:
            lines.append(f"points    {len(self.singularities)}   sum tau_p = {self.sum_local_tau}"
                         + ("" if self.complete else "   [PARTIAL]"))
            for r in self.singularities:
                lines.append(f"  {str(r.point):<28} {str(r.stype):<6} mu={r.mu:<3} tau={r.tau:<3}"
                             f" mult={r.mult} cone={list(r.tc_pattern)} lct={r.lct}")
            lines.append(f"types     " + ", ".join(f"{k} x{v}" for k, v in self.type_counts().items()))
        elif inv.tau:
            lines.append("points    none supplied   [PARTIAL]")
        v = self.verdicts
        lines += [
            f"alpha     {v.arnold_exponent}   DS bound ok: {v.ds_bound_ok}",
            f"maximizing      {_fmt(v.is_maximizing)}",
            f"non-existence   {_fmt(v.nonexistence)}",
            f"M-curve         {_fmt(v.is_m_curve)}",
        ]
        for k, e in self.expectations.items():
            lines.append(f"expect {k}: {e['expected']} got {e['actual']} "
                         + ("ok" if e["ok"] else "MISMATCH"))
        lines.append(f"rank mode {self.meta.get('rank_mode')}   {self.meta.get('seconds', 0):.2f}s")
        return "\n".join(lines)


def _fmt(v):
    if isinstance(v, NotApplicable):
        return f"not applicable ({v.reason})"
    return getattr(v, "value", v)


def _verdict_value(v):
    if isinstance(v, NotApplicable):
        return "na"
    return str(getattr(v, "value", v)).lower()


def observed_values(rep: AnalysisReport) -> dict:
    """Flat view used for ``expect:`` comparisons."""
    inv = rep.invariants
    counts = Counter(str(r.stype) for r in rep.singularities)
    out = {
        "degree": str(rep.degree),
        "tau": str(inv.tau),
        "mdr": str(inv.mdr),
        "free": str(inv.free).lower(),
        "exponents": f"{inv.exponents[0]},{inv.exponents[1]}" if inv.exponents else "none",
        "maximizing": _verdict_value(rep.verdicts.is_maximizing),
        "m_curve": _verdict_value(rep.verdicts.is_m_curve),
        "nonexistence": _verdict_value(rep.verdicts.nonexistence),
        "alpha": str(rep.verdicts.arnold_exponent),
        "complete": str(rep.complete).lower(),
        "types": ",".join(f"{k}:{v}" for k, v in sorted(counts.items())) or "none",
        "n2": str(counts.get("A1", 0)),
        "n3": str(counts.get("D4", 0)),
        "n4": str(counts.get("X9", 0)),
    }
    if rep.lattice:
        for k, t in rep.lattice["tk"].items():
            out[f"t{k}"] = str(t)
    return out


def _normalize_expect(key, val):
    if key == "types":
        items = sorted(p for p in val.split(",") if p)
        return ",".join(items)
    return val.strip().lower()


def check_expectations(rep: AnalysisReport, expect: dict) -> dict:
    obs = observed_values(rep)
    out = {}
    for k, v in expect.items():
        actual = obs.get(k, "<unknown key>")
        if k.startswith("t") and k[1:].isdigit() and k not in obs:
            actual = "0" if rep.lattice else "<no lattice>"
        ok = _normalize_expect(k, v) == _normalize_expect(k, actual)
        out[k] = {"expected": v, "actual": actual, "ok": ok}
    return out


def _same_type(a, b) -> bool:
    if not a.classified and not b.classified:
        return True
    return a == b


def analyze(cf: CurveFile, mode: str = "auto", extra_points=(), seed: int = 0) -> AnalysisReport:
    """Full pipeline: reducedness, global invariants, per-point analysis,
    completeness cross-check, verdicts."""
    t0 = time.perf_counter()
    arr = LineArrangement(cf.lines) if cf.is_arrangement else None
    f = cf.polynomial()
    if f.degree() < 2:
        raise InputError("curve degree must be at least 2")
    if not poly_squarefree_check(f, seed=seed):
        raise InputError("polynomial has a repeated factor (curve is not reduced)")
    inv = freeness(f, mode)
    if free_defect(inv.degree, inv.tau, inv.mdr) == 0 and not inv.free:
        raise InternalInconsistency("freeness flag disagrees with the criterion")

    points = list(cf.points) + list(extra_points)
    lattice = None
    lattice_types = {}
    if arr is not None:
        pts, wc = intersection_lattice(arr)
        lattice = {"tk": {str(k): t for k, t in wc.tk.items()},
                   "tau": tau_from_combinatorics(wc)}
        for p, k in pts:
            lattice_types[p] = ordinary_type_map(k)
            points.append(p)
    seen = set()
    unique = []
    for p in points:
        if p not in seen:
            seen.add(p)
            unique.append(p)

    records = [analyze_point(f, p) for p in unique]
    if lattice is not None:
        mism = [str(r.point) for r in records
                if not _same_type(r.stype, lattice_types.get(r.point, r.stype))]
        lattice["jet_agrees"] = not mism
        if mism:
            raise InternalInconsistency(f"jet classification disagrees with lattice at {mism}")
        if lattice["tau"] != inv.tau:
            raise InternalInconsistency(
                f"combinatorial tau {lattice['tau']} != Hilbert tau {inv.tau}")
    sum_tau = sum(r.tau for r in records)
    if sum_tau > inv.tau:
        raise InternalInconsistency(f"sum of local tau {sum_tau} exceeds tau(C) = {inv.tau}")
    complete = sum_tau == inv.tau
    verdicts = all_verdicts(inv.degree, inv.tau, inv.free, inv.mdr, records, complete)
    rep = AnalysisReport(cf.name, cf.path, cf.field, inv.degree, str(f), inv, records,
                         complete, sum_tau, verdicts, lattice)
    rep.expectations = check_expectations(rep, cf.expect)
    rep.meta = {"rank_mode": mode, "seconds": round(time.perf_counter() - t0, 3)}
    return rep
