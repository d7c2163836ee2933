"""Line-oriented curve file format.

::

    # comment
    name: hesse
    field: Q(e) minpoly: t^2 + t + 1
    vars: x y z
    f = x*y*z*(x + y + z)          (indented lines continue the expression)
    lines:                          (alternative to f: one linear form per line)
      x
      e*x + y + z
    point: (1:0:e)
    expect: tau=93 mdr=4 free=true
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import InputError, PolySyntaxError
from .field import QQ, NumberField
from .poly import Poly, ProjPoint, parse_expr, parse_point, poly_parse, product

_KEY = re.compile(r"^(name|field|vars|f|lines|point|expect)\s*[:=]\s*(.*)$")
_FIELD = re.compile(r"^Q(?:\(\s*([A-Za-z_]\w*)\s*\)\s*minpoly\s*:\s*(.+))?$")


@dataclass
class CurveFile:
    name: str
    field: NumberField
    variables: tuple = ("x", "y", "z")
    poly: Optional[Poly] = None
    lines: Optional[list] = None
    points: list = field(default_factory=list)
    expect: dict = field(default_factory=dict)
    path: Optional[str] = None

    @property
    def is_arrangement(self) -> bool:
        return self.lines is not None

    def polynomial(self) -> Poly:
        if self.poly is not None:
            return self.poly
        return product(self.lines)


def parse_field(spec: str) -> NumberField:
    m = _FIELD.match(spec.strip())
    if not m:
        raise PolySyntaxError(f"bad field declaration {spec!r}; use 'Q' or 'Q(a) minpoly: ...'")
    if m.group(1) is None:
        return QQ
    name, mp_text = m.group(1), m.group(2)
    mp = parse_expr(mp_text, QQ, ("t",))
    if mp.degree() < 1:
        raise PolySyntaxError(f"minimal polynomial {mp_text!r} has no positive degree")
    coeffs = [mp.coefficient((k,)).coords[0] for k in range(mp.degree() + 1)]
    if any(c.denominator != 1 for c in coeffs):
        raise PolySyntaxError("minimal polynomial must have integer coefficients")
    return NumberField(coeffs, name)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def parse_curve_text(text: str, path: Optional[str] = None) -> CurveFile:
    entries = []  # (key, value, lineno)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        if line[0].isspace():
            if not entries:
                raise PolySyntaxError(f"line {lineno}: continuation without a key")
            key, val, start = entries[-1]
            if key == "lines":
                entries.append(("line", line.strip(), lineno))
            elif key == "line":
                entries.append(("line", line.strip(), lineno))
            else:
                entries[-1] = (key, f"{val} {line.strip()}", start)
            continue
        m = _KEY.match(line)
        if not m:
            raise PolySyntaxError(f"line {lineno}: unrecognized line {line!r}")
        entries.append((m.group(1), m.group(2).strip(), lineno))

    def where(lineno):
        return f"{path or '<text>'}:{lineno}"

    name = Path(path).stem if path else "curve"
    fld = QQ
    variables = ("x", "y", "z")
    for key, val, lineno in entries:
        if key == "field":
            fld = parse_field(val)
        elif key == "vars":
            variables = tuple(val.split())
            if len(variables) != 3:
                raise PolySyntaxError(f"{where(lineno)}: need exactly three variables")
        elif key == "name":
            name = val

    cf = CurveFile(name, fld, variables, path=path)
    for key, val, lineno in entries:
        try:
            if key == "f":
                if cf.poly is not None:
                    raise PolySyntaxError("polynomial given twice")
                cf.poly = poly_parse(val, fld, variables)
            elif key == "lines":
                cf.lines = []
                if val:
                    cf.lines.append(poly_parse(val, fld, variables))
            elif key == "line":
                cf.lines.append(poly_parse(val, fld, variables))
            elif key == "point":
                cf.points.append(parse_point(val, fld))
            elif key == "expect":
                cf.expect.update(parse_expect(val))
        except InputError as exc:
            raise type(exc)(f"{where(lineno)}: {exc}") from None
    if (cf.poly is None) == (cf.lines is None):
        raise PolySyntaxError(f"{path or '<text>'}: give exactly one of 'f =' or 'lines:'")
    if cf.lines is not None and not cf.lines:
        raise PolySyntaxError(f"{path or '<text>'}: empty 'lines:' block")
    return cf


def parse_expect(text: str) -> dict:
    out = {}
    for item in text.split():
        if "=" not in item:
            raise PolySyntaxError(f"expectation {item!r} is not key=value")
        k, v = item.split("=", 1)
        out[k] = v
    return out


def load_curve(path) -> CurveFile:
    path = Path(path)
    return parse_curve_text(path.read_text(), str(path))


def load_points(path, fld: NumberField) -> list:
    """Points from a file of ``point: (a:b:c)`` lines (or bare ``(a:b:c)``)."""
    pts = []
    for raw in Path(path).read_text().splitlines():
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if line.startswith("point"):
            line = line.split(":", 1)[1]
        pts.append(parse_point(line, fld))
    return pts


def format_curve(cf: CurveFile) -> str:
    """Serialize back to the file format (canonical polynomial printing)."""
    out = [f"name: {cf.name}", f"field: {cf.field.describe()}", f"vars: {' '.join(cf.variables)}"]
    if cf.lines is not None:
        out.append("lines:")
        out += [f"  {l}" for l in cf.lines]
    else:
        out.append(f"f = {cf.poly}")
    out += [f"point: {p}" for p in cf.points]
    if cf.expect:
        out.append("expect: " + " ".join(f"{k}={v}" for k, v in cf.expect.items()))
    return "\n".join(out) + "\n"
