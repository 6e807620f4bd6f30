"""Knot and barcode file formats, plus text/SVG barcode rendering.

Both formats are UTF-8 JSON.  Numbers are parsed as exact rationals and written
back as exact decimals, so heights survive a round trip unchanged.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .algebra import DGA, HeightAssignment, StructureError, validate_dga
from .diagram import AreaPatch, LagrangianDiagramData
from .persist import Bar, Barcode

MALFORMED_JSON = "MALFORMED_JSON"
BAD_SCHEMA = "BAD_SCHEMA"
UNKNOWN_GENERATOR = "UNKNOWN_GENERATOR"
DUPLICATE_NAME = "DUPLICATE_NAME"
GRADING_VIOLATION = "GRADING_VIOLATION"
D_SQUARED_NONZERO = "D_SQUARED_NONZERO"
BAD_HEIGHT = "BAD_HEIGHT"
BAD_PATCH = "BAD_PATCH"
INVALID_BAR = "INVALID_BAR"


class KnotFileError(ValueError):
    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)

    def __str__(self) -> str:
        return f"[{self.code}] {self.args[0]}"


@dataclass(frozen=True)
class KnotData:
    dga: DGA
    diagram: LagrangianDiagramData
    heights: HeightAssignment | None
    meta: dict


# ---------------------------------------------------------------------------
# exact numbers

def decimal_str(x) -> str:
    """Exact decimal rendering of a rational whose denominator divides a power
    of ten; raises otherwise rather than round."""
    x = Fraction(x)
    d = x.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        raise ValueError(f"{x} has no finite decimal expansion")
    places = max(twos, fives)
    if places == 0:
        return str(x.numerator)
    scaled = abs(x.numerator) * 10**places // x.denominator
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if x.numerator < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def format_extended(x) -> str:
    """Decimal when possible, 'inf' for infinity, 'p/q' as a last resort."""
    if x == math.inf:
        return "inf"
    try:
        return decimal_str(x)
    except ValueError:
        return str(Fraction(x))


def _json_escape(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def _emit(value: Any, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        items = sorted(value.items())
        for i, (k, v) in enumerate(items):
            out.append(f"{pad}  {_json_escape(str(k))}: ")
            _emit(v, indent + 1, out)
            out.append(",\n" if i < len(items) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        out.append("[\n")
        for i, v in enumerate(value):
            out.append(pad + "  ")
            _emit(v, indent + 1, out)
            out.append(",\n" if i < len(value) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(value, bool):
        out.append("true" if value else "false")
    elif value is None:
        out.append("null")
    elif isinstance(value, str):
        out.append(_json_escape(value))
    elif isinstance(value, (int, Fraction)):
        out.append(decimal_str(value))
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def emit_json(value: Any) -> bytes:
    """Deterministic JSON: sorted keys, two-space indent, exact decimals."""
    out: list[str] = []
    _emit(value, 0, out)
    out.append("\n")
    return "".join(out).encode("utf-8")


# ---------------------------------------------------------------------------
# knot files

def _expect(condition: bool, code: str, message: str) -> None:
    if not condition:
        raise KnotFileError(code, message)


def parse_knot_file(data: bytes | str) -> KnotData:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data, parse_float=Fraction)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise KnotFileError(MALFORMED_JSON, f"not valid JSON: {exc}") from None
    _expect(isinstance(doc, dict), BAD_SCHEMA, "top level must be a JSON object")

    known = {"generators", "differential", "patches", "heights", "ng_resolved", "meta"}
    for key in doc:
        _expect(key in known, BAD_SCHEMA, f"unknown top-level key {key!r}")
    for key in ("generators", "differential", "patches"):
        _expect(key in doc, BAD_SCHEMA, f"missing required key {key!r}")

    raw_gens = doc["generators"]
    _expect(isinstance(raw_gens, list), BAD_SCHEMA, "'generators' must be an array")
    gens: list[tuple[str, int]] = []
    seen: set[str] = set()
    for i, entry in enumerate(raw_gens):
        _expect(
            isinstance(entry, dict) and set(entry) == {"name", "grading"},
            BAD_SCHEMA,
            f"generators[{i}] must be an object with keys 'name' and 'grading'",
        )
        name, grading = entry["name"], entry["grading"]
        _expect(isinstance(name, str) and name != "", BAD_SCHEMA, f"generators[{i}].name must be a nonempty string")
        _expect(
            isinstance(grading, int) and not isinstance(grading, bool),
            BAD_SCHEMA,
            f"generators[{i}].grading must be an integer",
        )
        if name in seen:
            raise KnotFileError(DUPLICATE_NAME, f"generator name {name!r} appears twice")
        seen.add(name)
        gens.append((name, grading))

    raw_diff = doc["differential"]
    _expect(isinstance(raw_diff, dict), BAD_SCHEMA, "'differential' must be an object")
    for name in raw_diff:
        if name not in seen:
            raise KnotFileError(UNKNOWN_GENERATOR, f"differential key {name!r} is not a generator")
    for name, _ in gens:
        _expect(name in raw_diff, BAD_SCHEMA, f"missing differential for generator {name!r}")
    for name, words in raw_diff.items():
        _expect(isinstance(words, list), BAD_SCHEMA, f"differential[{name!r}] must be an array of words")
        for w in words:
            _expect(
                isinstance(w, list) and all(isinstance(x, str) for x in w),
                BAD_SCHEMA,
                f"differential[{name!r}] words must be arrays of generator names",
            )
            for letter in w:
                if letter not in seen:
                    raise KnotFileError(
                        UNKNOWN_GENERATOR,
                        f"differential[{name!r}] uses unknown generator {letter!r}",
                    )
    try:
        dga = DGA.from_data(gens, raw_diff)
    except StructureError as exc:
        raise KnotFileError(BAD_SCHEMA, str(exc)) from None

    report = validate_dga(dga)
    for v in report.violations:
        if v.kind == "grading":
            raise KnotFileError(GRADING_VIOLATION, v.detail)
    for v in report.violations:
        raise KnotFileError(D_SQUARED_NONZERO, v.detail)

    raw_patches = doc["patches"]
    _expect(isinstance(raw_patches, list), BAD_SCHEMA, "'patches' must be an array")
    index = {name: gid for gid, (name, _) in enumerate(gens)}
    patches = []
    for i, corners in enumerate(raw_patches):
        _expect(isinstance(corners, list), BAD_SCHEMA, f"patches[{i}] must be an array of corners")
        pairs = []
        for corner in corners:
            _expect(
                isinstance(corner, dict) and set(corner) == {"name", "coeff"},
                BAD_SCHEMA,
                f"patches[{i}] corners must be objects with keys 'name' and 'coeff'",
            )
            cname, coeff = corner["name"], corner["coeff"]
            if cname not in index:
                raise KnotFileError(UNKNOWN_GENERATOR, f"patches[{i}] uses unknown generator {cname!r}")
            _expect(
                isinstance(coeff, int) and not isinstance(coeff, bool),
                BAD_SCHEMA,
                f"patches[{i}] coefficient for {cname!r} must be an integer",
            )
            pairs.append((index[cname], coeff))
        try:
            patches.append(AreaPatch(tuple(pairs)))
        except ValueError as exc:
            raise KnotFileError(BAD_PATCH, f"patches[{i}]: {exc}") from None

    ng_resolved = doc.get("ng_resolved", False)
    _expect(isinstance(ng_resolved, bool), BAD_SCHEMA, "'ng_resolved' must be a boolean")
    diagram = LagrangianDiagramData(
        crossings=tuple(range(len(gens))), patches=tuple(patches), ng_resolved=ng_resolved
    )

    heights = None
    if "heights" in doc:
        raw_heights = doc["heights"]
        _expect(isinstance(raw_heights, dict), BAD_SCHEMA, "'heights' must be an object")
        for name in raw_heights:
            if name not in index:
                raise KnotFileError(UNKNOWN_GENERATOR, f"heights key {name!r} is not a generator")
        table = {}
        for name, _ in gens:
            _expect(name in raw_heights, BAD_HEIGHT, f"missing height for generator {name!r}")
            value = raw_heights[name]
            if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
                raise KnotFileError(BAD_HEIGHT, f"height of {name!r} must be a number")
            if value <= 0:
                raise KnotFileError(BAD_HEIGHT, f"height of {name!r} must be positive, got {value}")
            table[index[name]] = Fraction(value)
        heights = HeightAssignment(table)

    meta = doc.get("meta", {})
    _expect(isinstance(meta, dict), BAD_SCHEMA, "'meta' must be an object")
    return KnotData(dga=dga, diagram=diagram, heights=heights, meta=meta)


def serialize_knot_file(kd: KnotData) -> bytes:
    name_of = {g.gid: g.name for g in kd.dga.generators}
    doc: dict[str, Any] = {
        "generators": [
            {"name": g.name, "grading": g.grading} for g in kd.dga.generators
        ],
        "differential": {
            g.name: [
                [name_of[gid] for gid in word]
                for word in sorted(kd.dga.d(g.gid).words, key=lambda w: (len(w), w))
            ]
            for g in kd.dga.generators
        },
        "patches": [
            [{"name": name_of[gid], "coeff": coeff} for gid, coeff in patch.corners]
            for patch in kd.diagram.patches
        ],
        "ng_resolved": kd.diagram.ng_resolved,
        "meta": kd.meta,
    }
    if kd.heights is not None:
        doc["heights"] = {name_of[gid]: h for gid, h in kd.heights.heights.items()}
    return emit_json(doc)


def load_knot(path) -> KnotData:
    with open(path, "rb") as fh:
        return parse_knot_file(fh.read())


# ---------------------------------------------------------------------------
# barcode files

def parse_barcode_file(data: bytes | str) -> Barcode:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data, parse_float=Fraction)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise KnotFileError(MALFORMED_JSON, f"not valid JSON: {exc}") from None
    _expect(
        isinstance(doc, dict) and "bars" in doc and isinstance(doc["bars"], list),
        BAD_SCHEMA,
        "barcode file must be an object with a 'bars' array",
    )
    bars = []
    for i, entry in enumerate(doc["bars"]):
        _expect(isinstance(entry, dict), BAD_SCHEMA, f"bars[{i}] must be an object")
        allowed = {"degree", "birth", "death", "birth_label", "death_label"}
        for key in entry:
            _expect(key in allowed, BAD_SCHEMA, f"bars[{i}] has unknown key {key!r}")
        for key in ("degree", "birth", "death"):
            _expect(key in entry, BAD_SCHEMA, f"bars[{i}] is missing {key!r}")
        degree = entry["degree"]
        _expect(
            isinstance(degree, int) and not isinstance(degree, bool),
            BAD_SCHEMA,
            f"bars[{i}].degree must be an integer",
        )
        birth = entry["birth"]
        if isinstance(birth, bool) or not isinstance(birth, (int, Fraction)):
            raise KnotFileError(BAD_SCHEMA, f"bars[{i}].birth must be a number")
        death = entry["death"]
        if death == "inf":
            death = math.inf
        elif isinstance(death, bool) or not isinstance(death, (int, Fraction)):
            raise KnotFileError(BAD_SCHEMA, f"bars[{i}].death must be a number or 'inf'")
        try:
            bars.append(
                Bar(
                    degree=degree,
                    birth=Fraction(birth),
                    death=death if death == math.inf else Fraction(death),
                    birth_label=entry.get("birth_label"),
                    death_label=entry.get("death_label"),
                )
            )
        except ValueError as exc:
            raise KnotFileError(INVALID_BAR, f"bars[{i}]: {exc}") from None
    return Barcode(tuple(bars))


def serialize_barcode_file(b: Barcode) -> bytes:
    bars = []
    for bar in b.bars:
        entry: dict[str, Any] = {
            "degree": bar.degree,
            "birth": bar.birth,
            "death": "inf" if not bar.finite else bar.death,
        }
        if bar.birth_label is not None:
            entry["birth_label"] = bar.birth_label
        if bar.death_label is not None:
            entry["death_label"] = bar.death_label
        bars.append(entry)
    return emit_json({"bars": bars})


def load_barcode(path) -> Barcode:
    with open(path, "rb") as fh:
        return parse_barcode_file(fh.read())


# ---------------------------------------------------------------------------
# rendering

_BOLD = "\x1b[1m"
_RESET = "\x1b[0m"


def render_barcode(b: Barcode, format: str = "text", color: bool = False) -> bytes:
    if format == "text":
        return _render_text(b, color)
    if format == "svg":
        return _render_svg(b)
    raise ValueError(f"unknown render format {format!r}")


def _render_text(b: Barcode, color: bool) -> bytes:
    lines = [f"# bars: {len(b.bars)}"]
    for bar in b.bars:
        head = f"H{bar.degree}"
        if color:
            head = f"{_BOLD}{head}{_RESET}"
        interval = f"[{format_extended(bar.birth)}, {format_extended(bar.death)})"
        line = f"{head}  {interval}"
        if bar.birth_label:
            line += f"  {bar.birth_label}"
            if bar.death_label:
                line += f" -> {bar.death_label}"
        lines.append(line)
    return ("\n".join(lines) + "\n").encode("utf-8")


def _render_svg(b: Barcode) -> bytes:
    left, top, row_height, width = 120.0, 24.0, 22.0, 640.0
    span = width - left - 60.0
    finite_ends = [float(bar.birth) for bar in b.bars]
    finite_ends += [float(bar.death) for bar in b.bars if bar.finite]
    t_max = max(finite_ends, default=1.0) * 1.15 or 1.0

    def x(t: float) -> float:
        return left + span * t / t_max

    rows = list(b.bars)
    height = top * 2 + row_height * max(len(rows), 1) + 20.0
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        '<style>text{font-family:monospace;font-size:11px;}</style>',
    ]
    axis_y = height - 18.0
    parts.append(
        f'<line x1="{x(0):.1f}" y1="{axis_y:.1f}" x2="{left + span:.1f}" y2="{axis_y:.1f}" '
        'stroke="black" stroke-width="1"/>'
    )
    ticks = sorted({Fraction(0)} | {bar.birth for bar in b.bars} | {bar.death for bar in b.bars if bar.finite})
    for t in ticks:
        parts.append(
            f'<line x1="{x(float(t)):.1f}" y1="{axis_y - 3:.1f}" x2="{x(float(t)):.1f}" '
            f'y2="{axis_y + 3:.1f}" stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x(float(t)):.1f}" y="{axis_y + 14:.1f}" text-anchor="middle">'
            f"{format_extended(t)}</text>"
        )
    for i, bar in enumerate(rows):
        y = top + row_height * i + row_height / 2
        x0 = x(float(bar.birth))
        x1 = left + span + 16.0 if not bar.finite else x(float(bar.death))
        parts.append(
            f'<line x1="{x0:.1f}" y1="{y:.1f}" x2="{x1:.1f}" y2="{y:.1f}" '
            'stroke="black" stroke-width="4" stroke-linecap="butt"/>'
        )
        if not bar.finite:
            parts.append(
                f'<path d="M {x1:.1f} {y - 5:.1f} L {x1 + 8:.1f} {y:.1f} L {x1:.1f} {y + 5:.1f} Z" '
                'fill="black"/>'
            )
        caption = f"H{bar.degree}"
        if bar.birth_label:
            caption += f" {bar.birth_label}"
        parts.append(
            f'<text x="{x0 - 6:.1f}" y="{y + 4:.1f}" text-anchor="end">{caption}</text>'
        )
        if bar.death_label:
            parts.append(
                f'<text x="{x1 + 6:.1f}" y="{y + 4:.1f}" text-anchor="start">{bar.death_label}</text>'
            )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")
