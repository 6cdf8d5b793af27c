"""Scene files (``*.tri``): a triangle, a cevian fraction and render options.

One ``key=value`` per line; ``#`` starts a comment line. ``p``, ``q``, ``r``
(complex) and ``t`` (rational) are required, any other identifier is an
option kept as a string::

    p=0+0i
    q=7+0i
    r=0+7i
    t=1/3
    labels=off

Whitespace around keys and values is ignored; LF and CRLF line endings are
both accepted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CevianError
from .exact import GaussianRational, TextFormError, format_rational, parse_gaussian, parse_rational
from .triangle import Triangle, signed_area

REQUIRED = ("p", "q", "r", "t")
IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_-]*\Z")
TRUTHY = {"1", "true", "yes", "on"}
FALSY = {"0", "false", "no", "off"}

def _positive_int(value: str) -> str | None:
    if not (value.isascii() and value.isdigit()) or int(value) <= 0:
        return "expected a positive integer"
    return None


def _non_negative_int(value: str) -> str | None:
    if not (value.isascii() and value.isdigit()):
        return "expected a non-negative integer"
    return None


def _switch(value: str) -> str | None:
    if value.lower() not in TRUTHY | FALSY:
        return "expected on/off"
    return None


# option name -> validator returning an error message or None
KNOWN_OPTIONS = {
    "width": _positive_int,
    "height": _positive_int,
    "margin": _non_negative_int,
    "labels": _switch,
    "allow-extrapolation": _switch,
}


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


class SceneError(CevianError, ValueError):
    def __init__(self, diagnostics: list[ParseDiagnostic], source: str = "<scene>") -> None:
        self.diagnostics = diagnostics
        self.source = source
        super().__init__("\n".join(f"{source}:{d}" for d in diagnostics))


def option_enabled(options: dict[str, str], name: str, default: bool = False) -> bool:
    value = options.get(name)
    if value is None:
        return default
    return value.lower() in TRUTHY


@dataclass(frozen=True)
class SceneSpec:
    triangle: Triangle
    t: Fraction
    options: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))
        object.__setattr__(self, "options", dict(self.options))

    @property
    def allow_extrapolation(self) -> bool:
        return option_enabled(self.options, "allow-extrapolation")

    @property
    def labels(self) -> bool:
        return option_enabled(self.options, "labels", default=True)

    def option_int(self, name: str, default: int) -> int:
        value = self.options.get(name)
        return default if value is None else int(value)

    def __hash__(self):
        return hash((self.triangle, self.t, tuple(sorted(self.options.items()))))


def parse_scene(text: str, source: str = "<scene>") -> SceneSpec:
    """Parse scene text, raising :class:`SceneError` with every diagnostic found."""
    diags: list[ParseDiagnostic] = []
    values: dict[str, tuple[object, int]] = {}
    options: dict[str, str] = {}
    seen: set[str] = set()

    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for lineno, raw in enumerate(lines, start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in line:
            col = len(line) - len(line.lstrip()) + 1
            diags.append(ParseDiagnostic(lineno, col, "expected key=value"))
            continue
        eq = line.index("=")
        key = line[:eq].strip()
        key_col = len(line[:eq]) - len(line[:eq].lstrip()) + 1
        value_part = line[eq + 1 :]
        value = value_part.strip()
        value_col = eq + 2 + (len(value_part) - len(value_part.lstrip()))
        if not key:
            diags.append(ParseDiagnostic(lineno, eq + 1, "missing key before '='"))
            continue
        if not IDENT.match(key):
            diags.append(ParseDiagnostic(lineno, key_col, f"invalid key {key!r}"))
            continue
        if key in seen:
            diags.append(ParseDiagnostic(lineno, key_col, f"duplicate key {key!r}"))
            continue
        seen.add(key)
        if not value:
            diags.append(ParseDiagnostic(lineno, min(value_col, len(line) + 1), f"missing value for {key!r}"))
            continue
        try:
            if key in ("p", "q", "r"):
                values[key] = (parse_gaussian(value), lineno)
            elif key == "t":
                values[key] = (parse_rational(value), lineno)
            else:
                check = KNOWN_OPTIONS.get(key)
                problem = check(value) if check else None
                if problem:
                    diags.append(ParseDiagnostic(lineno, value_col, f"option {key!r}: {problem}"))
                else:
                    options[key] = value
        except TextFormError as exc:
            diags.append(ParseDiagnostic(lineno, value_col + exc.offset, exc.message))

    end_line = max(len(lines), 1)
    for key in REQUIRED:
        if key not in seen:
            diags.append(ParseDiagnostic(end_line, 1, f"missing required key {key!r}"))

    if diags:
        raise SceneError(diags, source)

    p, q, r = (values[k][0] for k in ("p", "q", "r"))
    t, t_line = values["t"]
    if signed_area(p, q, r) == 0:
        line = max(values[k][1] for k in ("p", "q", "r"))
        diags.append(
            ParseDiagnostic(line, 1, f"collinear triangle: p={p} q={q} r={r} have zero area")
        )
    if not 0 <= t <= 1 and not option_enabled(options, "allow-extrapolation"):
        diags.append(
            ParseDiagnostic(
                t_line,
                1,
                f"t={format_rational(t)} is outside [0, 1]; set allow-extrapolation=on to permit",
            )
        )
    if diags:
        raise SceneError(diags, source)
    return SceneSpec(Triangle(p, q, r), t, options)


def format_scene(spec: SceneSpec) -> str:
    tri = spec.triangle
    out = [f"p={tri.p}", f"q={tri.q}", f"r={tri.r}", f"t={format_rational(spec.t)}"]
    out += [f"{k}={v}" for k, v in sorted(spec.options.items())]
    return "\n".join(out) + "\n"


def read_scene(path) -> SceneSpec:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_scene(fh.read(), source=str(path))


def builtin_scene(name: str, t=Fraction(1, 3), **options: str) -> SceneSpec:
    from .triangle import BUILTINS

    return SceneSpec(BUILTINS[name], Fraction(t), options)


def coerce_point(text: str) -> GaussianRational:
    """Parse a single complex value outside a scene file (CLI flags)."""
    return parse_gaussian(text.strip())
