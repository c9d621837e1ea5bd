"""Polytope text format, family spec strings, and JSON report serialization.

The text format is line-based and hand-writable::

    # comment
    polytope <name>
    dim <n>
    v <n integers>
    ...
    end

``#`` starts a comment anywhere on a line, blank lines are ignored, and
names must be unique within a file.  Family specs are the strings
accepted by ``construct``: ``simplex:<n>``, ``hexagon``, and
``product(<spec>,<spec>,...)`` nested freely.  Reports serialize to JSON
with sorted keys and deterministically ordered arrays so equal analyses
produce byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import replace
from typing import IO, Iterable, Sequence

from .bounds import AnalysisReport, BoundCheck
from .polytope import FanoPolytope, ValidationReport, free_sum, hexagon, simplex


class ParseError(ValueError):
    """Malformed polytope file; carries the 1-based line number."""

    def __init__(self, message: str, source: str = "<string>", line: int = 0):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


class ShapeError(ParseError):
    """A vertex row does not match the declared dimension."""


class FamilySpecError(ValueError):
    """Malformed family spec string."""


# -- polytope text format -----------------------------------------------------


def parse_polytopes(text: str, source: str = "<string>") -> list[FanoPolytope]:
    """Parse every block in a polytope file, in file order."""
    polytopes: list[FanoPolytope] = []
    names: set[str] = set()
    name: str | None = None
    dim: int | None = None
    verts: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        keyword = parts[0]
        if name is None:
            if keyword != "polytope":
                raise ParseError(f"expected 'polytope', got {keyword!r}", source, lineno)
            name = line[len("polytope") :].strip()
            if not name:
                raise ParseError("polytope block needs a name", source, lineno)
            if name in names:
                raise ParseError(f"duplicate polytope name {name!r}", source, lineno)
            names.add(name)
        elif dim is None:
            if keyword != "dim" or len(parts) != 2:
                raise ParseError("expected 'dim <n>'", source, lineno)
            try:
                dim = int(parts[1])
            except ValueError:
                raise ParseError(f"bad dimension {parts[1]!r}", source, lineno) from None
            if dim < 1:
                raise ParseError("dimension must be at least 1", source, lineno)
        elif keyword == "v":
            try:
                row = tuple(int(tok) for tok in parts[1:])
            except ValueError:
                raise ParseError(f"bad vertex line {line!r}", source, lineno) from None
            if len(row) != dim:
                raise ShapeError(
                    f"vertex has {len(row)} coordinates, block dimension is {dim}",
                    source,
                    lineno,
                )
            verts.append(row)
        elif keyword == "end":
            if not verts:
                raise ParseError("polytope block has no vertices", source, lineno)
            polytopes.append(FanoPolytope(dim, tuple(verts), name))
            name, dim, verts = None, None, []
        else:
            raise ParseError(f"unexpected keyword {keyword!r}", source, lineno)
    if name is not None:
        raise ParseError(f"unterminated block {name!r}", source, 0)
    return polytopes


def parse_path(path) -> list[FanoPolytope]:
    with open(path, encoding="utf-8") as handle:
        return parse_polytopes(handle.read(), source=str(path))


def polytope_to_text(p: FanoPolytope, fallback_name: str = "unnamed") -> str:
    lines = [f"polytope {p.name or fallback_name}", f"dim {p.dim}"]
    lines.extend("v " + " ".join(str(x) for x in v) for v in p.vertices)
    lines.append("end")
    return "\n".join(lines) + "\n"


def polytopes_to_text(polytopes: Sequence[FanoPolytope]) -> str:
    blocks = [
        polytope_to_text(p, fallback_name=f"unnamed_{i + 1}")
        for i, p in enumerate(polytopes)
    ]
    return "\n".join(blocks)


# -- family specs --------------------------------------------------------------


def _parse_spec(text: str, pos: int) -> tuple[object, int]:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if text.startswith("product(", pos):
        pos += len("product(")
        args = []
        while True:
            node, pos = _parse_spec(text, pos)
            args.append(node)
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                raise FamilySpecError("unclosed 'product('")
            if text[pos] == ",":
                pos += 1
                continue
            if text[pos] == ")":
                pos += 1
                break
            raise FamilySpecError(f"expected ',' or ')' at position {pos}")
        if len(args) < 2:
            raise FamilySpecError("product needs at least two factors")
        return ("product", args), pos
    if text.startswith("simplex:", pos):
        pos += len("simplex:")
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise FamilySpecError("simplex needs a dimension, e.g. simplex:3")
        n = int(text[start:pos])
        if n < 1:
            raise FamilySpecError("simplex dimension must be at least 1")
        return ("simplex", n), pos
    if text.startswith("hexagon", pos):
        return ("hexagon", None), pos + len("hexagon")
    raise FamilySpecError(f"unrecognized family spec at position {pos}: {text[pos:]!r}")


def _build_spec(node) -> FanoPolytope:
    kind, arg = node
    if kind == "simplex":
        return simplex(arg)
    if kind == "hexagon":
        return hexagon()
    built = _build_spec(arg[0])
    for factor in arg[1:]:
        built = free_sum(built, _build_spec(factor))
    return built


def _format_spec(node) -> str:
    kind, arg = node
    if kind == "simplex":
        return f"simplex:{arg}"
    if kind == "hexagon":
        return "hexagon"
    return "product(" + ",".join(_format_spec(a) for a in arg) + ")"


def construct(spec: str) -> FanoPolytope:
    """Build a polytope from a family spec string, named by the normalized spec."""
    node, pos = _parse_spec(spec, 0)
    while pos < len(spec) and spec[pos].isspace():
        pos += 1
    if pos != len(spec):
        raise FamilySpecError(f"trailing input after spec: {spec[pos:]!r}")
    return replace(_build_spec(node), name=_format_spec(node))


# -- JSON reports --------------------------------------------------------------


def _validation_to_dict(v: ValidationReport) -> dict:
    return {
        "passed": v.passed,
        "failures": list(v.failures),
        "conditions": [
            {"condition": c.name, "passed": c.passed, "detail": c.detail}
            for c in v.conditions
        ],
    }


def _check_to_dict(c: BoundCheck) -> dict:
    return {
        "name": c.name,
        "component": list(c.component.collection) if c.component else None,
        "bound": c.bound,
        "rho": c.rho,
        "satisfied": c.satisfied,
        "asserted_range": c.in_asserted_range,
    }


def report_to_dict(report: AnalysisReport) -> dict:
    return {
        "name": report.name,
        "dim": report.dim,
        "vertex_count": report.vertex_count,
        "picard_rank": report.picard_rank,
        "valid": report.valid,
        "validation": _validation_to_dict(report.validation),
        "primitive_relations": [
            {
                "lhs": list(r.collection),
                "rhs": [[i, a] for i, a in r.rhs],
                "degree": r.degree,
            }
            for r in report.relations
        ],
        "minimal_components": [
            {"indices": list(c.collection), "degree": c.degree, "codegree": c.codegree}
            for c in report.components
        ],
        "checks": [_check_to_dict(c) for c in report.checks],
    }


def report_json(report: AnalysisReport) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2)


def write_report(report: AnalysisReport, sink: IO[str]) -> str:
    """Serialize one report as JSON and write it to the sink."""
    text = report_json(report) + "\n"
    sink.write(text)
    return text


def is_theorem_violation(check: BoundCheck) -> bool:
    """Failures that can only mean a bug: Casagrande and the codegree 2 cap."""
    if check.satisfied is not False:
        return False
    if check.name == "casagrande":
        return True
    return check.name == "weak" and check.component is not None and check.component.codegree == 2


def is_conjecture_violation(check: BoundCheck) -> bool:
    """Literal failures of the conjectural checks inside their asserted range."""
    if check.satisfied is not False or not check.in_asserted_range:
        return False
    if check.name == "cfh" or check.name == "strong":
        return True
    return check.name == "weak" and check.component is not None and check.component.codegree < 2


def batch_to_dict(reports: Sequence[AnalysisReport]) -> dict:
    """Aggregate record for a batch run: per-polytope reports plus summary counts."""
    theorem = conjecture = out_of_range = 0
    invalid = 0
    for rep in reports:
        if not rep.valid:
            invalid += 1
        for check in rep.checks:
            if is_theorem_violation(check):
                theorem += 1
            elif is_conjecture_violation(check):
                conjecture += 1
            elif check.satisfied is False and not check.in_asserted_range:
                out_of_range += 1
    return {
        "reports": [report_to_dict(r) for r in reports],
        "summary": {
            "polytopes": len(reports),
            "validation_failures": invalid,
            "theorem_violations": theorem,
            "conjecture_violations": conjecture,
            "out_of_range_failures": out_of_range,
        },
    }


def batch_json(reports: Sequence[AnalysisReport]) -> str:
    return json.dumps(batch_to_dict(reports), sort_keys=True, indent=2)


def batch_exit_code(reports: Iterable[AnalysisReport]) -> int:
    """0 clean, 2 on any theorem-level violation, 1 on any validation failure."""
    code = 0
    for rep in reports:
        if any(is_theorem_violation(c) for c in rep.checks):
            return 2
        if not rep.valid:
            code = 1
    return code
