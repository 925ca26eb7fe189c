"""The algebra file: a JSON document with an explicit group description.

::

    {
      "format": "gradfrob-algebra/1",
      "group": "Z2^2",
      "basis": [{"name": "1", "degree": "(0,0)"}, ...],
      "unit": ["1", "0", "0", "0"],
      "constants": [[i, j, l, "p/q"], ...]
    }

Indices are 0-based; absent constants are zero; rationals are "p" or
"p/q" strings (plain JSON integers are accepted on input).
"""

from __future__ import annotations

import hashlib
import json

from .algebra import GradedAlgebra, validate
from .errors import ParseError, ValidationError
from .exactmath import format_rational, parse_rational
from .group import parse_group

FORMAT_TAG = "gradfrob-algebra/1"


def _require(doc: dict, key: str, kind, where: str = "$"):
    if key not in doc:
        raise ParseError(f"missing key {key!r}", where)
    value = doc[key]
    if not isinstance(value, kind):
        raise ParseError(f"{key!r} has the wrong type", f"{where}.{key}")
    return value


def _rational(value, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError("expected a rational string", where)
    try:
        return parse_rational(value)
    except ParseError as exc:
        raise ParseError(str(exc), where) from None


def parse_algebra(text: str, check: bool = True) -> GradedAlgebra:
    """Parse an algebra file; with ``check`` the algebra must also validate."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", "$")
    tag = doc.get("format", FORMAT_TAG)
    if tag != FORMAT_TAG:
        raise ParseError(f"unsupported format {tag!r}", "$.format")
    try:
        group = parse_group(_require(doc, "group", str))
    except ParseError as exc:
        raise ParseError(str(exc), "$.group") from None
    except ValueError as exc:
        raise ParseError(str(exc), "$.group") from None

    basis = _require(doc, "basis", list)
    if not basis:
        raise ParseError("basis must be nonempty", "$.basis")
    names, degrees = [], []
    for k, item in enumerate(basis):
        where = f"$.basis[{k}]"
        if not isinstance(item, dict):
            raise ParseError("basis entries are objects", where)
        names.append(str(item.get("name", f"e{k}")))
        deg = _require(item, "degree", (str, int), where)
        try:
            degrees.append(group.parse(str(deg)))
        except ParseError as exc:
            raise ParseError(str(exc), f"{where}.degree") from None
    m = len(basis)

    unit_raw = _require(doc, "unit", list)
    if len(unit_raw) != m:
        raise ParseError(f"unit has {len(unit_raw)} coordinates, expected {m}", "$.unit")
    unit = [_rational(x, f"$.unit[{k}]") for k, x in enumerate(unit_raw)]

    constants = []
    seen = set()
    for k, item in enumerate(_require(doc, "constants", list)):
        where = f"$.constants[{k}]"
        if not (isinstance(item, list) and len(item) == 4):
            raise ParseError("constants are [i, j, l, value] lists", where)
        i, j, l, v = item
        for idx in (i, j, l):
            if isinstance(idx, bool) or not isinstance(idx, int) or not 0 <= idx < m:
                raise ParseError(f"index {idx!r} out of range 0..{m - 1}", where)
        if (i, j, l) in seen:
            raise ParseError(f"duplicate constant ({i}, {j}, {l})", where)
        seen.add((i, j, l))
        constants.append((i, j, l, _rational(v, f"{where}[3]")))

    a = GradedAlgebra(group, degrees, constants, unit, names)
    if check:
        report = validate(a)
        if not report.passed:
            raise ValidationError(report)
    return a


def parse_algebra_file(path: str, check: bool = True) -> GradedAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read(), check)


def serialize_algebra(a: GradedAlgebra) -> str:
    """Canonical text; ``parse_algebra(serialize_algebra(a)) == a``."""
    g = a.group
    lines = [
        "{",
        f'  "format": {json.dumps(FORMAT_TAG)},',
        f'  "group": {json.dumps(g.describe())},',
        '  "basis": [',
    ]
    basis = [json.dumps({"name": n, "degree": g.format(d)}) for n, d in zip(a.names, a.degrees)]
    lines.append(",\n".join("    " + b for b in basis))
    lines.append("  ],")
    lines.append(f'  "unit": {json.dumps([format_rational(x) for x in a.unit])},')
    triples = [json.dumps([i, j, l, format_rational(c)]) for i, j, l, c in a.triples()]
    if triples:
        lines.append('  "constants": [')
        lines.append(",\n".join("    " + t for t in triples))
        lines.append("  ]")
    else:
        lines.append('  "constants": []')
    lines.append("}")
    return "\n".join(lines) + "\n"


def algebra_digest(a: GradedAlgebra) -> str:
    return hashlib.sha256(serialize_algebra(a).encode("utf-8")).hexdigest()
