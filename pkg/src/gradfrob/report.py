"""Reports: one nested dict rendered either as JSON or as delimited text.

Both renderings are produced from the same dict, so they carry the same
data.  Lists of flat records become tab-separated tables in the text form.
"""

from __future__ import annotations

import json
from dataclasses import fields, is_dataclass
from fractions import Fraction

from .algebra import Finding, GradedAlgebra
from .decide import BlockRecord, Decision, TheoremAReport
from .exactmath import format_rational
from .fileformat import algebra_digest


def _fmt_elem(a: GradedAlgebra, g):
    return None if g is None else a.group.format(g)


def _fmt_rat(x):
    return None if x is None else format_rational(x)


def algebra_summary(a: GradedAlgebra) -> dict:
    return {
        "sha256": algebra_digest(a),
        "group": a.group.describe(),
        "dimension": a.dimension,
        "support": [a.group.format(g) for g in a.support],
    }


def witness_dict(a: GradedAlgebra, w) -> dict | None:
    if w is None:
        return None
    out = {"kind": w.kind}
    for f in fields(w):
        v = getattr(w, f.name)
        out[f.name] = _fmt_elem(a, v) if f.name in ("g", "sigma") else v
    return out


def block_dict(a: GradedAlgebra, rec: BlockRecord) -> dict:
    return {
        "g": _fmt_elem(a, rec.g),
        "rows": rec.rows,
        "cols": rec.cols,
        "status": rec.status,
        "det": _fmt_rat(rec.det),
        "rank": rec.rank,
    }


def decision_dict(a: GradedAlgebra, d: Decision) -> dict:
    certificate = None
    if d.verdict and d.alpha is not None:
        certificate = {
            "alpha": [
                {"index": l, "name": a.names[l], "value": format_rational(v)}
                for l, v in sorted(d.alpha.items())
            ],
        }
        if d.parameters is not None:
            certificate["parameters"] = [format_rational(t) for t in d.parameters]
    return {
        "question": d.question,
        "sigma": _fmt_elem(a, d.sigma),
        "verdict": "yes" if d.verdict else "no",
        "method": d.method,
        "certificate": certificate,
        "witness": witness_dict(a, d.witness),
        "blocks": [block_dict(a, rec) for rec in d.blocks],
    }


def theorem_a_dict(a: GradedAlgebra, r: TheoremAReport) -> dict:
    return {
        "sigma": _fmt_elem(a, r.sigma),
        "alpha": [{"index": l, "name": a.names[l], "value": format_rational(v)}
                  for l, v in sorted(r.alpha.items())],
        "condition_full_matrix": r.full,
        "condition_faithful_form": r.faithful_form,
        "condition_blockwise": r.blockwise,
        "consistent": r.consistent,
        "blocks": [block_dict(a, rec) for rec in r.blocks],
    }


def finding_dict(f: Finding) -> dict:
    return f.as_dict()


def to_machine(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def _is_table(v) -> bool:
    return (isinstance(v, list) and v and all(isinstance(x, dict) for x in v)
            and all(not isinstance(y, (dict, list)) for x in v for y in x.values()))


def _render(value, indent: int, out: list[str], key: str | None = None):
    pad = "  " * indent
    label = f"{pad}{key}:" if key is not None else pad
    if isinstance(value, dict):
        if key is not None:
            out.append(label)
        for k, v in value.items():
            _render(v, indent + (1 if key is not None else 0), out, k)
    elif _is_table(value):
        out.append(label)
        cols = list(dict.fromkeys(k for row in value for k in row))
        out.append(pad + "  " + "\t".join(cols))
        for row in value:
            out.append(pad + "  " + "\t".join(_scalar(row.get(c)) for c in cols))
    elif isinstance(value, list):
        if all(not isinstance(x, (dict, list)) for x in value):
            out.append(f"{label} {', '.join(_scalar(x) for x in value) if value else '(none)'}")
        else:
            out.append(label)
            for k, item in enumerate(value):
                _render(item, indent + 1, out, f"[{k}]")
    else:
        out.append(f"{label} {_scalar(value)}")


def to_text(report: dict) -> str:
    out: list[str] = []
    _render(report, 0, out)
    return "\n".join(out) + "\n"


def render(report: dict, fmt: str) -> str:
    if fmt == "machine":
        return to_machine(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"unknown report format {fmt!r}")


def plain(obj):
    """Dataclass/Fraction-free copy suitable for JSON (used by tests and scripts)."""
    if is_dataclass(obj):
        return {f.name: plain(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(x) for x in obj]
    return obj
