"""
Report rendering for the three output formats.
"""
from typing import Any, Dict, List

from exteriorcov.models.qpoly import QPoly
from exteriorcov.schemas.report import Report

FORMATS = ("text", "json", "latex")
POLYNOMIAL_KEYS = ("multiplicity", "quotient")


def _poly(pairs: List[List[int]]) -> QPoly:
    return QPoly.from_pairs((e, c) for e, c in pairs)


def _text_value(key: str, value: Any) -> str:
    if key in POLYNOMIAL_KEYS and isinstance(value, list):
        return str(_poly(value))
    if isinstance(value, dict):
        return ", ".join(f"{k}={_text_value(k, v)}" for k, v in value.items())
    return str(value)


def render_text(report: Report) -> str:
    lines = [f"command: {report.command}"]
    if report.inputs:
        lines.append("inputs: " + ", ".join(f"{k}={v}" for k, v in report.inputs.items()))
    if report.seed is not None:
        lines.append(f"seed: {report.seed}")
    polynomials: Dict[str, List[List[int]]] = report.results.get("polynomials", {})
    for name, pairs in polynomials.items():
        lines.append(f"{name} = {_poly(pairs)}")
    for key, value in report.results.items():
        if key == "polynomials":
            continue
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            lines.extend(f"  {_text_value(key, item)}" for item in value)
        else:
            lines.append(f"{key}: {value}")
    if report.checks:
        lines.append("checks:")
    for check in report.checks:
        detail = ""
        if check.lhs is not None:
            detail = f": {check.lhs}" + (f" | {check.rhs}" if check.rhs is not None else "")
        lines.append(f"  [{check.status}] {check.name}{detail}")
    if report.runtime_ms is not None:
        lines.append(f"runtime_ms: {report.runtime_ms}")
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    return report.model_dump_json(indent=2) + "\n"


def _latex_escape(text: str) -> str:
    for char in ("_", "&", "%", "#"):
        text = text.replace(char, "\\" + char)
    return text


def render_latex(report: Report) -> str:
    lines = [f"% exteriorcov {report.command} " + " ".join(f"{k}={v}" for k, v in report.inputs.items())]
    polynomials: Dict[str, List[List[int]]] = report.results.get("polynomials", {})
    if polynomials:
        lines.append("\\begin{align*}")
        body = [f"  M_{{\\mathrm{{{_latex_escape(name)}}}}}(q) &= {_poly(pairs).to_latex()}"
                for name, pairs in polynomials.items()]
        lines.append(" \\\\\n".join(body))
        lines.append("\\end{align*}")
    if report.checks:
        lines.append("\\begin{tabular}{ll}")
        for check in report.checks:
            lines.append(f"  \\texttt{{{check.status}}} & {_latex_escape(check.name)} \\\\")
        lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return render_json(report)
    if fmt == "latex":
        return render_latex(report)
    return render_text(report)
