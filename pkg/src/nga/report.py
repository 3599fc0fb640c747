"""Text, LaTeX and JSON emitters plus the shipped report schema."""

import json
import re
from importlib import resources

REPORT_VERSION = "1.0"

_LATEX_ESCAPES = {
    "\\": r"\textbackslash{}", "_": r"\_", "^": r"\^{}", "&": r"\&", "%": r"\%",
    "#": r"\#", "{": r"\{", "}": r"\}", "~": r"\~{}", "$": r"\$",
}


def latex_escape(text):
    return "".join(_LATEX_ESCAPES.get(ch, ch) for ch in text)


def load_schema():
    return json.loads(resources.files("nga").joinpath("report.schema.json").read_text())


def spec_json(spec):
    return {"N": spec.N, "dim": spec.d, "variant": spec.variant}


def table_json(table):
    return {
        "twist": table.twist_label,
        "variant": table.spec.variant,
        "coordinates": list(table.coordinates),
        "entries": [{"pair": list(e.pair), "entry": e.entry.render(),
                     "matches_paper": e.matches, "paper_form": e.paper_form.render(),
                     "formula": e.formula}
                    for e in table.entries],
    }


def build_report(spec, checks=(), tables=(), result=None):
    out = {"version": REPORT_VERSION, "spec": spec_json(spec),
           "checks": [c.to_json() for c in checks],
           "tables": [table_json(t) for t in tables]}
    if result is not None:
        out["result"] = result
    return out


def dump_json(report):
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False)


# -- text ---------------------------------------------------------------------

def _yn(flag):
    return "-" if flag is None else ("yes" if flag else "no")


def checks_text(checks):
    lines = []
    for c in checks:
        lines.append(f"{c.status.upper():4}  {c.name}  terminated={_yn(c.terminated)}")
        lines.append(f"      {c.paper_eq}")
        if c.detail:
            lines.append(f"      {c.detail}")
    passed = sum(c.ok for c in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    return "\n".join(lines)


def table_text(table):
    lines = [f"space-time commutators for {table.twist_label} ({table.spec.variant}, d={table.spec.d})"]
    for e in table.entries:
        verdict = "matches" if e.matches else "MISMATCH"
        lines.append(f"[{e.pair[0]}, {e.pair[1]}] = {e.entry.render()}    ({verdict})")
    if table.entries:
        lines.append(f"closed form: {table.entries[-1].formula}")
    return "\n".join(lines)


# -- LaTeX --------------------------------------------------------------------

def coordinate_latex(name):
    return "t" if name == "t" else f"x_{{{name[1:]}}}"


def table_latex(table):
    lines = [f"% {latex_escape(table.twist_label)}"]
    for e in table.entries:
        a, b = (coordinate_latex(p) for p in e.pair)
        lines.append("\\begin{equation*}")
        lines.append(f"[{a}, {b}]_{{\\star}} = {e.entry.latex()}")
        lines.append("\\end{equation*}")
    return "\n".join(lines)


def checks_latex(checks):
    lines = ["\\begin{tabular}{lll}", "check & status & detail \\\\", "\\hline"]
    for c in checks:
        lines.append(f"{latex_escape(c.name)} & {c.status} & {latex_escape(c.detail)} \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def balanced(text):
    """Whether braces and begin/end environments nest properly."""
    depth = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text) and text[i + 1] in "{}":
            i += 2
            continue
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                return False
        i += 1
    if depth:
        return False
    stack = []
    for kind, env in re.findall(r"\\(begin|end)\{([^}]*)\}", text):
        if kind == "begin":
            stack.append(env)
        elif not stack or stack.pop() != env:
            return False
    return not stack
