"""``nga`` command line interface."""

import argparse
import json
import sys
from fractions import Fraction

from .diffrep import mode_of
from .algebra import GALILEI, VARIANTS, AlgebraSpec, build_algebra, parse_generator
from .enveloping import EnvElement
from .hopf import (DEFAULT_ORDER, Twist, antipode_axiom_check, make_nm_r, make_single_r,
                   twisted_antipode, twisted_coproduct)
from .newton_hooke import NHCoefficients, flat_limit_check, sign_for
from .parsing import ParseError, parse_function, parse_scalar
from .report import (build_report, checks_latex, checks_text, dump_json, latex_escape,
                     table_latex, table_text)
from .star import spacetime_table, star_product
from .verify import Check, VerifyOptions, run_suite


class UsageError(Exception):
    pass


def _parse_set(items):
    values = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"--set expects name=p/q, got {item!r}")
        try:
            values[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--set value for {name!r} is not a rational: {value!r}")
    return values


def _load_alpha(path, d):
    if path is None:
        return None
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read alpha matrix {path!r}: {exc}")
    if not isinstance(raw, list) or len(raw) != d or any(
            not isinstance(row, list) or len(row) != d for row in raw):
        raise UsageError(f"alpha matrix must be a {d}x{d} JSON list of lists")
    try:
        return [[parse_scalar(str(v)) for v in row] for row in raw]
    except ParseError as exc:
        raise UsageError(f"bad alpha matrix entry: {exc}")


def _spec(args):
    return AlgebraSpec(args.n, args.dim, args.variant)


def _twist(args, table, alpha, values):
    if args.twist == "nm":
        r = make_nm_r(table, args.tn, args.tm, alpha)
    else:
        r = make_single_r(table, args.tn, args.i, args.k, args.l)
    if values:
        r = r.substitute(values)
    return Twist(r, args.order)


def _generator(text, spec):
    try:
        g = parse_generator(text)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not spec.contains(g):
        raise UsageError(f"{text} is not a generator of this algebra")
    return g


def _emit(args, spec, checks=(), tables=(), result=None, text=None, latex=None):
    if args.format == "json":
        print(dump_json(build_report(spec, checks, tables, result)))
    elif args.format == "latex":
        print(latex)
    else:
        print(text)


# -- subcommands ----------------------------------------------------------------

def cmd_verify(args):
    spec = _spec(args)
    families = ("nm", "single") if args.twist is None else (args.twist,)
    opts = VerifyOptions(N=spec.N, d=spec.d, variant=spec.variant, order=args.order,
                         families=families, tn=args.tn, tm=args.tm, i=args.i, k=args.k,
                         l=args.l, alpha=_load_alpha(args.alpha_matrix, spec.d),
                         rep_degree=args.rep_degree, values=_parse_set(args.set))
    checks = run_suite(opts, jobs=args.jobs)
    _emit(args, spec, checks, text=checks_text(checks), latex=checks_latex(checks))
    return 0 if all(c.ok for c in checks) else 1


def cmd_spacetime(args):
    spec = _spec(args)
    table = build_algebra(spec)
    tw = _twist(args, table, _load_alpha(args.alpha_matrix, spec.d), {})
    tab = spacetime_table(tw)
    values = _parse_set(args.set)
    if values:
        tab = tab.substitute(values)
    check = Check(f"spacetime[{spec.variant},{tw.r.label()}]",
                  tab.entries[-1].formula if tab.entries else "",
                  "pass" if tab.matches else "fail", True,
                  "all entries match the closed form" if tab.matches else "mismatch")
    _emit(args, spec, [check], [tab], text=table_text(tab), latex=table_latex(tab))
    return 0 if tab.matches else 1


def cmd_coproduct(args):
    spec = _spec(args)
    table = build_algebra(spec)
    tw = _twist(args, table, _load_alpha(args.alpha_matrix, spec.d), _parse_set(args.set))
    g = _generator(args.gen, spec)
    conj = twisted_coproduct(EnvElement.generator(table, g), tw)
    result = {"generator": str(g), "twist": tw.label(), "order": args.order,
              "terminated": conj.terminated, "depth": conj.depth,
              "value": conj.value.render()}
    status = "exact" if conj.terminated else f"truncated at order {args.order}"
    text = "\n".join([f"twist: {tw.label()}",
                      f"Delta({g}) = {conj.value.render()}",
                      f"{status}; deepest nonzero commutator: {conj.depth}"])
    latex = f"% {latex_escape(tw.label())}: {status}\n\\begin{{equation*}}\n" \
            f"\\Delta_{{\\alpha}}({g.latex()}) = {conj.value.latex()}\n\\end{{equation*}}"
    _emit(args, spec, result=result, text=text, latex=latex)
    return 0


def cmd_antipode(args):
    spec = _spec(args)
    table = build_algebra(spec)
    tw = _twist(args, table, _load_alpha(args.alpha_matrix, spec.d), _parse_set(args.set))
    g = _generator(args.gen, spec)
    x = EnvElement.generator(table, g)
    value = twisted_antipode(x, tw)
    res = antipode_axiom_check(x, tw)
    check = Check(f"antipode[{tw.r.label()},K={args.order}]",
                  "m(Sa x id)Da = eps 1 with Sa = u S0 u^-1",
                  "pass" if not res else "fail", False,
                  f"axiom residual {'zero' if not res else res.render()} on {g}")
    result = {"generator": str(g), "twist": tw.label(), "order": args.order,
              "value": value.render()}
    text = "\n".join([f"twist: {tw.label()}", f"S({g}) = {value.render()}",
                      checks_text([check])])
    latex = f"\\begin{{equation*}}\nS_{{\\alpha}}({g.latex()}) = {value.latex()}\n\\end{{equation*}}"
    _emit(args, spec, [check], result=result, text=text, latex=latex)
    return 0 if check.ok else 1


def cmd_bracket(args):
    spec = _spec(args)
    table = build_algebra(spec)
    x, y = _generator(args.x, spec), _generator(args.y, spec)
    value = EnvElement(table, 1, {((g,),): c for g, c in table.bracket(x, y).items()})
    result = {"x": str(x), "y": str(y), "value": value.render()}
    text = f"[{x}, {y}] = {value.render()}"
    latex = f"\\begin{{equation*}}\n[{x.latex()}, {y.latex()}] = {value.latex()}\n\\end{{equation*}}"
    note = getattr(table, "notes", None)
    if note and args.format == "text":
        text += "\n" + "\n".join(f"note: {n}" for n in note)
    _emit(args, spec, result=result, text=text, latex=latex)
    return 0


def cmd_nh(args):
    sign = sign_for(args.variant)
    coeffs = NHCoefficients(sign)
    order = max(args.order, 6)
    reports = [flat_limit_check(n, sign, order) for n in range(7)]
    res = coeffs.recurrence_residuals()
    checks = [
        Check(f"nh-recurrence[{args.variant[-1]}]", "f_n' = n f_(n-1), f_0' = sign f_1 / tau^2",
              "pass" if not any(res.values()) else "fail", True, "n = 0..6"),
        Check(f"flat-limit[{args.variant[-1]},order={order}]",
              "f_n(t) = t^n + O(1/tau) as tau -> infinity",
              "pass" if all(r.ok for r in reports) else "fail", False, "n = 0..6"),
    ]
    lines = [f"f{n}(t) = {f.render()}" for n, f in enumerate(coeffs.f)]
    lines += [f"f{r.n}(t) ~ {r.expansion.render()} + O((t/tau)^{r.remainder_order})"
              for r in reports]
    lines.append(checks_text(checks))
    latex = "\n".join(f"\\begin{{equation*}}\nf_{{{n}}}(t) = {f.latex()}\n\\end{{equation*}}"
                      for n, f in enumerate(coeffs.f))
    result = {"sign": "+" if sign > 0 else "-",
              "coefficients": [f.render() for f in coeffs.f],
              "flat_limit": [r.to_json() for r in reports]}
    spec = AlgebraSpec(6, args.dim, args.variant)
    _emit(args, spec, checks, result=result, text="\n".join(lines), latex=latex)
    return 0 if all(c.ok for c in checks) else 1


def cmd_star(args):
    spec = _spec(args)
    table = build_algebra(spec)
    tw = _twist(args, table, _load_alpha(args.alpha_matrix, spec.d), _parse_set(args.set))
    mode = mode_of(spec)
    try:
        f, g = parse_function(args.f, mode), parse_function(args.g, mode)
    except ParseError as exc:
        raise UsageError(str(exc))
    value = star_product(f, g, tw)
    result = {"f": f.render(), "g": g.render(), "twist": tw.label(), "value": value.render()}
    text = f"({f.render()}) * ({g.render()}) = {value.render()}"
    latex = f"\\begin{{equation*}}\n\\left({f.latex()}\\right) \\star \\left({g.latex()}\\right)" \
            f" = {value.latex()}\n\\end{{equation*}}"
    _emit(args, spec, result=result, text=text, latex=latex)
    return 0


# -- argument parsing -------------------------------------------------------------

def _common(p, twist=True):
    p.add_argument("--n", type=int, default=6, help="enlargement N (default 6)")
    p.add_argument("--dim", type=int, default=3, help="spatial dimension d (default 3)")
    p.add_argument("--variant", choices=VARIANTS, default=GALILEI)
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    if twist:
        p.add_argument("--tn", type=int, default=1, help="twist level n")
        p.add_argument("--tm", type=int, default=2, help="twist level m (nm family)")
        p.add_argument("--i", type=int, default=1)
        p.add_argument("--k", type=int, default=2)
        p.add_argument("--l", type=int, default=3)
        p.add_argument("--order", type=int, default=DEFAULT_ORDER,
                       help=f"series truncation order K (default {DEFAULT_ORDER})")
        p.add_argument("--alpha-matrix", metavar="FILE",
                       help="JSON d x d antisymmetric matrix of parameter expressions")
        p.add_argument("--set", action="append", metavar="NAME=P/Q",
                       help="substitute a rational value for a parameter")


def build_parser():
    parser = argparse.ArgumentParser(prog="nga",
                                     description="Twisted N-enlarged Galilei Hopf algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verification suite")
    _common(p)
    p.add_argument("--twist", choices=("nm", "single"), default=None,
                   help="restrict to one twist family (default both)")
    p.add_argument("--rep-degree", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    for name, func, hlp in (("spacetime", cmd_spacetime, "quantum space-time table"),
                            ("coproduct", cmd_coproduct, "twisted coproduct of a generator"),
                            ("antipode", cmd_antipode, "twisted antipode of a generator")):
        p = sub.add_parser(name, help=hlp)
        _common(p)
        p.add_argument("--twist", choices=("nm", "single"), default="nm")
        if name != "spacetime":
            p.add_argument("--gen", required=True, help="generator, e.g. G:2:0, H, M:1:2")
        p.set_defaults(func=func)

    p = sub.add_parser("star", help="star product of two functions")
    _common(p)
    p.add_argument("--twist", choices=("nm", "single"), default="nm")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("bracket", help="Lie bracket of two generators")
    _common(p, twist=False)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("nh", help="Newton-Hooke coefficient functions")
    p.add_argument("--variant", choices=("nh+", "nh-"), default="nh+")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p.set_defaults(func=cmd_nh)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"nga: error: {exc}", file=sys.stderr)
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
