"""The verification suite: every structural identity as a named check."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .algebra import GALILEI, NH_MAX_LEVEL, AlgebraSpec, build_algebra, jacobi_check
from .diffrep import rep_consistency_check
from .enveloping import EnvElement
from .hopf import (Twist, antipode_axiom_check, classical_axioms_check, coassociativity_check,
                   cocycle_check, make_nm_r, make_single_r, normalization_check,
                   schouten_check, twisted_coproduct)
from .newton_hooke import NHCoefficients, flat_limit_check
from .scalars import ScalarSum
from .star import spacetime_table

EQ = {
    "jacobi": "[X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]] = 0",
    "rep": "[rho(X), rho(Y)] = rho([X,Y]) on functions f(t, x)",
    "classical": "(eps x id)D0 = id, m(S0 x id)D0 = eps 1",
    "cybe": "[r12, r13 + r23] + [r13, r23] = 0",
    "normalization": "(eps x 1)F = (1 x eps)F = 1",
    "cocycle": "F12 (D0 x 1)F = F23 (1 x D0)F",
    "coassociativity": "(Da x id)Da = (id x Da)Da with Da = F D0 F^-1",
    "antipode": "m(Sa x id)Da = eps 1 with Sa = u S0 u^-1",
    "nh-recurrence": "f_n' = n f_(n-1), f_0' = sign f_1 / tau^2",
    "flat-limit": "f_n(t) = t^n + O(1/tau) as tau -> infinity",
}


@dataclass
class Check:
    name: str
    paper_eq: str
    status: str
    terminated: object = None
    detail: str = ""

    @property
    def ok(self):
        return self.status == "pass"

    def to_json(self):
        return {"name": self.name, "paper_eq": self.paper_eq, "status": self.status,
                "terminated": self.terminated, "detail": self.detail}


def _status(ok):
    return "pass" if ok else "fail"


@dataclass
class VerifyOptions:
    N: int = 6
    d: int = 3
    variant: str = GALILEI
    order: int = 8
    families: tuple = ("nm", "single")
    tn: int = 1
    tm: int = 2
    i: int = 1
    k: int = 2
    l: int = 3
    alpha: object = None
    rep_degree: int = 6
    values: dict = field(default_factory=dict)

    @property
    def spec(self):
        return AlgebraSpec(self.N, self.d, self.variant)


def principal_alpha(d, name="alpha_1_2"):
    """Antisymmetric matrix with ``alpha^12 = -alpha^21 = name`` and zeros elsewhere."""
    a = ScalarSum.param(name)
    mat = [[ScalarSum.zero() for _ in range(d)] for _ in range(d)]
    mat[0][1], mat[1][0] = a, -a
    return mat


_TABLES = {}


def _table(spec):
    if spec not in _TABLES:
        _TABLES[spec] = build_algebra(spec)
    return _TABLES[spec]


def _r(spec, kind, n, m=None, i=1, k=2, l=3, alpha=None, values=None):
    table = _table(spec)
    if kind == "nm":
        r = make_nm_r(table, n, m, alpha)
    else:
        r = make_single_r(table, n, i, k, l)
    return r.substitute(values) if values else r


# -- individual checks (module level so they can run in worker processes) ----

def check_jacobi(spec):
    bad = jacobi_check(_table(spec))
    n = len(_table(spec).generators)
    return Check(f"jacobi[{spec.variant},N={spec.N},d={spec.d}]", EQ["jacobi"],
                 _status(not bad), True,
                 f"{len(bad)} nonzero residuals over all triples of {n} generators")


def check_rep(spec, degree):
    bad = rep_consistency_check(_table(spec), degree)
    return Check(f"rep-consistency[{spec.variant},deg<={degree}]", EQ["rep"],
                 _status(not bad), True,
                 f"{len(bad)} failing (X, Y, monomial) cases")


def check_classical(spec):
    bad = classical_axioms_check(_table(spec))
    detail = "counit and antipode axioms hold on every generator" if not bad else \
        "failures: " + ", ".join(f"{g}:{what}" for g, what in bad)
    return Check("classical-hopf-axioms", EQ["classical"], _status(not bad), True, detail)


def check_cybe(spec, kind, n, m=None, i=1, k=2, l=3, alpha=None):
    r = _r(spec, kind, n, m, i, k, l, alpha)
    res = schouten_check(r)
    return Check(f"cybe[{r.label()}]", EQ["cybe"], _status(not res), True,
                 "residual zero" if not res else f"residual {res.render()}")


def check_twist(spec, what, order, kind, n, m=None, i=1, k=2, l=3, alpha=None, values=None):
    r = _r(spec, kind, n, m, i, k, l, alpha, values)
    tw = Twist(r, order)
    name = f"{what}[{r.label()},K={order}]"
    if what == "normalization":
        ok = normalization_check(tw)
        return Check(name, EQ[what], _status(ok), True, "exact")
    if what == "cocycle":
        res = cocycle_check(tw)
        return Check(name, EQ[what], _status(not res), False,
                     f"residual {'zero' if not res else 'nonzero'} through order {order}")
    table = _table(spec)
    failed, open_series = [], []
    for g in table.generators:
        x = EnvElement.generator(table, g)
        if not twisted_coproduct(x, tw).terminated:
            open_series.append(str(g))
        res = coassociativity_check(x, tw) if what == "coassociativity" \
            else antipode_axiom_check(x, tw)
        if res:
            failed.append(str(g))
    terminated = not open_series if what == "coassociativity" else False
    detail = f"residual zero through order {order} on all {len(table.generators)} generators"
    if failed:
        detail = "nonzero residual for " + ", ".join(failed)
    if open_series:
        detail += "; truncated coproducts: " + ", ".join(open_series)
    return Check(name, EQ[what], _status(not failed), terminated, detail)


def check_spacetime(spec, kind, n, m=None, i=1, k=2, l=3, alpha=None):
    r = _r(spec, kind, n, m, i, k, l, alpha)
    tab = spacetime_table(Twist(r))
    bad = [f"[{e.pair[0]},{e.pair[1]}]" for e in tab.entries if not e.matches]
    formula = tab.entries[-1].formula if tab.entries else ""
    return Check(f"spacetime[{spec.variant},{r.label()}]", formula, _status(not bad), True,
                 "all entries match the closed form" if not bad
                 else "mismatch in " + ", ".join(bad))


def check_nh_recurrence(sign):
    res = NHCoefficients(sign).recurrence_residuals()
    bad = [n for n, v in sorted(res.items()) if v]
    s = "+" if sign > 0 else "-"
    return Check(f"nh-recurrence[{s}]", EQ["nh-recurrence"], _status(not bad), True,
                 "exact for n = 0..6" if not bad else f"nonzero residual for n = {bad}")


def check_flat_limit(sign, order):
    reports = [flat_limit_check(n, sign, max(order, n)) for n in range(NH_MAX_LEVEL + 1)]
    bad = [r.n for r in reports if not r.ok]
    s = "+" if sign > 0 else "-"
    return Check(f"flat-limit[{s},order={max(order, NH_MAX_LEVEL)}]", EQ["flat-limit"],
                 _status(not bad), False,
                 "tau^0 part equals t^n for n = 0..6" if not bad else f"failing n = {bad}")


# -- planning and execution --------------------------------------------------

def plan(opts):
    """Ordered list of ``(function, args)`` tasks for the requested suite."""
    spec = opts.spec
    tasks = [(check_jacobi, (spec,)),
             (check_rep, (spec, opts.rep_degree)),
             (check_classical, (spec,))]
    single_ok = spec.d >= 3 and opts.i not in (opts.k, opts.l)
    if "nm" in opts.families:
        for n in range(spec.N + 1):
            for m in range(n, spec.N + 1):
                tasks.append((check_cybe, (spec, "nm", n, m, 1, 2, 3, opts.alpha)))
    if "single" in opts.families and single_ok:
        for n in range(spec.N + 1):
            tasks.append((check_cybe, (spec, "single", n, None, opts.i, opts.k, opts.l)))
    series_alpha = opts.alpha if opts.alpha is not None else principal_alpha(spec.d)
    twists = []
    if "nm" in opts.families:
        twists.append(("nm", min(opts.tn, spec.N), min(opts.tm, spec.N), series_alpha))
    if "single" in opts.families and single_ok:
        twists.append(("single", min(opts.tn, spec.N), None, None))
    for kind, n, m, alpha in twists:
        for what in ("normalization", "cocycle", "coassociativity", "antipode"):
            tasks.append((check_twist, (spec, what, opts.order, kind, n, m,
                                        opts.i, opts.k, opts.l, alpha, opts.values)))
    if "nm" in opts.families:
        for n in range(spec.N + 1):
            for m in range(n, spec.N + 1):
                tasks.append((check_spacetime, (spec, "nm", n, m, 1, 2, 3, opts.alpha)))
    if "single" in opts.families and single_ok:
        for n in range(spec.N + 1):
            tasks.append((check_spacetime, (spec, "single", n, None, opts.i, opts.k, opts.l)))
    for sign in (1, -1):
        tasks.append((check_nh_recurrence, (sign,)))
        tasks.append((check_flat_limit, (sign, opts.order)))
    return tasks


def _run(task):
    fn, args = task
    return fn(*args)


def run_suite(opts, jobs=1):
    """Run every planned check; results keep the planned order."""
    tasks = plan(opts)
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run, tasks))
    return [_run(t) for t in tasks]
