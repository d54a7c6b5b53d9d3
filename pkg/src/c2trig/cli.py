"""Command line entry point: ``c2trig <subcommand> [options]``."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import identities, operators, orthogonality, recurrences, tables, weyl
from .trig import Family, Label, eval_trig, is_dominant

DEFAULT_SEED = 20240101


@dataclass
class Case:
    id: str
    passed: bool
    residual: float


def _families(name):
    return list(Family) if name in (None, "all") else [Family.parse(name)]


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(suite: str, cases: list[Case], args) -> int:
    failed = [c for c in cases if not c.passed]
    if args.json:
        doc = {"suite": suite,
               "cases": [{"id": c.id, "pass": c.passed, "residual": c.residual} for c in cases]}
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.id:40s} {c.residual:.3e}" for c in cases]
        lines.append(f"{suite}: {len(cases) - len(failed)}/{len(cases)} passed")
        _emit("\n".join(lines) + "\n", args.out)
    if failed:
        c = failed[0]
        print(f"first failure: {c.id} residual {c.residual:.3e}", file=sys.stderr)
        return 1
    return 0


# subcommands ------------------------------------------------------------------

def cmd_gen_table(args) -> int:
    family = Family.parse(args.family)
    text = tables.render_table(family, args.cls, args.max_lambda, args.format)
    _emit(text, args.out)
    return 0


def _label(args) -> Label:
    lab = Label(Family.parse(args.family_pos), args.lam, args.mu)
    if not lab.is_dominant:
        raise ValueError(f"{lab} is not a dominant label")
    return lab


def cmd_eval(args) -> int:
    lab = _label(args)
    print(repr(float(eval_trig(lab, args.x, args.y))))
    return 0


def cmd_sample_grid(args) -> int:
    lab = _label(args)
    if args.n < 2:
        raise ValueError("grid size must be at least 2")
    t = np.linspace(0.0, 1.0, args.n)
    u, v = np.meshgrid(t, t, indexing="ij")
    x, y = u.ravel(), (u * v).ravel()
    vals = eval_trig(lab, x, y)
    lines = ["x,y,value"] + [f"{a!r},{b!r},{c!r}" for a, b, c in zip(x.tolist(), y.tolist(), vals.tolist())]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_export_json(args) -> int:
    family = Family.parse(args.family)
    if args.lam is not None:
        mu = args.mu if args.mu is not None else 0
        doc = tables.poly_record(family, args.lam, mu)
    else:
        doc = [tables.poly_record(family, l, m)
               for l in range(args.max_lambda + 1) for m in recurrences.row_labels(family, l)]
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def cmd_check_eigen(args) -> int:
    cases = []
    for fam in _families(args.family):
        for lam in range(args.max_lambda + 1):
            for mu in recurrences.row_labels(fam, lam):
                r = operators.check_eigen(fam, lam, mu)
                resid = float(max(
                    (abs(c) for c in list(r.delta_residual.terms.values()) + list(r.gamma_residual.terms.values())),
                    default=0,
                ))
                cases.append(Case(f"{fam.value}({lam},{mu})", r.ok, resid))
    return _report("check-eigen", cases, args)


def cmd_check_ortho(args) -> int:
    rule = orthogonality.mapped_gauss_rule(args.order)
    tol = args.tol if args.tol is not None else 1e-9
    cases = []
    for fam in _families(args.family):
        labels, gram = orthogonality.gram_matrix(fam, args.max_lambda, rule)
        expected = np.diag([orthogonality.expected_norm(l) for l in labels])
        err = np.abs(gram - expected)
        for i, a in enumerate(labels):
            for j, b in enumerate(labels):
                if j < i:
                    continue
                cases.append(Case(f"<{a},{b}>", bool(err[i, j] < tol), float(err[i, j])))
    return _report("check-ortho", cases, args)


def cmd_check_identities(args) -> int:
    rng = np.random.default_rng(args.seed)
    tol = args.tol if args.tol is not None else 1e-11
    pts = rng.uniform(0.0, 2.0, (args.points, 2))
    cases = []
    for ident in identities.catalog():
        worst = 0.0
        for _ in range(args.tuples):
            p = identities.random_params(ident, rng)
            r = identities.verify_identity(ident.id, p, pts, tol, use_correction=args.corrected)
            worst = max(worst, r.residual)
        cases.append(Case(ident.id, worst < tol, worst))
    return _report("check-identities", cases, args)


def cmd_check_orbit(args) -> int:
    rng = np.random.default_rng(args.seed)
    tol = args.tol if args.tol is not None else 1e-10
    x = rng.uniform(0.0, 1.0, args.points)
    y = rng.uniform(0.0, 1.0, args.points)
    cases = []
    group = weyl.weyl_group()
    cases.append(Case("group-order", len(group) == 8, float(abs(len(group) - 8))))
    for kind, (fam, scale) in weyl.ORBIT_TO_TRIG.items():
        for lam in range(args.max_lambda + 1):
            for mu in range(lam + 1):
                if not is_dominant(fam, lam, mu):
                    continue
                v, theta = weyl.substitute(lam, mu, x, y)
                got = weyl.eval_orbit_fn(kind, v, theta)
                want = scale * eval_trig(Label(fam, lam, mu), x, y)
                err = float(np.max(np.abs(got - want)))
                cases.append(Case(f"{kind.value}({lam},{mu})", err < tol, err))
    return _report("check-orbit", cases, args)


# parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="c2trig", description="C2 trigonometric functions and their polynomials")
    sub = p.add_subparsers(dest="command", required=True)
    fam_choices = ["cplus", "cminus", "splus", "sminus"]

    def common(sp, family=True, family_all=False, max_lambda=None, order=False, tol=False, seed=False):
        if family:
            sp.add_argument("--family", choices=fam_choices + (["all"] if family_all else []),
                            default="all" if family_all else None, required=not family_all)
        if max_lambda is not None:
            sp.add_argument("--max-lambda", type=int, default=max_lambda)
        if order:
            sp.add_argument("--order", type=int, default=64)
        if tol:
            sp.add_argument("--tol", type=float, default=None)
        if seed:
            sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--out", default=None)
        sp.add_argument("--json", action="store_true", help="machine-readable report")

    s = sub.add_parser("gen-table", help="coefficient table of one family and class")
    common(s, max_lambda=tables.DEFAULT_MAX_LAMBDA)
    s.add_argument("--class", dest="cls", type=int, choices=[0, 1], required=True)
    s.add_argument("--format", choices=["csv", "json", "markdown"], default="csv")
    s.set_defaults(func=cmd_gen_table)

    for name, helptext, fn in (("eval", "evaluate one function at a point", cmd_eval),
                               ("sample-grid", "n x n grid of values over F", cmd_sample_grid)):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("family_pos", metavar="FAMILY")
        s.add_argument("lam", type=int)
        s.add_argument("mu", type=int)
        if name == "eval":
            s.add_argument("x", type=float)
            s.add_argument("y", type=float)
        else:
            s.add_argument("n", type=int)
            s.add_argument("--out", default=None)
        s.set_defaults(func=fn)

    s = sub.add_parser("export-json", help="polynomials as JSON records")
    common(s, max_lambda=tables.DEFAULT_MAX_LAMBDA)
    s.add_argument("--lambda", dest="lam", type=int, default=None)
    s.add_argument("--mu", type=int, default=None)
    s.set_defaults(func=cmd_export_json)

    s = sub.add_parser("check-eigen", help="exact eigen-relations of both operators")
    common(s, family_all=True, max_lambda=10)
    s.set_defaults(func=cmd_check_eigen)

    s = sub.add_parser("check-ortho", help="continuous orthogonality over F")
    common(s, family_all=True, max_lambda=6, order=True, tol=True)
    s.set_defaults(func=cmd_check_ortho)

    s = sub.add_parser("check-identities", help="pointwise check of the identity catalog")
    common(s, family=False, tol=True, seed=True)
    s.add_argument("--points", type=int, default=100)
    s.add_argument("--tuples", type=int, default=20)
    s.add_argument("--corrected", action="store_true", help="use corrected right sides where recorded")
    s.set_defaults(func=cmd_check_identities)

    s = sub.add_parser("check-orbit", help="orbit functions against the trig families")
    common(s, family=False, max_lambda=6, tol=True, seed=True)
    s.add_argument("--points", type=int, default=100)
    s.set_defaults(func=cmd_check_orbit)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
