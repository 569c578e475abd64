"""Command-line front end.

Four commands:

    eval EXPR        print the exact closed form of an integrand
    verify EXPR      closed form vs quadrature, with pass/fail verdict
    catalog          run the nine-formula table catalog over a mu grid
    weight           weight-homogeneity table for integral e^-x (ln x)^n dx

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or parse
error.  JSON reports are deterministic: fixed field order, floats rounded
to 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .catalog import DEFAULT_MU_GRID, run_catalog
from .evaluator import eval_In, eval_general
from .oracle import compute_constants, quadrature
from .parser import (
    IntegrandSyntaxError,
    UnsupportedIntegrandError,
    ast_to_text,
    parse_integrand,
    to_integral_spec,
)
from .ring import Grade, MissingBindingError, grade


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-10
    mu_grid: tuple = DEFAULT_MU_GRID
    max_n: int = 4
    output: str = "text"  # "text" | "json"
    zeta_max: int = 12
    paper_style: bool = False

    def __post_init__(self) -> None:
        if self.tolerance < 1e-13:
            raise ValueError("tolerance must be at least 1e-13")
        if not self.mu_grid:
            raise ValueError("the mu grid must be nonempty")
        if any(m <= 0 for m in self.mu_grid):
            raise ValueError("mu values must be positive")
        if self.max_n < 0:
            raise ValueError("max-n must be nonnegative")
        if self.zeta_max < 2:
            raise ValueError("zeta-max must be at least 2")


def _round12(x: float) -> float:
    # Fixed significant digits keep JSON reports byte-identical across runs.
    return float(f"{x:.12e}")


def _emit_json(doc) -> None:
    print(json.dumps(doc, indent=2))


def _print_error(message: str, config: RunConfig, source: Optional[str] = None,
                 position: Optional[int] = None) -> None:
    if config.output == "json":
        doc = {"error": message}
        if position is not None:
            doc["position"] = position
        _emit_json(doc)
        return
    print(f"error: {message}", file=sys.stderr)
    if source is not None and position is not None:
        print(f"    {source}", file=sys.stderr)
        print(f"    {' ' * position}^", file=sys.stderr)


def _spec_summary(spec) -> dict:
    pf = " + ".join(
        (f"{t.coeff}" if t.power == 0 else f"{t.coeff}*x^{t.power}")
        + (f"*mu^{t.mu_power}" if t.mu_power else "")
        for t in spec.prefactor
    )
    return {
        "prefactor": pf,
        "s": str(spec.s.value),
        "log_power": spec.log_power,
        "mu": None if spec.mu is None else str(spec.mu),
    }


def cmd_eval(expr: str, config: RunConfig) -> int:
    ast = parse_integrand(expr)
    spec = to_integral_spec(ast)
    closed = eval_general(spec)
    doc = {
        "integrand": ast_to_text(ast),
        "spec": _spec_summary(spec),
        "closed_form": closed.render(paper_style=config.paper_style),
        "closed_form_json": closed.to_json(),
    }
    if spec.mu == 1:
        doc["at_mu_1"] = closed.at_mu_one().render(paper_style=config.paper_style)
    if config.output == "json":
        _emit_json(doc)
        return 0
    print(f"integrand   : {doc['integrand']}")
    s = doc["spec"]
    print(f"class       : p(x) = {s['prefactor']}, s = {s['s']}, n = {s['log_power']}, mu = {s['mu'] or 'symbolic'}")
    print(f"closed form : {doc['closed_form']}")
    if "at_mu_1" in doc:
        print(f"at mu = 1   : {doc['at_mu_1']}")
    print(f"json        : {json.dumps(doc['closed_form_json'])}")
    return 0


def cmd_verify(expr: str, config: RunConfig) -> int:
    ast = parse_integrand(expr)
    spec = to_integral_spec(ast)
    closed = eval_general(spec)
    table = compute_constants(config.zeta_max)
    mu = float(spec.mu)
    closed_value = closed.evaluate(mu, table.bindings())
    quad = quadrature(spec, mu, rel_tol=config.tolerance)
    rel_err = abs(closed_value - quad.value) / max(abs(closed_value), 1e-300)
    passed = quad.converged and rel_err <= 10.0 * config.tolerance
    if spec.mu == 1:
        shown_form = closed.at_mu_one().render(paper_style=config.paper_style)
    else:
        shown_form = closed.render(paper_style=config.paper_style)
    doc = {
        "integrand": ast_to_text(ast),
        "closed_form": shown_form,
        "mu": _round12(mu),
        "closed_value": _round12(closed_value),
        "quadrature_value": _round12(quad.value),
        "quadrature_nodes": quad.nodes_used,
        "quadrature_converged": quad.converged,
        "rel_err": _round12(rel_err),
        "status": "pass" if passed else "fail",
    }
    if config.output == "json":
        _emit_json(doc)
    else:
        print(f"integrand   : {doc['integrand']}")
        print(f"closed form : {doc['closed_form']}")
        print(f"closed value: {closed_value:.15g}")
        print(f"quadrature  : {quad.value:.15g}  "
              f"(nodes={quad.nodes_used}, converged={quad.converged})")
        print(f"rel err     : {rel_err:.3e}")
        print("PASS" if passed else "FAIL")
    return 0 if passed else 1


def cmd_catalog(config: RunConfig) -> int:
    table = compute_constants(config.zeta_max)
    checks = run_catalog(
        table=table,
        mu_grid=config.mu_grid,
        max_n=config.max_n,
        quad_tol=config.tolerance,
    )
    all_pass = all(c.status == "pass" for c in checks)
    if config.output == "json":
        report = []
        for c in checks:
            d = c.report_dict()
            d["numeric_rel_err"] = _round12(d["numeric_rel_err"])
            report.append(d)
        _emit_json(report)
        return 0 if all_pass else 1
    if config.paper_style:
        from .catalog import catalog as _entries

        for entry in _entries():
            print(f"{entry.id:<9} {entry.integrand}  =  {entry.closed}")
        print()
    for c in checks:
        params = " ".join(f"{k}={v}" for k, v in c.params.items())
        sym = "ok " if c.symbolic_equal else "BAD"
        print(
            f"{c.id:<9} {params:<8} symbolic={sym} rel_err={c.numeric_rel_err:.2e} "
            f"{c.status.upper()}"
        )
    n_pass = sum(1 for c in checks if c.status == "pass")
    print(f"{n_pass}/{len(checks)} catalog checks passed "
          f"(mu grid: {', '.join(str(m) for m in config.mu_grid)})")
    return 0 if all_pass else 1


def cmd_weight(config: RunConfig) -> int:
    rows = []
    all_pass = True
    for n in range(config.max_n + 1):
        g = grade(eval_In(n))
        expected = Grade("homogeneous", Fraction(n))
        ok = g == expected
        all_pass = all_pass and ok
        rows.append({"n": n, "grade": str(g), "status": "pass" if ok else "fail"})
    if config.output == "json":
        _emit_json(rows)
        return 0 if all_pass else 1
    for row in rows:
        print(f"n = {row['n']:<3} {row['grade']:<28} {row['status'].upper()}")
    print("all weight checks passed" if all_pass else "weight check FAILED")
    return 0 if all_pass else 1


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="explogint",
        description="Exact closed forms for integrals of p(x) x^(s-1) e^(-mu x) (ln x)^n, "
        "with independent numeric verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, with_mu: bool = False) -> None:
        p.add_argument("--tol", type=float, default=1e-10,
                       help="quadrature tolerance (default 1e-10); verification passes at 10*tol")
        if with_mu:
            p.add_argument("--mu", type=float, action="append", default=None,
                           help="mu grid value (repeatable; default 0.5 1 2 10)")
        p.add_argument("--max-n", type=int, default=4, help="largest log power / x power")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--zeta-max", type=int, default=12,
                       help="largest zeta index in the numeric constants table")
        p.add_argument("--paper-style", action="store_true",
                       help="render constants in delta / pi^2 table style")

    p_eval = sub.add_parser("eval", help="print the exact closed form of an integrand")
    p_eval.add_argument("expr")
    add_common(p_eval)

    p_verify = sub.add_parser("verify", help="check a closed form against quadrature")
    p_verify.add_argument("expr")
    add_common(p_verify)

    p_catalog = sub.add_parser("catalog", help="verify the nine table formulas")
    add_common(p_catalog, with_mu=True)

    p_weight = sub.add_parser("weight", help="weight homogeneity of Gamma^(n)(1)")
    add_common(p_weight)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            tolerance=args.tol,
            mu_grid=tuple(args.mu) if getattr(args, "mu", None) else DEFAULT_MU_GRID,
            max_n=args.max_n,
            output="json" if args.json else "text",
            zeta_max=args.zeta_max,
            paper_style=args.paper_style,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        if args.command == "eval":
            return cmd_eval(args.expr, config)
        if args.command == "verify":
            return cmd_verify(args.expr, config)
        if args.command == "catalog":
            return cmd_catalog(config)
        if args.command == "weight":
            return cmd_weight(config)
        raise AssertionError(f"unknown command {args.command!r}")  # pragma: no cover
    except IntegrandSyntaxError as exc:
        _print_error(str(exc), config, source=getattr(args, "expr", None),
                     position=exc.position)
        return 2
    except UnsupportedIntegrandError as exc:
        _print_error(str(exc), config, source=getattr(args, "expr", None),
                     position=exc.position)
        return 2
    except MissingBindingError as exc:
        _print_error(f"{exc}; increase --zeta-max", config)
        return 2
    except ValueError as exc:
        _print_error(str(exc), config)
        return 2


def console_main() -> None:  # pragma: no cover - thin wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    console_main()
