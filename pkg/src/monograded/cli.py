"""Command-line front end.

JSON is the canonical output; csv and table renderings are derived from the
same document.  Every document embeds the resolved run configuration and a
schema version, so identical configurations produce byte-identical output.

Exit codes: 0 success, 1 computation failure, 2 usage error, 3 reproduction
mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds, cohomology, filtration, hilbert, semigroup
from .errors import ComputationError
from .monomials import MonomialIdeal, parse_ideal

SCHEMA = "monograded/1"
SEED_ENV = "MONOGRADED_SEED"


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "0"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monograded",
        description="Exact invariants of monomial quotients and semigroup rings.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, ring=True, seed=False):
        if ring:
            p.add_argument("--ring", help="comma-separated variable names, e.g. x,y")
            p.add_argument("--ideal", help="generators, e.g. 'x^3, x^2*y^4'")
        if seed:
            p.add_argument("--seed", type=int, default=None,
                           help=f"RNG seed (default from ${SEED_ENV} or 0)")
        p.add_argument("--format", choices=("json", "csv", "table"), default="json")

    p = sub.add_parser("hilbert", help="Hilbert series, dimension, multiplicity")
    add_common(p)
    p.add_argument("--window", help="n-range lo:hi for the H(n)/P(n) table")

    p = sub.add_parser("cohomology", help="graded local cohomology table")
    add_common(p)
    p.add_argument("--window", help="degree range lo:hi (default: the support box)")

    p = sub.add_parser("reduction", help="filtration report: e, Ratliff-Rush, mu, r")
    add_common(p, seed=True)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--coeff-bound", type=int, default=100)
    p.add_argument("--n-bound", type=int, default=None)
    p.add_argument("--max-truncation", type=int, default=None)
    p.add_argument("--powers", type=int, default=4, help="table depth for powers of I")

    p = sub.add_parser("verify", help="check the a-invariant and reduction-number bounds on instances or corpora")
    add_common(p, seed=False)
    p.add_argument("--semigroup", help="semigroup generators, e.g. 4,5,6,7")
    p.add_argument("--bound", default="all",
                   choices=("thm2.1", "eg-lower", "prop3.1", "prop3.3", "prop3.4", "all"))
    p.add_argument("--corpus-seed", type=int, default=None)
    p.add_argument("--count", type=int, default=25)
    p.add_argument("--vars", type=int, default=2, help="variables for monomial corpora")
    p.add_argument("--degree-bound", type=int, default=6)

    p = sub.add_parser("reproduce", help="re-run a worked example and compare values")
    p.add_argument("example", choices=("example-2.2", "example-3.2"))
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    return parser


def parse_window(text: str | None, default: tuple[int, int]) -> tuple[int, int]:
    if not text:
        return default
    lo, hi = text.split(":")
    return int(lo), int(hi)


def require_ring_ideal(args) -> MonomialIdeal:
    if not args.ring or args.ideal is None:
        raise ComputationError("this subcommand needs --ring and --ideal")
    names = tuple(s.strip() for s in args.ring.split(",") if s.strip())
    if not names:
        raise ComputationError("the ring needs at least one variable")
    return parse_ideal(args.ideal, names)


# -- subcommand handlers --------------------------------------------------


def run_hilbert(args) -> dict:
    ideal = require_ring_ideal(args)
    series = hilbert.hilbert_series(ideal)
    result: dict = {
        "ring": list(ideal.names),
        "ideal": ideal.format(),
        "numerator": series.numerator,
        "zero_ring": series.is_zero_ring,
    }
    if not series.is_zero_ring:
        data = hilbert.hilbert_data_from_series(series)
        result.update(
            reduced_numerator=series.reduced_numerator,
            dim=data.dim,
            multiplicity=data.multiplicity,
            codim=ideal.k - data.dim,
        )
        if args.window:
            lo, hi = parse_window(args.window, (0, 0))
            result["table"] = [
                {
                    "n": n,
                    "H": hilbert.hilbert_function(ideal, n),
                    "P": data.polynomial_value(n),
                }
                for n in range(lo, hi + 1)
            ]
    return result


def run_cohomology(args) -> dict:
    ideal = require_ring_ideal(args)
    table = cohomology.cohomology_table(ideal)
    rho_sum = sum(table.rho)
    lo, hi = parse_window(args.window, (-rho_sum, rho_sum))
    data = hilbert.hilbert_data(ideal)
    rows = []
    for i in range(table.k + 1):
        for n in range(lo, hi + 1):
            value = table.h(i, n)
            if value:
                rows.append([i, n, value])
    return {
        "ring": list(ideal.names),
        "ideal": ideal.format(),
        "window": [lo, hi],
        "h": rows,
        "a": table.a_invariant,
        "depth": table.depth,
        "eg": table.eg_invariant,
        "dim": table.dim,
        "multiplicity": data.multiplicity,
    }


def run_reduction(args) -> dict:
    ideal = require_ring_ideal(args)
    seed = args.seed if args.seed is not None else default_seed()
    report = filtration.filtration_report(
        ideal,
        trials=args.trials,
        seed=seed,
        coeff_bound=args.coeff_bound,
        n_bound=args.n_bound,
        powers=args.powers,
        max_truncation=args.max_truncation,
    )
    return report.to_dict()


def run_verify(args) -> dict:
    seed = args.corpus_seed if args.corpus_seed is not None else default_seed()
    if args.ideal is not None and args.semigroup:
        S = semigroup.NumericalSemigroup(
            int(g) for g in args.semigroup.split(",") if g.strip()
        )
        E = semigroup.SemigroupIdeal(S, tuple(int(g) for g in args.ideal.split(",")))
        reports = [bounds.verify_prop_3_1(E, "cli-instance")]
        return {
            "reports": [r.to_dict() for r in reports],
            "aggregate": bounds.aggregate(reports),
        }
    if args.ideal is not None:
        ideal = require_ring_ideal(args)
        reports = [bounds.verify_main_bound(ideal, "cli-instance"),
                   bounds.verify_eg_inequality(ideal, "cli-instance")]
        wants = (
            lambda name: args.bound in ("all", name)
        )
        if ideal.is_m_primary():
            if ideal.k == 2 and wants("prop3.3"):
                reports.append(bounds.verify_prop_3_3(ideal, "cli-instance", seed=seed))
            if ideal.k >= 3 and wants("prop3.4"):
                reports.append(bounds.verify_prop_3_4(ideal, "cli-instance", seed=seed))
        if args.bound != "all":
            reports = [r for r in reports if r.bound == args.bound]
        return {
            "reports": [r.to_dict() for r in reports],
            "aggregate": bounds.aggregate(reports),
        }
    names = (
        ["thm2.1", "eg-lower", "prop3.1", "prop3.3", "prop3.4"]
        if args.bound == "all"
        else [args.bound]
    )
    out: dict = {"corpora": {}}
    all_reports = []
    for name in names:
        reports, agg = bounds.run_corpus(
            name, seed=seed, count=args.count, k=args.vars, deg_bound=args.degree_bound
        )
        all_reports.extend(reports)
        out["corpora"][name] = {
            "reports": [r.to_dict() for r in reports],
            "aggregate": agg,
        }
    out["aggregate"] = bounds.aggregate(all_reports)
    return out


# -- reproduction of the two worked examples --------------------------------


def reproduce_example_22() -> tuple[dict, list[str]]:
    mismatches: list[str] = []

    def expect(name: str, got, wanted):
        if got != wanted:
            mismatches.append(f"{name}: got {got!r}, expected {wanted!r}")
        return got

    plane = ("x", "y")
    ideal = parse_ideal("x^3, x^2*y^4, x*y^5, y^7", plane)
    mu_table = [filtration.mu(ideal, n) for n in range(1, 7)]
    expect("mu table", mu_table, [3 * n + 1 for n in range(1, 7)])
    fiber = filtration.fiber_cone_series(ideal)
    expect("fiber numerator", fiber.reduced_numerator, [1, 2])
    expect("fiber dim", fiber.dim, 2)

    names4 = ("a", "b", "c", "d")
    n_ideal = parse_ideal("b*d, b*c, b^2, c^3", names4)
    j_ideal = parse_ideal("b, c^3", names4)
    k_ideal = parse_ideal("c, d, b^2", names4)
    intersection_ok = j_ideal.intersection(k_ideal) == n_ideal
    expect("intersection (b,c^3) cap (c,d,b^2)", intersection_ok, True)

    series = hilbert.hilbert_series(n_ideal)
    expect("reduced numerator", series.reduced_numerator, [1, 2])
    expect("dim", series.dim, 2)
    expect("multiplicity", series.multiplicity, 3)

    table = cohomology.cohomology_table(n_ideal)
    expect("depth", table.depth, 1)
    a_value = expect("a-invariant", table.a_invariant, 0)
    h1_0 = expect("h^1 at degree 0", table.h(1, 0), 1)
    eg = expect("EG", table.eg_invariant, 1)

    aux = {
        "R/J": cohomology.a_invariant(j_ideal),
        "R/K": cohomology.a_invariant(k_ideal),
        "R/(J+K)": cohomology.a_invariant(j_ideal + k_ideal),
    }
    expect("aux a-invariants", aux, {"R/J": 0, "R/K": 0, "R/(J+K)": -1})

    bound = bounds.verify_main_bound(n_ideal, "example-2.2")
    expect("main bound status", bound.status, "sharp")

    result = {
        "ideal": ideal.format(),
        "fiber_presentation": n_ideal.format(),
        "mu": mu_table,
        "fiber_reduced_numerator": fiber.reduced_numerator,
        "hilbert_reduced_numerator": series.reduced_numerator,
        "dim": series.dim,
        "e": series.multiplicity,
        "depth": table.depth,
        "a": a_value,
        "h1_0": h1_0,
        "eg": eg,
        "aux_a_invariants": aux,
        "intersection_matches": intersection_ok,
        "bound": bound.to_dict(),
        "sharp": bound.status == "sharp",
    }
    return result, mismatches


def reproduce_example_32() -> tuple[dict, list[str]]:
    mismatches: list[str] = []

    def expect(name: str, got, wanted):
        if got != wanted:
            mismatches.append(f"{name}: got {got!r}, expected {wanted!r}")
        return got

    S = semigroup.NumericalSemigroup((4, 5, 6, 7))
    ideal = semigroup.SemigroupIdeal(S, (4, 5, 6))
    maximal = semigroup.SemigroupIdeal(S, (4, 5, 6, 7))
    i2 = semigroup.ideal_power_sg(ideal, 2)
    i2_eq_m2 = expect("I^2 = m^2", i2 == semigroup.ideal_power_sg(maximal, 2), True)
    rr_ok = expect("rr(I^2) = I^2", semigroup.rr_sg(ideal, 2) == i2, True)
    e = expect("e(I)", semigroup.multiplicity_sg(ideal), 4)
    l_r_i = expect("l(R/I)", semigroup.length_sg(ideal), 2)
    l_i_i2 = expect("l(I/I^2)", semigroup.length_between_sg(ideal, i2), 3)
    r, j = semigroup.reduction_number_sg(ideal)
    expect("r w.r.t. (t^4)", (r, j), (2, 4))
    report = bounds.verify_prop_3_1(ideal, "example-3.2")
    expect("prop 3.1 status", report.status, "sharp")

    result = {
        "semigroup": [4, 5, 6, 7],
        "ideal": [4, 5, 6],
        "I2_equals_m2": i2_eq_m2,
        "rr_I2_equals_I2": rr_ok,
        "e": e,
        "l_R_I": l_r_i,
        "l_I_I2": l_i_i2,
        "r": r,
        "principal_reduction": j,
        "bound": report.to_dict(),
        "sharp": report.status == "sharp",
    }
    return result, mismatches


def run_reproduce(args) -> tuple[dict, list[str]]:
    if args.example == "example-2.2":
        return reproduce_example_22()
    return reproduce_example_32()


# -- rendering --------------------------------------------------------------


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_csv(doc: dict) -> str:
    rows = _collect_reports(doc)
    lines = ["instance,bound,lhs,rhs,status,gap"]
    for r in rows:
        lines.append(
            ",".join(
                "" if r.get(key) is None else str(r.get(key))
                for key in ("instance", "bound", "lhs", "rhs", "status", "gap")
            )
        )
    return "\n".join(lines) + "\n"


def _collect_reports(doc) -> list[dict]:
    found: list[dict] = []
    if isinstance(doc, dict):
        if {"instance", "bound", "status"} <= doc.keys():
            found.append(doc)
        for value in doc.values():
            found.extend(_collect_reports(value))
    elif isinstance(doc, list):
        for value in doc:
            found.extend(_collect_reports(value))
    return found


def render_table(doc, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for key in doc:
            value = doc[key]
            if isinstance(value, (dict, list)) and value and not _is_scalar_list(value):
                lines.append(f"{pad}{key}:")
                lines.append(render_table(value, indent + 1))
            else:
                lines.append(f"{pad}{key} = {_fmt_scalar(value)}")
    elif isinstance(doc, list):
        for item in doc:
            if isinstance(item, dict) or (isinstance(item, list) and not _is_scalar_list(item)):
                lines.append(render_table(item, indent))
                lines.append(pad + "-")
            else:
                lines.append(f"{pad}{_fmt_scalar(item)}")
    else:
        lines.append(f"{pad}{_fmt_scalar(doc)}")
    return "\n".join(line for line in lines if line)


def _is_scalar_list(value) -> bool:
    return isinstance(value, list) and all(
        not isinstance(v, (dict, list)) for v in value
    )


def _fmt_scalar(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def render(doc: dict, fmt: str) -> str:
    if fmt == "csv":
        return render_csv(doc)
    if fmt == "table":
        return render_table(doc) + "\n"
    return render_json(doc)


# -- entry point -------------------------------------------------------------


def config_dict(args) -> dict:
    skip = {"subcommand"}
    return {
        "subcommand": args.subcommand,
        **{
            key: value
            for key, value in sorted(vars(args).items())
            if key not in skip
        },
    }


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    doc = {"schema": SCHEMA, "config": config_dict(args)}
    try:
        if args.subcommand == "hilbert":
            doc["result"] = run_hilbert(args)
        elif args.subcommand == "cohomology":
            doc["result"] = run_cohomology(args)
        elif args.subcommand == "reduction":
            doc["result"] = run_reduction(args)
        elif args.subcommand == "verify":
            doc["result"] = run_verify(args)
        elif args.subcommand == "reproduce":
            result, mismatches = run_reproduce(args)
            doc["result"] = result
            doc["mismatches"] = mismatches
            sys.stdout.write(render(doc, args.format))
            return 3 if mismatches else 0
    except ComputationError as exc:
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        sys.stdout.write(render_json(doc))
        return 1
    sys.stdout.write(render(doc, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
