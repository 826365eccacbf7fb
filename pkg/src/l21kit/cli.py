"""Command-line interface.

Every command writes machine-readable text to stdout.  Labelings are
``l <v> <label>`` records; summary values are comment records of the form
``c <key>: <value>`` with stable keys (``method``, ``L``, ``span``,
``valid``, ...), so command output can be fed straight back to ``verify``.

Exit status: 0 on success, 1 when a labeling is invalid, a precondition
fails or the request is infeasible, 2 on unreadable input.
"""

from __future__ import annotations

import argparse
import sys

from . import families
from .errors import CapabilityError, InputError, ParseError, PreconditionError
from .exact import exact_lambda, exact_span
from .galois import field_of_order
from .graph import INFINITY, complement, diameter, max_degree, square
from .hamilton import posa_cycle_condition, posa_path_condition
from .io import emit_graph, emit_labeling, parse_graph, parse_instance, parse_labeling
from .labeling import Instance, l21_as_instance, span_of, verify_instance, verify_l21
from .pipeline import (bound_report, chang_kuo, first_fit, injective_labeling,
                       label_with_budget, least_budget)

DEFAULT_SEED = 0


def _fmt(value) -> str:
    if value is True or value is False:
        return str(value).lower()
    if value == INFINITY:
        return "inf"
    return str(value)


def _summary(out, **items) -> None:
    for key, value in items.items():
        out.write(f"c {key}: {_fmt(value)}\n")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_instance(path: str, gh: bool) -> Instance:
    text = _read(path)
    return parse_instance(text) if gh else l21_as_instance(parse_graph(text))


def cmd_generate(args, out):
    if args.family in ("polarity", "erdos"):
        if len(args.params) != 1:
            raise InputError(f"{args.family} takes the field order q")
        F = field_of_order(args.params[0])
        G = families.polarity_graph(F) if args.family == "polarity" else families.erdos_extension(F)
    else:
        G = families.generate(args.family, *args.params, seed=args.seed)
    out.write(emit_graph(G))
    return 0


def cmd_info(args, out):
    G = parse_graph(_read(args.file))
    _summary(out, n=G.n, m=G.m, max_degree=max_degree(G),
             diameter=diameter(G) if G.n else "undefined",
             posa_cycle=posa_cycle_condition(G) if G.n >= 3 else False,
             posa_path=posa_path_condition(G))
    return 0


def cmd_square(args, out):
    out.write(emit_graph(square(parse_graph(_read(args.file)))))
    return 0


def cmd_complement(args, out):
    out.write(emit_graph(complement(parse_graph(_read(args.file)))))
    return 0


def cmd_exact(args, out):
    if args.gh:
        result = exact_span(parse_instance(_read(args.file)), budget=args.budget)
    elif args.budget is None:
        result = exact_lambda(parse_graph(_read(args.file)))
    else:
        G = parse_graph(_read(args.file))
        result = exact_span(l21_as_instance(G), budget=args.budget, incumbent=first_fit(G))
    if not result:
        _summary(out, method="exact", status="infeasible_within_budget", budget=args.budget)
        return 1
    _summary(out, method="exact", optimum=result.optimum, span=result.optimum, valid=True)
    out.write(emit_labeling(result.witness, result.optimum))
    return 0


def cmd_label(args, out):
    inst = _load_instance(args.file, args.gh)
    L = least_budget(inst) if args.auto else args.span_budget
    labels = label_with_budget(inst, L)
    span = span_of(labels) if labels else 0
    _summary(out, method="pipeline", L=L, span=span, valid=True)
    out.write(emit_labeling(labels, span))
    return 0


def cmd_baseline(args, out):
    G = parse_graph(_read(args.file))
    labels = first_fit(G) if args.method == "first-fit" else chang_kuo(G)
    span = span_of(labels) if labels else 0
    _summary(out, method=args.method, span=span, valid=True)
    out.write(emit_labeling(labels, span))
    return 0


def cmd_injective(args, out):
    G = parse_graph(_read(args.file))
    labels = injective_labeling(G)
    span = span_of(labels) if labels else 0
    _summary(out, method="injective", span=span, valid=True)
    out.write(emit_labeling(labels, span))
    return 0


def cmd_verify(args, out):
    text = _read(args.graphfile)
    if args.gh:
        inst = parse_instance(text)
        labels, declared = parse_labeling(_read(args.labelfile), inst.n)
        verdict = verify_instance(inst, labels)
    else:
        G = parse_graph(text)
        labels, declared = parse_labeling(_read(args.labelfile), G.n)
        verdict = verify_l21(G, labels)
    span = span_of(labels) if labels else 0
    valid = verdict.valid and (declared is None or declared == span)
    _summary(out, method="verify", span=span, valid=valid, violations=len(verdict.violations))
    if declared is not None and declared != span:
        _summary(out, span_mismatch=f"declared {declared}, actual {span}")
    for bad in verdict.violations:
        out.write(f"x {bad.u + 1} {bad.v + 1} {bad.distance} {bad.gap} {bad.required}\n")
    return 0 if valid else 1


def cmd_bounds(args, out):
    inst = _load_instance(args.file, args.gh)
    delta = max_degree(inst.H)
    if delta < 1:
        raise PreconditionError("h_degree", "H has no edges")
    _summary(out, n=inst.n, delta=delta, deltaG=max_degree(inst.G))
    out.write("c L M applicable\n")
    for L in range(delta * delta + 1, delta * delta + delta + 1):
        rep = bound_report(inst, L)
        out.write(f"b {L} {rep.M} {_fmt(rep.applicable)}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="l21kit", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a named graph")
    p.add_argument("family", choices=sorted(families.FAMILIES) + ["polarity", "erdos"])
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_generate)

    for name, func, text in [("info", cmd_info, "graph statistics"),
                             ("square", cmd_square, "emit the square"),
                             ("complement", cmd_complement, "emit the complement"),
                             ("injective", cmd_injective, "injective labeling")]:
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("exact", help="minimum span by branch and bound")
    p.add_argument("file")
    p.add_argument("--gh", action="store_true", help="file is a weighted (G,H) instance")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("label", help="color-adjacency labeling with L labels")
    p.add_argument("file")
    p.add_argument("--gh", action="store_true")
    budget = p.add_mutually_exclusive_group(required=True)
    budget.add_argument("--span-budget", type=int, metavar="L")
    budget.add_argument("--auto", action="store_true", help="use the least admissible L")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("baseline", help="heuristic labeling")
    p.add_argument("file")
    p.add_argument("--method", choices=["first-fit", "chang-kuo"], required=True)
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("verify", help="check a labeling file")
    p.add_argument("graphfile")
    p.add_argument("labelfile")
    p.add_argument("--gh", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="order bound M for L in [delta^2+1, delta^2+delta]")
    p.add_argument("file")
    p.add_argument("--gh", action="store_true")
    p.set_defaults(func=cmd_bounds)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except PreconditionError as exc:
        _summary(out, status="precondition_failed", precondition=exc.name)
        err.write(f"precondition failed: {exc}\n")
        return 1
    except (InputError, CapabilityError) as exc:
        _summary(out, status="failed")
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
