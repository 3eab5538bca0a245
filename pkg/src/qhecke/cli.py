"""Command line interface: ``qhecke <subcommand> PROBLEM [options]``.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 input
error, 3 internal disagreement between the two PBW oracles.
"""

from __future__ import annotations

import argparse
import sys

from .classify import (ConditionAFailed, aut3_case, classify_abelian, classify_dim2,
                       kappa_solution_space)
from .freealg import format_polynomial, leading
from .groebner import CompletionError, InsufficientCompletion, buchberger, coset_basis
from .group import GroupTooLarge, NotDiagonal, SingularGenerator, diagonal_characters
from .problem import ProblemError, ProblemFile, parse_problem
from .qdha import (NotQps, acts_as_automorphism, acts_on_quantum_exterior, build_relations,
                   check_pbw_conditions, hecke_alphabet, hecke_order, is_pbw_via_groebner)
from .scalar import ScalarParseError, format_scalar

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _describe_violation(v) -> str:
    parts = []
    for key, val in v.witness.items():
        if key in ("g", "h"):
            parts.append(f"{key}=g{val + 1}")
        else:
            parts.append(f"{key}={val + 1}")
    res = v.residual
    if hasattr(res, "field"):
        res = format_scalar(res)
    text = f"({v.tag}) " + " ".join(parts)
    return text + (f": {res}" if res is not None else "")


def cmd_check_aut(prob: ProblemFile, args, out) -> int:
    Q = prob.quantum_params()
    G = prob.group()
    print(f"Q is a quantum system of parameters: {_yn(Q.is_qps)}", file=out)
    if not Q.is_qps:
        return EXIT_NEGATIVE
    all_ok = True
    for g, m in enumerate(G.elements):
        ok, quad = acts_as_automorphism(m, Q)
        ext = acts_on_quantum_exterior(m, Q)
        line = f"g{g + 1}: automorphism {_yn(ok)}, exterior {_yn(ext)}"
        if not ok:
            line += " (fails at i,j,k,l = " + ",".join(str(x + 1) for x in quad) + ")"
        print(line, file=out)
        all_ok = all_ok and ok
    print(f"group order {len(G)}; all elements act as automorphisms: {_yn(all_ok)}", file=out)
    return EXIT_OK if all_ok else EXIT_NEGATIVE


def cmd_check_pbw(prob: ProblemFile, args, out) -> int:
    Q, G, kap = prob.quantum_params(), prob.group(), prob.kappa_param()
    verdicts = {}
    if args.method in ("conditions", "both"):
        rep = check_pbw_conditions(Q, G, kap)
        verdicts["conditions"] = rep.verdict
        print(f"conditions: {'PBW' if rep.verdict else 'not PBW'}", file=out)
        for v in rep.violations:
            print("  " + _describe_violation(v), file=out)
        if rep.truncated:
            print("  (violation list truncated)", file=out)
    if args.method in ("groebner", "both"):
        res = is_pbw_via_groebner(Q, G, kap, max_degree=args.max_degree)
        verdicts["groebner"] = res.is_pbw
        if res.status == "Pbw":
            print(f"groebner: PBW ({res.pairs_processed} overlaps reduce to 0)", file=out)
        elif res.status == "NotPbw":
            alpha = hecke_alphabet(Q, G)
            print("groebner: not PBW", file=out)
            print("  witness: " + format_polynomial(res.witness, alpha, hecke_order(alpha)), file=out)
        else:
            print("groebner: inconclusive (degree bound below 3)", file=out)
            return EXIT_NEGATIVE
    if len(set(verdicts.values())) > 1:
        print("error: the condition check and the Groebner check disagree", file=sys.stderr)
        print("diagnostic: " + ", ".join(f"{k}={v}" for k, v in verdicts.items()), file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK if all(verdicts.values()) else EXIT_NEGATIVE


def _relations_and_order(prob: ProblemFile, args):
    if prob.relations:
        alpha = prob.relation_alphabet()
        rels = prob.relations
        weights = None
    else:
        Q, G, kap = prob.quantum_params(), prob.group(), prob.kappa_param()
        alpha = hecke_alphabet(Q, G)
        rels = build_relations(Q, G, kap, alpha)
        weights = {x: 0 for x in range(alpha.n_vars, len(alpha))}
    if args.order:
        prob.order = args.order
    if args.precedence:
        prob.precedence = args.precedence.replace(",", " ").split()
    order = prob.monomial_order(alpha)
    return alpha, rels, order, weights


def cmd_groebner(prob: ProblemFile, args, out) -> int:
    alpha, rels, order, weights = _relations_and_order(prob, args)
    gb = buchberger(rels, order, max_degree=args.max_degree)
    status = "complete" if gb.complete else f"complete to degree {gb.complete_to_degree}"
    print(f"# {status}; {len(gb.elements)} elements", file=sys.stderr)
    if args.emit == "basis":
        for p in gb.elements:
            print(format_polynomial(p, alpha, order), file=out)
    elif args.emit == "leading-ideal":
        for w in gb.leading_monomials():
            print(alpha.format_word(w), file=out)
    else:
        if args.deg is None:
            raise ProblemError("--emit coset-basis needs --deg")
        for w in coset_basis(gb, args.deg, weights):
            print(alpha.format_word(w), file=out)
    return EXIT_OK


def cmd_coset_count(prob: ProblemFile, args, out) -> int:
    alpha, rels, order, weights = _relations_and_order(prob, args)
    gb = buchberger(rels, order, max_degree=args.max_degree)
    print(len(coset_basis(gb, args.deg, weights)), file=out)
    return EXIT_OK


def cmd_solve_kappa(prob: ProblemFile, args, out) -> int:
    Q, G = prob.quantum_params(), prob.group()
    try:
        space = kappa_solution_space(Q, G)
    except ConditionAFailed as exc:
        print(f"condition (A) fails: {exc}", file=out)
        return EXIT_NEGATIVE
    print(f"dimension {space.dimension}", file=out)
    if space.free:
        print("free: " + ", ".join(f"g{g + 1} {i + 1} {j + 1}" for g, i, j in space.free), file=out)
    for k, kap in enumerate(space.basis, 1):
        print(f"basis {k}", file=out)
        for (g, i, j), v in sorted(kap.entries.items()):
            print(f"  g{g + 1} {i + 1} {j + 1} = {format_scalar(v)}", file=out)
    return EXIT_OK


def cmd_classify_abelian(prob: ProblemFile, args, out) -> int:
    Q, G = prob.quantum_params(), prob.group()
    if diagonal_characters(G) is NotDiagonal:
        print("the group is not diagonal", file=out)
        return EXIT_NEGATIVE
    sup = classify_abelian(Q, G)
    for (i, j), gs in sorted(sup.admissible.items()):
        body = " ".join(f"g{g + 1}" for g in gs) if gs else "none"
        print(f"pair ({i + 1},{j + 1}): {body}", file=out)
    print(f"predicted dimension {sup.dimension}", file=out)
    try:
        space = kappa_solution_space(Q, G)
    except ConditionAFailed as exc:
        print(f"condition (A) fails: {exc}", file=out)
        return EXIT_NEGATIVE
    print(f"solver dimension {space.dimension}", file=out)
    return EXIT_OK if space.dimension == sup.dimension else EXIT_DISAGREE


def cmd_classify_2d(prob: ProblemFile, args, out) -> int:
    Q, G = prob.quantum_params(), prob.group()
    try:
        rep = classify_dim2(Q, G)
    except ConditionAFailed as exc:
        print(f"condition (A) fails: {exc}", file=out)
        return EXIT_NEGATIVE
    print(f"branch {rep.branch}", file=out)
    supported = {tuple(c) for c in rep.supported_classes}
    for c in rep.classes:
        names = " ".join(f"g{g + 1}" for g in c)
        print(f"class {{{names}}}: {'supported' if tuple(c) in supported else 'excluded'}", file=out)
    for note in rep.notes:
        print(f"note: {note}", file=out)
    print(f"predicted dimension {rep.predicted_dimension}", file=out)
    print(f"solver dimension {rep.solver_dimension}", file=out)
    print(f"conjugation constraint: {'holds' if rep.conjugation_ok else 'fails'}", file=out)
    return EXIT_OK if rep.agrees else EXIT_DISAGREE


def cmd_aut3_case(prob: ProblemFile, args, out) -> int:
    Q = prob.quantum_params()
    if Q.n != 3 or not Q.is_qps:
        raise ProblemError("aut3-case needs dim 3 and a quantum system of parameters")
    case = aut3_case(Q(0, 1), Q(0, 2), Q(1, 2))
    print(f"case {case.tag}", file=out)
    print(f"group: {case.description}", file=out)
    print(f"note: {case.note}", file=out)
    if prob.generators:
        G = prob.group()
        for g, m in enumerate(G.elements):
            print(f"g{g + 1}: in group {_yn(case.predicate(m))}", file=out)
    return EXIT_OK


COMMANDS = {
    "check-aut": cmd_check_aut,
    "check-pbw": cmd_check_pbw,
    "groebner": cmd_groebner,
    "solve-kappa": cmd_solve_kappa,
    "classify-abelian": cmd_classify_abelian,
    "classify-2d": cmd_classify_2d,
    "aut3-case": cmd_aut3_case,
    "coset-count": cmd_coset_count,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qhecke", description=__doc__.splitlines()[0])
    ap.add_argument("--field-conductor", type=int, default=None,
                    help="embed all scalars into Q(zeta_m) for this m (a multiple of the file's conductor)")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("problem", help="problem file, or - for standard input")
        if name == "check-pbw":
            p.add_argument("--method", choices=("conditions", "groebner", "both"), default="both")
            p.add_argument("--max-degree", type=int, default=3)
        if name in ("groebner", "coset-count"):
            p.add_argument("--order", choices=("degrightlex", "degleftlex"))
            p.add_argument("--precedence", help="letters from largest to smallest")
            p.add_argument("--max-degree", type=int, default=None)
        if name == "groebner":
            p.add_argument("--emit", choices=("basis", "leading-ideal", "coset-basis"), default="basis")
            p.add_argument("--deg", type=int, default=None)
        if name == "coset-count":
            p.add_argument("--deg", type=int, required=True)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.problem == "-":
            text = sys.stdin.read()
        else:
            with open(args.problem, encoding="utf-8") as fh:
                text = fh.read()
        prob = parse_problem(text)
        if args.field_conductor:
            prob = prob.lifted(args.field_conductor)
        return COMMANDS[args.command](prob, args, out)
    except (OSError, ProblemError, ScalarParseError, SingularGenerator, GroupTooLarge, NotQps,
            InsufficientCompletion, CompletionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
