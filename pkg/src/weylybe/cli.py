"""Command-line interface: ``weylybe <subcommand> ...``.

Exit status 0 means success (all checks passed), 1 a failed verification,
2 a usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .operators import MultiplicativeFunction, mixed_family, quantum_family, random_params, random_rational, symbolic_params, yang_family
from .quantum_monk import quantum_chevalley, quantum_parameters
from .root_system import LONG, SHORT, ConfigurationError, DomainError, build_root_system, dihedral_subsystems
from .scalars import is_zero
from .weyl import GroupTooLarge, default_ordering, random_ordering, weyl_group

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_word(text: str, rank: int) -> list:
    """"121", "1-2-1" or "" (identity); "e" is accepted for the identity too."""
    text = text.strip()
    if text in ("", "e"):
        return []
    parts = text.split("-") if "-" in text else list(text)
    try:
        word = [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"bad word {text!r}") from None
    if any(not 1 <= i <= rank for i in word):
        raise UsageError(f"word {text!r} uses letters outside 1..{rank}")
    return word


def _rs(args):
    return build_root_system(args.type.upper(), args.rank)


def _emit(obj, args) -> None:
    print(json.dumps(obj, indent=None if getattr(args, "compact", False) else 2))


# --- subcommands --------------------------------------------------------------

def cmd_roots(args) -> int:
    rs = _rs(args)
    doc = json.loads(rs.to_json())
    doc["dihedral_subsystems"] = [
        {"canonical_pair": list(d.canonical_pair), "subtype": d.subtype, "maximal": d.maximal}
        for d in dihedral_subsystems(rs)]
    _emit(doc, args)
    return EXIT_OK


def cmd_ybe(args) -> int:
    from .ybe import check_ybe
    rs = _rs(args)
    g = weyl_group(rs)
    rng = random.Random(args.seed)
    r_form = False
    if args.family == "mixed":
        params = symbolic_params(rs)[0] if args.symbolic else random_params(rs, rng)[0]
        family = mixed_family(g, params)
    elif args.family == "quantum":
        E = quantum_parameters(rs, "E") if args.symbolic else \
            MultiplicativeFunction(rs, [random_rational(rng) for _ in range(rs.rank)])
        family = quantum_family(g, E)
    else:
        if args.symbolic:
            raise UsageError("the yang family is numeric only")
        while True:
            x = [random_rational(rng) * rng.choice((1, -1)) for _ in range(rs.rank)]
            if all(sum(c * xi for c, xi in zip(r, x)) != 0 for r in rs.positive_roots):
                break
        family = yang_family(g, x, {SHORT: random_rational(rng), LONG: random_rational(rng)})
        r_form = True
    report = check_ybe(family, rs, r_form=r_form, cosets=args.cosets)
    _emit(report.to_dict(), args)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_equations(args) -> int:
    from .ybe import (a2_reduced_residual, check_p_equals_q_plus_kappa, check_system_a2, check_system_b2,
                      check_system_g2)
    t = args.type.upper()
    if t not in ("A", "B", "G"):
        raise UsageError("equations needs a rank-2 type: A, B or G")
    rs = build_root_system(t, 2)
    params = symbolic_params(rs)[0] if args.symbolic else random_params(rs, random.Random(args.seed))[0]
    sub = dihedral_subsystems(rs, maximal_only=True)[0]
    check = {"A": check_system_a2, "B": check_system_b2, "G": check_system_g2}[t]
    results = {"system": check(params, sub), "p_minus_q_is_kappa": check_p_equals_q_plus_kappa(params)}
    if t == "A":
        results["reduced_equation"] = is_zero(a2_reduced_residual(params, sub))
    _emit({"group": rs.name, "symbolic": args.symbolic, "results": results}, args)
    return EXIT_OK if all(results.values()) else EXIT_FAIL


def cmd_tilted(args) -> int:
    from .tilted import (build_digraph, check_monotone_paths, check_product_identity, down_edges, el_shelling_check,
                         is_eulerian, is_lower_eulerian, tilted_interval, tilted_order)
    rs = _rs(args)
    if weyl_group(rs).size > 2000:
        raise UsageError("tilted checks are limited to groups of order at most 2000")
    ordering = default_ordering(rs) if args.seed is None else random_ordering(rs, args.seed)
    D = build_digraph(rs, ordering)
    g = D.group
    out = {"group": rs.name, "ordering": ordering.to_json(), "source_word": list(ordering.source_word),
           "vertices": g.size, "edges": len(D.edges)}
    poset = None
    ok = True
    if args.interval:
        u, v = (g.from_word(parse_word(w, rs.rank)) for w in args.interval)
        poset = tilted_interval(D, u, v)
        out["interval"] = json.loads(poset.to_json())
        out["eulerian"] = is_eulerian(poset)
        ok &= out["eulerian"]
    elif args.from_word is not None:
        u = g.from_word(parse_word(args.from_word, rs.rank))
        poset = tilted_order(D, u)
        out["order"] = json.loads(poset.to_json())
        out["lower_eulerian"] = is_lower_eulerian(poset)
        out["el_shelling"] = el_shelling_check(poset).passed
        ok &= out["lower_eulerian"] and out["el_shelling"]
    if not args.no_checks:
        paths = check_monotone_paths(D)
        product = all(check_product_identity(D, u) for u in range(g.size))
        out["checks"] = {"monotone_paths": paths.passed, "pairs": paths.pairs, "product_identity": product}
        ok &= paths.passed and product
    if args.dot:
        text = poset.to_dot(down=down_edges(D)) if poset is not None else D.to_dot()
        with open(args.dot, "w") as fh:
            fh.write(text)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(poset.to_json() if poset is not None else D.to_json())
            fh.write("\n")
    _emit(out, args)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_monk(args) -> int:
    rs = _rs(args)
    g = weyl_group(rs)
    w = g.from_word(parse_word(args.w, rs.rank))
    try:
        expr = quantum_chevalley(rs, w, args.s, classical=args.classical, pairing=args.pairing)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    print(f"[{g.word_string(w)}] * [{args.s}] = {expr}")
    print(expr.to_json())
    return EXIT_OK


def cmd_verify_all(args) -> int:
    from .acceptance import run_all
    results = run_all(args.max_rank, only=args.only, echo=print)
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_OK if not failed else EXIT_FAIL


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylybe", description="Exact Yang-Baxter and tilted Bruhat checks for Weyl groups.")
    p.add_argument("--compact", action="store_true", help="single-line JSON output")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--compact", action="store_true", default=argparse.SUPPRESS)

    def typed(name, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("type")
        sp.add_argument("rank", type=int)
        return sp

    sp = typed("roots", "print the positive roots and dihedral subsystems")
    sp.set_defaults(func=cmd_roots)

    sp = typed("ybe", "check the Yang-Baxter equations for an operator family")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", action="store_true")
    mode.add_argument("--seed", type=int, default=0)
    sp.add_argument("--family", choices=("mixed", "quantum", "yang"), default="mixed")
    sp.add_argument("--cosets", choices=("all", "one"), default="all")
    sp.set_defaults(func=cmd_ybe)

    sp = sub.add_parser("equations", help="check the rank-2 equation systems", parents=[common])
    sp.add_argument("type")
    sp.add_argument("--symbolic", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_equations)

    sp = typed("tilted", "build the tilted digraph, intervals and orders")
    sp.add_argument("--from", dest="from_word", metavar="WORD")
    sp.add_argument("--interval", nargs=2, metavar="WORD")
    sp.add_argument("--dot", metavar="PATH")
    sp.add_argument("--json", metavar="PATH")
    sp.add_argument("--seed", type=int, default=None, help="random reflection ordering instead of the default")
    sp.add_argument("--no-checks", action="store_true", help="skip the path and product checks")
    sp.set_defaults(func=cmd_tilted)

    sp = typed("monk", "quantum Chevalley product [w] * [s]")
    sp.add_argument("--w", required=True, metavar="WORD")
    sp.add_argument("--s", required=True, type=int, metavar="INDEX")
    sp.add_argument("--classical", action="store_true")
    sp.add_argument("--pairing", choices=("root", "coroot"), default="root")
    sp.set_defaults(func=cmd_monk)

    sp = sub.add_parser("verify-all", help="run the acceptance suite")
    sp.add_argument("max_rank", type=int)
    sp.add_argument("--only", type=int, nargs="*")
    sp.set_defaults(func=cmd_verify_all)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ConfigurationError, GroupTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
