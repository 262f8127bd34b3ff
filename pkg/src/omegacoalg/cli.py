"""Command-line surface: approximate, decide bisimilarity, minimize, run
the invariant checks, and print the built-in demo specs.

All output is deterministic (sorted JSON keys, canonical block naming).
Exit codes: 0 success / bisimilar, 1 distinguishable or failed checks,
2 validation error, 3 unknown state.
"""

from __future__ import annotations

import argparse
import sys

from . import bisim as bs
from . import catalog, specdoc
from .container import truncate
from .errors import OmegaCoalgError, SortMismatch, SpecValidationError
from .indexed import (
    IndexedCoalgebra,
    i_into,
    i_out,
    iapproximate,
    ifirst_divergence_depth,
    iunfold,
    iverify_morphism,
    iuniqueness_probe,
    well_sorted,
)
from .mtype import (
    Coalgebra,
    MorphismCandidate,
    approximate,
    into,
    out,
    unfold,
    uniqueness_probe,
    verify_morphism,
)
from .container import Container, PValue

EXIT_OK = 0
EXIT_DISTINGUISHABLE = 1
EXIT_CHECKS_FAILED = 1
EXIT_VALIDATION = 2
EXIT_UNKNOWN_STATE = 3


def render_text(t) -> str:
    """Display form: '·' for Trunc, labels with parenthesized children."""
    if t.is_trunc:
        return "·"
    if not t.children:
        return str(t.label)
    return f"{t.label}({', '.join(render_text(ch) for ch in t.children)})"


def tree_json(t):
    if t.is_trunc:
        return None
    return {"label": t.label, "children": [tree_json(ch) for ch in t.children]}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omegacoalg")
    sub = p.add_subparsers(dest="command", required=True)

    approx = sub.add_parser("approx", help="print the depth-n observation of a state")
    approx.add_argument("--spec", required=True)
    approx.add_argument("--state", required=True)
    approx.add_argument("--depth", type=int, required=True)
    approx.add_argument("--format", choices=("text", "json"), default="text")

    bisim = sub.add_parser("bisim", help="decide bisimilarity of two states")
    bisim.add_argument("--spec", required=True)
    bisim.add_argument("--left", required=True)
    bisim.add_argument("--right", required=True)
    bisim.add_argument("--algorithm", choices=("partition", "bounded"), default="partition")
    bisim.add_argument("--depth", type=int, default=None)

    minimize = sub.add_parser("minimize", help="print the quotient spec")
    minimize.add_argument("--spec", required=True)

    check = sub.add_parser("check", help="run the invariant suite on a spec")
    check.add_argument("--spec", required=True)
    check.add_argument("--depth", type=int, default=30)

    demo = sub.add_parser("demo", help="print a built-in example spec")
    demo.add_argument("name", choices=sorted(demo_documents()))
    return p


def demo_documents() -> dict:
    stream = {
        "schema_version": specdoc.SCHEMA_VERSION,
        "signature": {"labels": ["0", "1"], "arity": {"0": 1, "1": 1}},
        "coalgebra": {
            "states": ["lo", "hi"],
            "gamma": {
                "lo": {"label": "0", "children": ["hi"]},
                "hi": {"label": "1", "children": ["lo"]},
            },
        },
    }
    conat = {
        "schema_version": specdoc.SCHEMA_VERSION,
        "signature": {"labels": ["Z", "S"], "arity": {"Z": 0, "S": 1}},
        "coalgebra": {
            "states": ["inf", "two", "one", "zero"],
            "gamma": {
                "inf": {"label": "S", "children": ["inf"]},
                "two": {"label": "S", "children": ["one"]},
                "one": {"label": "S", "children": ["zero"]},
                "zero": {"label": "Z", "children": []},
            },
        },
    }
    return {
        "stream": stream,
        "conat": conat,
        "fig1": specdoc.plain_document(catalog.fig1_coalgebra()),
        "parity": specdoc.indexed_document(catalog.parity_coalgebra()),
    }


def _tagged_plain(c: IndexedCoalgebra) -> Coalgebra:
    """Reduce an indexed coalgebra to a plain one by tagging labels with
    their sort; the plain partition/minimization algorithms then respect
    sorts automatically."""
    ic = c.base
    labels = tuple((i, a) for i in ic.sorts for a in ic.labels(i))
    container = Container(
        arity={(i, a): ic.arity[(i, a)] for (i, a) in labels}, labels=labels
    )
    gamma = {}
    for s in c.states:
        label, children = c.transition(s)
        gamma[s] = PValue((c.sort_of[s], label), children)
    return Coalgebra(container, gamma, state_enumeration=c.states, name="tagged")


def cmd_approx(args) -> int:
    doc = specdoc.load_spec(args.spec)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * args.depth + 1000))
    if doc.kind == "plain":
        c = doc.coalgebra
        if args.state not in c.state_enumeration:
            print(f"unknown state: {args.state}", file=sys.stderr)
            return EXIT_UNKNOWN_STATE
        t = approximate(c, args.state, args.depth)
    else:
        c = doc.icoalgebra
        if args.state not in c.states:
            print(f"unknown state: {args.state}", file=sys.stderr)
            return EXIT_UNKNOWN_STATE
        t = iapproximate(c, args.state, args.depth).tree
    if args.format == "text":
        print(render_text(t))
    else:
        print(specdoc.dump_document(tree_json(t)), end="")
    return EXIT_OK


def cmd_bisim(args) -> int:
    doc = specdoc.load_spec(args.spec)
    if args.algorithm == "bounded" and args.depth is None:
        print("--depth is required with --algorithm bounded", file=sys.stderr)
        return EXIT_VALIDATION
    if doc.kind == "plain":
        c = doc.coalgebra
        for s in (args.left, args.right):
            if s not in c.state_enumeration:
                print(f"unknown state: {s}", file=sys.stderr)
                return EXIT_UNKNOWN_STATE
        bound = args.depth if args.algorithm == "bounded" else len(c.state_enumeration)
        k = bs.first_divergence_depth(c, args.left, args.right, bound)
    else:
        c = doc.icoalgebra
        for s in (args.left, args.right):
            if s not in c.states:
                print(f"unknown state: {s}", file=sys.stderr)
                return EXIT_UNKNOWN_STATE
        bound = args.depth if args.algorithm == "bounded" else len(c.states)
        try:
            k = ifirst_divergence_depth(c, args.left, args.right, bound)
        except SortMismatch as e:
            print(f"sort mismatch: {e}", file=sys.stderr)
            return EXIT_VALIDATION
    if k is None:
        print("bisimilar")
        return EXIT_OK
    print(f"distinguishable at depth {k}")
    return EXIT_DISTINGUISHABLE


def cmd_minimize(args) -> int:
    doc = specdoc.load_spec(args.spec)
    if doc.kind == "plain":
        print(specdoc.dump_document(specdoc.plain_document(bs.minimize(doc.coalgebra))), end="")
        return EXIT_OK
    c = doc.icoalgebra
    tagged = _tagged_plain(c)
    quotient = bs.minimize(tagged)
    gamma = {}
    for s in quotient.state_enumeration:
        pv = quotient.transition(s)
        gamma[s] = (pv.label[1], pv.children)
    reduced = IndexedCoalgebra(
        c.base,
        states=quotient.state_enumeration,
        sort_of={s: c.sort_of[s] for s in quotient.state_enumeration},
        gamma=gamma,
    )
    print(specdoc.dump_document(specdoc.indexed_document(reduced)), end="")
    return EXIT_OK


def cmd_check(args) -> int:
    doc = specdoc.load_spec(args.spec)
    depth = args.depth
    results = []
    if doc.kind == "plain":
        c = doc.coalgebra
        container = c.container

        def compat() -> bool:
            for s in c.state_enumeration:
                m = unfold(c, s)
                for n in range(depth):
                    if truncate(container, m.at(n + 1)) is not m.at(n):
                        return False
            return True

        def roundtrip() -> bool:
            for s in c.state_enumeration:
                m = unfold(c, s)
                v = out(m)
                back = into(container, v)
                for n in range(depth + 1):
                    if back.at(n) is not m.at(n):
                        return False
                again = out(back)
                if again.label != v.label:
                    return False
                for b in range(len(v.children)):
                    for n in range(depth + 1):
                        if again.children[b].at(n) is not v.children[b].at(n):
                            return False
            return True

        mc = MorphismCandidate(c, lambda s: unfold(c, s))
        results = [
            ("compatibility", compat()),
            ("out-into-roundtrip", roundtrip()),
            ("unfold-is-morphism", verify_morphism(mc, depth)),
            ("unfold-uniqueness", uniqueness_probe(c, mc, depth)),
        ]
    else:
        c = doc.icoalgebra

        def isorted() -> bool:
            return all(
                well_sorted(c.base, iapproximate(c, s, n))
                for s in c.states
                for n in range(depth + 1)
            )

        def icompat() -> bool:
            for s in c.states:
                m = iunfold(c, s)
                for n in range(depth):
                    if truncate(None, m.at(n + 1)) is not m.at(n):
                        return False
            return True

        def iroundtrip() -> bool:
            for s in c.states:
                m = iunfold(c, s)
                label, children = i_out(m)
                back = i_into(c.base, m.sort, label, children)
                for n in range(depth + 1):
                    if back.at(n) is not m.at(n):
                        return False
            return True

        results = [
            ("well-sorted", isorted()),
            ("compatibility", icompat()),
            ("i-out-i-into-roundtrip", iroundtrip()),
            ("iunfold-is-morphism", iverify_morphism(c, lambda s: iunfold(c, s), depth)),
            ("iunfold-uniqueness", iuniqueness_probe(c, lambda s: iunfold(c, s), depth)),
        ]
    ok = True
    for name, passed in results:
        print(f"{name}: {'PASS' if passed else 'FAIL'}")
        ok = ok and passed
    return EXIT_OK if ok else EXIT_CHECKS_FAILED


def cmd_demo(args) -> int:
    print(specdoc.dump_document(demo_documents()[args.name]), end="")
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "approx": cmd_approx,
        "bisim": cmd_bisim,
        "minimize": cmd_minimize,
        "check": cmd_check,
        "demo": cmd_demo,
    }
    try:
        return handlers[args.command](args)
    except SpecValidationError as e:
        print(f"validation error: {e}", file=sys.stderr)
        return EXIT_VALIDATION
    except OmegaCoalgError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
