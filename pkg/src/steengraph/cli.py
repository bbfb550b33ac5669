"""Command-line front end.

Subcommands:
  analyze    full report on one monomial (walk counts, tree, Hamilton)
  verify     exhaustive criterion-vs-oracle sweeps
  hopf       expand coproduct / antipode / path sums of a generator power
  enumerate  list the monomials of a level
  dot        Graphviz text for a monomial's graph

Exit codes: 0 all good, 1 a sound claim disagreed with its oracle,
2 usage error (bad monomial text, out-of-range parameters, capped n).
Output is deterministic: identical invocations give identical bytes.
"""

import argparse
import json
import sys
from typing import Optional

from .algebra import (
    ENV_MAX_N,
    UNTRUNCATED,
    Level,
    Monomial,
    ParseError,
    enumerate_monomials,
    monomial_count,
    parse_monomial,
)
from .connectivity import (
    connection_numbers,
    is_connected,
    is_unilateral,
    oracle_is_connected,
    oracle_is_unilateral,
    unilateral_numbers,
)
from .graphs import export_dot, to_graph
from .hopf import antipode, coproduct_generator, directed_path_polynomial
from .structure import (
    degree_table,
    dirac_condition,
    format_cycle,
    format_directed_path,
    has_hamilton_directed_path,
    is_tree,
    oracle_hamilton_cycle,
    oracle_hamilton_directed_path,
    oracle_is_tree,
    paper_hamilton_condition,
)
from .verify import CHECK_ORDER, CapExceeded, run_all, run_check

MAX_LISTED = 10


def build_report(x: Monomial) -> dict:
    """All analysis facts for one monomial, JSON-ready, with oracle verdicts inline."""
    g = to_graph(x)
    c = connection_numbers(x)
    u = unilateral_numbers(x)
    connected = is_connected(x)
    oracle_connected = oracle_is_connected(g)
    unilateral = is_unilateral(x)
    oracle_unilateral = oracle_is_unilateral(g)
    tree = is_tree(x)
    oracle_tree = oracle_is_tree(g)
    cycle = oracle_hamilton_cycle(g)
    dipath = has_hamilton_directed_path(x)
    oracle_dipath = oracle_hamilton_directed_path(g)
    dirac = dirac_condition(x)
    agree = (
        connected == oracle_connected
        and unilateral == oracle_unilateral
        and tree == oracle_tree
        and dipath == (oracle_dipath is not None)
        and (not dirac or cycle is not None)
    )
    return {
        "report": "analysis",
        "monomial": str(x),
        "n": x.level.n,
        "edges": [[1 << p, 1 << q] for p, q in g.sorted_edges()],
        "degrees": [
            {
                "vertex": d.vertex,
                "label": 1 << d.vertex,
                "in": d.in_degree,
                "out": d.out_degree,
                "degree": d.degree,
            }
            for d in degree_table(x)
        ],
        "C": c.as_records(),
        "U": u.as_records(),
        "connected": connected,
        "oracle_connected": oracle_connected,
        "unilateral": unilateral,
        "oracle_unilateral": oracle_unilateral,
        "tree": tree,
        "oracle_tree": oracle_tree,
        "paper_hamilton_condition": paper_hamilton_condition(x),
        "dirac_condition": dirac,
        "hamilton_cycle_found": cycle is not None,
        "hamilton_cycle_witness": format_cycle(cycle) if cycle else None,
        "hamilton_dipath": dipath,
        "oracle_hamilton_dipath": oracle_dipath is not None,
        "hamilton_dipath_witness": (
            format_directed_path(oracle_dipath) if oracle_dipath else None
        ),
        "oracles_agree": agree,
    }


def _yesno(b: bool) -> str:
    return "yes" if b else "no"


def render_analysis_text(rep: dict) -> str:
    lines = []
    lines.append(
        f"monomial {rep['monomial']} at n={rep['n']}"
        f" ({rep['n'] + 2} vertices, {len(rep['edges'])} edges)"
    )
    if rep["edges"]:
        lines.append("edges: " + " ".join(f"{{{a},{b}}}" for a, b in rep["edges"]))
    else:
        lines.append("edges: none")
    lines.append(
        "degrees (in+out): "
        + " ".join(f"{d['label']}:{d['in']}+{d['out']}" for d in rep["degrees"])
    )
    lines.append("C: " + " ".join(f"C({r['p']},{r['q']})={r['value']}" for r in rep["C"]))
    lines.append("U: " + " ".join(f"U({r['p']},{r['q']})={r['value']}" for r in rep["U"]))
    lines.append(
        f"connected: {_yesno(rep['connected'])}"
        f" (search oracle: {_yesno(rep['oracle_connected'])})"
    )
    lines.append(
        f"unilateral: {_yesno(rep['unilateral'])}"
        f" (closure oracle: {_yesno(rep['oracle_unilateral'])})"
    )
    lines.append(
        f"tree: {_yesno(rep['tree'])} (search oracle: {_yesno(rep['oracle_tree'])})"
    )
    if rep["hamilton_cycle_found"]:
        lines.append(f"hamilton cycle: {rep['hamilton_cycle_witness']}")
    else:
        lines.append("hamilton cycle: none found")
    lines.append(
        f"  degree bound n/2 (printed condition): {_yesno(rep['paper_hamilton_condition'])}"
    )
    lines.append(
        f"  degree bound (n+2)/2 (vertex-count bound): {_yesno(rep['dirac_condition'])}"
    )
    if rep["hamilton_dipath"]:
        lines.append(f"hamilton directed path: {rep['hamilton_dipath_witness']}")
    else:
        lines.append("hamilton directed path: none")
    if not rep["oracles_agree"]:
        lines.append("WARNING: a criterion disagrees with its oracle above")
    return "\n".join(lines) + "\n"


def _verify_payload(results: list, n: int) -> dict:
    return {
        "report": "verify",
        "n": n,
        "checks": [
            {
                "name": r.theorem,
                "n": r.n,
                "cases": r.cases,
                "failures": r.failures,
                "findings": r.findings,
                "notes": r.notes,
                "ok": r.ok,
            }
            for r in results
        ],
        "ok": all(r.ok for r in results),
    }


def render_verify_text(results: list) -> str:
    lines = []
    for r in results:
        head = f"verify {r.theorem} at n={r.n}: {r.cases} cases, {len(r.failures)} discrepancies"
        if r.findings:
            head += f", {len(r.findings)} findings"
        lines.append(head)
        for note in r.notes:
            lines.append(f"  note: {note}")
        for kind, items in (("discrepancy", r.failures), ("finding", r.findings)):
            for w in items[:MAX_LISTED]:
                lines.append(f"  {kind}: {w}")
            if len(items) > MAX_LISTED:
                lines.append(f"  ... and {len(items) - MAX_LISTED} more")
    verdict = "PASS" if all(r.ok for r in results) else "FAIL"
    lines.append(f"result: {verdict} ({len(results)} checks)")
    return "\n".join(lines) + "\n"


def _add_common(sp: argparse.ArgumentParser, need_n: bool):
    sp.add_argument(
        "-n",
        type=int,
        required=need_n,
        default=None,
        metavar="N",
        help="truncation level (generators xi_1..xi_(n+1))",
    )
    sp.add_argument("--json", action="store_true", help="emit a JSON report")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="steengraph",
        description="Graphs of truncated dual Steenrod algebra monomials: "
        "connectivity, trees, Hamilton criteria, Hopf structure.",
        epilog=f"The env var {ENV_MAX_N} overrides the level and sweep caps.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report on one monomial")
    a.add_argument("monomial", help="e.g. 'xi1^6 xi2 xi3' or 'xi1^6*xi2*xi3' or '[6,1,1]'")
    _add_common(a, need_n=True)
    a.add_argument("--dot", metavar="PATH", help="also write the DOT export here")
    a.add_argument("--directed", action="store_true", help="orient the DOT export")

    v = sub.add_parser("verify", help="exhaustive criterion-vs-oracle sweeps")
    _add_common(v, need_n=True)
    v.add_argument(
        "--theorem",
        default="all",
        metavar="NAME",
        help=f"one of: all, {', '.join(CHECK_ORDER)} (default: all)",
    )
    v.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")

    h = sub.add_parser("hopf", help="expand coproduct / antipode / path sums")
    h.add_argument("action", choices=["coproduct", "antipode", "paths"])
    h.add_argument("--i", type=int, required=True, help="generator index i of xi_i")
    h.add_argument("--j", type=int, default=0, help="power index j in xi_i^(2^j)")
    _add_common(h, need_n=False)

    e = sub.add_parser("enumerate", help="list the monomials of a level")
    _add_common(e, need_n=True)
    e.add_argument("--limit", type=int, default=None, help="list at most this many")

    d = sub.add_parser("dot", help="Graphviz text for a monomial's graph")
    d.add_argument("monomial")
    _add_common(d, need_n=True)
    d.add_argument("--dot", metavar="PATH", help="write here instead of stdout")
    d.add_argument("--directed", action="store_true", help="orient the edges")

    return ap


def _emit(text: str):
    sys.stdout.write(text)


def _emit_json(payload: dict):
    _emit(json.dumps(payload, indent=2) + "\n")


def cmd_analyze(args) -> int:
    level = Level(args.n)
    x = parse_monomial(args.monomial, level)
    rep = build_report(x)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(export_dot(to_graph(x), directed=args.directed))
    if args.json:
        _emit_json(rep)
    else:
        _emit(render_analysis_text(rep))
    return 0 if rep["oracles_agree"] else 1


def cmd_verify(args) -> int:
    if args.theorem == "all":
        results = run_all(args.n, jobs=args.jobs)
    else:
        if args.theorem not in CHECK_ORDER:
            raise CapExceeded(
                f"unknown check {args.theorem!r}; known: all, {', '.join(CHECK_ORDER)}"
            )
        results = [run_check(args.theorem, args.n, jobs=args.jobs)]
    if args.json:
        _emit_json(_verify_payload(results, args.n))
    else:
        _emit(render_verify_text(results))
    return 0 if all(r.ok for r in results) else 1


def cmd_hopf(args) -> int:
    level = UNTRUNCATED if args.n is None else Level(args.n)
    if args.action == "coproduct":
        result = str(coproduct_generator(args.i, args.j, level))
    elif args.action == "antipode":
        result = str(antipode(Monomial.generator_power(args.i, args.j, level)))
    else:
        result = str(directed_path_polynomial(args.j, args.i, level))
    if args.json:
        _emit_json(
            {
                "report": "hopf",
                "action": args.action,
                "i": args.i,
                "j": args.j,
                "n": args.n,
                "result": result,
            }
        )
    else:
        _emit(result + "\n")
    return 0


def cmd_enumerate(args) -> int:
    level = Level(args.n)
    total = monomial_count(level)
    listed = total if args.limit is None else max(0, min(args.limit, total))
    names = []
    for k, x in enumerate(enumerate_monomials(level)):
        if k >= listed:
            break
        names.append(str(x))
    if args.json:
        _emit_json(
            {
                "report": "enumerate",
                "n": args.n,
                "count": total,
                "listed": listed,
                "monomials": names,
            }
        )
    else:
        for name in names:
            _emit(name + "\n")
    return 0


def cmd_dot(args) -> int:
    level = Level(args.n)
    x = parse_monomial(args.monomial, level)
    text = export_dot(to_graph(x), directed=args.directed)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        _emit(text)
    return 0


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "analyze": cmd_analyze,
        "verify": cmd_verify,
        "hopf": cmd_hopf,
        "enumerate": cmd_enumerate,
        "dot": cmd_dot,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
